#include "ftd/designsearch.hpp"

#include "ftd/kernels.hpp"

#include <algorithm>
#include <set>

namespace ftd {

namespace {

void sort_blocks(std::vector<PointSubset>& blocks) {
  std::vector<std::pair<std::vector<Point>, std::size_t>> keyed;
  keyed.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) keyed.emplace_back(blocks[i].points(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<PointSubset> out;
  out.reserve(blocks.size());
  for (auto& [pts, i] : keyed) out.push_back(std::move(blocks[i]));
  blocks = std::move(out);
}

// Column x: bit j set iff point x lies in block j.
std::vector<std::vector<std::uint64_t>> incidence_columns(const std::vector<PointSubset>& blocks, std::size_t v) {
  const std::size_t words = (blocks.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cols(v, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < blocks.size(); ++j)
    for (Point x : blocks[j].points()) cols[x][j >> 6] |= 1ULL << (j & 63);
  return cols;
}

Int binom_or_cap(std::size_t v, std::size_t k) { return binomial(Int(static_cast<unsigned long>(v)), k); }

}  // namespace

std::optional<Int> constant_pair_coverage(const std::vector<PointSubset>& blocks, std::size_t v) {
  if (v < 2) return std::nullopt;
  const auto cols = incidence_columns(blocks, v);
  const auto& kt = kernels::active();
  const std::size_t words = cols[0].size();
  const std::uint64_t lambda = kt.and_popcount(cols[0].data(), cols[1].data(), words);
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y)
      if (kt.and_popcount(cols[x].data(), cols[y].data(), words) != lambda) return std::nullopt;
  return Int(static_cast<unsigned long>(lambda));
}

std::vector<std::vector<std::uint32_t>> pair_counts(const std::vector<PointSubset>& blocks, std::size_t v) {
  const auto cols = incidence_columns(blocks, v);
  const auto& kt = kernels::active();
  std::vector<std::vector<std::uint32_t>> out(v, std::vector<std::uint32_t>(v, 0));
  if (v == 0) return out;
  const std::size_t words = cols[0].size();
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y)
      out[x][y] = static_cast<std::uint32_t>(kt.and_popcount(cols[x].data(), cols[y].data(), words));
  return out;
}

bool is_flag_transitive(const PermGroup& g, const std::vector<PointSubset>& blocks) {
  if (blocks.empty()) return false;
  const std::size_t v = g.degree();
  const std::size_t words = blocks[0].word_count();
  RowStore<std::uint64_t> store(words, words);
  for (const PointSubset& b : blocks)
    if (!store.insert(b.words()).second) return false;  // repeated block
  const std::size_t nb = blocks.size();
  const std::size_t k = blocks[0].count();
  // Block images under each generator.
  std::vector<std::vector<std::uint32_t>> img;
  for (const Perm& p : g.generators()) {
    const Perm inv = p.inverse();
    std::vector<std::uint32_t> row(nb);
    for (std::size_t j = 0; j < nb; ++j) {
      const PointSubset t = blocks[j].image_by_inverse(inv.data());
      auto f = store.find(t.words());
      if (!f) return false;  // block set not invariant
      row[j] = *f;
    }
    img.push_back(std::move(row));
  }
  std::vector<char> seen(nb * v, 0);
  std::vector<std::pair<std::uint32_t, Point>> queue;
  const Point x0 = blocks[0].points().front();
  queue.emplace_back(0, x0);
  seen[x0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [b, x] = queue[i];
    for (std::size_t s = 0; s < img.size(); ++s) {
      const std::uint32_t b2 = img[s][b];
      const Point x2 = g.generators()[s][x];
      char& m = seen[static_cast<std::size_t>(b2) * v + x2];
      if (!m) {
        m = 1;
        queue.emplace_back(b2, x2);
      }
    }
  }
  return queue.size() == nb * k;
}

// ---------------------------------------------------------------------------

KOrbitResult korbit_designs(const PermGroup& g, unsigned k, const KOrbitOptions& opt) {
  const std::size_t v = g.degree();
  if (k <= 2 || k + 1 >= v) throw std::invalid_argument("korbit_designs: need 2 < k < v-1");
  const Int total = binom_or_cap(v, k);
  if (total > Int(static_cast<unsigned long>(opt.maxSubsets)))
    throw BudgetExceeded("korbit_designs: C(" + std::to_string(v) + "," + std::to_string(k) + ") = " + total.get_str() +
                         " exceeds the subset limit");
  // Orbits of k-subsets correspond to orbits of their complements; work with
  // the smaller size so colex ranks stay small.
  const bool complement = 2 * k > v;
  const std::size_t kk = complement ? v - k : k;
  std::vector<std::vector<std::uint64_t>> C(v + 1, std::vector<std::uint64_t>(kk + 1, 0));
  for (std::size_t n = 0; n <= v; ++n) {
    C[n][0] = 1;
    for (std::size_t j = 1; j <= kk && j <= n; ++j) C[n][j] = C[n - 1][j - 1] + (j <= n - 1 ? C[n - 1][j] : 0);
  }
  const std::uint64_t count = C[v][kk];
  std::vector<std::uint64_t> visited((count + 63) / 64, 0);
  auto rank = [&](const PointSubset& s) {
    std::uint64_t r = 0;
    std::size_t i = 0;
    for (Point x : s.points()) r += C[x][++i];
    return r;
  };

  const Int order = g.order();
  KOrbitResult res;
  std::vector<Point> c(kk);
  for (std::size_t i = 0; i < kk; ++i) c[i] = static_cast<Point>(i);
  for (std::uint64_t r = 0; r < count; ++r) {
    if (!((visited[r >> 6] >> (r & 63)) & 1U)) {
      const PointSubset seed = PointSubset::from_points(v, c);
      std::vector<PointSubset> orbit = set_orbit(g, seed, count);
      for (const PointSubset& s : orbit) {
        const std::uint64_t q = rank(s);
        visited[q >> 6] |= 1ULL << (q & 63);
      }
      res.orbitSizes.push_back(orbit.size());
      if (complement)
        for (PointSubset& s : orbit) {
          PointSubset t(v);
          for (std::size_t x = 0; x < v; ++x)
            if (!s.test(x)) t.set(x);
          s = std::move(t);
        }
      if (auto lambda = constant_pair_coverage(orbit, v)) {
        CandidateDesign d;
        d.actionLabel = g.label();
        const Int b(static_cast<unsigned long>(orbit.size()));
        d.params = {Int(static_cast<unsigned long>(v)), b, b * k / v, Int(k), *lambda};
        d.blockStabilizerOrder = order / b;
        d.flagTransitive = is_flag_transitive(g, orbit);
        sort_blocks(orbit);
        d.blocks = std::move(orbit);
        res.designs.push_back(std::move(d));
      }
    }
    // next combination in colex order
    if (r + 1 == count) break;
    std::size_t i = 0;
    while (i + 1 < kk && c[i] + 1 == c[i + 1]) ++i;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<Point>(j);
  }
  std::sort(res.orbitSizes.begin(), res.orbitSizes.end());
  std::sort(res.designs.begin(), res.designs.end(), [](const CandidateDesign& a, const CandidateDesign& b) {
    if (a.params.b != b.params.b) return a.params.b < b.params.b;
    return a.blocks.front().points() < b.blocks.front().points();
  });
  return res;
}

// ---------------------------------------------------------------------------

namespace {

struct Tester {
  const PermGroup& g;
  const DesignParams& params;
  SearchReport& rep;
  std::set<std::vector<Point>> triedBlocks;
  std::set<std::vector<Point>> foundDesigns;  // keyed by least block

  void test(const PointSubset& block) {
    if (!triedBlocks.insert(block.points()).second) return;
    ++rep.orbitsExpanded;
    const std::size_t b = params.b.get_ui();
    std::vector<PointSubset> orbit;
    try {
      orbit = set_orbit(g, block, b);
    } catch (const BudgetExceeded&) {
      return;
    }
    if (orbit.size() != b) return;
    auto lambda = constant_pair_coverage(orbit, g.degree());
    if (!lambda || *lambda != params.lambda) return;
    if (!is_flag_transitive(g, orbit)) return;
    sort_blocks(orbit);
    if (!foundDesigns.insert(orbit.front().points()).second) return;
    CandidateDesign d;
    d.actionLabel = g.label();
    d.params = params;
    d.blockStabilizerOrder = rep.groupOrder / params.b;
    d.flagTransitive = true;
    d.blocks = std::move(orbit);
    rep.designs.push_back(std::move(d));
  }
};

}  // namespace

SearchReport stabilizer_search(const PermGroup& g, const DesignParams& params, const StabilizerSearchOptions& opt) {
  SearchReport rep;
  rep.actionLabel = g.label();
  rep.params = params;
  const std::size_t v = g.degree();
  if (params.v != Int(static_cast<unsigned long>(v)))
    throw std::invalid_argument("stabilizer_search: v does not match the action degree");
  if (params.k <= 2 || params.k >= params.v - 1) throw std::invalid_argument("stabilizer_search: need 2 < k < v-1");
  if (params.r * (params.k - 1) != params.lambda * (params.v - 1) || params.b * params.k != params.v * params.r)
    throw std::invalid_argument("stabilizer_search: parameters violate the design identities");
  rep.groupOrder = g.order();
  const Int flags = params.v * params.r;
  if (rep.groupOrder % flags != 0) {
    rep.strategy = "flag-count";
    rep.exhaustiveness = "vr = " + flags.get_str() + " does not divide |G| = " + rep.groupOrder.get_str() +
                         ", so G cannot be transitive on flags; no enumeration needed";
    return rep;
  }
  if (!g.is_transitive()) {
    rep.strategy = "flag-count";
    rep.exhaustiveness = "G is not transitive on points, so it cannot be flag-transitive";
    return rep;
  }
  if (rep.groupOrder % params.b != 0) {
    rep.strategy = "block-count";
    rep.exhaustiveness = "b does not divide |G|, so G cannot be transitive on blocks";
    return rep;
  }
  Tester tester{g, params, rep, {}, {}};
  const std::size_t k = params.k.get_ui();
  const Int kOrder = rep.groupOrder / flags;

  if (kOrder > 1) {
    // B is a union of orbits of K = G_{alpha,B}, a subgroup of G_alpha of
    // order |G|/(vr); K is taken up to conjugacy in G_alpha.
    rep.strategy = "flag-stabilizer";
    rep.subgroupOrder = kOrder;
    const Point alpha = 0;
    const PermGroup stab = g.point_stabilizer(alpha);
    const IndexedGroup ig(stab);
    const auto classes = subgroups_of_order(ig, kOrder, opt.subgroups, &rep.subgroupStats);
    rep.subgroupClasses = classes.size();
    for (const Subgroup& K : classes) {
      const auto orbits = orbits_of(v, ig.perms(K.generators));
      std::vector<const std::vector<Point>*> others;
      for (const auto& o : orbits)
        if (o.front() != alpha || o.size() != 1) others.push_back(&o);
      // Subset sums over the remaining orbits to total k-1.
      std::vector<std::size_t> suffix(others.size() + 1, 0);
      for (std::size_t i = others.size(); i-- > 0;) suffix[i] = suffix[i + 1] + others[i]->size();
      std::vector<std::size_t> chosen;
      auto dfs = [&](auto&& self, std::size_t i, std::size_t need) -> void {
        if (need == 0) {
          if (++rep.unionsExamined > opt.unionBudget)
            throw IncompleteEnumeration("stabilizer_search: union budget exceeded");
          PointSubset blk(v);
          blk.set(alpha);
          for (std::size_t c : chosen)
            for (Point x : *others[c]) blk.set(x);
          tester.test(blk);
          return;
        }
        if (i == others.size() || suffix[i] < need) return;
        if (others[i]->size() <= need) {
          chosen.push_back(i);
          self(self, i + 1, need - others[i]->size());
          chosen.pop_back();
        }
        self(self, i + 1, need);
      };
      dfs(dfs, 0, k - 1);
    }
    rep.exhaustiveness = "every subgroup K of G_0 of order |G|/(vr) = " + kOrder.get_str() + " up to conjugacy (" +
                         std::to_string(rep.subgroupClasses) + " classes) and every union of K-orbits of size k " +
                         "containing 0 (" + std::to_string(rep.unionsExamined) + " unions) was examined";
  } else {
    // Trivial flag stabilizer: G_B has order |G|/b and is regular on B, so B
    // is a single orbit of G_B of length k.
    rep.strategy = "block-stabilizer";
    const Int lOrder = rep.groupOrder / params.b;
    rep.subgroupOrder = lOrder;
    const IndexedGroup ig(g);
    const auto classes = subgroups_of_order(ig, lOrder, opt.subgroups, &rep.subgroupStats);
    rep.subgroupClasses = classes.size();
    for (const Subgroup& L : classes)
      for (const auto& o : orbits_of(v, ig.perms(L.generators))) {
        if (o.size() != k) continue;
        ++rep.unionsExamined;
        tester.test(PointSubset::from_points(v, o));
      }
    std::string note = "every subgroup L of order |G|/b = " + lOrder.get_str() + " up to conjugacy (" +
                       std::to_string(rep.subgroupClasses) + " classes";
    if (rep.subgroupStats.forcedNormal)
      note += "; Sylow " + rep.subgroupStats.prime + "-subgroup normal by Sylow counting, so all lie in Sylow normalizers";
    note += ") and each L-orbit of length k (" + std::to_string(rep.unionsExamined) + " candidates) was examined";
    rep.exhaustiveness = note;
  }
  std::sort(rep.designs.begin(), rep.designs.end(), [](const CandidateDesign& a, const CandidateDesign& b) {
    return a.blocks.front().points() < b.blocks.front().points();
  });
  return rep;
}

// ---------------------------------------------------------------------------

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

VerificationReport verify(const std::vector<PointSubset>& blocks, const PermGroup& g,
                          const std::optional<DesignParams>& expected) {
  VerificationReport rep;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const std::size_t v = g.degree();
  if (blocks.empty()) {
    add("nonempty", false, "no blocks");
    return rep;
  }
  bool degreeOk = true;
  for (const PointSubset& b : blocks) degreeOk = degreeOk && b.degree() == v;
  add("degree", degreeOk, "blocks live on the " + std::to_string(v) + " points of the action");
  if (!degreeOk) return rep;

  const std::size_t k = blocks[0].count();
  bool uniform = true;
  for (const PointSubset& b : blocks) uniform = uniform && b.count() == k;
  add("uniform-block-size", uniform, "k = " + std::to_string(k));

  std::set<std::vector<Point>> distinct;
  for (const PointSubset& b : blocks) distinct.insert(b.points());
  add("simple", distinct.size() == blocks.size(),
      std::to_string(distinct.size()) + " distinct of " + std::to_string(blocks.size()));

  const auto table = pair_counts(blocks, v);
  std::uint32_t lo = UINT32_MAX, hi = 0;
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      lo = std::min(lo, table[x][y]);
      hi = std::max(hi, table[x][y]);
    }
  add("pair-coverage", lo == hi, "pair counts range over [" + std::to_string(lo) + "," + std::to_string(hi) + "]");

  std::vector<std::size_t> rep_count(v, 0);
  for (const PointSubset& b : blocks)
    for (Point x : b.points()) ++rep_count[x];
  const bool constR = std::all_of(rep_count.begin(), rep_count.end(), [&](std::size_t c) { return c == rep_count[0]; });
  const Int V(static_cast<unsigned long>(v)), B(static_cast<unsigned long>(blocks.size())), K(static_cast<unsigned long>(k));
  const Int R(static_cast<unsigned long>(rep_count[0]));
  add("replication", constR && B * K == V * R, "r = bk/v = " + R.get_str());

  if (uniform && lo == hi && constR) {
    const DesignParams obs{V, B, R, K, Int(lo)};
    rep.observed = obs;
    add("identities", obs.r * (obs.k - 1) == obs.lambda * (obs.v - 1) && obs.b * obs.k == obs.v * obs.r,
        "r(k-1) = lambda(v-1) and bk = vr recomputed from blocks");
    add("nontrivial", obs.k > 2 && obs.k < obs.v - 1, "2 < k < v-1");
    add("incomplete", obs.b < binomial(obs.v, k), "b < C(v,k)");
    const Int gg = obs.g();
    add("hypothesis", gg > 1 && obs.lambda >= gg * gg, "(r,lambda) = " + gg.get_str() + ", lambda = " + obs.lambda.get_str());
    if (expected) add("expected-params", obs == *expected, "observed " + obs.to_string() + ", expected " + expected->to_string());
  } else if (expected) {
    add("expected-params", false, "blocks do not form a 2-design");
  }

  const auto orbit = set_orbit(g, blocks[0], blocks.size() + 1);
  std::set<std::vector<Point>> orbitSet;
  for (const PointSubset& s : orbit) orbitSet.insert(s.points());
  add("single-orbit", orbitSet == distinct, "orbit of the first block has " + std::to_string(orbit.size()) + " members");
  add("block-stabilizer-transitive", is_flag_transitive(g, blocks), "G_B transitive on B for a block B");
  return rep;
}

std::vector<CandidateDesign> hypothesis_filter(const std::vector<CandidateDesign>& designs) {
  std::vector<CandidateDesign> out;
  for (const CandidateDesign& d : designs) {
    const DesignParams& p = d.params;
    const Int g = p.g();
    if (g <= 1 || p.lambda < g * g) continue;
    if (p.k <= 2 || p.k >= p.v - 1) continue;
    if (p.b >= binomial(p.v, p.k.get_ui())) continue;
    out.push_back(d);
  }
  return out;
}

}  // namespace ftd
