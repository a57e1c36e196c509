#include "support.hpp"

#include "ftd/builtin.hpp"
#include "ftd/report.hpp"

#include <map>
#include <set>

namespace ftd::testing {

PermGroup induced_on_sets(const PermGroup& g, const PointSubset& seed, std::string label) {
  const std::vector<PointSubset> orbit = set_orbit(g, seed);
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < orbit.size(); ++i) index.emplace(orbit[i].points(), static_cast<Point>(i));
  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) {
    std::vector<Point> img(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) img[i] = index.at(orbit[i].image(x).points());
    gens.push_back(Perm::from_images(img));
  }
  return PermGroup(orbit.size(), std::move(gens), std::move(label));
}

namespace {

Field field_for(unsigned long q) {
  const PrimePower pq = PrimePower::from_value(Int(q));
  return Field(static_cast<unsigned>(pq.p().get_ui()), pq.f());
}

Field::Elt dot(const Field& f, const Vec& a, const Vec& b) {
  Field::Elt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace

PermGroup antiflag_action(unsigned n, unsigned long q) {
  const PermGroup g = linear_action(n, q, ActionVariant::SocleExt2);
  const Field f = field_for(q);
  const auto pts = projective_points(n, f);
  const std::size_t N = pts.size();
  // Hyperplane j is the kernel of x -> x . pts[j] and has index N + j.
  for (std::size_t j = 0; j < N; ++j)
    if (dot(f, pts[0], pts[j]) != 0)
      return induced_on_sets(g, PointSubset::from_points(2 * N, {0, static_cast<Point>(N + j)}),
                             "antiflags of PG(" + std::to_string(n - 1) + "," + std::to_string(q) + ")");
  throw std::logic_error("no antiflag");
}

PermGroup subspace_action(unsigned n, unsigned long q, unsigned i) {
  const PermGroup g = linear_action(n, q, ActionVariant::Socle);
  const Field f = field_for(q);
  const auto pts = projective_points(n, f);
  // Span of the first i coordinate vectors, as a set of projective points.
  std::vector<Point> span;
  for (std::size_t x = 0; x < pts.size(); ++x) {
    bool inside = true;
    for (std::size_t c = i; c < n; ++c) inside = inside && pts[x][c] == 0;
    if (inside) span.push_back(static_cast<Point>(x));
  }
  return induced_on_sets(g, PointSubset::from_points(pts.size(), span),
                         std::to_string(i) + "-spaces of GF(" + std::to_string(q) + ")^" + std::to_string(n));
}

Failures product_inequalities(unsigned long qMax, unsigned aMax) {
  Failures out;
  for (unsigned long qv = 2; qv <= qMax; ++qv) {
    if (!PrimePower::is_prime_power(Int(qv))) continue;
    const Rational x(1, qv);
    Rational plain = 1, alt = 1;
    for (unsigned a = 1; a <= aMax; ++a) {
      Rational pw = 1;
      for (unsigned j = 0; j < a; ++j) pw *= x;
      plain *= 1 - pw;
      alt *= a % 2 ? Rational(1 + pw) : Rational(1 - pw);  // 1 - (-q)^-a
      const std::string at = " at q=" + std::to_string(qv) + ", a=" + std::to_string(a);
      if (a >= 2) {
        const Rational lo2 = (1 - x) * (1 - x), lo = 1 - x - x * x, hi = (1 - x) * (1 - x * x);
        if (!(lo2 <= lo && lo < plain && plain <= hi)) out.push_back("product bound (i) fails" + at);
      }
      if (a >= 3) {
        const Rational lo = (1 + x) * (1 - x * x), hi = lo * (1 + x * x * x);
        if (!(1 < lo && lo < alt && alt <= hi)) out.push_back("product bound (ii) fails" + at);
      }
    }
  }
  return out;
}

Failures gcd_chains(int nMax, unsigned long qMax) {
  Failures out;
  for (int n = 3; n <= nMax; ++n)
    for (unsigned long qv = 2; qv <= qMax; ++qv) {
      if (!PrimePower::is_prime_power(Int(qv))) continue;
      const Int q(qv);
      const auto P = [&](long e) { return ipow(q, static_cast<unsigned long>(e)); };
      const std::string at = " at n=" + std::to_string(n) + ", q=" + std::to_string(qv);
      const Int A = P(2 * n - 2) - P(n - 1) - P(n - 2) - q + 2;
      const Int B = (q - 1) * (P(n - 2) - 1);
      const Int diff = A - (q - 1) * (q - 1);
      if (diff != (P(n) + q * q - q - 1) * (P(n - 2) - 1)) out.push_back("P1,n-1 factorization fails" + at);
      if (diff % B != 0) out.push_back("P1,n-1 divisibility fails" + at);
      const Int v = (P(n) - 1) * (P(n - 1) - 1) / ((q - 1) * (q - 1));
      const Int s = 2 * q * (P(n - 2) - 1) / (q - 1);
      if ((2 * q) % gcd(v - 1, s) != 0) out.push_back("(v-1, s) does not divide 2q" + at);
      if (n % 2 == 0 && gcd((P(n) + q * q - q - 1) / (q - 1), (q + 1) * (q + 1)) != 1)
        out.push_back("P2 gcd is not 1" + at);
    }
  return out;
}

Failures orbit_invariants() {
  Failures out;
  std::vector<PermGroup> groups;
  for (const auto& b : builtin_actions()) groups.push_back(builtin_action(b.label));
  groups.push_back(k_subset_action(alternating_action(8), 2));
  groups.push_back(antiflag_action(3, 2));
  groups.push_back(subspace_action(4, 2, 2));
  groups.push_back(unitary_action(3, 3, ActionVariant::Socle));
  for (const PermGroup& g : groups) {
    const Int order = g.order();
    for (const auto& orb : g.orbits()) {
      const Int stab = g.point_stabilizer(orb.front()).order();
      if (Int(static_cast<unsigned long>(orb.size())) * stab != order)
        out.push_back(g.label() + ": orbit-stabilizer fails at point " + std::to_string(orb.front()));
    }
    if (g.is_transitive()) {
      std::size_t sum = 0;
      for (std::size_t s : g.suborbits(0)) sum += s;
      if (sum != g.degree()) out.push_back(g.label() + ": suborbits do not sum to the degree");
    }
  }
  return out;
}

Failures korbit_vs_stabilizer(std::size_t maxDegree) {
  Failures out;
  for (const auto& b : builtin_actions()) {
    if (b.degree > maxDegree) continue;
    const PermGroup g = builtin_action(b.label);
    const std::size_t v = g.degree();
    for (unsigned k = 3; k + 2 <= v; ++k) {
      const KOrbitResult kr = korbit_designs(g, k);
      std::map<std::string, std::size_t> expected;
      std::map<std::string, DesignParams> params;
      for (const auto& d : kr.designs) {
        if (!d.flagTransitive) continue;
        ++expected[d.params.to_string()];
        params.emplace(d.params.to_string(), d.params);
      }
      // Tuples from orbits without constant coverage must come back empty.
      for (std::size_t len : kr.orbitSizes) {
        try {
          const DesignParams p = params_from_vbk(Int(static_cast<unsigned long>(v)), Int(static_cast<unsigned long>(len)), Int(k));
          params.emplace(p.to_string(), p);
        } catch (const MathError&) {
        }
      }
      for (const auto& [key, p] : params) {
        const SearchReport sr = stabilizer_search(g, p);
        const std::size_t want = expected.count(key) ? expected[key] : 0;
        if (sr.designs.size() != want)
          out.push_back(b.label + " " + key + ": korbit " + std::to_string(want) + ", stabilizer search " +
                        std::to_string(sr.designs.size()));
      }
    }
  }
  return out;
}

Failures determinism(const std::vector<SweepGrid>& grids) {
  Failures out;
  const SweepResult a = sweep(grids, {}, 1);
  const SweepResult b = sweep(grids, {}, 1);
  const SweepResult c = sweep(grids, {}, 3);
  const std::string ja = report_json(a.grids, a.reports);
  if (ja != report_json(b.grids, b.reports)) out.push_back("JSON differs between identical runs");
  if (ja != report_json(c.grids, c.reports)) out.push_back("JSON differs between worker counts");
  if (report_tsv(a.reports) != report_tsv(c.reports)) out.push_back("TSV differs between worker counts");
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> brute_subgroup_classes(const IndexedGroup& g) {
  const std::size_t n = g.size();
  std::set<std::vector<std::uint32_t>> subs;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a; b < n; ++b) subs.insert(g.closure({a, b})->elements);
  // Conjugacy classes: canonical representative = least conjugate.
  std::map<std::size_t, std::set<std::vector<std::uint32_t>>> reps;
  for (const auto& s : subs) {
    Subgroup sg{s, {}};
    std::vector<std::uint32_t> best = s;
    for (std::uint32_t x = 0; x < n; ++x) best = std::min(best, g.conjugate(sg, x).elements);
    reps[s.size()].insert(best);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [order, r] : reps) out.emplace_back(order, r.size());
  return out;
}

}  // namespace ftd::testing
