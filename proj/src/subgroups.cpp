// Conjugacy-class representatives of subgroups of a given order m.
//
// Every subgroup H of order m contains a Sylow p-subgroup Q of H, and Q is
// G-conjugate to a subgroup of a fixed Sylow p-subgroup P0 of G. So up to
// conjugacy H contains one of a short list of anchors Q, and H is reached
// from Q by adjoining one element at a time, every intermediate group having
// order dividing m. When the Sylow count inside any group of order m is
// forced to be 1, H normalizes Q and the search stays inside N_G(Q).

#include "ftd/permgroup.hpp"

#include <algorithm>
#include <tuple>

namespace ftd {

namespace {

struct Search {
  const IndexedGroup& g;
  std::uint64_t budget;
  std::uint64_t closures = 0;

  void count() {
    if (++closures > budget)
      throw IncompleteEnumeration("subgroup search exceeded the closure budget of " + std::to_string(budget));
  }

  // Adds s to list unless it equals or is conjugate (under `over`) to a member.
  void add_unique(std::vector<Subgroup>& list, Subgroup s, const Subgroup& over) {
    for (const Subgroup& t : list)
      if (t.order() == s.order() && g.conjugate_in(s, t, over)) return;
    list.push_back(std::move(s));
  }

  // All subgroups of order m containing q and lying in ambient, up to
  // conjugacy under dedup (which must normalize q or be the whole group).
  std::vector<Subgroup> extend(const Subgroup& q, const Subgroup& ambient, std::size_t m, const Subgroup& dedup) {
    std::vector<Subgroup> results;
    if (q.order() == m) {
      results.push_back(q);
      return results;
    }
    std::vector<Subgroup> frontier{q};
    std::vector<char> tried(g.size(), 0);
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (const Subgroup& h : frontier) {
        std::fill(tried.begin(), tried.end(), 0);
        for (std::uint32_t x : h.elements) tried[x] = 1;
        for (std::uint32_t x : ambient.elements) {
          if (tried[x]) continue;
          // <H, x> depends only on the double coset HxH.
          for (std::uint32_t a : h.elements) {
            const std::uint32_t ax = g.mul(a, x);
            for (std::uint32_t b : h.elements) tried[g.mul(ax, b)] = 1;
          }
          count();
          auto gens = h.generators;
          gens.push_back(x);
          auto k = g.closure(std::move(gens), m);
          if (!k || m % k->order() != 0) continue;
          if (k->order() == m)
            add_unique(results, std::move(*k), dedup);
          else
            add_unique(next, std::move(*k), dedup);
        }
      }
      frontier = std::move(next);
    }
    return results;
  }
};

// True iff the only divisor d of c with d = 1 mod p is d = 1.
bool sylow_count_forced(const Int& c, const Int& p) {
  for (const Int& d : factorize(c).divisors())
    if (d > 1 && d % p == 1) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> subgroups_of_order(const IndexedGroup& g, const Int& m, const SubgroupSearchOptions& opt,
                                         SubgroupSearchStats* stats) {
  const Int n(static_cast<unsigned long>(g.size()));
  if (m < 1) throw std::invalid_argument("subgroups_of_order: m must be positive");
  SubgroupSearchStats local;
  SubgroupSearchStats& st = stats ? *stats : local;
  st = {};
  if (n % m != 0) return {};
  if (m == 1) return {*g.closure({})};
  if (m == n) return {g.whole()};

  // Anchor prime: prefer a full Sylow with forced normality, then any full
  // Sylow, then the largest p-part.
  const Factorization fm = factorize(m);
  std::tuple<bool, bool, Int> bestKey{false, false, 0};
  Int p;
  for (const PrimeFactor& pf : fm.factors()) {
    const Int pa = p_part(m, pf.prime);
    const bool full = pa == p_part(n, pf.prime);
    const bool forced = sylow_count_forced(m / pa, pf.prime);
    std::tuple<bool, bool, Int> key{full && forced, full, pa};
    if (p == 0 || key > bestKey) {
      bestKey = key;
      p = pf.prime;
    }
  }
  const Int pa = std::get<2>(bestKey);
  const bool full = std::get<1>(bestKey);
  const bool forced = sylow_count_forced(m / pa, p);
  st.prime = p.get_str();
  st.anchorOrder = pa.get_str();
  st.anchorIsSylow = full;
  st.forcedNormal = forced;

  Search search{g, opt.closureBudget};
  const Subgroup whole = g.whole();
  const Subgroup p0 = g.sylow(p);

  std::vector<Subgroup> anchors;
  if (full) {
    anchors.push_back(p0);
  } else {
    // Subgroups of P0 of order p^a, then merged under G-conjugacy.
    const Subgroup trivial = *g.closure({});
    for (Subgroup& s : search.extend(trivial, p0, pa.get_ui(), trivial)) search.add_unique(anchors, std::move(s), whole);
  }
  st.anchors = anchors.size();

  std::vector<Subgroup> out;
  const std::size_t mu = m.get_ui();
  for (const Subgroup& q : anchors) {
    const Subgroup nq = g.normalizer(q);
    const Subgroup& ambient = forced ? nq : whole;
    const Subgroup& dedup = (forced || full) ? nq : whole;
    for (Subgroup& h : search.extend(q, ambient, mu, dedup)) search.add_unique(out, std::move(h), whole);
  }
  st.closures = search.closures;
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return out;
}

}  // namespace ftd
