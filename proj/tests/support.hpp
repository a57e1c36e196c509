#pragma once

// Oracles and property checks shared by the unit tests and the acceptance
// runner. Every check returns a list of failure descriptions; empty means
// the property holds.

#include "ftd/classical.hpp"
#include "ftd/designsearch.hpp"
#include "ftd/eliminator.hpp"

#include <string>
#include <vector>

namespace ftd::testing {

using Failures = std::vector<std::string>;

/// Action of g on the orbit of a point set.
PermGroup induced_on_sets(const PermGroup& g, const PointSubset& seed, std::string label = {});

/// PSL_n(q):2 (graph automorphism) on antiflags (point, hyperplane not on it).
PermGroup antiflag_action(unsigned n, unsigned long q);

/// PSL_n(q) on i-dimensional subspaces, for small n, q.
PermGroup subspace_action(unsigned n, unsigned long q, unsigned i);

/// Lower and upper product bounds for prod_j (1 - q^-j) and
/// prod_j (1 - (-q)^-j), prime powers q <= qMax, 2 <= a <= aMax.
Failures product_inequalities(unsigned long qMax, unsigned aMax);

/// The two gcd identities used for the P_{1,n-1} and P_2 cases.
Failures gcd_chains(int nMax, unsigned long qMax);

/// |G| = |orbit| |G_x| and the suborbits sum to the degree, for every
/// builtin action and a few constructed ones.
Failures orbit_invariants();

/// korbit_designs and stabilizer_search agree on every builtin action of
/// degree <= maxDegree: the same flag-transitive designs for every tuple
/// found by either method.
Failures korbit_vs_stabilizer(std::size_t maxDegree);

/// Runs the same sweep twice (and with two worker counts) and compares the
/// JSON reports byte for byte.
Failures determinism(const std::vector<SweepGrid>& grids);

/// Subgroup classes per order by brute force over all 2-generated subgroups;
/// only valid for groups whose subgroups are all 2-generated.
std::vector<std::pair<std::size_t, std::size_t>> brute_subgroup_classes(const IndexedGroup& g);

}  // namespace ftd::testing
