#pragma once

// Concrete permutation actions of small classical groups over GF(q), built
// from matrix generators acting on projective points.

#include "ftd/field.hpp"
#include "ftd/grouporders.hpp"
#include "ftd/permgroup.hpp"

#include <string>
#include <vector>

namespace ftd {

enum class ActionVariant {
  Socle,      // PSL_n(q) on points, PSU_n(q) on isotropic points
  SocleExt2,  // linear: graph automorphism, on points and hyperplanes; unitary: field automorphism
  PGL,        // PGL_n(q) on points (linear only)
  PGammaL,    // PGammaL_n(q) on points (linear only)
};

std::string to_string(ActionVariant v);
ActionVariant parse_variant(const std::string& s);

using Vec = std::vector<Field::Elt>;

/// Projective points of GF(q)^n, first nonzero coordinate 1, in
/// lexicographic order of the coordinate indices.
std::vector<Vec> projective_points(unsigned n, const Field& f);

/// Points of GF(q^2)^n (f2 = GF(q^2)) isotropic for the Hermitian form
/// (x, y) = sum_i x_i y_{n-1-i}^q, normalized as above.
std::vector<Vec> isotropic_points(unsigned n, const Field& f2);

/// Degree limit for the constructors.
inline constexpr std::size_t kClassicalDegreeLimit = 10'000;

/// Linear actions for n >= 2 (n = 2 gives PSL(2,q), PGL(2,q) on the
/// projective line); unitary actions for n = 3.
PermGroup linear_action(unsigned n, unsigned long q, ActionVariant variant);
PermGroup unitary_action(unsigned n, unsigned long q, ActionVariant variant);
PermGroup classical_action(const GroupSpec& spec, ActionVariant variant);

/// Alternating and symmetric groups in their natural action.
PermGroup alternating_action(unsigned n);
PermGroup symmetric_action(unsigned n);

/// Induced action on the k-subsets of the domain (colex order of subsets).
PermGroup k_subset_action(const PermGroup& g, unsigned k);

}  // namespace ftd
