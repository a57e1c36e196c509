#pragma once

// Arithmetic screens for flag-transitive 2-design parameters: the design
// identities, the r* reductions, divisor and subdegree filters, and the two
// order inequalities. Each rejection carries a Reason so elimination traces
// can name the exact clause that failed.

#include "ftd/exactmath.hpp"
#include "ftd/grouporders.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ftd {

enum class Reason {
  IdentityViolation,
  Fisher,
  LambdaBound,
  RStarGcd,
  CubeBound,
  PPrimeBound,
  Subdegree,
  BNonintegral,
  Completeness,
  Hypothesis,
  Nontriviality,
  DivisorConflict,
};

std::string reason_code(Reason r);

struct Reduced {
  Int g, rStar, lambdaStar;
};

/// g = (r, lambda), r* = r/g, lambda* = lambda/g.
Reduced reduce(const Int& r, const Int& lambda);

struct DesignParams {
  Int v, b, r, k, lambda;

  Int g() const { return gcd(r, lambda); }
  Int rStar() const { return r / g(); }
  Int lambdaStar() const { return lambda / g(); }
  std::string to_string() const;  // "(v,b,r,k,lambda)"

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Parameters of a 2-(v,k,lambda) design with b blocks; r and lambda derived.
/// Throws MathError when the identities do not give integers.
DesignParams params_from_vbk(const Int& v, const Int& b, const Int& k);

struct Check {
  Reason reason;
  bool pass;
  std::string detail;
};

/// Binomials C(v,k) with more digits than this are not expanded; the
/// incompleteness clause then passes vacuously and says so in its detail.
inline constexpr std::size_t kBinomialDigitLimit = 4000;

/// One entry per clause: the two identities, Fisher (b >= v, r >= k),
/// lambda v < r^2, nontriviality 2 < k < v-1, incompleteness b < C(v,k),
/// and the standing hypothesis lambda >= g^2 > 1.
std::vector<Check> check_basic(const DesignParams& p);
bool all_pass(const std::vector<Check>& checks);

struct Rejection {
  Int rStar, lambdaStar, k, g;  // g = 0 when the whole (r*, lambda*, k) row is rejected
  Reason reason;
};

struct AdmissibleOptions {
  std::optional<Int> gMax;
  /// A sharper known divisor of r* (defaults to rDivisor).
  std::optional<Int> rStarDivisor;
  /// Factorization of rDivisor when the caller already has it (large
  /// divisors are then never factored from scratch).
  std::optional<Factorization> rDivisorFactorization;
  /// Cap on (r*, lambda*, g) combinations examined; exceeding it sets truncated.
  std::uint64_t workBudget = 20'000'000;
  /// Keep at most this many individual rejections (counts are always kept).
  std::size_t rejectionLimit = 2000;
};

struct AdmissibleResult {
  std::vector<DesignParams> tuples;
  std::vector<Rejection> rejections;
  std::map<Reason, std::uint64_t> rejectionCounts;
  Int rStarGcd;  // gcd(v-1, r* divisor)
  bool truncated = false;
  std::uint64_t work = 0;
};

/// Every tuple with r* | gcd(v-1, rDivisor), v < r*^2, 2 < k < v-1, g >= 2,
/// g^2 <= lambda, r | rDivisor, b = vr/k integral and v <= b < C(v,k).
/// Values g > lambda* fail g^2 <= lambda outright and are never enumerated,
/// so they do not appear among the rejections.
AdmissibleResult admissible_tuples(const Int& v, const Int& rDivisor, const AdmissibleOptions& opt = {});

struct SubdegreeResult {
  Int R;
  bool pass;
};

/// R = (v-1, s); passes iff v < R^2.
SubdegreeResult subdegree_filter(const Int& v, const Int& s);

struct DivisibilityClause {
  std::string clause;
  bool applicable;
  bool pass;
  std::string detail;
};

/// r | |Out||H0|; if p | v then (r*, p) = 1 and r* | |Out|_{p'}|H0|_{p'};
/// lambda |X| < (|Out||H0|)^3.
std::vector<DivisibilityClause> divisibility_filter(const DesignParams& params, const CaseOrders& orders,
                                                    const Int& p);

struct PPrimeBound {
  Int lhs;  // |X|
  Int rhs;  // |Out|_{p'}^2 |H0| |H0|_{p'}^2
  bool pass;
};

/// The order inequality implied by r* | |Out|_{p'}|H0|_{p'} and v < r*^2
/// when p divides v: |X| < |Out|_{p'}^2 |H0| |H0|_{p'}^2.
PPrimeBound pprime_order_check(const GroupSpec& spec, const Int& orderH0);

/// |Out||H0|/|N| for a subgroup N fixing two points; throws std::logic_error
/// if |N| does not divide |Out||H0|.
Int stabilizer_divisor(const Int& orderOut, const Int& orderH0, const Int& orderN);

}  // namespace ftd
