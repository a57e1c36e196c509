#pragma once

// Exact integer and rational primitives shared by every other module.
//
// Everything here works on GMP integers. Inequalities that come from order
// estimates are always evaluated with exact rationals so that an elimination
// verdict can be re-checked bit for bit.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ftd {

using Int = mpz_class;
using Rational = mpq_class;

class MathError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int ipow(const Int& base, unsigned long exponent);
Int binomial(const Int& n, unsigned long k);

/// Deterministic for n < 3.3e24 (fixed Miller-Rabin bases); beyond that GMP's
/// test with 40 rounds, which is far past anything the sweeps produce.
bool is_prime(const Int& n);

/// p-part of n: the largest power of p dividing n. Requires n >= 1, p prime.
Int p_part(const Int& n, const Int& p);
/// n / p_part(n, p).
Int p_prime_part(const Int& n, const Int& p);

/// Exponent of p in n (n >= 1).
unsigned long valuation(const Int& n, const Int& p);

/// q = p^f with p prime. Construction checks primality.
class PrimePower {
public:
  PrimePower(const Int& p, unsigned f);

  /// Decomposes a value q >= 2; throws MathError if q is not a prime power.
  static PrimePower from_value(const Int& q);
  static bool is_prime_power(const Int& q);

  const Int& p() const { return p_; }
  unsigned f() const { return f_; }
  const Int& value() const { return value_; }
  unsigned long as_ulong() const { return value_.get_ui(); }

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.p_ == b.p_ && a.f_ == b.f_;
  }

private:
  Int p_;
  unsigned f_;
  Int value_;
};

struct PrimeFactor {
  Int prime;
  unsigned multiplicity;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimeFactor> factors);

  const std::vector<PrimeFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  Int value() const;
  /// All positive divisors in increasing order.
  std::vector<Int> divisors() const;
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

private:
  std::vector<PrimeFactor> factors_;
};

/// Trial division up to 10^6, then Brent's variant of Pollard rho.
Factorization factorize(const Int& n);

/// Same result as factorize(n), but first splits n into coprime pieces by
/// gcds with the hint values, so a product of many moderate cyclotomic
/// factors never reaches Pollard rho as one huge composite.
Factorization factorize_with_hints(const Int& n, const std::vector<Int>& hints);

/// Hints for numbers built from orders over GF(p^e): p^j - 1 for j <= maxExponent.
std::vector<Int> cyclotomic_hints(const Int& p, unsigned maxExponent);

/// One factor (q^j - sign) of a q-product. sign is +1 or -1.
struct QTerm {
  unsigned exponent;
  int sign;
};

/// Product over terms of (q^j - sign). Throws if q < 2 or a factor is <= 0.
Int q_product(const Int& q, std::span<const QTerm> terms);

/// prod_{j=from}^{to} (q^j - sign^j) with sign = +1 or -1 ("(-1)^j" style
/// products use sign = -1).
Int q_range_product(const Int& q, unsigned from, unsigned to, int sign);

/// Number of i-dimensional subspaces of an n-dimensional space over GF(q).
Int gaussian_binomial(const Int& q, unsigned n, unsigned i);

std::string to_string(const Int& x);

}  // namespace ftd
