#include "ftd/exactmath.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ftd {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int binomial(const Int& n, unsigned long k) {
  if (n < 0) throw MathError("binomial: negative n");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

namespace {

Int powmod(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // The first 13 prime bases are deterministic below 3.3e24.
  static const Int bound("3317044064679887385961981");
  if (n >= bound) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned a : small) {
    if (miller_rabin_witness(n, Int(a), d, s)) return false;
  }
  return true;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n < 1) throw MathError("valuation: n must be positive");
  if (p < 2) throw MathError("valuation: p must be at least 2");
  unsigned long t = 0;
  Int m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++t;
  }
  return t;
}

Int p_part(const Int& n, const Int& p) {
  if (!is_prime(p)) throw MathError("p_part: " + to_string(p) + " is not prime");
  return ipow(p, valuation(n, p));
}

Int p_prime_part(const Int& n, const Int& p) { return n / p_part(n, p); }

PrimePower::PrimePower(const Int& p, unsigned f) : p_(p), f_(f) {
  if (f == 0) throw MathError("PrimePower: exponent must be positive");
  if (!is_prime(p)) throw MathError("PrimePower: " + to_string(p) + " is not prime");
  value_ = ipow(p, f);
}

PrimePower PrimePower::from_value(const Int& q) {
  if (q < 2) throw MathError("PrimePower: q must be at least 2");
  Factorization fac = factorize(q);
  if (fac.factors().size() != 1) throw MathError(to_string(q) + " is not a prime power");
  return PrimePower(fac.factors()[0].prime, fac.factors()[0].multiplicity);
}

bool PrimePower::is_prime_power(const Int& q) {
  if (q < 2) return false;
  return factorize(q).factors().size() == 1;
}

Factorization::Factorization(std::vector<PrimeFactor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].multiplicity == 0) throw MathError("Factorization: zero multiplicity");
    if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime))
      throw MathError("Factorization: primes must be strictly increasing");
  }
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& f : factors_) v *= ipow(f.prime, f.multiplicity);
  return v;
}

std::vector<Int> Factorization::divisors() const {
  std::vector<Int> divs{Int(1)};
  for (const auto& f : factors_) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned e = 1; e <= f.multiplicity; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    os << factors_[i].prime.get_str();
    if (factors_[i].multiplicity > 1) os << "^" << factors_[i].multiplicity;
  }
  return os.str();
}

namespace {

// Brent's cycle-finding variant; returns a nontrivial factor of composite n.
Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, ys, g = 1, q = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Int& v) { return Int((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Perfect powers defeat rho (p^2 has a single prime), so take roots first.
  for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Int, unsigned> sub;
      factor_into(root, sub);
      for (auto& [p, e] : sub) out[p] += static_cast<unsigned>(e * k);
      return;
    }
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize(const Int& n) {
  if (n < 1) throw MathError("factorize: n must be positive");
  std::map<Int, unsigned> acc;
  Int m = n;
  for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++acc[Int(p)];
    }
  }
  if (m > 1) factor_into(m, acc);
  std::vector<PrimeFactor> out;
  out.reserve(acc.size());
  for (auto& [p, e] : acc) out.push_back({p, e});
  return Factorization(std::move(out));
}

Factorization factorize_with_hints(const Int& n, const std::vector<Int>& hints) {
  if (n < 1) throw MathError("factorize: n must be positive");
  // Refine {n} into pairwise coprime parts using the hints; each part is then
  // small enough to factor directly.
  std::vector<Int> parts{n};
  for (const Int& h : hints) {
    if (h < 2) continue;
    std::vector<Int> next;
    for (const Int& m : parts) {
      const Int g = gcd(m, h);
      if (g == 1 || g == m) {
        next.push_back(m);
        continue;
      }
      // m = (part sharing primes with g) * (rest)
      Int a = 1, b = m;
      for (Int t = gcd(b, g); t > 1; t = gcd(b, t)) {
        b /= t;
        a *= t;
      }
      next.push_back(a);
      if (b > 1) next.push_back(b);
    }
    parts = std::move(next);
  }
  std::map<Int, unsigned> acc;
  for (const Int& m : parts) {
    const Factorization fm = factorize(m);
    for (const PrimeFactor& pf : fm.factors()) acc[pf.prime] += pf.multiplicity;
  }
  std::vector<PrimeFactor> out;
  for (auto& [p, e] : acc) out.push_back({p, e});
  return Factorization(std::move(out));
}

std::vector<Int> cyclotomic_hints(const Int& p, unsigned maxExponent) {
  std::vector<Int> out;
  Int pj = 1;
  for (unsigned j = 1; j <= maxExponent; ++j) {
    pj *= p;
    out.push_back(pj - 1);
  }
  return out;
}

Int q_product(const Int& q, std::span<const QTerm> terms) {
  if (q < 2) throw MathError("q_product: q must be at least 2");
  Int acc = 1;
  for (const QTerm& t : terms) {
    if (t.sign != 1 && t.sign != -1) throw MathError("q_product: sign must be +1 or -1");
    Int factor = ipow(q, t.exponent) - t.sign;
    if (factor <= 0) throw MathError("q_product: nonpositive factor q^j - sign");
    acc *= factor;
  }
  return acc;
}

Int q_range_product(const Int& q, unsigned from, unsigned to, int sign) {
  std::vector<QTerm> terms;
  for (unsigned j = from; j <= to; ++j) {
    const int s = (sign == 1 || j % 2 == 0) ? 1 : -1;
    terms.push_back({j, s});
  }
  return q_product(q, terms);
}

Int gaussian_binomial(const Int& q, unsigned n, unsigned i) {
  if (i > n) return 0;
  Int num = 1, den = 1;
  for (unsigned j = 0; j < i; ++j) {
    num *= ipow(q, n - j) - 1;
    den *= ipow(q, j + 1) - 1;
  }
  return num / den;
}

std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace ftd
