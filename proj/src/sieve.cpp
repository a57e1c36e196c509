#include "ftd/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ftd {

std::string reason_code(Reason r) {
  switch (r) {
    case Reason::IdentityViolation: return "identity-violation";
    case Reason::Fisher: return "fisher";
    case Reason::LambdaBound: return "lambda-bound";
    case Reason::RStarGcd: return "rstar-gcd";
    case Reason::CubeBound: return "cube-bound";
    case Reason::PPrimeBound: return "pprime-bound";
    case Reason::Subdegree: return "subdegree";
    case Reason::BNonintegral: return "b-nonintegral";
    case Reason::Completeness: return "completeness";
    case Reason::Hypothesis: return "hypothesis";
    case Reason::Nontriviality: return "nontriviality";
    case Reason::DivisorConflict: return "divisor-conflict";
  }
  return "?";
}

Reduced reduce(const Int& r, const Int& lambda) {
  if (r < 1 || lambda < 1) throw MathError("reduce: r and lambda must be positive");
  const Int g = gcd(r, lambda);
  return {g, r / g, lambda / g};
}

std::string DesignParams::to_string() const {
  std::ostringstream os;
  os << "(" << v.get_str() << "," << b.get_str() << "," << r.get_str() << "," << k.get_str() << ","
     << lambda.get_str() << ")";
  return os.str();
}

DesignParams params_from_vbk(const Int& v, const Int& b, const Int& k) {
  if (v < 2 || k < 2 || b < 1) throw MathError("params_from_vbk: degenerate input");
  if ((b * k) % v != 0) throw MathError("params_from_vbk: bk/v is not an integer");
  const Int r = b * k / v;
  if ((r * (k - 1)) % (v - 1) != 0) throw MathError("params_from_vbk: r(k-1)/(v-1) is not an integer");
  return {v, b, r, k, r * (k - 1) / (v - 1)};
}

namespace {

// Natural log of C(v,k), approximate; only used to skip exact expansion of
// binomials that are obviously far larger than b.
double log_binomial(const Int& v, const Int& k) {
  const double vd = v.get_d(), kd = k.get_d();
  return std::lgamma(vd + 1) - std::lgamma(kd + 1) - std::lgamma(vd - kd + 1);
}

// Returns {pass, detail} for b < C(v,k).
std::pair<bool, std::string> incomplete(const Int& v, const Int& k, const Int& b) {
  if (k < 0 || k > v) return {true, "k outside [0,v]"};
  const double est = log_binomial(v, k);
  const double lb = std::log(b.get_d());
  if (est > lb + 8.0) return {true, "C(v,k) > b (magnitude)"};
  if (est / std::log(10.0) > static_cast<double>(kBinomialDigitLimit))
    return {true, "C(v,k) beyond digit bound; vacuous"};
  const Int c = binomial(v, k.get_ui());
  return {b < c, "C(v,k) = " + c.get_str()};
}

}  // namespace

std::vector<Check> check_basic(const DesignParams& p) {
  std::vector<Check> out;
  const bool id1 = p.r * (p.k - 1) == p.lambda * (p.v - 1);
  out.push_back({Reason::IdentityViolation, id1, "r(k-1) = lambda(v-1)"});
  const bool id2 = p.b * p.k == p.v * p.r;
  out.push_back({Reason::IdentityViolation, id2, "bk = vr"});
  out.push_back({Reason::Fisher, p.b >= p.v && p.r >= p.k, "b >= v and r >= k"});
  out.push_back({Reason::LambdaBound, p.lambda * p.v < p.r * p.r,
                 "lambda v = " + Int(p.lambda * p.v).get_str() + " < r^2 = " + Int(p.r * p.r).get_str()});
  out.push_back({Reason::Nontriviality, p.k > 2 && p.k < p.v - 1, "2 < k < v-1"});
  auto [inc, detail] = incomplete(p.v, p.k, p.b);
  out.push_back({Reason::Completeness, inc, "b < C(v,k); " + detail});
  const Int g = p.g();
  out.push_back({Reason::Hypothesis, g > 1 && p.lambda >= g * g,
                 "lambda >= (r,lambda)^2 > 1 with (r,lambda) = " + g.get_str()});
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

// Divisors d <= bound of n / m given the factorization of n (m | n), sorted.
// Each divisor produced costs one unit of work; stops early once work
// reaches budget.
std::vector<Int> divisors_of_quotient(const Factorization& fn, const Int& m, const Int& bound, std::uint64_t& work,
                                      std::uint64_t budget) {
  std::vector<PrimeFactor> f;
  for (const auto& pf : fn.factors()) {
    const unsigned long e = pf.multiplicity - valuation(m, pf.prime);
    if (e > 0) f.push_back({pf.prime, static_cast<unsigned>(e)});
  }
  std::vector<Int> out;
  auto rec = [&](auto&& self, std::size_t i, const Int& d) -> void {
    if (work >= budget) return;
    if (i == f.size()) {
      ++work;
      out.push_back(d);
      return;
    }
    Int x = d;
    for (unsigned e = 0; e <= f[i].multiplicity && x <= bound; ++e) {
      self(self, i + 1, x);
      x *= f[i].prime;
    }
  };
  rec(rec, 0, Int(1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AdmissibleResult admissible_tuples(const Int& v, const Int& rDivisor, const AdmissibleOptions& opt) {
  if (v < 4) throw MathError("admissible_tuples: v must be at least 4");
  if (rDivisor < 1) throw MathError("admissible_tuples: rDivisor must be positive");
  AdmissibleResult res;
  const Int starDiv = opt.rStarDivisor ? gcd(*opt.rStarDivisor, rDivisor) : rDivisor;
  res.rStarGcd = gcd(v - 1, starDiv);
  const Factorization fr = opt.rDivisorFactorization ? *opt.rDivisorFactorization : factorize(rDivisor);
  if (fr.value() != rDivisor) throw MathError("admissible_tuples: factorization does not match rDivisor");

  auto reject = [&](const Int& rs, const Int& ls, const Int& k, const Int& g, Reason why) {
    ++res.rejectionCounts[why];
    if (res.rejections.size() < opt.rejectionLimit) res.rejections.push_back({rs, ls, k, g, why});
  };

  // rStarGcd divides rDivisor, so its primes are among those of fr.
  std::vector<PrimeFactor> fgcd;
  for (const PrimeFactor& pf : fr.factors())
    if (const unsigned long e = valuation(res.rStarGcd, pf.prime); e > 0) fgcd.push_back({pf.prime, static_cast<unsigned>(e)});
  for (const Int& rs : Factorization(std::move(fgcd)).divisors()) {
    if (rs * rs <= v) continue;
    // lambda >= g^2 and lambda = g lambda* force g <= lambda* < r*.
    const std::vector<Int> gs = divisors_of_quotient(fr, rs, rs - 1, res.work, opt.workBudget);
    if (res.work >= opt.workBudget) {
      res.truncated = true;
      break;
    }
    const Int vm1 = v - 1;
    const Int step = vm1 / rs;
    for (Int ls = 1; ls < rs; ++ls) {
      if (res.work >= opt.workBudget) {
        res.truncated = true;
        break;
      }
      ++res.work;
      if (gcd(ls, rs) != 1) continue;
      const Int k = 1 + ls * step;
      if (k >= vm1) break;
      if (k <= 2) {
        reject(rs, ls, k, 0, Reason::Nontriviality);
        continue;
      }
      const Int gInt = k / gcd(k, v * rs);
      if (rDivisor % (gInt * rs) != 0) {
        reject(rs, ls, k, 0, Reason::DivisorConflict);
        continue;
      }
      for (const Int& g : gs) {
        ++res.work;
        if (g > ls || (opt.gMax && g > *opt.gMax)) break;
        if (g % gInt != 0) {
          reject(rs, ls, k, g, Reason::BNonintegral);
          continue;
        }
        const Int lambda = g * ls;
        const Int r = g * rs;
        if (g < 2 || g * g > lambda) {
          reject(rs, ls, k, g, Reason::Hypothesis);
          continue;
        }
        if (lambda * v >= r * r) {
          reject(rs, ls, k, g, Reason::LambdaBound);
          continue;
        }
        const Int b = v * r / k;
        if (b < v) {
          reject(rs, ls, k, g, Reason::Fisher);
          continue;
        }
        if (!incomplete(v, k, b).first) {
          reject(rs, ls, k, g, Reason::Completeness);
          continue;
        }
        res.tuples.push_back({v, b, r, k, lambda});
      }
    }
    if (res.truncated) break;
  }
  std::sort(res.tuples.begin(), res.tuples.end(), [](const DesignParams& a, const DesignParams& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.r < b.r;
  });
  return res;
}

SubdegreeResult subdegree_filter(const Int& v, const Int& s) {
  if (s < 1) throw MathError("subdegree_filter: s must be positive");
  const Int R = gcd(v - 1, s);
  return {R, v < R * R};
}

std::vector<DivisibilityClause> divisibility_filter(const DesignParams& params, const CaseOrders& orders,
                                                    const Int& p) {
  std::vector<DivisibilityClause> out;
  const Int bound = orders.orderOut * orders.orderH0;
  out.push_back({"r | |Out(X)||H0|", true, bound % params.r == 0,
                 "r = " + params.r.get_str() + ", |Out(X)||H0| = " + bound.get_str()});
  const bool pv = params.v % p == 0;
  if (pv) {
    const Int rs = params.rStar();
    const Int pp = p_prime_part(orders.orderOut, p) * p_prime_part(orders.orderH0, p);
    const bool ok = gcd(rs, p) == 1 && pp % rs == 0;
    out.push_back({"p | v: (r*,p) = 1 and r* | |Out(X)|_p' |H0|_p'", true, ok,
                   "r* = " + rs.get_str() + ", bound = " + pp.get_str()});
  } else {
    out.push_back({"p | v: (r*,p) = 1 and r* | |Out(X)|_p' |H0|_p'", false, true, "p does not divide v"});
  }
  const Int lhs = params.lambda * orders.orderX;
  const Int rhs = bound * bound * bound;
  out.push_back({"lambda |X| < (|Out(X)||H0|)^3", true, lhs < rhs,
                 "lambda |X| = " + lhs.get_str() + ", bound = " + rhs.get_str()});
  return out;
}

PPrimeBound pprime_order_check(const GroupSpec& spec, const Int& orderH0) {
  const Int& p = spec.p();
  const Int out = p_prime_part(order_out(spec), p);
  const Int h = p_prime_part(orderH0, p);
  PPrimeBound r;
  r.lhs = order_X(spec);
  r.rhs = out * out * orderH0 * h * h;
  r.pass = r.lhs < r.rhs;
  return r;
}

Int stabilizer_divisor(const Int& orderOut, const Int& orderH0, const Int& orderN) {
  const Int num = orderOut * orderH0;
  if (orderN < 1 || num % orderN != 0)
    throw std::logic_error("stabilizer_divisor: |N| = " + orderN.get_str() + " does not divide " + num.get_str());
  return num / orderN;
}

}  // namespace ftd
