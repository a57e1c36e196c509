#include "ftd/grouporders.hpp"

#include <sstream>
#include <stdexcept>

namespace ftd {

std::string to_string(Family f) { return f == Family::Linear ? "linear" : "unitary"; }

Family parse_family(const std::string& s) {
  if (s == "linear" || s == "psl" || s == "L" || s == "PSL") return Family::Linear;
  if (s == "unitary" || s == "psu" || s == "U" || s == "PSU") return Family::Unitary;
  throw std::invalid_argument("unknown family '" + s + "' (expected psl or psu)");
}

GroupSpec::GroupSpec(Family family, int n, PrimePower q) : family_(family), n_(n), q_(std::move(q)) {
  if (n < 3) throw MathError("GroupSpec: n must be at least 3");
  if (family == Family::Unitary && n == 3 && q_.value() == 2)
    throw MathError("GroupSpec: PSU_3(2) is solvable and excluded");
}

GroupSpec GroupSpec::make(Family family, int n, unsigned long q) {
  return GroupSpec(family, n, PrimePower::from_value(Int(q)));
}

Int GroupSpec::d() const {
  const Int& q = q_.value();
  return gcd(Int(n_), family_ == Family::Linear ? Int(q - 1) : Int(q + 1));
}

std::string GroupSpec::name() const {
  return std::string(family_ == Family::Linear ? "PSL_" : "PSU_") + std::to_string(n_) + "(" +
         q_.value().get_str() + ")";
}

std::string class_token(CaseKind k) {
  switch (k) {
    case CaseKind::C1_Pi: return "c1p";
    case CaseKind::C1_Pij: return "c1pij";
    case CaseKind::C1_Ni: return "c1n";
    case CaseKind::C1_GLiGLni: return "c1gl";
    case CaseKind::C2_GLwr: return "c2";
    case CaseKind::C2_GUwr: return "c2";
    case CaseKind::C2_GLhalf: return "c2half";
    case CaseKind::C3: return "c3";
    case CaseKind::C4: return "c4";
    case CaseKind::C5_subfield: return "c5";
    case CaseKind::C5_O: return "c5o";
    case CaseKind::C5_Sp: return "c5sp";
    case CaseKind::C6: return "c6";
    case CaseKind::C7: return "c7";
    case CaseKind::C8_Sp: return "c8sp";
    case CaseKind::C8_O: return "c8o";
    case CaseKind::C8_U: return "c8u";
    case CaseKind::S: return "s";
  }
  return "?";
}

std::string aschbacher_class(CaseKind k) {
  switch (k) {
    case CaseKind::C1_Pi:
    case CaseKind::C1_Pij:
    case CaseKind::C1_Ni:
    case CaseKind::C1_GLiGLni: return "C1";
    case CaseKind::C2_GLwr:
    case CaseKind::C2_GUwr:
    case CaseKind::C2_GLhalf: return "C2";
    case CaseKind::C3: return "C3";
    case CaseKind::C4: return "C4";
    case CaseKind::C5_subfield:
    case CaseKind::C5_O:
    case CaseKind::C5_Sp: return "C5";
    case CaseKind::C6: return "C6";
    case CaseKind::C7: return "C7";
    case CaseKind::C8_Sp:
    case CaseKind::C8_O:
    case CaseKind::C8_U: return "C8";
    case CaseKind::S: return "S";
  }
  return "?";
}

namespace {

std::string eps_str(int eps) { return eps == 0 ? "o" : (eps > 0 ? "+" : "-"); }

}  // namespace

std::string SubgroupCase::label() const {
  std::ostringstream os;
  switch (kind) {
    case CaseKind::C1_Pi: os << "C1_P(i=" << i << ")"; break;
    case CaseKind::C1_Pij: os << "C1_Pij(i=" << i << ")"; break;
    case CaseKind::C1_Ni: os << "C1_N(i=" << i << ")"; break;
    case CaseKind::C1_GLiGLni: os << "C1_GLiGLni(i=" << i << ")"; break;
    case CaseKind::C2_GLwr: os << "C2_GLwr(m=" << m << ",t=" << t << ")"; break;
    case CaseKind::C2_GUwr:
      if (m == 1) os << "C2_GU1wr(t=" << t << ")";
      else os << "C2_GUwr(m=" << m << ",t=" << t << ")";
      break;
    case CaseKind::C2_GLhalf: os << "C2_GLhalf"; break;
    case CaseKind::C3: os << "C3(m=" << m << ",t=" << t << ")"; break;
    case CaseKind::C4: os << "C4(i=" << i << ")"; break;
    case CaseKind::C5_subfield: os << "C5_subfield(q0=" << q0 << ",t=" << t << ")"; break;
    case CaseKind::C5_O: os << "C5_O(eps=" << eps_str(eps) << ")"; break;
    case CaseKind::C5_Sp: os << "C5_Sp"; break;
    case CaseKind::C6: os << "C6(t=" << t << ",m=" << m << ")"; break;
    case CaseKind::C7: os << "C7(m=" << m << ",t=" << t << ")"; break;
    case CaseKind::C8_Sp: os << "C8_Sp"; break;
    case CaseKind::C8_O: os << "C8_O(eps=" << eps_str(eps) << ")"; break;
    case CaseKind::C8_U: os << "C8_U(q0=" << q0 << ")"; break;
    case CaseKind::S: os << "S(line=" << line << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Int order_GL(unsigned m, const Int& q) {
  if (m == 0) return 1;
  return ipow(q, m * (m - 1) / 2) * q_range_product(q, 1, m, 1);
}

Int order_SL(unsigned m, const Int& q) { return order_GL(m, q) / (q - 1); }

Int order_GU(unsigned m, const Int& q) {
  if (m == 0) return 1;
  return ipow(q, m * (m - 1) / 2) * q_range_product(q, 1, m, -1);
}

Int order_SU(unsigned m, const Int& q) { return order_GU(m, q) / (q + 1); }

Int order_Sp(unsigned n, const Int& q) {
  if (n % 2) throw MathError("order_Sp: odd dimension");
  const unsigned m = n / 2;
  Int r = ipow(q, m * m);
  for (unsigned i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

Int order_SO(unsigned n, int eps, const Int& q) {
  if (n == 0) return 1;
  if (n % 2 == 1) {
    if (eps != 0) throw MathError("order_SO: odd dimension takes eps = 0");
    const unsigned m = (n - 1) / 2;
    Int r = ipow(q, m * m);
    for (unsigned i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
    return r;
  }
  if (eps != 1 && eps != -1) throw MathError("order_SO: even dimension takes eps = +-1");
  const unsigned m = n / 2;
  Int r = ipow(q, m * (m - 1)) * (ipow(q, m) - eps);
  for (unsigned i = 1; i < m; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

Int order_X(const GroupSpec& spec) {
  const unsigned n = static_cast<unsigned>(spec.n());
  const Int& q = spec.q().value();
  const int sign = spec.family() == Family::Linear ? 1 : -1;
  return ipow(q, n * (n - 1) / 2) * q_range_product(q, 2, n, sign) / spec.d();
}

Int order_out(const GroupSpec& spec) { return 2 * spec.d() * spec.f(); }

namespace {

bool is_small_prime(int t) { return t >= 2 && is_prime(Int(t)); }

// Smallest e >= 1 with p^e = sign (mod m), or 0 if none below m.
unsigned min_exponent(const Int& p, const Int& m, int sign) {
  Int x = 1;
  for (unsigned e = 1; e <= m.get_ui() + 1; ++e) {
    x = (x * p) % m;
    Int target = sign > 0 ? Int(1 % m) : Int((m - 1) % m);
    if (x == target) return e;
  }
  return 0;
}

void require(bool ok, const GroupSpec& spec, const SubgroupCase& sc, const char* why) {
  if (!ok) throw IncompatibleCase(sc.label() + " does not apply to " + spec.name() + ": " + why);
}

// Prime t and integer m >= 1 with n = t^m, or {0,0}.
std::pair<int, int> prime_power_dim(int n) {
  for (int t = 2; t <= n; ++t) {
    if (!is_small_prime(t)) continue;
    int m = 0, x = 1;
    while (x < n) {
      x *= t;
      ++m;
    }
    if (x == n) return {t, m};
  }
  return {0, 0};
}

}  // namespace

void validate_case(const GroupSpec& spec, const SubgroupCase& sc) {
  const int n = spec.n();
  const bool lin = spec.family() == Family::Linear;
  const Int& q = spec.q().value();
  const Int& p = spec.p();
  switch (sc.kind) {
    case CaseKind::C1_Pi:
      require(sc.i >= 1 && 2 * sc.i <= n, spec, sc, "need 1 <= i <= n/2");
      break;
    case CaseKind::C1_Pij:
    case CaseKind::C1_GLiGLni:
      require(lin, spec, sc, "linear only");
      require(sc.i >= 1 && 2 * sc.i < n, spec, sc, "need 1 <= i < n/2");
      break;
    case CaseKind::C1_Ni:
      require(!lin, spec, sc, "unitary only");
      require(sc.i >= 1 && 2 * sc.i < n, spec, sc, "need 1 <= i < n/2");
      break;
    case CaseKind::C2_GLwr:
      require(lin, spec, sc, "linear only");
      require(sc.m >= 1 && sc.t >= 2 && sc.m * sc.t == n, spec, sc, "need n = mt, t >= 2");
      require(sc.m > 1 || q >= 5, spec, sc, "m = 1 needs q >= 5");
      break;
    case CaseKind::C2_GUwr:
      require(!lin, spec, sc, "unitary only");
      require(sc.m >= 1 && sc.t >= 2 && sc.m * sc.t == n, spec, sc, "need n = mt, t >= 2");
      break;
    case CaseKind::C2_GLhalf:
      require(!lin, spec, sc, "unitary only");
      require(n % 2 == 0, spec, sc, "n must be even");
      break;
    case CaseKind::C3:
      require(sc.m >= 1 && is_small_prime(sc.t) && sc.m * sc.t == n, spec, sc,
              "need n = mt with t prime");
      require(lin || sc.t % 2 == 1, spec, sc, "unitary needs t odd");
      break;
    case CaseKind::C4:
      require(sc.i >= 2 && n % sc.i == 0 && sc.i < n / sc.i, spec, sc, "need 1 < i < sqrt(n), i | n");
      break;
    case CaseKind::C5_subfield: {
      require(is_small_prime(sc.t) && sc.q0 >= 2, spec, sc, "need t prime");
      require(lin || sc.t % 2 == 1, spec, sc, "unitary needs t odd");
      require(ipow(Int(sc.q0), static_cast<unsigned long>(sc.t)) == q, spec, sc, "need q = q0^t");
      break;
    }
    case CaseKind::C5_O:
      require(!lin, spec, sc, "unitary only");
      require(p != 2, spec, sc, "q must be odd");
      require((n % 2 == 1) ? sc.eps == 0 : (sc.eps == 1 || sc.eps == -1), spec, sc,
              "eps must be o for odd n and +-1 for even n");
      break;
    case CaseKind::C5_Sp:
      require(!lin, spec, sc, "unitary only");
      require(n % 2 == 0, spec, sc, "n must be even");
      break;
    case CaseKind::C6: {
      auto [t, m] = prime_power_dim(n);
      require(t != 0 && sc.t == t && sc.m == m, spec, sc, "need n = t^m with t prime");
      require(Int(t) != p, spec, sc, "need t != p");
      const Int mod = Int(t) * (t == 2 ? 2 : 1);
      const unsigned e = min_exponent(p, mod, lin ? 1 : -1);
      require(e != 0 && e == spec.f() && e % 2 == 1, spec, sc,
              lin ? "need f odd and minimal with t(2,t) | p^f - 1"
                  : "need f odd and minimal with t(2,t) | p^f + 1");
      break;
    }
    case CaseKind::C7: {
      require(sc.m >= 3 && sc.t >= 2, spec, sc, "need m >= 3, t >= 2");
      require(ipow(Int(sc.m), static_cast<unsigned long>(sc.t)) == n, spec, sc, "need n = m^t");
      require(sc.m % 2 == 1, spec, sc, "only odd m is encoded");
      break;
    }
    case CaseKind::C8_Sp:
      require(lin, spec, sc, "linear only");
      require(n % 2 == 0 && n >= 4, spec, sc, "n must be even and >= 4");
      break;
    case CaseKind::C8_O:
      require(lin, spec, sc, "linear only");
      require(p != 2, spec, sc, "q must be odd");
      require((n % 2 == 1) ? sc.eps == 0 : (sc.eps == 1 || sc.eps == -1), spec, sc,
              "eps must be o for odd n and +-1 for even n");
      break;
    case CaseKind::C8_U:
      require(lin, spec, sc, "linear only");
      require(sc.q0 >= 2 && Int(sc.q0) * sc.q0 == q, spec, sc, "need q = q0^2");
      break;
    case CaseKind::S: {
      const SClassLine& line = sclass_line(spec.family(), sc.line);
      require(line.n == n, spec, sc, "dimension does not match the table line");
      break;
    }
  }
}

namespace {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int exact_div(const Int& a, const Int& b, const char* what) {
  if (b == 0 || a % b != 0)
    throw std::logic_error(std::string("non-integral order in ") + what + ": " + a.get_str() + " / " +
                           b.get_str());
  return a / b;
}

// Index of the C6 stabilizer inside t^{2m}.Sp_{2m}(t) that lies in the simple group.
Int c6_index(const GroupSpec& spec, int t, int m) {
  const Int& q = spec.q().value();
  const bool lin = spec.family() == Family::Linear;
  const Int qs = lin ? Int(q - 1) : Int(q + 1);
  if (t == 3 && m == 1) return qs % 9 == 0 ? 1 : 3;
  if (t == 2 && m == 2) return qs % 8 == 0 ? 1 : 2;
  return 1;
}

}  // namespace

Int order_H0(const GroupSpec& spec, const SubgroupCase& sc) {
  validate_case(spec, sc);
  const unsigned n = static_cast<unsigned>(spec.n());
  const Int& q = spec.q().value();
  const Int d = spec.d();
  const Int X = order_X(spec);
  const bool lin = spec.family() == Family::Linear;
  const char* what = "order_H0";
  switch (sc.kind) {
    case CaseKind::C1_Pi: {
      const unsigned i = static_cast<unsigned>(sc.i);
      Int v;
      if (lin) {
        v = gaussian_binomial(q, n, i);
      } else {
        // totally singular i-spaces of the n-dimensional unitary space over GF(q^2)
        v = exact_div(q_range_product(q, n - 2 * i + 1, n, -1), q_range_product(ipow(q, 2), 1, i, 1), what);
      }
      return exact_div(X, v, what);
    }
    case CaseKind::C1_Pij: {
      const unsigned i = static_cast<unsigned>(sc.i);
      return exact_div(X, gaussian_binomial(q, n, i) * gaussian_binomial(q, n - i, i), what);
    }
    case CaseKind::C1_GLiGLni: {
      const unsigned i = static_cast<unsigned>(sc.i);
      return exact_div(X, gaussian_binomial(q, n, i) * ipow(q, i * (n - i)), what);
    }
    case CaseKind::C1_Ni: {
      const unsigned i = static_cast<unsigned>(sc.i);
      const Int v = exact_div(order_GU(n, q), order_GU(i, q) * order_GU(n - i, q), what);
      return exact_div(X, v, what);
    }
    case CaseKind::C2_GLwr: {
      const unsigned m = sc.m, t = sc.t;
      return exact_div(factorial(t) * ipow(order_GL(m, q), t), d * (q - 1), what);
    }
    case CaseKind::C2_GUwr: {
      const unsigned m = sc.m, t = sc.t;
      return exact_div(factorial(t) * ipow(order_GU(m, q), t), d * (q + 1), what);
    }
    case CaseKind::C2_GLhalf:
      return exact_div(2 * order_GL(n / 2, q * q), (q + 1) * d, what);
    case CaseKind::C3: {
      const unsigned m = sc.m, t = sc.t;
      const Int qt = ipow(q, t);
      if (lin) return exact_div(t * order_GL(m, qt), (q - 1) * d, what);
      return exact_div(t * order_GU(m, qt), (q + 1) * d, what);
    }
    case CaseKind::C4: {
      const unsigned i = static_cast<unsigned>(sc.i), j = n / i;
      if (lin) return exact_div(gcd(gcd(Int(i), Int(j)), q - 1) * order_SL(i, q) * order_SL(j, q), d, what);
      return exact_div(gcd(gcd(Int(i), Int(j)), q + 1) * order_SU(i, q) * order_SU(j, q), d, what);
    }
    case CaseKind::C5_subfield: {
      const Int q0 = sc.q0;
      if (lin) return exact_div(gcd(Int(n), (q - 1) / (q0 - 1)) * order_SL(n, q0), d, what);
      return exact_div(gcd(Int(n), (q + 1) / (q0 + 1)) * order_SU(n, q0), d, what);
    }
    case CaseKind::C5_O:
      return order_SO(n, sc.eps, q);
    case CaseKind::C5_Sp:
      return exact_div(order_Sp(n, q) * gcd(d, Int(n / 2)), d, what);
    case CaseKind::C6: {
      const Int t = sc.t;
      const Int full = ipow(t, 2 * sc.m) * order_Sp(2 * sc.m, t);
      return exact_div(full, c6_index(spec, sc.t, sc.m), what);
    }
    case CaseKind::C7: {
      const unsigned m = sc.m, t = sc.t;
      const Int pg = lin ? order_SL(m, q) : order_SU(m, q);
      return exact_div(factorial(t) * ipow(pg, t) * gcd(d, ipow(Int(m), t - 1)), d, what);
    }
    case CaseKind::C8_Sp:
      return exact_div(order_Sp(n, q) * gcd(Int(n / 2), q - 1), d, what);
    case CaseKind::C8_O:
      return order_SO(n, sc.eps, q);
    case CaseKind::C8_U: {
      const Int q0 = sc.q0;
      const Int c = gcd(Int(n), q0 - 1);
      const Int cAlt = (q - 1) / lcm(q0 + 1, (q - 1) / d);
      if (c != cAlt)
        throw std::logic_error("C8_U: (n, q0-1) = " + c.get_str() + " but (q-1)/lcm(q0+1,(q-1)/d) = " +
                               cAlt.get_str());
      return exact_div(c * order_SU(n, q0), d, what);
    }
    case CaseKind::S:
      return sclass_line(spec.family(), sc.line).h0Order(spec.q());
  }
  throw std::logic_error("order_H0: unhandled case kind");
}

CaseOrders case_orders(const GroupSpec& spec, const SubgroupCase& sc) {
  CaseOrders o;
  o.orderX = order_X(spec);
  o.orderOut = order_out(spec);
  o.orderH0 = order_H0(spec, sc);
  if (o.orderH0 <= 0 || o.orderX % o.orderH0 != 0)
    throw std::logic_error("|H0| = " + o.orderH0.get_str() + " does not divide |X| = " + o.orderX.get_str() +
                           " for " + spec.name() + " " + sc.label());
  o.v = o.orderX / o.orderH0;
  if (o.v < 2) throw std::logic_error("v < 2 for " + spec.name() + " " + sc.label());
  return o;
}

std::string order_citation(const GroupSpec& spec, const SubgroupCase& sc) {
  const bool lin = spec.family() == Family::Linear;
  switch (sc.kind) {
    case CaseKind::C1_Pi:
      return lin ? "v = [n,i]_q (i-subspaces)" : "v = prod_{j=n-2i+1}^{n}(q^j-(-1)^j) / prod_{j=1}^{i}(q^{2j}-1)";
    case CaseKind::C1_Pij: return "v = [n,i]_q [n-i,i]_q (incident i/(n-i) flags)";
    case CaseKind::C1_GLiGLni: return "v = [n,i]_q q^{i(n-i)} (complementary pairs)";
    case CaseKind::C1_Ni: return "v = |GU_n(q)| / (|GU_i(q)||GU_{n-i}(q)|)";
    case CaseKind::C2_GLwr: return "|H0| = d^-1 (q-1)^-1 t! q^{n(m-1)/2} prod_{j=1}^m (q^j-1)^t";
    case CaseKind::C2_GUwr: return "|H0| = d^-1 (q+1)^-1 t! |GU_m(q)|^t";
    case CaseKind::C2_GLhalf: return "|H0| = 2 d^-1 (q+1)^-1 |GL_{n/2}(q^2)|";
    case CaseKind::C3:
      return lin ? "|H0| = d^-1 (q-1)^-1 t q^{n(m-1)/2} prod_{j=1}^m (q^{tj}-1)"
                 : "|H0| = d^-1 (q+1)^-1 t |GU_m(q^t)|";
    case CaseKind::C4:
      return lin ? "|H0| = d^-1 (i,n/i,q-1) |SL_i(q)| |SL_{n/i}(q)|"
                 : "|H0| = d^-1 (i,n/i,q+1) |SU_i(q)| |SU_{n/i}(q)|";
    case CaseKind::C5_subfield:
      return lin ? "|H0| = d^-1 (n,(q-1)/(q0-1)) q0^{n(n-1)/2} prod_{j=2}^n (q0^j-1)"
                 : "|H0| = d^-1 (n,(q+1)/(q0+1)) |SU_n(q0)|";
    case CaseKind::C5_O: return "H0 = PSO^eps_n(q).(2,n), |H0| = |SO^eps_n(q)|";
    case CaseKind::C5_Sp: return "|H0| = d^-1 (d,n/2) |Sp_n(q)|";
    case CaseKind::C6: return "|H0| = t^{2m} |Sp_{2m}(t)| / c (c = 3, 2 for the small n = 3, 4 congruences)";
    case CaseKind::C7: return "|H0| = d^-1 (d,m^{t-1}) t! |PGL_m(q)|^t";
    case CaseKind::C8_Sp: return "|H0| = d^-1 (n/2,q-1) q^{n^2/4} prod (q^{2j}-1)";
    case CaseKind::C8_O: return "H0 = PSO^eps_n(q).(n,2), |H0| = |SO^eps_n(q)|";
    case CaseKind::C8_U: return "|H0| = d^-1 c q0^{n(n-1)/2} prod_{j=2}^n (q0^j-(-1)^j), c = (n,q0-1)";
    case CaseKind::S: return "|H0| from the S-class table";
  }
  return "";
}

}  // namespace ftd
