#include "ftd/field.hpp"

#include "ftd/exactmath.hpp"

#include <map>
#include <utility>

namespace ftd {

namespace {

// Conway polynomials (low coefficient first, monic term omitted) for the
// small fields the constructors use. Anything else falls back to the first
// primitive polynomial in lexicographic order. Either way primitivity is
// verified before the field is accepted.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& conway() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> t = {
      {{2, 2}, {1, 1}},          {{2, 3}, {1, 1, 0}},       {{2, 4}, {1, 1, 0, 0}},
      {{2, 5}, {1, 0, 1, 0, 0}}, {{2, 6}, {1, 1, 0, 1, 1, 0}}, {{2, 7}, {1, 1, 0, 0, 0, 0, 0}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0}},
      {{3, 2}, {2, 2}},          {{3, 3}, {1, 2, 0}},       {{3, 4}, {2, 0, 0, 2}},
      {{5, 2}, {2, 4}},          {{5, 3}, {3, 3, 0}},
      {{7, 2}, {3, 6}},
  };
  return t;
}

// Digit vector <-> index.
std::vector<unsigned> digits(unsigned x, unsigned p, unsigned f) {
  std::vector<unsigned> d(f);
  for (unsigned i = 0; i < f; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Powers of x modulo the monic polynomial with low coefficients c. Returns an
// empty vector unless x has multiplicative order exactly p^f - 1.
std::vector<unsigned> power_table(unsigned p, unsigned f, const std::vector<unsigned>& c) {
  const unsigned q = static_cast<unsigned>(ipow(Int(p), f).get_ui());
  std::vector<unsigned> out;
  out.reserve(q - 1);
  std::vector<unsigned> cur(f, 0);
  cur[0] = 1;
  for (unsigned e = 0; e + 1 < q; ++e) {
    const unsigned idx = undigits(cur, p);
    if (e > 0 && idx == 1) return {};
    out.push_back(idx);
    // multiply by x: shift up, reduce x^f = -sum c_i x^i
    const unsigned top = cur[f - 1];
    for (unsigned i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top)
      for (unsigned i = 0; i < f; ++i) cur[i] = (cur[i] + (p - c[i]) * top) % p;
  }
  if (undigits(cur, p) != 1) return {};
  return out;
}

}  // namespace

Field::Field(unsigned p, unsigned f) : p_(p), f_(f) {
  if (f == 0 || !is_prime(Int(p))) throw FieldError("field: p must be prime and f >= 1");
  const Int qq = ipow(Int(p), f);
  if (qq > 65536) throw FieldError("field: q = " + qq.get_str() + " exceeds 2^16");
  q_ = static_cast<unsigned>(qq.get_ui());

  std::vector<unsigned> table;
  std::vector<unsigned> low;
  if (f == 1) {
    // GF(p): smallest primitive root, as the degree-1 polynomial x - g.
    for (unsigned g = (p == 2 ? 1 : 2); g < p; ++g) {
      low = {(p - g) % p};
      table = power_table(p, 1, low);
      if (!table.empty()) break;
    }
  } else {
    auto it = conway().find({p, f});
    if (it != conway().end()) {
      low = it->second;
      table = power_table(p, f, low);
    }
    for (unsigned code = 0; table.empty() && code < q_; ++code) {
      low = digits(code, p, f);
      if (low[0] == 0) continue;
      table = power_table(p, f, low);
    }
  }
  if (table.empty()) throw FieldError("field: no primitive polynomial found");
  modulus_ = low;
  modulus_.push_back(1);
  exp_ = std::move(table);
  log_.assign(q_, 0);
  for (unsigned e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
  neg_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    auto d = digits(a, p_, f_);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = undigits(d, p_);
  }
}

Field::Elt Field::add(Elt a, Elt b) const {
  if (p_ == 2) return a ^ b;
  if (f_ == 1) return (a + b) % p_;
  Elt out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Field::Elt Field::neg(Elt a) const { return neg_[a]; }

Field::Elt Field::inv(Elt a) const {
  if (a == 0) throw FieldError("field: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elt Field::pow(Elt a, unsigned long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Field::Elt Field::frobenius(Elt a, unsigned k) const {
  unsigned long e = 1;
  for (unsigned i = 0; i < k % f_; ++i) e *= p_;
  return pow(a, e);
}

std::string Field::to_string(Elt a) const {
  if (f_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "w^" + std::to_string(log_[a]);
}

}  // namespace ftd
