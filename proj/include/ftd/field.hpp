#pragma once

// Small finite fields GF(p^f) with table-driven arithmetic. Elements are
// indices 0..q-1: the index of c_0 + c_1 x + ... + c_{f-1} x^{f-1} is
// sum c_i p^i, so 0 is zero, 1 is one, and GF(p) sits at 0..p-1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftd {

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Field {
public:
  using Elt = std::uint32_t;

  /// Requires p prime and p^f <= 2^16.
  Field(unsigned p, unsigned f);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  /// Coefficients c_0..c_f of the monic defining polynomial.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  /// A fixed primitive element (the class of x, or a generator when f = 1).
  Elt primitive() const { return exp_[1 % (q_ - 1)]; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elt inv(Elt a) const;
  Elt pow(Elt a, unsigned long e) const;
  /// w^e for the primitive element w.
  Elt exp(unsigned long e) const { return exp_[e % (q_ - 1)]; }
  /// Discrete log to base primitive(); a != 0.
  unsigned log(Elt a) const { return log_.at(a); }
  /// a^(p^k).
  Elt frobenius(Elt a, unsigned k = 1) const;

  std::string to_string(Elt a) const;

private:
  unsigned p_, f_, q_;
  std::vector<unsigned> modulus_;
  std::vector<Elt> exp_;
  std::vector<unsigned> log_;
  std::vector<Elt> neg_;
};

}  // namespace ftd
