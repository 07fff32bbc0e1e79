#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace a2b {

using Rational = mpq_class;
using Integer = mpz_class;

/// Polynomial in t with integer coefficients, lowest degree first.
/// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  explicit IntPoly(const Integer& constant);
  IntPoly(std::initializer_list<long> coeffs) : IntPoly(std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

  static IntPoly monomial(const Integer& coeff, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient. Requires a nonzero polynomial.
  long order() const;
  const Integer& coeff(std::size_t i) const { return c_[i]; }
  const Integer& leading() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }

  /// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
  Integer content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const Integer& k);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Exact division by an integer that divides every coefficient.
  IntPoly divexact(const Integer& k) const;
  /// Exact division by a polynomial known to divide this one over Z[t].
  IntPoly divexact(const IntPoly& d) const;

  /// Renders lowest degree first, e.g. "1-2*t+t^3".
  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// gcd over Q[t], returned primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Element of Q(t) in canonical form: num/den coprime in Q[t], integer
/// coefficients with joint content 1, positive leading coefficient of den.
/// Canonical form makes structural equality the field equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Integer(1)) {}
  explicit RatFunc(const Rational& q);
  RatFunc(IntPoly num, IntPoly den);

  static RatFunc t();

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// t-adic valuation ord_t(num) - ord_t(den). Requires nonzero.
  long order() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// e.g. "t", "-1+t", "(1+t)/t^2", "t/2".
  std::string str() const;

 private:
  struct Canonical {};
  RatFunc(IntPoly num, IntPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  /// Removes the joint integer content and makes lc(den) positive; assumes num, den coprime.
  void fix_content();
  static RatFunc from_coprime(IntPoly num, IntPoly den);

  IntPoly num_;
  IntPoly den_;
};

}  // namespace a2b
