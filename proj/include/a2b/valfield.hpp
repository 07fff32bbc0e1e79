#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "a2b/ratfunc.hpp"

namespace a2b {

/// Selects the concrete valued field a scalar lives in.
/// `Literal` marks untagged constants (0, 1, -1, ...) which adopt the field
/// of whatever they are combined with.
class Field {
 public:
  enum class Kind { Literal, PAdic, TAdic };

  static Field literal() { return Field(Kind::Literal, 0); }
  static Field padic(long prime);
  static Field tadic() { return Field(Kind::TAdic, 0); }

  Kind kind() const noexcept { return kind_; }
  long prime() const noexcept { return prime_; }
  bool is_literal() const noexcept { return kind_ == Kind::Literal; }

  /// "qp:5", "qt" or "literal".
  std::string str() const;
  /// Parses the CLI selector "qp:<prime>" or "qt".
  static Field parse(std::string_view selector);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, long p) : kind_(k), prime_(p) {}
  Kind kind_;
  long prime_;
};

/// Exact valuation value: a rational or one of the sentinels +inf / -inf.
class Val {
 public:
  Val() = default;
  Val(const Rational& q) : kind_(Kind::Finite), q_(q) { q_.canonicalize(); }  // NOLINT(implicit)
  Val(long n) : kind_(Kind::Finite), q_(n) {}            // NOLINT(implicit)

  static Val pos_inf() { return Val(Kind::PosInf); }
  static Val neg_inf() { return Val(Kind::NegInf); }

  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  /// The finite value; throws InternalError on a sentinel.
  const Rational& value() const;

  Val operator-() const;
  friend Val operator+(const Val& a, const Val& b);
  friend Val operator-(const Val& a, const Val& b) { return a + (-b); }

  friend bool operator==(const Val& a, const Val& b);
  friend std::strong_ordering operator<=>(const Val& a, const Val& b);

  /// "inf", "-inf", or the rational as "a/b".
  std::string str() const;

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Val(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational q_ = 0;
};

/// Element of the selected valued field: Q with a p-adic valuation, or Q(t)
/// with the t-adic valuation. Values are immutable and canonical.
class Scalar {
 public:
  Scalar() : field_(Field::literal()), value_(Rational(0)) {}
  Scalar(long n) : Scalar(Rational(n)) {}  // NOLINT(implicit)
  Scalar(const Rational& q) : field_(Field::literal()), value_(canonical(q)) {}  // NOLINT(implicit)

  /// A rational number tagged with `field`.
  static Scalar of(const Field& field, const Rational& q);
  /// A rational function; `field` must be t-adic.
  static Scalar of(const Field& field, const RatFunc& f);
  /// The uniformizer: p in Q_p, t in Q(t).
  static Scalar uniformizer(const Field& field);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;

  /// Valuation; v(0) = +inf. Throws FieldMismatch on a literal.
  Val val() const;
  /// log|x| = -v(x).
  Val logabs() const { return -val(); }

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Integer power, negative exponents allowed for nonzero scalars.
  Scalar pow(long e) const;
  /// Re-tags a literal into `field` (no-op for an already tagged scalar of that field).
  Scalar in(const Field& field) const;

  /// Canonical text: "5", "-1/2", "(1+t)/t^2". Parses back through parse_scalar.
  std::string str() const;

 private:
  using Repr = std::variant<Rational, RatFunc>;
  static Rational canonical(Rational q) {
    q.canonicalize();
    return q;
  }
  Scalar(Field f, Repr r) : field_(f), value_(std::move(r)) {}
  static Field common(const Scalar& a, const Scalar& b);
  RatFunc as_ratfunc() const;

  Field field_;
  Repr value_;
};

/// Parses scalar text: integers, fractions, `t`, `^` with integer exponents,
/// parentheses, + - * / and implicit multiplication such as "2t".
/// `t` is rejected unless `field` is t-adic. Errors carry the character offset.
Scalar parse_scalar(std::string_view text, const Field& field);

}  // namespace a2b
