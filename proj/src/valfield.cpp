#include "a2b/valfield.hpp"

#include <cctype>
#include <charconv>

#include "a2b/errors.hpp"

namespace a2b {

Field Field::padic(long prime) {
  if (prime < 2 || mpz_probab_prime_p(Integer(prime).get_mpz_t(), 25) == 0)
    throw DegenerateInput("p-adic field needs a prime, got " + std::to_string(prime));
  return Field(Kind::PAdic, prime);
}

std::string Field::str() const {
  switch (kind_) {
    case Kind::PAdic: return "qp:" + std::to_string(prime_);
    case Kind::TAdic: return "qt";
    case Kind::Literal: break;
  }
  return "literal";
}

Field Field::parse(std::string_view selector) {
  if (selector == "qt") return tadic();
  if (selector.starts_with("qp:")) {
    std::string_view digits = selector.substr(3);
    long p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || end != digits.data() + digits.size())
      throw ParseError("bad prime in field selector '" + std::string(selector) + "'", 3);
    return padic(p);
  }
  throw ParseError("unknown field selector '" + std::string(selector) + "'", 0);
}

// ---------------------------------------------------------------- Val

const Rational& Val::value() const {
  if (!is_finite()) throw InternalError("value() of an infinite valuation");
  return q_;
}

Val Val::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: break;
  }
  return Val(Rational(-q_));
}

Val operator+(const Val& a, const Val& b) {
  if (a.is_finite() && b.is_finite()) return Val(Rational(a.q_ + b.q_));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw InternalError("inf - inf in valuation arithmetic");
  return a.is_finite() ? b : a;
}

bool operator==(const Val& a, const Val& b) {
  return a.kind_ == b.kind_ && (!a.is_finite() || a.q_ == b.q_);
}

std::strong_ordering operator<=>(const Val& a, const Val& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Val::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return q_.get_str();
}

// ---------------------------------------------------------------- Scalar

namespace {

long remove_prime(const Integer& n, long p) {
  Integer rest;
  Integer pz(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace

Scalar Scalar::of(const Field& field, const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (field.kind() == Field::Kind::TAdic) return Scalar(field, RatFunc(c));
  return Scalar(field, c);
}

Scalar Scalar::of(const Field& field, const RatFunc& f) {
  if (field.kind() != Field::Kind::TAdic)
    throw FieldMismatch("rational function outside the t-adic field");
  return Scalar(field, f);
}

Scalar Scalar::uniformizer(const Field& field) {
  switch (field.kind()) {
    case Field::Kind::PAdic: return of(field, Rational(field.prime()));
    case Field::Kind::TAdic: return of(field, RatFunc::t());
    case Field::Kind::Literal: break;
  }
  throw FieldMismatch("a literal scalar has no uniformizer");
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q == 0;
  return std::get<RatFunc>(value_).is_zero();
}

Val Scalar::val() const {
  if (is_zero()) return Val::pos_inf();
  switch (field_.kind()) {
    case Field::Kind::PAdic: {
      const auto& q = std::get<Rational>(value_);
      Integer num = q.get_num();
      Integer den = q.get_den();
      return Val(remove_prime(num, field_.prime()) - remove_prime(den, field_.prime()));
    }
    case Field::Kind::TAdic: return Val(std::get<RatFunc>(value_).order());
    case Field::Kind::Literal: break;
  }
  throw FieldMismatch("valuation of a literal scalar " + str());
}

Field Scalar::common(const Scalar& a, const Scalar& b) {
  if (a.field_.is_literal()) return b.field_;
  if (b.field_.is_literal() || a.field_ == b.field_) return a.field_;
  throw FieldMismatch("scalars from " + a.field_.str() + " and " + b.field_.str());
}

RatFunc Scalar::as_ratfunc() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return RatFunc(*q);
  return std::get<RatFunc>(value_);
}

Scalar Scalar::in(const Field& field) const {
  if (field_ == field) return *this;
  if (!field_.is_literal())
    throw FieldMismatch("cannot move a scalar from " + field_.str() + " to " + field.str());
  return of(field, std::get<Rational>(value_));
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(field_, Rational(-*q));
  return Scalar(field_, -std::get<RatFunc>(value_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(field_, Rational(1 / *q));
  return Scalar(field_, RatFunc(Rational(1)) / std::get<RatFunc>(value_));
}

#define A2B_SCALAR_BINOP(OP)                                                       \
  Scalar operator OP(const Scalar& a, const Scalar& b) {                           \
    Field f = Scalar::common(a, b);                                                \
    if (f.kind() == Field::Kind::TAdic)                                            \
      return Scalar(f, Scalar::Repr(a.as_ratfunc() OP b.as_ratfunc()));            \
    return Scalar(f, Scalar::Repr(Rational(std::get<Rational>(a.value_)            \
                                              OP std::get<Rational>(b.value_)))); \
  }

A2B_SCALAR_BINOP(+)
A2B_SCALAR_BINOP(-)
A2B_SCALAR_BINOP(*)
#undef A2B_SCALAR_BINOP

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  Field f = Scalar::common(a, b);
  if (f.kind() == Field::Kind::TAdic) return a.as_ratfunc() == b.as_ratfunc();
  return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar(1).in(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  return std::get<RatFunc>(value_).str();
}

// ---------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Field& field) : s_(text), field_(field) {}

  Scalar run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty scalar", pos_);
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v.in(field_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        Scalar d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else if (starts_primary()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (!peek('^')) return base;
    std::size_t at = pos_++;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    Integer e = integer();
    if (!e.fits_slong_p() || abs(e) > 4096) throw ParseError("exponent too large", at);
    long n = e.get_si();
    if (neg) n = -n;
    if (n < 0 && base.is_zero()) throw ParseError("zero to a negative power", at);
    return base.pow(n);
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (c == 't') {
      if (field_.kind() != Field::Kind::TAdic)
        throw ParseError("'t' is only valid in the t-adic field", pos_);
      ++pos_;
      return Scalar::uniformizer(field_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(integer()));
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a digit", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) {
  return ScalarParser(text, field).run();
}

}  // namespace a2b
