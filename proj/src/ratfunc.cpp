#include "a2b/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "a2b/errors.hpp"

namespace a2b {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(const Integer& constant) {
  if (constant != 0) c_.push_back(constant);
}

IntPoly IntPoly::monomial(const Integer& coeff, std::size_t degree) {
  if (coeff == 0) return IntPoly();
  std::vector<Integer> c(degree + 1);
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long IntPoly::order() const {
  if (c_.empty()) throw InternalError("order of the zero polynomial");
  long k = 0;
  while (c_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return IntPoly();
  Integer g = content();
  if (leading() < 0) g = -g;
  return divexact(g);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  std::vector<Integer> c = big;
  for (std::size_t i = 0; i < small.size(); ++i) c[i] += small[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const Integer& k) {
  if (k == 0) return IntPoly();
  IntPoly r = a;
  for (auto& x : r.c_) x *= k;
  return r;
}

IntPoly IntPoly::divexact(const Integer& k) const {
  if (k == 0) throw DivisionByZero();
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (d.degree() == 0) return divexact(d.leading());
  if (degree() < d.degree()) {
    if (is_zero()) return IntPoly();
    throw InternalError("inexact polynomial division");
  }
  std::vector<Integer> rem = c_;
  std::vector<Integer> q(c_.size() - d.c_.size() + 1);
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t()))
      throw InternalError("inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q[k] * d.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw InternalError("inexact polynomial division");
  return IntPoly(std::move(q));
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Integer& a = c_[k];
    if (a == 0) continue;
    if (a < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    Integer mag = abs(a);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

// lc(b)^m * a mod b for a suitable m; enough for gcd computations since
// the extra constant factor is removed by the primitive-part step.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const long db = b.degree();
  const Integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    Integer la = a.leading();
    a = a * lb - IntPoly::monomial(la, shift) * b;
  }
  return a;
}

}  // namespace

namespace {

std::optional<IntPoly> divide_exactly(const IntPoly& a, const IntPoly& d) {
  try {
    return a.divexact(d);
  } catch (const InternalError&) {
    return std::nullopt;
  }
}

IntPoly prs_gcd(IntPoly x, IntPoly y) {
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPoly(Integer(1));
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x;
}

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer r = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * x + *it;
  return r;
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
// the polynomial back from its balanced base-xi digits. Inputs are primitive.
std::optional<IntPoly> heuristic_gcd(const IntPoly& x, const IntPoly& y) {
  Integer xi = 2 * std::min(max_norm(x), max_norm(y)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer h;
    mpz_gcd(h.get_mpz_t(), evaluate(x, xi).get_mpz_t(), evaluate(y, xi).get_mpz_t());
    if (h != 0) {
      std::vector<Integer> digits;
      Integer half = xi / 2;
      while (h != 0) {
        Integer d;
        mpz_mod(d.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
        if (d > half) d -= xi;
        digits.push_back(d);
        h = (h - d) / xi;
      }
      IntPoly g = IntPoly(std::move(digits)).primitive_part();
      if (!g.is_zero() && divide_exactly(x, g) && divide_exactly(y, g)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.degree() == 0 || b.degree() == 0) return IntPoly(Integer(1));
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (auto g = heuristic_gcd(x, y)) return *std::move(g);
  return prs_gcd(std::move(x), std::move(y));
}

RatFunc::RatFunc(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  num_ = IntPoly(Integer(c.get_num()));
  den_ = IntPoly(Integer(c.get_den()));
}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc RatFunc::t() { return RatFunc(IntPoly::monomial(1, 1), IntPoly(Integer(1)), Canonical{}); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = IntPoly(Integer(1));
    return;
  }
  if (num_.degree() > 0 && den_.degree() > 0) {
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  fix_content();
}

RatFunc RatFunc::from_coprime(IntPoly num, IntPoly den) {
  RatFunc r(std::move(num), std::move(den), Canonical{});
  r.fix_content();
  return r;
}

void RatFunc::fix_content() {
  if (num_.is_zero()) {
    den_ = IntPoly(Integer(1));
    return;
  }
  Integer c = num_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), den_.content().get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divexact(c);
    den_ = den_.divexact(c);
  }
}

long RatFunc::order() const {
  if (is_zero()) throw InternalError("t-adic order of zero");
  return num_.order() - den_.order();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  // Henrici: only the common factor g of the denominators can cancel
  IntPoly g = gcd(a.den_, b.den_);
  if (g.degree() <= 0) return RatFunc::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  IntPoly da = a.den_.divexact(g);
  IntPoly db = b.den_.divexact(g);
  IntPoly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return RatFunc();
  IntPoly den = da * b.den_;
  IntPoly h = gcd(num, g);
  if (h.degree() > 0) {
    num = num.divexact(h);
    den = den.divexact(h);
  }
  return RatFunc::from_coprime(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  IntPoly g1 = gcd(a.num_, b.den_);
  IntPoly g2 = gcd(b.num_, a.den_);
  IntPoly n1 = g1.degree() > 0 ? a.num_.divexact(g1) : a.num_;
  IntPoly d2 = g1.degree() > 0 ? b.den_.divexact(g1) : b.den_;
  IntPoly n2 = g2.degree() > 0 ? b.num_.divexact(g2) : b.num_;
  IntPoly d1 = g2.degree() > 0 ? a.den_.divexact(g2) : a.den_;
  // Coprime already; only the integer content needs fixing.
  return RatFunc::from_coprime(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * RatFunc(b.den_, b.num_, RatFunc::Canonical{});
}

std::string RatFunc::str() const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.str();
  auto terms = [](const IntPoly& p) {
    std::size_t n = 0;
    for (const auto& c : p.coeffs()) n += (c != 0);
    return n;
  };
  std::string n = num_.str();
  if (terms(num_) > 1) n = "(" + n + ")";
  std::string d = den_.str();
  const bool bare_den = terms(den_) == 1 && (den_.degree() == 0 || den_.leading() == 1);
  if (!bare_den) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace a2b
