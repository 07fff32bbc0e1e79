#include "a2b/projplane.hpp"

#include <utility>

namespace a2b {

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw DegenerateInput("join of equal points " + p.str());
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw DegenerateInput("meet of equal lines " + l.str());
  return ProjPoint(cross(l.coords(), m.coords()));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return Mat<3>::from_columns({a.coords(), b.coords(), c.coords()}).det().is_zero();
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return Mat<3>::from_columns({a.coords(), b.coords(), c.coords()}).det().is_zero();
}

Flag::Flag(ProjPoint p, ProjLine l) : p_(std::move(p)), l_(std::move(l)) {
  if (!incident(p_, l_)) throw DegenerateInput("flag point " + p_.str() + " is not on " + l_.str());
}

bool opposite(const Flag& a, const Flag& b) {
  return !incident(a.point(), b.line()) && !incident(b.point(), a.line());
}

bool nondegenerate(const FlagTriple& t) {
  bool next = true;
  bool prev = true;
  for (long i = 0; i < 3; ++i) {
    next = next && !incident(t.point(i), t.line(i + 1));
    prev = prev && !incident(t.point(i), t.line(i - 1));
  }
  return next || prev;
}

bool generic(const FlagTriple& t) {
  for (long i = 0; i < 3; ++i)
    if (!opposite(t[i], t[i + 1])) return false;
  return !collinear(t.point(0), t.point(1), t.point(2)) && !concurrent(t.line(0), t.line(1), t.line(2));
}

// ---------------------------------------------------------------- cross ratios

const Scalar& ExtScalar::value() const {
  if (!v_) throw InternalError("value of the point at infinity");
  return *v_;
}

Val ExtScalar::logabs() const { return v_ ? v_->logabs() : Val::pos_inf(); }

ExtScalar ExtScalar::inverse() const {
  if (!v_) return ExtScalar(Scalar(0));
  if (v_->is_zero()) return infinity();
  return ExtScalar(v_->inverse());
}

namespace {

ProjLine common_line(const std::array<const ProjPoint*, 4>& p) {
  for (std::size_t j = 1; j < 4; ++j) {
    if (*p[j] == *p[0]) continue;
    ProjLine l = join(*p[0], *p[j]);
    for (const auto* q : p)
      if (!incident(*q, l)) throw DegenerateInput("cross ratio of non-collinear points");
    return l;
  }
  throw DegenerateInput("cross ratio of four equal points");
}

ExtScalar bracket_ratio(const std::array<const ProjPoint*, 4>& p, std::size_t k) {
  const std::size_t a = k == 0 ? 1 : 0;
  const std::size_t b = k == 2 ? 1 : 2;
  auto br = [&](std::size_t i, std::size_t j) {
    const auto& x = p[i]->coords();
    const auto& y = p[j]->coords();
    return x[a] * y[b] - x[b] * y[a];
  };
  Scalar num = br(0, 1) * br(2, 3);
  Scalar den = br(0, 3) * br(1, 2);
  if (num.is_zero() && den.is_zero()) throw DegenerateInput("cross ratio of a quadruple with a triple point");
  if (den.is_zero()) return ExtScalar::infinity();
  return ExtScalar(num / den);
}

}  // namespace

ExtScalar cross_ratio_in_chart(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                               const ProjPoint& p4, std::size_t k) {
  std::array<const ProjPoint*, 4> p{&p1, &p2, &p3, &p4};
  ProjLine l = common_line(p);
  if (k > 2 || l[k].is_zero()) throw DegenerateInput("chart does not cover the common line");
  return bracket_ratio(p, k);
}

ExtScalar cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4) {
  std::array<const ProjPoint*, 4> p{&p1, &p2, &p3, &p4};
  ProjLine l = common_line(p);
  std::size_t k = 0;
  while (l[k].is_zero()) ++k;
  return bracket_ratio(p, k);
}

ExtScalar cross_ratio(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l4) {
  return cross_ratio(as_point(l1), as_point(l2), as_point(l3), as_point(l4));
}

// ---------------------------------------------------------------- triple ratios

ExtScalar triple_ratio(const FlagTriple& t) {
  if (!nondegenerate(t)) throw DegenerateInput("triple ratio of a degenerate triple");
  auto delta = [&](long i, long j) { return dot(t.line(i).coords(), t.point(j).coords()); };
  Scalar num = delta(0, 1) * delta(1, 2) * delta(2, 0);
  Scalar den = delta(0, 2) * delta(1, 0) * delta(2, 1);
  if (den.is_zero()) return ExtScalar::infinity();
  return ExtScalar(num / den);
}

TripleVal geom_triple_ratio(const FlagTriple& t) {
  if (!nondegenerate(t)) throw DegenerateInput("triple ratio of a degenerate triple");
  const ProjPoint& p1 = t.point(0);
  const ProjLine& d1 = t.line(0);
  ProjLine b = join(p1, t.point(1));
  ProjLine c = join(p1, meet(t.line(1), t.line(2)));
  ProjLine d = join(p1, t.point(2));
  return {{geom_cross_ratio(d1, b, c, d), geom_cross_ratio(d1, d, b, c), geom_cross_ratio(d1, c, d, b)}};
}

TripleVal geom_triple_ratio_dual(const FlagTriple& t) {
  if (!nondegenerate(t)) throw DegenerateInput("triple ratio of a degenerate triple");
  const ProjPoint& p1 = t.point(0);
  const ProjLine& d1 = t.line(0);
  ProjPoint a = meet(t.line(1), d1);
  ProjPoint b = meet(join(t.point(1), t.point(2)), d1);
  ProjPoint c = meet(t.line(2), d1);
  return {{geom_cross_ratio(p1, a, b, c), geom_cross_ratio(p1, c, a, b), geom_cross_ratio(p1, b, c, a)}};
}

TripleVal geom_from_algebraic(const Scalar& z) {
  Scalar one = Scalar(1);
  if (z.is_zero() || (z + one).is_zero()) throw DegenerateInput("triple ratio 0 or -1");
  return {{z.logabs(), -(one + z).logabs(), (one + z.inverse()).logabs()}};
}

FlagTriple remark_triple(const Scalar& z) {
  if (z.is_zero()) throw DegenerateInput("remark triple needs a nonzero parameter");
  Scalar o = Scalar(1).in(z.field());
  Scalar n = Scalar(0).in(z.field());
  return FlagTriple(Flag(ProjPoint(n, o, o), ProjLine(o, n, n)), Flag(ProjPoint(z, n, o), ProjLine(n, o, n)),
                    Flag(ProjPoint(o, o, n), ProjLine(n, n, o)));
}

Mat<3> remark_matrix(const Scalar& z) {
  Scalar o = Scalar(1).in(z.field());
  Scalar n = Scalar(0).in(z.field());
  return Mat<3>::from_columns({Vec<3>{o, n, z.inverse()}, Vec<3>{o, o, n}, Vec<3>{n, o, o}});
}

}  // namespace a2b
