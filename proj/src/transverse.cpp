#include "a2b/transverse.hpp"

namespace a2b {

namespace {

std::size_t first_nonzero(const Vec<3>& v) {
  std::size_t k = 0;
  while (k < 3 && v[k].is_zero()) ++k;
  if (k == 3) throw DegenerateInput("zero vector");
  return k;
}

std::pair<std::size_t, std::size_t> others(std::size_t k) {
  return {k == 0 ? 1 : 0, k == 2 ? 1 : 2};
}

// Index of the basis coordinate carrying the norm of v: argmax of -v(u_i) - c_i.
template <std::size_t N>
std::size_t dominant_index(const NormPoint<N>& x, const Vec<N>& u) {
  std::optional<std::size_t> best;
  Val best_val = Val::neg_inf();
  for (std::size_t i = 0; i < N; ++i) {
    if (u[i].is_zero()) continue;
    Val term = -u[i].val() - Val(x.weights()[i]);
    if (!best || term > best_val) {
      best = i;
      best_val = term;
    }
  }
  if (!best) throw DegenerateInput("zero vector has no dominant coordinate");
  return *best;
}

}  // namespace

TreeAmbient::TreeAmbient(Kind k, std::optional<Vec<3>> def) : kind_(k), def_(std::move(def)) {
  if (def_) drop_ = first_nonzero(*def_);
}

Vec<2> TreeAmbient::coords(const Vec<3>& w) const {
  auto [a, b] = others(drop_);
  switch (kind_) {
    case Kind::Plane:
      if (!dot(*def_, w).is_zero()) throw DegenerateInput("vector outside the plane of the tree");
      return {w[a], w[b]};
    case Kind::Quotient: {
      const Vec<3>& p = *def_;
      return {w[a] - p[a] * w[drop_], w[b] - p[b] * w[drop_]};
    }
    case Kind::Standard: break;
  }
  throw InternalError("standard tree ambient has no K^3 coordinates");
}

Vec<3> TreeAmbient::lift(const Vec<2>& u) const {
  auto [a, b] = others(drop_);
  Vec<3> w;
  switch (kind_) {
    case Kind::Plane: {
      const Vec<3>& d = *def_;
      w[a] = u[0];
      w[b] = u[1];
      w[drop_] = -(d[a] * u[0] + d[b] * u[1]) / d[drop_];
      return w;
    }
    case Kind::Quotient:
      w[a] = u[0];
      w[b] = u[1];
      w[drop_] = u[0] - u[0];
      return w;
    case Kind::Standard: break;
  }
  throw InternalError("standard tree ambient has no K^3 lift");
}

Vec<2> TreeAmbient::end_at(const ProjPoint& q) const {
  Vec<2> e = coords(q.coords());
  if (is_zero(e)) throw DegenerateInput("the defining point is not an end of its own tree");
  return e;
}

Vec<2> TreeAmbient::end_at(const ProjLine& l) const {
  if (kind_ == Kind::Plane) return end_at(meet(l, ProjLine(*def_)));
  if (kind_ != Kind::Quotient) throw InternalError("standard tree ambient has no ideal lines");
  if (!incident(ProjPoint(*def_), l)) throw DegenerateInput("line does not pass through the tree's point");
  for (std::size_t j = 0; j < 3; ++j) {
    const Field& f = (*def_)[0].field();
    Vec<3> ej{Scalar(0).in(f), Scalar(0).in(f), Scalar(0).in(f)};
    ej[j] = Scalar(1).in(f);
    Vec<2> e = coords(cross(l.coords(), ej));
    if (!is_zero(e)) return e;
  }
  throw InternalError("no end found for a line through the point");
}

bool tree_equals(const TreePoint& x, const TreePoint& y) { return tree_distance(x, y) == 0; }

Rational tree_distance(const TreePoint& x, const TreePoint& y) {
  if (!(x.ambient == y.ambient)) throw InternalError("tree points from different trees");
  Weights<2> c = cartan(x.norm, y.norm);
  return c[0] - c[1];
}

BuildingPoint center_frame(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p0) {
  return center_frame<3>({p1.coords(), p2.coords(), p3.coords()}, p0.coords());
}

BuildingPoint center_frame(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l0) {
  return dualize(center_frame<3>({l1.coords(), l2.coords(), l3.coords()}, l0.coords()));
}

BuildingPoint project_ideal_point_on_flat(const ProjPoint& p, const std::array<ProjPoint, 3>& frame) {
  try {
    return center_frame(frame[0], frame[1], frame[2], p);
  } catch (const DegenerateInput&) {
    throw DegenerateInput("no projection exists: " + p.str() + " does not complete a projective frame");
  }
}

BuildingPoint project_ideal_line_on_flat(const ProjLine& d, const std::array<ProjLine, 3>& frame) {
  try {
    return center_frame(frame[0], frame[1], frame[2], d);
  } catch (const DegenerateInput&) {
    throw DegenerateInput("no projection exists: " + d.str() + " does not complete a projective frame");
  }
}

TreePoint tree_center(const TreeAmbient& amb, const Vec<2>& a, const Vec<2>& b, const Vec<2>& c) {
  return TreePoint{amb, center_frame<2>({a, b}, c)};
}

TreePoint quotient_point(const BuildingPoint& x, const ProjPoint& p) {
  TreeAmbient amb = TreeAmbient::quotient(p);
  std::size_t i0 = dominant_index(x, x.inverse_basis() * p.coords());
  std::array<Vec<2>, 2> cols;
  Weights<2> w;
  for (std::size_t j = 0, n = 0; j < 3; ++j) {
    if (j == i0) continue;
    cols[n] = amb.coords(x.basis_vector(j));
    w[n] = x.weights()[j];
    ++n;
  }
  return TreePoint{amb, NormPoint<2>(Mat<2>::from_columns(cols), w)};
}

TreePoint restrict_point(const BuildingPoint& x, const ProjLine& d) {
  TreeAmbient amb = TreeAmbient::plane(d);
  Scalar one = Scalar(1).in(d.coords()[0].field());
  Vec<3> a1 = amb.lift({one, one - one});
  Vec<3> a2 = amb.lift({one - one, one});
  BestApprox ba = best_approx(x, a2, a1);
  Vec<3> a2p = a2 - ba.lambda * a1;
  Weights<2> w{-norm_logeval(x, a1).value(), -ba.value.value()};
  return TreePoint{amb, NormPoint<2>(Mat<2>::from_columns({amb.coords(a1), amb.coords(a2p)}), w)};
}

TreePoint transport(const TreePoint& x, const TreeAmbient& to) {
  std::array<Vec<2>, 2> cols;
  for (std::size_t j = 0; j < 2; ++j) cols[j] = to.coords(x.ambient.lift(x.norm.basis_vector(j)));
  return TreePoint{to, NormPoint<2>(Mat<2>::from_columns(cols), x.norm.weights())};
}

Rational tree_busemann(const Vec<2>& xi, const TreePoint& x, const TreePoint& y) {
  Rational d = tree_distance(x, y);
  std::size_t i0 = dominant_index(x.norm, x.norm.inverse_basis() * xi);
  std::size_t o = 1 - i0;
  Rational w_xi = -norm_logeval(x.norm, xi).value();
  Rational w_o = x.norm.weights()[o];
  Mat<2> basis = Mat<2>::from_columns({xi, x.norm.basis_vector(o)});

  Integer t0;
  mpz_cdiv_q(t0.get_mpz_t(), d.get_num_mpz_t(), d.get_den_mpz_t());
  t0 += 1;
  std::optional<Rational> result;
  for (long step = 0; step < 2; ++step) {
    Rational t(t0 + step);
    TreePoint z{x.ambient, NormPoint<2>(basis, {w_xi + t / 2, w_o - t / 2})};
    Rational b = t - tree_distance(y, z);
    if (result && *result != b) throw InternalError("Busemann march did not stabilize");
    result = b;
  }
  return *result;
}

FlatVector busemann_chamber(const Flag& f, const BuildingPoint& x, const BuildingPoint& y) {
  TreeAmbient on_line = TreeAmbient::plane(f.line());
  Rational a1 = tree_busemann(on_line.end_at(f.point()), restrict_point(x, f.line()), restrict_point(y, f.line()));
  TreeAmbient at_point = TreeAmbient::quotient(f.point());
  Rational a2 =
      tree_busemann(at_point.end_at(f.line()), quotient_point(x, f.point()), quotient_point(y, f.point()));
  return FlatVector::from_src(a1, a2);
}

Rational geombir_tree_oracle(const TreeAmbient& amb, const std::array<Vec<2>, 4>& e) {
  TreePoint x = tree_center(amb, e[2], e[0], e[1]);
  TreePoint y = tree_center(amb, e[2], e[0], e[3]);
  return tree_busemann(e[0], x, y);
}

Rational geombir_tree_oracle(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4) {
  TreeAmbient amb = TreeAmbient::plane(join(p1, p2));
  return geombir_tree_oracle(amb, {amb.end_at(p1), amb.end_at(p2), amb.end_at(p3), amb.end_at(p4)});
}

}  // namespace a2b
