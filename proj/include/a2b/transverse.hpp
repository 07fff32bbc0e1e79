#pragma once

#include <array>
#include <optional>
#include <vector>

#include "a2b/bpoints.hpp"

namespace a2b {

/// The two-dimensional space carrying a tree: K^2 itself, a plane D of K^3
/// (the tree at the ideal line D), or the quotient K^3/p (the tree at the
/// ideal point p). Fixes a coordinate identification with K^2.
class TreeAmbient {
 public:
  enum class Kind { Standard, Plane, Quotient };

  static TreeAmbient standard() { return TreeAmbient(Kind::Standard, std::nullopt); }
  static TreeAmbient plane(const ProjLine& d) { return TreeAmbient(Kind::Plane, d.coords()); }
  static TreeAmbient quotient(const ProjPoint& p) { return TreeAmbient(Kind::Quotient, p.coords()); }

  Kind kind() const noexcept { return kind_; }

  /// Coordinates of a vector of K^3 (in the plane, or modulo the point).
  Vec<2> coords(const Vec<3>& w) const;
  /// A vector of K^3 with the given coordinates.
  Vec<3> lift(const Vec<2>& u) const;

  /// End of the tree at a point of the plane D.
  Vec<2> end_at(const ProjPoint& q) const;
  /// End of the tree at a line through the point p.
  Vec<2> end_at(const ProjLine& l) const;

  friend bool operator==(const TreeAmbient&, const TreeAmbient&) = default;

 private:
  TreeAmbient(Kind k, std::optional<Vec<3>> def);
  Kind kind_;
  std::optional<Vec<3>> def_;
  std::size_t drop_ = 0;
};

/// A point of a transverse tree: a norm on the ambient plane.
struct TreePoint {
  TreeAmbient ambient;
  NormPoint<2> norm;
};

bool tree_equals(const TreePoint& x, const TreePoint& y);
/// Tree distance (rational, exact).
Rational tree_distance(const TreePoint& x, const TreePoint& y);

struct BestApprox {
  Scalar lambda;
  Val value;
};

/// lambda minimizing log N(v - lambda w). Candidates are 0 then u_i / w_i in
/// index order (u, w coordinates in the adapted basis); the first minimum wins.
template <std::size_t N>
BestApprox best_approx(const NormPoint<N>& x, const Vec<N>& v, const Vec<N>& w) {
  if (is_zero(w)) throw DegenerateInput("best approximation by the zero vector");
  Vec<N> u = x.inverse_basis() * v;
  Vec<N> c = x.inverse_basis() * w;
  std::vector<Scalar> candidates{Scalar(0)};
  for (std::size_t i = 0; i < N; ++i)
    if (!c[i].is_zero()) candidates.push_back(u[i] / c[i]);
  std::optional<BestApprox> best;
  for (const auto& lam : candidates) {
    Vec<N> r = v - lam * w;
    if (is_zero(r)) throw DegenerateInput("best approximation of a vector in the span");
    Val val = norm_logeval(x, r);
    if (!best || val < best->value) best = BestApprox{lam, val};
  }
  return *best;
}

/// Center of the projective frame ([b_1], ..., [b_N], [unit]): scale the
/// b_i so their sum is the unit vector and give every vector weight 0.
template <std::size_t N>
NormPoint<N> center_frame(const std::array<Vec<N>, N>& frame, const Vec<N>& unit) {
  Mat<N> b = Mat<N>::from_columns(frame);
  if (b.det().is_zero()) throw DegenerateInput("frame points are not independent");
  Vec<N> a = solve(b, unit);
  std::array<Vec<N>, N> scaled;
  for (std::size_t i = 0; i < N; ++i) {
    if (a[i].is_zero()) throw DegenerateInput("not a projective frame");
    scaled[i] = a[i] * frame[i];
  }
  return NormPoint<N>(Mat<N>::from_columns(scaled), Weights<N>{});
}

/// Center of the frame (p1, p2, p3; unit p0) in E(K^3).
BuildingPoint center_frame(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p0);
/// Dual center of the line frame, brought back to E(K^3).
BuildingPoint center_frame(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l0);

/// Projection of the ideal point p on the flat of the point frame; exists iff
/// (frame, p) is a projective frame, otherwise DegenerateInput.
BuildingPoint project_ideal_point_on_flat(const ProjPoint& p, const std::array<ProjPoint, 3>& frame);
BuildingPoint project_ideal_line_on_flat(const ProjLine& d, const std::array<ProjLine, 3>& frame);

/// Center of the ideal tripod (a, b, c) in a tree.
TreePoint tree_center(const TreeAmbient& amb, const Vec<2>& a, const Vec<2>& b, const Vec<2>& c);

/// Image of x in the tree at the ideal point p (quotient norm on K^3/p).
TreePoint quotient_point(const BuildingPoint& x, const ProjPoint& p);
/// Image of x in the tree at the ideal line D (restricted norm on D).
TreePoint restrict_point(const BuildingPoint& x, const ProjLine& d);
/// Carries a tree point across an isomorphism of ambients, e.g. from the
/// plane D to K^3/p for p outside D.
TreePoint transport(const TreePoint& x, const TreeAmbient& to);

/// Bus_xi(x, y) = lim d(x, z) - d(y, z) as z -> xi; positive when y is closer to xi.
Rational tree_busemann(const Vec<2>& xi, const TreePoint& x, const TreePoint& y);

/// Vector valued Busemann cocycle at the chamber F = (p, D), as a flat vector
/// with simple-root coordinates (Bus_p on the tree at D, Bus_D on the tree at p).
FlatVector busemann_chamber(const Flag& f, const BuildingPoint& x, const BuildingPoint& y);

/// Cross ratio of four ends read inside the tree as the oriented distance
/// between the centers of (xi3, xi1, xi2) and (xi3, xi1, xi4).
Rational geombir_tree_oracle(const TreeAmbient& amb, const std::array<Vec<2>, 4>& ends);
/// The same for four distinct collinear points of P(K^3).
Rational geombir_tree_oracle(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4);

}  // namespace a2b
