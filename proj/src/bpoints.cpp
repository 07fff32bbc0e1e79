#include "a2b/bpoints.hpp"

namespace a2b {

BuildingPoint dualize(const BuildingPoint& x) {
  const auto& c = x.weights();
  return BuildingPoint(x.inverse_basis().transpose(), {-c[0], -c[1], -c[2]});
}

BuildingPoint apply_group(const Mat<3>& g, const BuildingPoint& x) {
  if (g.det().is_zero()) throw DegenerateInput("singular group element");
  return BuildingPoint(g * x.basis(), x.weights());
}

MarkedFlat::MarkedFlat(Mat<3> basis) : basis_(std::move(basis)) {
  if (basis_.det().is_zero()) throw DegenerateInput("marked flat with a singular basis");
}

ProjLine MarkedFlat::ideal_line(std::size_t i, std::size_t j) const {
  return ProjLine(cross(basis_.column(i), basis_.column(j)));
}

std::optional<FlatVector> flat_coords(const BuildingPoint& x, const MarkedFlat& f) {
  // column j of h holds the coordinates of b_j in the basis of x
  Mat<3> h = x.inverse_basis() * f.basis();
  Weights<3> c;
  for (std::size_t j = 0; j < 3; ++j) {
    Val best = Val::neg_inf();
    for (std::size_t i = 0; i < 3; ++i) {
      if (h(i, j).is_zero()) continue;
      Val term = -h(i, j).val() - Val(x.weights()[i]);
      if (term > best) best = term;
    }
    c[j] = -best.value();
  }
  FlatVector cand(c);
  Weights<3> k = MinorProfile<3>(h).cartan(x.weights(), cand.coords());
  if (k[0] != 0 || k[1] != 0 || k[2] != 0) return std::nullopt;
  return cand;
}

FlatTransition::FlatTransition(const MarkedFlat& from, const MarkedFlat& to)
    : profile_(from.basis(), to.basis()) {
  Mat<3> h = from.basis().inverse() * to.basis();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!h(i, j).is_zero()) hval_[i][j] = h(i, j).val().value();
}

std::optional<FlatVector> FlatTransition::coords_in_target(const FlatVector& c) const {
  Weights<3> d;
  for (std::size_t j = 0; j < 3; ++j) {
    bool first = true;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!hval_[i][j]) continue;
      Rational v = *hval_[i][j] + c[i];
      if (first || v < d[j]) d[j] = v;
      first = false;
    }
  }
  Weights<3> k = profile_.cartan(c.coords(), d);
  if (k[0] != 0 || k[1] != 0 || k[2] != 0) return std::nullopt;
  return FlatVector(d);
}

}  // namespace a2b
