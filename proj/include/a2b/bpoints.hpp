#pragma once

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "a2b/linalg.hpp"
#include "a2b/modelflat.hpp"
#include "a2b/projplane.hpp"

namespace a2b {

template <std::size_t N>
using Weights = std::array<Rational, N>;

template <std::size_t N>
Weights<N> sum_zero(Weights<N> w) {
  Rational mean = 0;
  for (auto& x : w) {
    x.canonicalize();
    mean += x;
  }
  mean /= static_cast<long>(N);
  for (auto& x : w) x -= mean;
  return w;
}

/// Homothety class of the diagonalizable norm
///   N(sum u_i b_i) = max_i exp(-v(u_i) - c_i)
/// where b_i are the columns of `basis` and c the weights.
template <std::size_t N>
class NormPoint {
 public:
  NormPoint(Mat<N> basis, const Weights<N>& weights)
      : basis_(std::move(basis)), w_(sum_zero(weights)), inverse_(std::make_shared<InverseCache>()) {
    if (basis_.det().is_zero()) throw DegenerateInput("building point with a singular basis");
  }

  const Mat<N>& basis() const noexcept { return basis_; }
  /// The inverse of the basis, computed once and shared between copies.
  const Mat<N>& inverse_basis() const {
    std::call_once(inverse_->once, [this] { inverse_->m = basis_.inverse(); });
    return inverse_->m;
  }
  Vec<N> basis_vector(std::size_t j) const { return basis_.column(j); }
  const Weights<N>& weights() const noexcept { return w_; }

 private:
  struct InverseCache {
    std::once_flag once;
    Mat<N> m;
  };
  Mat<N> basis_;
  Weights<N> w_;
  std::shared_ptr<InverseCache> inverse_;
};

using BuildingPoint = NormPoint<3>;

namespace detail {

template <std::size_t N>
Scalar submatrix_det(const Mat<N>& g, unsigned rows, unsigned cols) {
  std::array<std::size_t, 3> r{}, c{};
  std::size_t k = 0, l = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (rows & (1u << i)) r[k++] = i;
    if (cols & (1u << i)) c[l++] = i;
  }
  if (k == 1) return g.template minor<1>({r[0]}, {c[0]});
  if (k == 2) return g.template minor<2>({r[0], r[1]}, {c[0], c[1]});
  if constexpr (N == 3) return g.template minor<3>({r[0], r[1], r[2]}, {c[0], c[1], c[2]});
  throw InternalError("minor size out of range");
}

}  // namespace detail

/// Valuations of all minors of the transition matrix between two fixed
/// bases. Evaluating a Cartan vector for any pair of weights on these bases
/// is then pure min-plus arithmetic.
template <std::size_t N>
class MinorProfile {
 public:
  /// g expresses the columns of `to` in the basis `from`.
  MinorProfile(const Mat<N>& from, const Mat<N>& to) : MinorProfile(from.inverse() * to) {}

  /// Directly from the transition matrix g.
  explicit MinorProfile(const Mat<N>& g) {
    for (unsigned rows = 1; rows < (1u << N); ++rows)
      for (unsigned cols = 1; cols < (1u << N); ++cols) {
        if (std::popcount(rows) != std::popcount(cols)) continue;
        Scalar d = detail::submatrix_det(g, rows, cols);
        if (d.is_zero()) continue;
        entries_[static_cast<std::size_t>(std::popcount(rows)) - 1].push_back({d.val().value(), rows, cols});
      }
  }

  /// m_k: least effective valuation of the k x k minors, k = 1..N.
  Weights<N> minima(const Weights<N>& c, const Weights<N>& d) const {
    Weights<N> m;
    for (std::size_t k = 0; k < N; ++k) {
      bool first = true;
      for (const auto& e : entries_[k]) {
        Rational v = e.val;
        for (std::size_t i = 0; i < N; ++i) {
          if (e.rows & (1u << i)) v += c[i];
          if (e.cols & (1u << i)) v -= d[i];
        }
        if (first || v < m[k]) m[k] = v;
        first = false;
      }
      if (first) throw InternalError("transition matrix without nonzero minors");
    }
    return m;
  }

  /// Cartan vector from (from, c) to (to, d): sum-zero, decreasing.
  Weights<N> cartan(const Weights<N>& c, const Weights<N>& d) const {
    Weights<N> m = minima(c, d);
    Weights<N> out;
    Rational prev = 0;
    for (std::size_t k = 0; k < N; ++k) {
      out[k] = -(m[k] - prev);
      prev = m[k];
    }
    return sum_zero(out);
  }

 private:
  struct Entry {
    Rational val;
    unsigned rows;
    unsigned cols;
  };
  std::array<std::vector<Entry>, N> entries_;
};

template <std::size_t N>
Weights<N> cartan(const NormPoint<N>& x, const NormPoint<N>& y) {
  return MinorProfile<N>(x.inverse_basis() * y.basis()).cartan(x.weights(), y.weights());
}

template <std::size_t N>
bool same_point(const NormPoint<N>& x, const NormPoint<N>& y) {
  Weights<N> c = cartan(x, y);
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

/// log N(v) = max_i(-v(u_i) - c_i), u the coordinates of v in the basis.
template <std::size_t N>
Val norm_logeval(const NormPoint<N>& x, const Vec<N>& v) {
  if (is_zero(v)) throw DegenerateInput("norm of the zero vector");
  Vec<N> u = x.inverse_basis() * v;
  Val best = Val::neg_inf();
  for (std::size_t i = 0; i < N; ++i) {
    if (u[i].is_zero()) continue;
    Val term = -u[i].val() - Val(x.weights()[i]);
    if (term > best) best = term;
  }
  return best;
}

// ---------------------------------------------------------------- rank two: E(K^3)

inline FlatVector cartan_vector(const BuildingPoint& x, const BuildingPoint& y) { return FlatVector(cartan(x, y)); }
inline bool equals(const BuildingPoint& x, const BuildingPoint& y) { return same_point(x, y); }
inline Rational distance_sq(const BuildingPoint& x, const BuildingPoint& y) { return cartan_vector(x, y).norm_sq(); }

/// The point with the inverse-transpose basis and negated weights in the dual building.
BuildingPoint dualize(const BuildingPoint& x);
/// Translates by g: basis -> g * basis.
BuildingPoint apply_group(const Mat<3>& g, const BuildingPoint& x);

/// A flat with its marking by the model flat: c |-> (basis, c).
/// The ideal chamber at the end of the closed Weyl chamber is ([b1], b1 + b2).
class MarkedFlat {
 public:
  explicit MarkedFlat(Mat<3> basis);
  static MarkedFlat from_vectors(const Vec<3>& b1, const Vec<3>& b2, const Vec<3>& b3) {
    return MarkedFlat(Mat<3>::from_columns({b1, b2, b3}));
  }

  const Mat<3>& basis() const noexcept { return basis_; }
  Vec<3> basis_vector(std::size_t j) const { return basis_.column(j); }
  BuildingPoint point_at(const FlatVector& c) const { return BuildingPoint(basis_, c.coords()); }
  /// [b_j].
  ProjPoint ideal_point(std::size_t j) const { return ProjPoint(basis_.column(j)); }
  /// b_i + b_j as a projective line.
  ProjLine ideal_line(std::size_t i, std::size_t j) const;
  /// ([b1], b1 + b2).
  Flag chamber_at_infinity() const { return Flag(ideal_point(0), ideal_line(0, 1)); }

 private:
  Mat<3> basis_;
};

/// Coordinates of x in the flat, if x lies on it.
std::optional<FlatVector> flat_coords(const BuildingPoint& x, const MarkedFlat& f);

/// Precomputed change of flats: answers "is from.point_at(c) on `to`, and
/// where" with min-plus arithmetic only.
class FlatTransition {
 public:
  FlatTransition(const MarkedFlat& from, const MarkedFlat& to);
  std::optional<FlatVector> coords_in_target(const FlatVector& c) const;

 private:
  // v(h_ij), h expressing the target basis in the source basis; nullopt for zero entries
  std::array<std::array<std::optional<Rational>, 3>, 3> hval_;
  MinorProfile<3> profile_;
};

}  // namespace a2b
