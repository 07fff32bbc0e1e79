#pragma once

#include <array>
#include <cstddef>

#include "a2b/errors.hpp"
#include "a2b/valfield.hpp"

namespace a2b {

template <std::size_t N>
using Vec = std::array<Scalar, N>;

template <std::size_t N>
Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
Vec<N> operator-(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
Vec<N> operator*(const Scalar& k, const Vec<N>& a) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = k * a[i];
  return r;
}

template <std::size_t N>
Scalar dot(const Vec<N>& a, const Vec<N>& b) {
  Scalar s;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
bool is_zero(const Vec<N>& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Square matrix, row-major. Bases are stored column-wise.
template <std::size_t N>
class Mat {
 public:
  static_assert(N == 2 || N == 3, "only 2x2 and 3x3 matrices are needed");

  Mat() = default;

  /// Identity with entries tagged in `f`, so valuations of the result are defined.
  static Mat identity(const Field& f) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = Scalar(i == j ? 1 : 0).in(f);
    return m;
  }
  static Mat from_columns(const std::array<Vec<N>, N>& cols) {
    Mat m;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) m(i, j) = cols[j][i];
    return m;
  }
  static Mat diagonal(const Vec<N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

  Vec<N> column(std::size_t j) const {
    Vec<N> c;
    for (std::size_t i = 0; i < N; ++i) c[i] = a_[i][j];
    return c;
  }
  Vec<N> row(std::size_t i) const { return a_[i]; }

  Mat transpose() const {
    Mat t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = a_[i][j];
    return t;
  }

  /// Determinant of the k x k submatrix on the given rows and columns.
  template <std::size_t K>
  Scalar minor(const std::array<std::size_t, K>& rows, const std::array<std::size_t, K>& cols) const {
    if constexpr (K == 1) {
      return a_[rows[0]][cols[0]];
    } else if constexpr (K == 2) {
      return a_[rows[0]][cols[0]] * a_[rows[1]][cols[1]] - a_[rows[0]][cols[1]] * a_[rows[1]][cols[0]];
    } else {
      static_assert(K == 3);
      const auto& r0 = a_[rows[0]];
      const auto& r1 = a_[rows[1]];
      const auto& r2 = a_[rows[2]];
      const auto [c0, c1, c2] = cols;
      return r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1]) - r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0]) +
             r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0]);
    }
  }

  Scalar det() const {
    if constexpr (N == 2) {
      return minor<2>({0, 1}, {0, 1});
    } else {
      return minor<3>({0, 1, 2}, {0, 1, 2});
    }
  }

  /// Inverse via the adjugate. Throws DegenerateInput if singular.
  Mat inverse() const {
    Scalar d = det();
    if (d.is_zero()) throw DegenerateInput("singular matrix");
    Scalar dinv = d.inverse();
    Mat r;
    if constexpr (N == 2) {
      r(0, 0) = a_[1][1] * dinv;
      r(0, 1) = -a_[0][1] * dinv;
      r(1, 0) = -a_[1][0] * dinv;
      r(1, 1) = a_[0][0] * dinv;
    } else {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          // cofactor of (j, i)
          std::array<std::size_t, 2> rows{}, cols{};
          for (std::size_t k = 0, n = 0; k < 3; ++k)
            if (k != j) rows[n++] = k;
          for (std::size_t k = 0, n = 0; k < 3; ++k)
            if (k != i) cols[n++] = k;
          Scalar c = minor<2>(rows, cols);
          r(i, j) = ((i + j) % 2 == 0 ? c : -c) * dinv;
        }
      }
    }
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Scalar s;
        for (std::size_t k = 0; k < N; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Vec<N> operator*(const Mat& a, const Vec<N>& v) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = dot(a.a_[i], v);
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) { return a.a_ == b.a_; }

 private:
  std::array<Vec<N>, N> a_{};
};

/// Coordinates of v in the basis given by the columns of b.
template <std::size_t N>
Vec<N> solve(const Mat<N>& b, const Vec<N>& v) {
  return b.inverse() * v;
}

}  // namespace a2b
