#pragma once

#include <array>
#include <string>

#include "a2b/ratfunc.hpp"

namespace a2b {

/// Where a vector of the closed chamber sits.
enum class Singularity {
  Zero,
  Regular,
  /// v1 > v2 = v3: direction of an ideal point.
  PointType,
  /// v1 = v2 > v3: direction of an ideal line.
  LineType,
};

const char* to_string(Singularity s);

/// Element of the model flat R^3 / R(1,1,1) with rational coordinates,
/// stored in the sum-zero representative.
class FlatVector {
 public:
  FlatVector() = default;
  FlatVector(const Rational& a, const Rational& b, const Rational& c);
  explicit FlatVector(const std::array<Rational, 3>& v) : FlatVector(v[0], v[1], v[2]) {}

  /// Inverse of simple_root_coords.
  static FlatVector from_src(const Rational& a1, const Rational& a2);

  const Rational& operator[](std::size_t i) const { return v_[i]; }
  const std::array<Rational, 3>& coords() const noexcept { return v_; }

  /// (v1 - v2, v2 - v3, v3 - v1).
  std::array<Rational, 3> roots() const;
  Rational root(std::size_t k) const;
  /// (alpha1, alpha2).
  std::array<Rational, 2> simple_root_coords() const;

  /// Sorted decreasingly: the representative in the closed chamber.
  FlatVector weyl_type() const;
  /// Image under the opposition involution: -w0(v).
  FlatVector opposite() const { return FlatVector(-v_[2], -v_[1], -v_[0]); }
  bool in_chamber() const { return v_[0] >= v_[1] && v_[1] >= v_[2]; }
  Singularity singularity() const;

  /// 2 * sum v_i^2; the simple roots have unit-distance level sets.
  Rational norm_sq() const;

  FlatVector operator-() const { return FlatVector(-v_[0], -v_[1], -v_[2]); }
  friend FlatVector operator+(const FlatVector& a, const FlatVector& b);
  friend FlatVector operator-(const FlatVector& a, const FlatVector& b) { return a + (-b); }
  friend FlatVector operator*(const Rational& k, const FlatVector& a);
  friend bool operator==(const FlatVector&, const FlatVector&) = default;

  /// "(a, b, c)".
  std::string str() const;

 private:
  std::array<Rational, 3> v_{0, 0, 0};
};

/// Decimal approximation of sqrt(q) for human-readable reports.
double approx_sqrt(const Rational& q);

}  // namespace a2b
