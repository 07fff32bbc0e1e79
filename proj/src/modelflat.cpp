#include "a2b/modelflat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace a2b {

const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::Zero: return "zero";
    case Singularity::Regular: return "regular";
    case Singularity::PointType: return "point-type";
    case Singularity::LineType: return "line-type";
  }
  return "?";
}

FlatVector::FlatVector(const Rational& a, const Rational& b, const Rational& c) {
  v_ = {a, b, c};
  for (auto& x : v_) x.canonicalize();
  Rational mean = (v_[0] + v_[1] + v_[2]) / 3;
  for (auto& x : v_) x -= mean;
}

FlatVector FlatVector::from_src(const Rational& a1, const Rational& a2) {
  Rational a = a1;
  Rational b = a2;
  a.canonicalize();
  b.canonicalize();
  Rational v1 = (2 * a + b) / 3;
  return FlatVector(v1, v1 - a, v1 - a - b);
}

std::array<Rational, 3> FlatVector::roots() const { return {v_[0] - v_[1], v_[1] - v_[2], v_[2] - v_[0]}; }

Rational FlatVector::root(std::size_t k) const { return v_[k % 3] - v_[(k + 1) % 3]; }

std::array<Rational, 2> FlatVector::simple_root_coords() const { return {v_[0] - v_[1], v_[1] - v_[2]}; }

FlatVector FlatVector::weyl_type() const {
  std::array<Rational, 3> s = v_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return FlatVector(s);
}

Singularity FlatVector::singularity() const {
  FlatVector w = weyl_type();
  bool a1 = w[0] == w[1];
  bool a2 = w[1] == w[2];
  if (a1 && a2) return Singularity::Zero;
  if (a1) return Singularity::LineType;
  if (a2) return Singularity::PointType;
  return Singularity::Regular;
}

Rational FlatVector::norm_sq() const { return 2 * (v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]); }

FlatVector operator+(const FlatVector& a, const FlatVector& b) {
  return FlatVector(a.v_[0] + b.v_[0], a.v_[1] + b.v_[1], a.v_[2] + b.v_[2]);
}

FlatVector operator*(const Rational& k, const FlatVector& a) {
  return FlatVector(k * a.v_[0], k * a.v_[1], k * a.v_[2]);
}

std::string FlatVector::str() const {
  return "(" + v_[0].get_str() + ", " + v_[1].get_str() + ", " + v_[2].get_str() + ")";
}

double approx_sqrt(const Rational& q) { return std::sqrt(q.get_d()); }

}  // namespace a2b
