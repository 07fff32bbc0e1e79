#pragma once

#include <array>
#include <optional>
#include <string>

#include "a2b/linalg.hpp"

namespace a2b {

/// Homogeneous triple scaled so the first nonzero coordinate is 1.
template <class Tag>
class Homog {
 public:
  explicit Homog(const Vec<3>& coords) : v_(coords) {
    std::size_t k = 0;
    while (k < 3 && v_[k].is_zero()) ++k;
    if (k == 3) throw DegenerateInput("zero homogeneous coordinates");
    Scalar inv = v_[k].inverse();
    for (auto& x : v_) x = x * inv;
  }
  Homog(const Scalar& a, const Scalar& b, const Scalar& c) : Homog(Vec<3>{a, b, c}) {}

  const Vec<3>& coords() const noexcept { return v_; }
  const Scalar& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const Homog&, const Homog&) = default;

  std::string str() const { return "[" + v_[0].str() + ":" + v_[1].str() + ":" + v_[2].str() + "]"; }

 private:
  Vec<3> v_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = Homog<PointTag>;
/// A line, as the linear form whose kernel it is.
using ProjLine = Homog<LineTag>;

inline bool incident(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

/// The line through two distinct points.
ProjLine join(const ProjPoint& p, const ProjPoint& q);
/// The intersection of two distinct lines.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

/// The point with the same coordinates in the dual plane, and back.
inline ProjLine as_line(const ProjPoint& p) { return ProjLine(p.coords()); }
inline ProjPoint as_point(const ProjLine& l) { return ProjPoint(l.coords()); }

class Flag {
 public:
  /// Throws DegenerateInput unless the point lies on the line.
  Flag(ProjPoint p, ProjLine l);

  const ProjPoint& point() const noexcept { return p_; }
  const ProjLine& line() const noexcept { return l_; }

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  ProjPoint p_;
  ProjLine l_;
};

/// Opposite flags: neither point lies on the other line.
bool opposite(const Flag& a, const Flag& b);

/// Three flags, indexed cyclically.
class FlagTriple {
 public:
  FlagTriple(Flag f1, Flag f2, Flag f3) : f_{std::move(f1), std::move(f2), std::move(f3)} {}

  /// Flag i, with the index taken mod 3 (0-based).
  const Flag& operator[](long i) const { return f_[static_cast<std::size_t>(((i % 3) + 3) % 3)]; }
  const ProjPoint& point(long i) const { return (*this)[i].point(); }
  const ProjLine& line(long i) const { return (*this)[i].line(); }

  /// (F2, F3, F1).
  FlagTriple rotated() const { return {f_[1], f_[2], f_[0]}; }
  /// (F3, F2, F1).
  FlagTriple reversed() const { return {f_[2], f_[1], f_[0]}; }
  /// (F1, F3, F2).
  FlagTriple swapped() const { return {f_[0], f_[2], f_[1]}; }

 private:
  std::array<Flag, 3> f_;
};

/// Either every point avoids the next line, or every point avoids the previous one.
bool nondegenerate(const FlagTriple& t);
/// Pairwise opposite flags, non-collinear points, non-concurrent lines.
bool generic(const FlagTriple& t);

/// Element of K together with a point at infinity.
class ExtScalar {
 public:
  ExtScalar(Scalar s) : v_(std::move(s)) {}  // NOLINT(implicit)
  static ExtScalar infinity() { return ExtScalar(); }

  bool is_infinite() const noexcept { return !v_.has_value(); }
  /// Throws InternalError at infinity.
  const Scalar& value() const;
  /// log|x|, with log|0| = -inf and log|inf| = +inf.
  Val logabs() const;
  ExtScalar inverse() const;
  std::string str() const { return v_ ? v_->str() : "inf"; }

  friend bool operator==(const ExtScalar&, const ExtScalar&) = default;

 private:
  ExtScalar() = default;
  std::optional<Scalar> v_;
};

/// Cross ratio [12][34] / ([14][23]) of four collinear points, with
/// Bir(inf, -1, 0, a) = a. At most one coincidence among the points
/// (no triple point), otherwise DegenerateInput.
ExtScalar cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4);
/// The same for four concurrent lines, computed in the dual plane.
ExtScalar cross_ratio(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l4);

/// Same cross ratio computed in the chart obtained by dropping coordinate k
/// of the common line; k must not be a zero coordinate of that line.
ExtScalar cross_ratio_in_chart(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                               const ProjPoint& p4, std::size_t k);

inline Val geom_cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  return cross_ratio(a, b, c, d).logabs();
}
inline Val geom_cross_ratio(const ProjLine& a, const ProjLine& b, const ProjLine& c, const ProjLine& d) {
  return cross_ratio(a, b, c, d).logabs();
}

/// Algebraic triple ratio. Requires a nondegenerate triple.
ExtScalar triple_ratio(const FlagTriple& t);

struct TripleVal {
  std::array<Val, 3> z;
  const Val& operator[](std::size_t k) const { return z[k]; }
  friend bool operator==(const TripleVal&, const TripleVal&) = default;
};

/// The three cross ratios of the pencil of lines at the first point.
TripleVal geom_triple_ratio(const FlagTriple& t);
/// The three cross ratios of the induced points on the first line.
TripleVal geom_triple_ratio_dual(const FlagTriple& t);
/// (log|Z|, -log|1+Z|, log|1+1/Z|) for Z not in {0, -1, inf}.
TripleVal geom_from_algebraic(const Scalar& z);

/// The normalized triple with triple ratio z: p1 = [0:1:1], p2 = [z:0:1],
/// p3 = [1:1:0], lines the coordinate lines x1 = 0, x2 = 0, x3 = 0.
FlagTriple remark_triple(const Scalar& z);
/// Matrix sending e1, e2, e3 to representatives of p2, p3, p1 of remark_triple(z).
Mat<3> remark_matrix(const Scalar& z);

}  // namespace a2b
