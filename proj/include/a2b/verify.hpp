#pragma once

#include <array>
#include <cstdint>

#include "a2b/sampling.hpp"
#include "a2b/triples.hpp"

namespace a2b {

/// Seeds of the randomized suites run by the tests and `a2flats verify --suite`.
inline constexpr std::uint64_t kTwoPointsSeed = 7101;
inline constexpr std::uint64_t kPointLineSeed = 7202;
inline constexpr std::uint64_t kCrossRatioSeed = 7303;

struct TwoPointsReport {
  /// x -> y in the flat of (p1, p2, p3), marked by the basis (p1, p2, p3).
  FlatVector vector;
  /// The cross ratios at p3, p1, p2 predicting alpha1, alpha2, alpha3.
  std::array<Rational, 3> predicted;
  Verification checks;
};

/// Projects p and q on the flat of the generic triple (p1, p2, p3) and
/// compares the root coordinates of x -> y with the cross ratios of the
/// pencils at the vertices. DegenerateInput if p or q lies on a side.
TwoPointsReport check_two_points_projection(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                                            const ProjPoint& p, const ProjPoint& q);

struct PointLineReport {
  /// x -> x* in the flat joining F- to F+, marked by (p+, D+ ∩ D-, p-).
  FlatVector vector;
  /// Two expressions each for the simple-root coordinates of x -> x*.
  std::array<Rational, 2> z_minus;
  std::array<Rational, 2> z_plus;
  Verification checks;
};

/// DegenerateInput unless the flags are opposite and p, D are in generic
/// position with respect to both.
PointLineReport check_point_line_projection(const Flag& f_minus, const Flag& f_plus, const ProjPoint& p,
                                            const ProjLine& d);

/// Three-cycle sum, ultrametricity, double transpositions, the sign change
/// under (13) and (24), the cocycle identity and the tree oracle on
/// `samples` random collinear quadruples.
Verification check_cross_ratio_identities(const Field& field, std::uint64_t seed, int samples);

/// One random instance of each proposition, rejection sampled.
struct TwoPointsInstance {
  ProjPoint p1, p2, p3, p, q;
};
TwoPointsInstance random_two_points_instance(Sampler& s);

struct PointLineInstance {
  Flag f_minus, f_plus;
  ProjPoint p;
  ProjLine d;
};
PointLineInstance random_point_line_instance(Sampler& s);

}  // namespace a2b
