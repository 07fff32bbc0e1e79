#pragma once

#include <cstdint>
#include <random>

#include "a2b/projplane.hpp"

namespace a2b {

/// Seeded generator of small-height scalars and configurations.
/// Coefficients lie in [-9, 9], polynomial degrees are at most 3, and a
/// uniformizer power in [-2, 2] is mixed in so valuations vary.
class Sampler {
 public:
  Sampler(const Field& field, std::uint64_t seed) : field_(field), rng_(seed) {}

  const Field& field() const noexcept { return field_; }
  std::mt19937_64& rng() noexcept { return rng_; }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// May be zero.
  Scalar scalar();
  Scalar nonzero();
  /// An integer-coefficient polynomial (or an integer for Q_p) times a uniformizer power.
  Scalar integral_ish();

  Vec<3> vector();
  /// Nonzero vector with integral_ish (or zero) entries; projective
  /// configurations are drawn from these so heights stay small.
  Vec<3> integral_vector();
  ProjPoint point();
  ProjLine line();
  /// A random point on l.
  ProjPoint point_on(const ProjLine& l);
  Flag flag();
  /// Rejection-sampled generic triple.
  FlagTriple generic_triple();
  /// Four distinct points on a random line.
  std::array<ProjPoint, 4> collinear_quadruple();

 private:
  Scalar base(bool allow_zero);
  Field field_;
  std::mt19937_64 rng_;
};

}  // namespace a2b
