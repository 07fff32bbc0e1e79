#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "a2b/bpoints.hpp"

namespace a2b {

/// The flats A12, A23, A31 joining consecutive flags, the flat of the three
/// points and the flat of the three lines.
enum class FlatId { A12, A23, A31, Ap, AD };

inline constexpr std::array<FlatId, 5> kAllFlats{FlatId::A12, FlatId::A23, FlatId::A31, FlatId::Ap, FlatId::AD};

const char* to_string(FlatId id);
/// Parses "A12", "A23", "A31", "Ap", "AD".
FlatId parse_flat_id(std::string_view text);
/// The flat A_{i,i+1} (0-based i).
inline FlatId pair_flat(long i) { return static_cast<FlatId>(((i % 3) + 3) % 3); }

/// The five flats of a generic triple with their markings:
///   A_{i,i+1}: basis (p_{i+1}, D_i ∩ D_{i+1}, p_i), sending the model chamber to F_{i+1};
///   Ap: basis (p1, p2, p3), model chamber to (p1, p1p2);
///   AD: basis (D1∩D2, D1∩D3, D2∩D3), model chamber to (D1∩D2, D1).
struct FiveFlats {
  std::array<MarkedFlat, 5> flats;
  const MarkedFlat& operator[](FlatId id) const { return flats[static_cast<std::size_t>(id)]; }
};

FiveFlats five_flats(const FlagTriple& t);

/// y[k] is the center of the frame (p1, p2, p3; D_i ∩ D_j) and y_star[k]
/// the center of (D1, D2, D3; p_i p_j), {i, j, k} = {0, 1, 2}.
struct SpecialPoints {
  std::array<BuildingPoint, 3> y;
  std::array<BuildingPoint, 3> y_star;
};

SpecialPoints special_points(const FlagTriple& t);

struct Tripod {
  BuildingPoint x;
  BuildingPoint x_star;
};
struct FlatTriangle {
  std::array<BuildingPoint, 3> x;
};
struct CoincidentPoint {
  BuildingPoint x;
};
using TripleType = std::variant<Tripod, FlatTriangle, CoincidentPoint>;

const char* type_name(const TripleType& t);

/// Sign pattern of Z: "(0,+,-)", "(-,0,+)", "(+,-,0)" or "zero".
std::string ray_class(const TripleVal& z);

/// name -> "pass" or "fail: <detail>".
using Verification = std::map<std::string, std::string>;

bool all_pass(const Verification& v);

struct TripleReport {
  TripleVal z;
  ExtScalar triple_ratio;
  std::string ray_class;
  TripleType type;
  SpecialPoints special;
  Verification verification;
};

/// One half-plane alpha_root(x) >= bound (or <=) of a cell description.
struct RootBound {
  std::size_t root;  // 0, 1, 2 for alpha1, alpha2, alpha3
  bool at_least;
  Rational bound;
  std::string anchor;  // the special point the bound is read from

  bool holds(const FlatVector& c) const;
  bool holds_strictly(const FlatVector& c) const;
  std::string str() const;
};

/// Intersection of a flat with another of the five flats, as a conjunction of
/// root bounds. `empty` marks an intersection known to be empty.
struct Cell {
  std::string label;
  FlatId other;
  bool empty = false;
  std::vector<RootBound> bounds;

  bool contains(const FlatVector& c) const;
  bool contains_strictly(const FlatVector& c) const;
};

struct GridSpec {
  Rational margin;
  Rational step;
};

struct PartitionReport {
  FlatId flat;
  std::size_t grid_points = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Everything attached to one generic triple. Throws DegenerateInput when the
/// triple is not generic.
class TripleAnalysis {
 public:
  explicit TripleAnalysis(FlagTriple t);

  const FlagTriple& triple() const noexcept { return t_; }
  const TripleVal& z() const noexcept { return z_; }
  /// Z1, Z2, Z3 as rationals.
  const std::array<Rational, 3>& zq() const noexcept { return zq_; }
  const ExtScalar& triple_ratio() const noexcept { return tri_; }
  const FiveFlats& flats() const noexcept { return flats_; }
  const SpecialPoints& special() const noexcept { return special_; }

  /// Coordinates of x in the marked flat; InternalError if x is not on it.
  FlatVector coords(const BuildingPoint& x, FlatId id) const;
  bool on_flat(const BuildingPoint& x, FlatId id) const;

  TripleType type() const;
  /// The default verification grid: margin 2 + |Z1| + |Z2|, step 1/2.
  GridSpec default_grid() const;

  std::vector<Cell> sector_descriptions(FlatId id) const;
  PartitionReport partition_check(FlatId id, const GridSpec& grid) const;
  Verification verify_theorems(const GridSpec& grid) const;
  TripleReport classify() const;

  /// The grid points of a flat: bounding box of the special points lying on it, plus margin.
  std::vector<FlatVector> grid(FlatId id, const GridSpec& grid) const;
  /// The special points lying on the flat, labelled.
  std::vector<std::pair<std::string, FlatVector>> special_on(FlatId id) const;

 private:
  void verify_triangle(const GridSpec& grid, Verification& out) const;

  FlagTriple t_;
  TripleVal z_;
  std::array<Rational, 3> zq_;
  ExtScalar tri_;
  FiveFlats flats_;
  SpecialPoints special_;
  std::array<std::vector<std::pair<std::string, FlatVector>>, 5> special_on_;
};

TripleReport classify(const FlagTriple& t);
std::vector<Cell> sector_descriptions(const FlagTriple& t, FlatId id);
PartitionReport partition_check(const FlagTriple& t, FlatId id, const GridSpec& grid);
Verification verify_theorems(const FlagTriple& t);

/// Checks on the normalized triple with triple ratio z and its matrix g:
/// g sends [e_i] to p_{i+1}, hence AD to Ap; when |1+z| >= 1 and log|z| >= 0
/// the fixed points of g in the coordinate flat form {v in C : v1 - v3 <= log|z|}.
Verification remark_check(const Scalar& z, const GridSpec& grid);

}  // namespace a2b
