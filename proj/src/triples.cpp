#include "a2b/triples.hpp"

#include <algorithm>
#include <sstream>

#include "a2b/transverse.hpp"

namespace a2b {

namespace {

std::size_t mod3(long i) { return static_cast<std::size_t>(((i % 3) + 3) % 3); }

std::string y_name(std::size_t k, bool star) { return "y" + std::to_string(k + 1) + (star ? "*" : ""); }

std::string src_str(const FlatVector& v) {
  auto a = v.simple_root_coords();
  return "(" + a[0].get_str() + ", " + a[1].get_str() + ")";
}

void record(Verification& out, const std::string& name, bool ok, const std::string& detail = {}) {
  out[name] = ok ? "pass" : "fail: " + detail;
}

Rational pos_part(const Rational& q) { return q > 0 ? q : Rational(0); }
Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// alpha_r(x) >= or <= alpha_r(vertex) for the difference v_a - v_b.
RootBound diff_bound(std::size_t a, std::size_t b, bool at_least, const FlatVector& vertex, const std::string& anchor) {
  if (b == mod3(static_cast<long>(a) + 1)) return {a, at_least, vertex.root(a), anchor};
  return {b, !at_least, vertex.root(b), anchor};
}

/// Sector at `vertex` spanned by the directions e_a, e_b (point type, sign +1)
/// or -e_a, -e_b (line type, sign -1).
std::vector<RootBound> cone_bounds(bool point_type, std::size_t a, std::size_t b, const FlatVector& vertex,
                                   const std::string& anchor) {
  std::size_t m = 3 - a - b;
  return {diff_bound(a, m, point_type, vertex, anchor), diff_bound(b, m, point_type, vertex, anchor)};
}

/// Closed singular triangle as a conjunction of root bounds, one per side.
std::vector<RootBound> triangle_bounds(const std::array<FlatVector, 3>& v, const std::array<std::string, 3>& names) {
  std::vector<RootBound> out;
  if (v[0] == v[1] && v[1] == v[2]) {
    for (std::size_t r = 0; r < 2; ++r) {
      out.push_back({r, true, v[0].root(r), names[0]});
      out.push_back({r, false, v[0].root(r), names[0]});
    }
    return out;
  }
  for (std::size_t a = 0; a < 3; ++a) {
    std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    FlatVector side = v[b] - v[a];
    std::optional<std::size_t> root;
    for (std::size_t r = 0; r < 3; ++r)
      if (side.root(r) == 0) root = r;
    if (!root) throw InternalError("triangle side " + names[a] + names[b] + " is not singular");
    Rational third = v[c].root(*root) - v[a].root(*root);
    if (third == 0) throw InternalError("flat triangle is degenerate");
    out.push_back({*root, third > 0, v[a].root(*root), names[a]});
  }
  return out;
}

/// Exact membership in the closed convex hull of three points of the flat.
bool in_hull(const FlatVector& c, const std::array<FlatVector, 3>& v) {
  auto xy = [](const FlatVector& f) { return f.simple_root_coords(); };
  auto cross2 = [&](const FlatVector& o, const FlatVector& p, const FlatVector& q) -> Rational {
    auto a = xy(p - o);
    auto b = xy(q - o);
    return a[0] * b[1] - a[1] * b[0];
  };
  Rational area = cross2(v[0], v[1], v[2]);
  if (area == 0) {
    // all three vertices coincide for singular triangles of zero size
    return c == v[0] && v[0] == v[1] && v[1] == v[2];
  }
  for (std::size_t a = 0; a < 3; ++a) {
    Rational s = cross2(v[a], v[(a + 1) % 3], c);
    if ((area > 0 && s < 0) || (area < 0 && s > 0)) return false;
  }
  return true;
}

std::vector<FlatVector> box_grid(const std::vector<FlatVector>& anchors, const GridSpec& g) {
  if (g.step <= 0) throw DegenerateInput("grid step must be positive");
  if (g.margin < 0) throw DegenerateInput("grid margin must be nonnegative");
  std::array<Rational, 2> lo, hi;
  for (std::size_t r = 0; r < 2; ++r) {
    lo[r] = hi[r] = anchors.front().simple_root_coords()[r];
    for (const auto& a : anchors) {
      Rational x = a.simple_root_coords()[r];
      lo[r] = std::min(lo[r], x);
      hi[r] = std::max(hi[r], x);
    }
    Rational start = (lo[r] - g.margin) / g.step;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), start.get_num_mpz_t(), start.get_den_mpz_t());
    lo[r] = Rational(fl) * g.step;
    hi[r] += g.margin;
  }
  std::vector<FlatVector> out;
  for (Rational a = lo[0]; a <= hi[0]; a += g.step)
    for (Rational b = lo[1]; b <= hi[1]; b += g.step) out.push_back(FlatVector::from_src(a, b));
  return out;
}

MarkedFlat pair_flat_of(const FlagTriple& t, long i) {
  return MarkedFlat::from_vectors(t.point(i + 1).coords(), meet(t.line(i), t.line(i + 1)).coords(),
                                  t.point(i).coords());
}

}  // namespace

const char* to_string(FlatId id) {
  switch (id) {
    case FlatId::A12: return "A12";
    case FlatId::A23: return "A23";
    case FlatId::A31: return "A31";
    case FlatId::Ap: return "Ap";
    case FlatId::AD: return "AD";
  }
  return "?";
}

FlatId parse_flat_id(std::string_view text) {
  for (FlatId id : kAllFlats)
    if (text == to_string(id)) return id;
  throw ParseError("unknown flat '" + std::string(text) + "' (expected A12, A23, A31, Ap or AD)", 0);
}

const char* type_name(const TripleType& t) {
  if (std::holds_alternative<Tripod>(t)) return "tripod";
  if (std::holds_alternative<FlatTriangle>(t)) return "flat-triangle";
  return "coincident-point";
}

std::string ray_class(const TripleVal& z) {
  auto sign = [](const Val& v) { return v == Val(0) ? '0' : (v > Val(0) ? '+' : '-'); };
  if (z[0] == Val(0) && z[1] == Val(0) && z[2] == Val(0)) return "zero";
  return std::string("(") + sign(z[0]) + "," + sign(z[1]) + "," + sign(z[2]) + ")";
}

bool all_pass(const Verification& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second == "pass"; });
}

bool RootBound::holds(const FlatVector& c) const {
  Rational x = c.root(root);
  return at_least ? x >= bound : x <= bound;
}

bool RootBound::holds_strictly(const FlatVector& c) const {
  Rational x = c.root(root);
  return at_least ? x > bound : x < bound;
}

std::string RootBound::str() const {
  return "alpha" + std::to_string(root + 1) + (at_least ? " >= " : " <= ") + "alpha" + std::to_string(root + 1) +
         "(" + anchor + ") = " + bound.get_str();
}

bool Cell::contains(const FlatVector& c) const {
  return !empty && std::all_of(bounds.begin(), bounds.end(), [&](const RootBound& b) { return b.holds(c); });
}

bool Cell::contains_strictly(const FlatVector& c) const {
  return !empty && std::all_of(bounds.begin(), bounds.end(), [&](const RootBound& b) { return b.holds_strictly(c); });
}

FiveFlats five_flats(const FlagTriple& t) {
  if (!generic(t)) throw DegenerateInput("the flag triple is not generic");
  return FiveFlats{{pair_flat_of(t, 0), pair_flat_of(t, 1), pair_flat_of(t, 2),
                    MarkedFlat::from_vectors(t.point(0).coords(), t.point(1).coords(), t.point(2).coords()),
                    MarkedFlat::from_vectors(meet(t.line(0), t.line(1)).coords(), meet(t.line(0), t.line(2)).coords(),
                                             meet(t.line(1), t.line(2)).coords())}};
}

SpecialPoints special_points(const FlagTriple& t) {
  if (!generic(t)) throw DegenerateInput("the flag triple is not generic");
  auto y = [&](long k) {
    return center_frame(t.point(0), t.point(1), t.point(2), meet(t.line(k + 1), t.line(k + 2)));
  };
  auto ys = [&](long k) {
    return center_frame(t.line(0), t.line(1), t.line(2), join(t.point(k + 1), t.point(k + 2)));
  };
  return SpecialPoints{{y(0), y(1), y(2)}, {ys(0), ys(1), ys(2)}};
}

namespace {

std::vector<std::pair<std::string, FlatVector>> locate_special(const SpecialPoints& special, const MarkedFlat& flat) {
  std::vector<std::pair<std::string, FlatVector>> out;
  for (std::size_t k = 0; k < 3; ++k)
    if (auto c = flat_coords(special.y[k], flat)) out.emplace_back(y_name(k, false), *c);
  for (std::size_t k = 0; k < 3; ++k)
    if (auto c = flat_coords(special.y_star[k], flat)) out.emplace_back(y_name(k, true), *c);
  return out;
}

}  // namespace

TripleAnalysis::TripleAnalysis(FlagTriple t)
    : t_(std::move(t)),
      z_(generic(t_) ? geom_triple_ratio(t_) : throw DegenerateInput("the flag triple is not generic")),
      zq_{z_[0].value(), z_[1].value(), z_[2].value()},
      tri_(a2b::triple_ratio(t_)),
      flats_(five_flats(t_)),
      special_(special_points(t_)) {
  for (FlatId id : kAllFlats) special_on_[static_cast<std::size_t>(id)] = locate_special(special_, flats_[id]);
}

bool TripleAnalysis::on_flat(const BuildingPoint& x, FlatId id) const {
  return flat_coords(x, flats_[id]).has_value();
}

FlatVector TripleAnalysis::coords(const BuildingPoint& x, FlatId id) const {
  auto c = flat_coords(x, flats_[id]);
  if (!c) throw InternalError(std::string("point expected on flat ") + to_string(id));
  return *c;
}

TripleType TripleAnalysis::type() const {
  const auto& y = special_.y;
  if (zq_[0] == 0 && zq_[1] == 0 && zq_[2] == 0) return CoincidentPoint{y[0]};
  if (zq_[0] == 0) return Tripod{y[0], special_.y_star[0]};
  // x_i = y_{i-1} when Z1 >= 0, y_{i+1} when Z1 <= 0
  long shift = zq_[0] > 0 ? -1 : 1;
  return FlatTriangle{{y[mod3(0 + shift)], y[mod3(1 + shift)], y[mod3(2 + shift)]}};
}

GridSpec TripleAnalysis::default_grid() const {
  return {2 + abs_q(zq_[0]) + abs_q(zq_[1]), Rational(1, 2)};
}

std::vector<std::pair<std::string, FlatVector>> TripleAnalysis::special_on(FlatId id) const {
  return special_on_[static_cast<std::size_t>(id)];
}


std::vector<FlatVector> TripleAnalysis::grid(FlatId id, const GridSpec& g) const {
  std::vector<FlatVector> anchors;
  for (const auto& [name, c] : special_on(id)) anchors.push_back(c);
  if (anchors.empty()) throw InternalError(std::string("no special point on flat ") + to_string(id));
  return box_grid(anchors, g);
}

std::vector<Cell> TripleAnalysis::sector_descriptions(FlatId id) const {
  std::vector<Cell> cells;
  auto label = [&](FlatId other) { return std::string(to_string(id)) + " & " + to_string(other); };
  const auto& y = special_.y;
  const auto& ys = special_.y_star;

  if (id == FlatId::Ap || id == FlatId::AD) {
    bool points = id == FlatId::Ap;
    const auto& verts = points ? y : ys;
    std::array<FlatVector, 3> vc;
    std::array<std::string, 3> names;
    for (std::size_t k = 0; k < 3; ++k) {
      vc[k] = coords(verts[k], id);
      names[k] = y_name(k, !points);
    }
    for (long i = 0; i < 3; ++i) {
      std::size_t v = mod3(i + 2);
      // ideal point p_m has direction e_m in Ap; the line D_m has direction -e_{2-m} in AD
      std::size_t a = points ? mod3(i) : mod3(2 - i);
      std::size_t b = points ? mod3(i + 1) : mod3(1 - i);
      cells.push_back({label(pair_flat(i)), pair_flat(i), false, cone_bounds(points, a, b, vc[v], names[v])});
    }
    FlatId other = points ? FlatId::AD : FlatId::Ap;
    if (zq_[1] > 0)
      cells.push_back({label(other), other, true, {}});
    else
      cells.push_back({label(other), other, false, triangle_bounds(vc, names)});
    return cells;
  }

  long a = static_cast<long>(id);
  std::size_t k = mod3(a + 2);
  FlatVector c = coords(y[k], id);
  FlatVector cs = coords(ys[k], id);
  std::string n = y_name(k, false), ns = y_name(k, true);
  cells.push_back({label(FlatId::Ap), FlatId::Ap, false, {{0, true, c.root(0), n}, {1, false, c.root(1), n}}});
  cells.push_back({label(FlatId::AD), FlatId::AD, false, {{0, false, cs.root(0), ns}, {1, true, cs.root(1), ns}}});
  cells.push_back({label(pair_flat(a + 1)),
                   pair_flat(a + 1),
                   false,
                   {{0, true, cs.root(0), ns}, {1, true, c.root(1), n}, {2, false, c.root(2), n}, {2, false, cs.root(2), ns}}});
  cells.push_back({label(pair_flat(a + 2)),
                   pair_flat(a + 2),
                   false,
                   {{0, false, c.root(0), n}, {1, false, cs.root(1), ns}, {2, true, c.root(2), n}, {2, true, cs.root(2), ns}}});
  return cells;
}

PartitionReport TripleAnalysis::partition_check(FlatId id, const GridSpec& g) const {
  constexpr std::size_t kMaxFailures = 20;
  PartitionReport rep{id, 0, {}};
  std::vector<Cell> cells = sector_descriptions(id);
  std::vector<FlatTransition> tr;
  for (const auto& cell : cells) tr.emplace_back(flats_[id], flats_[cell.other]);
  auto fail = [&](std::string msg) {
    if (rep.failures.size() < kMaxFailures) rep.failures.push_back(std::move(msg));
  };
  for (const FlatVector& c : grid(id, g)) {
    ++rep.grid_points;
    std::size_t covering = 0;
    bool strict = false;
    for (std::size_t n = 0; n < cells.size(); ++n) {
      bool member = tr[n].coords_in_target(c).has_value();
      bool described = cells[n].contains(c);
      if (member != described)
        fail(cells[n].label + " at " + src_str(c) + ": flat membership " + (member ? "yes" : "no") +
             ", inequalities " + (described ? "yes" : "no"));
      covering += described ? 1 : 0;
      strict = strict || cells[n].contains_strictly(c);
    }
    if (covering == 0) fail(std::string(to_string(id)) + " at " + src_str(c) + ": not covered by any cell");
    if (strict && covering != 1)
      fail(std::string(to_string(id)) + " at " + src_str(c) + ": interior point lies in " + std::to_string(covering) +
           " cells");
  }
  return rep;
}

Verification TripleAnalysis::verify_theorems(const GridSpec& g) const {
  Verification out;
  const auto& y = special_.y;
  const auto& ys = special_.y_star;
  const auto& Z = zq_;

  {
    bool ok = Z[0] + Z[1] + Z[2] == 0;
    std::array<Rational, 3> s = Z;
    std::sort(s.begin(), s.end());
    ok = ok && (s[1] == 0) && (s[0] == -s[2]);
    record(out, "invariants.sum_zero_ultrametric", ok, "Z = " + ray_class(z_));
  }

  {
    bool ok = true;
    std::string detail;
    for (long k = 0; k < 3; ++k) {
      long i = k + 1, j = k + 2;
      ProjPoint pij = meet(t_.line(i), t_.line(j));
      ProjLine dij = join(t_.point(i), t_.point(j));
      bool a = equals(y[mod3(k)], project_ideal_point_on_flat(t_.point(k), {t_.point(i), t_.point(j), pij}));
      bool b = equals(ys[mod3(k)], project_ideal_line_on_flat(t_.line(k), {t_.line(i), t_.line(j), dij}));
      bool c = on_flat(y[mod3(k)], FlatId::Ap) && on_flat(ys[mod3(k)], FlatId::AD) &&
               on_flat(y[mod3(k)], pair_flat(i)) && on_flat(ys[mod3(k)], pair_flat(i));
      if (!(a && b && c)) {
        ok = false;
        detail += y_name(mod3(k), false) + " ";
      }
    }
    record(out, "special_points.projections", ok, "mismatch at " + detail);
  }

  {
    bool ok = true;
    std::string detail;
    FlatVector want = FlatVector::from_src(Z[1], Z[2]);
    for (long a = 0; a < 3; ++a) {
      std::size_t k = mod3(a + 2);
      FlatVector got = coords(y[k], pair_flat(a)) - coords(ys[k], pair_flat(a));
      if (got != want) {
        ok = false;
        detail += std::string(to_string(pair_flat(a))) + ": " + src_str(got) + " ";
      }
    }
    record(out, "Aij.ystar_to_y", ok, detail + "expected " + src_str(want));
  }

  {
    FlatVector got = coords(y[2], FlatId::Ap) - coords(y[1], FlatId::Ap);
    FlatVector want = FlatVector::from_src(Z[0], 0);
    record(out, "Ap.y2_to_y3", got == want, src_str(got) + " expected " + src_str(want));
    FlatVector gots = coords(ys[2], FlatId::AD) - coords(ys[1], FlatId::AD);
    FlatVector wants = FlatVector::from_src(0, -Z[0]);
    record(out, "AD.y2star_to_y3star", gots == wants, src_str(gots) + " expected " + src_str(wants));
  }

  for (FlatId id : kAllFlats) {
    PartitionReport rep = partition_check(id, g);
    std::string detail;
    for (const auto& f : rep.failures) detail += f + "; ";
    record(out, std::string("partition.") + to_string(id), rep.ok(), detail);
  }

  if (Z[0] == 0) {
    const BuildingPoint& x = y[0];
    const BuildingPoint& xs = ys[0];
    record(out, "tripod.y_equal", equals(y[0], y[1]) && equals(y[1], y[2]), "the y_k differ");
    record(out, "tripod.ystar_equal", equals(ys[0], ys[1]) && equals(ys[1], ys[2]), "the y_k* differ");

    bool ok = true;
    std::string detail;
    FlatVector want = FlatVector::from_src(-Z[1], Z[1]);
    for (long a = 0; a < 3; ++a) {
      FlatVector got = coords(xs, pair_flat(a)) - coords(x, pair_flat(a));
      if (got != want) {
        ok = false;
        detail += std::string(to_string(pair_flat(a))) + ": " + src_str(got) + " ";
      }
    }
    record(out, "tripod.x_to_xstar", ok, detail + "expected " + src_str(want));

    // the segment [x, x*] lies in the three flats A_ij
    FlatVector cx = coords(x, FlatId::A12), cxs = coords(xs, FlatId::A12);
    std::vector<FlatTransition> tr{{flats_[FlatId::A12], flats_[FlatId::A23]},
                                   {flats_[FlatId::A12], flats_[FlatId::A31]}};
    ok = true;
    detail.clear();
    for (long s = 0; s <= 10; ++s) {
      FlatVector c = cx + Rational(s, 10) * (cxs - cx);
      for (const auto& t : tr)
        if (!t.coords_in_target(c)) {
          ok = false;
          detail += src_str(c) + " ";
        }
    }
    record(out, "tripod.segment_in_Aij", ok, "outside at " + detail);

    Rational dmin = distance_sq(x, xs);
    record(out, "tripod.distance", dmin == want.norm_sq(), dmin.get_str() + " expected " + want.norm_sq().get_str());

    // sampled pairs (a, b) in Ap x AD never come closer than x and x*
    GridSpec near{2, Rational(1, 2)};
    MinorProfile<3> prof(flats_[FlatId::Ap].basis(), flats_[FlatId::AD].basis());
    ok = true;
    detail.clear();
    std::vector<FlatVector> ga = grid(FlatId::Ap, near), gb = grid(FlatId::AD, near);
    for (const auto& a : ga) {
      for (const auto& b : gb)
        if (FlatVector(prof.cartan(a.coords(), b.coords())).norm_sq() < dmin) {
          ok = false;
          detail = src_str(a) + " in Ap, " + src_str(b) + " in AD";
          break;
        }
      if (!ok) break;
    }
    record(out, "tripod.minimality", ok, "closer pair " + detail);
  }

  if (Z[1] <= 0) verify_triangle(g, out);
  return out;
}

void TripleAnalysis::verify_triangle(const GridSpec& g, Verification& out) const {
  const auto& y = special_.y;
  const auto& ys = special_.y_star;
  const auto& Z = zq_;
  long shift = Z[0] > 0 ? -1 : 1;
  std::array<BuildingPoint, 3> x{y[mod3(shift)], y[mod3(1 + shift)], y[mod3(2 + shift)]};

  bool ok = true;
  std::string detail;
  for (long i = 0; i < 3; ++i) {
    if (Z[0] >= 0 && !(equals(y[mod3(i - 1)], ys[mod3(i + 1)]))) {
      ok = false;
      detail += "y" + std::to_string(mod3(i - 1) + 1) + " != y" + std::to_string(mod3(i + 1) + 1) + "* ";
    }
    if (Z[0] <= 0 && !(equals(y[mod3(i + 1)], ys[mod3(i - 1)]))) {
      ok = false;
      detail += "y" + std::to_string(mod3(i + 1) + 1) + " != y" + std::to_string(mod3(i - 1) + 1) + "* ";
    }
  }
  record(out, "triangle.vertices", ok, detail);

  ok = true;
  detail.clear();
  FlatVector edge = FlatVector::from_src(pos_part(Z[0]), pos_part(-Z[0]));
  for (long i = 0; i < 3; ++i) {
    FlatVector got = coords(x[mod3(i + 1)], pair_flat(i)) - coords(x[mod3(i)], pair_flat(i));
    if (got != edge) {
      ok = false;
      detail += std::string(to_string(pair_flat(i))) + ": " + src_str(got) + " ";
    }
  }
  record(out, "triangle.edges", ok, detail + "expected " + src_str(edge));

  // A_{i,i+1} and A_{i-1,i} meet in the Weyl chamber from x_i to F_i, that is x_i - C
  ok = true;
  detail.clear();
  for (long i = 0; i < 3; ++i) {
    FlatId a = pair_flat(i);
    FlatTransition tr(flats_[a], flats_[pair_flat(i + 2)]);
    FlatVector tip = coords(x[mod3(i)], a);
    for (const auto& c : grid(a, g))
      if (tr.coords_in_target(c).has_value() != (tip - c).in_chamber()) {
        ok = false;
        detail = std::string(to_string(a)) + " at " + src_str(c);
      }
  }
  record(out, "triangle.chamber_at_vertices", ok, "mismatch in " + detail);

  for (FlatId id : {FlatId::Ap, FlatId::AD}) {
    FlatId other = id == FlatId::Ap ? FlatId::AD : FlatId::Ap;
    std::array<FlatVector, 3> v{coords(x[0], id), coords(x[1], id), coords(x[2], id)};
    FlatTransition tr(flats_[id], flats_[other]);
    ok = true;
    detail.clear();
    for (const auto& c : grid(id, g))
      if (tr.coords_in_target(c).has_value() != in_hull(c, v)) {
        ok = false;
        detail = src_str(c);
      }
    record(out, std::string("triangle.delta_in_") + to_string(id), ok, "mismatch at " + detail);
  }

  // projections of the vertices on the transverse trees at p_i and D_i
  ok = true;
  detail.clear();
  for (long i = 0; i < 3; ++i) {
    long j = i + 1, k = i + 2;
    const ProjPoint& p = t_.point(i);
    const ProjLine& d = t_.line(i);
    TreeAmbient at_p = TreeAmbient::quotient(p), at_d = TreeAmbient::plane(d);
    auto center_p = [&](const ProjLine& a, const ProjLine& b, const ProjLine& c) {
      return tree_center(at_p, at_p.end_at(a), at_p.end_at(b), at_p.end_at(c));
    };
    auto center_d = [&](const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
      return tree_center(at_d, at_d.end_at(a), at_d.end_at(b), at_d.end_at(c));
    };
    ProjLine pipj = join(p, t_.point(j)), pipk = join(p, t_.point(k));
    ProjPoint djk = meet(t_.line(j), t_.line(k));
    ProjLine pjpk = join(t_.point(j), t_.point(k));
    const BuildingPoint& xi = x[mod3(i)];
    const BuildingPoint& xj = x[mod3(j)];
    std::array<bool, 4> items{
        tree_equals(quotient_point(xi, p), center_p(d, pipj, pipk)),
        tree_equals(restrict_point(xi, d), center_d(p, meet(d, t_.line(j)), meet(d, t_.line(k)))),
        tree_equals(quotient_point(xj, p), center_p(d, pipj, join(p, djk))),
        tree_equals(restrict_point(xj, d), center_d(p, meet(d, t_.line(j)), meet(d, pjpk))),
    };
    for (std::size_t n = 0; n < 4; ++n)
      if (!items[n]) {
        ok = false;
        detail += "i=" + std::to_string(i + 1) + " item " + std::to_string(n + 1) + " ";
      }
  }
  record(out, "triangle.tree_projections", ok, detail);

  // a flat containing the triangle with F_i at infinity
  ok = true;
  detail.clear();
  for (long i = 0; i < 3; ++i) {
    bool found = false;
    for (long q : {i + 1, i + 2}) {
      long r = q == i + 1 ? i + 2 : i + 1;
      ProjLine l = join(t_.point(q), t_.point(r));
      MarkedFlat f = MarkedFlat::from_vectors(t_.point(i).coords(), meet(t_.line(i), l).coords(), t_.point(q).coords());
      bool inside = flat_coords(x[0], f) && flat_coords(x[1], f) && flat_coords(x[2], f);
      FlatId a = pair_flat(i);
      FlatTransition tr(flats_[a], f);
      FlatVector tip = coords(x[mod3(i)], a);
      for (long u = 0; u <= 4 && inside; ++u)
        for (long w = 0; w <= 4 && inside; ++w)
          inside = tr.coords_in_target(tip - FlatVector::from_src(Rational(u, 2), Rational(w, 2))).has_value();
      found = found || inside;
    }
    if (!found) {
      ok = false;
      detail += "F" + std::to_string(i + 1) + " ";
    }
  }
  record(out, "triangle.germ_opposition", ok, "no flat found for " + detail);
}

TripleReport TripleAnalysis::classify() const {
  return TripleReport{z_, tri_, ray_class(z_), type(), special_, verify_theorems(default_grid())};
}

TripleReport classify(const FlagTriple& t) { return TripleAnalysis(t).classify(); }

std::vector<Cell> sector_descriptions(const FlagTriple& t, FlatId id) {
  return TripleAnalysis(t).sector_descriptions(id);
}

PartitionReport partition_check(const FlagTriple& t, FlatId id, const GridSpec& grid) {
  return TripleAnalysis(t).partition_check(id, grid);
}

Verification verify_theorems(const FlagTriple& t) {
  TripleAnalysis a(t);
  return a.verify_theorems(a.default_grid());
}

Verification remark_check(const Scalar& z, const GridSpec& g) {
  Verification out;
  FlagTriple t = remark_triple(z);
  Mat<3> m = remark_matrix(z);
  Mat<3> e = Mat<3>::identity(z.field());

  bool ok = true;
  for (long i = 0; i < 3; ++i) ok = ok && ProjPoint(m.column(mod3(i))) == t.point(i + 1);
  record(out, "remark.g_sends_e_to_next_point", ok, "g [e_i] != p_{i+1}");
  ok = true;
  for (long i = 0; i < 3; ++i) ok = ok && ProjPoint(e.column(mod3(i))) == meet(t.line(i + 1), t.line(i + 2));
  record(out, "remark.dual_basis", ok, "[e_i] != D_j & D_k");

  TripleAnalysis an(t);
  ok = true;
  for (const auto& c : an.grid(FlatId::AD, g))
    ok = ok && an.on_flat(apply_group(m, an.flats()[FlatId::AD].point_at(c)), FlatId::Ap);
  record(out, "remark.g_maps_AD_to_Ap", ok, "image leaves Ap");

  Scalar one = Scalar(1).in(z.field());
  if (z.logabs() >= Val(0) && (one + z).logabs() >= Val(0)) {
    Rational len = z.logabs().value();
    MarkedFlat fe(e);
    std::vector<FlatVector> anchors{FlatVector(), FlatVector::from_src(len, 0), FlatVector::from_src(0, len)};
    bool fixed_ok = true, delta_ok = true;
    std::string detail;
    for (const auto& c : box_grid(anchors, g)) {
      BuildingPoint pt = fe.point_at(c);
      bool fixed = equals(apply_group(m, pt), pt);
      bool want = c.in_chamber() && c[0] - c[2] <= len;
      bool delta = an.on_flat(pt, FlatId::Ap) && an.on_flat(pt, FlatId::AD);
      if (fixed != want) {
        fixed_ok = false;
        detail = src_str(c);
      }
      delta_ok = delta_ok && fixed == delta;
    }
    record(out, "remark.fixed_points", fixed_ok, "mismatch at " + detail);
    record(out, "remark.fixed_points_are_delta", delta_ok, "fixed set differs from Ap & AD");
  }
  return out;
}

}  // namespace a2b
