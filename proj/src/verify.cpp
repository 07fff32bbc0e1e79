#include "a2b/verify.hpp"

#include <algorithm>

#include "a2b/transverse.hpp"

namespace a2b {

namespace {

void record(Verification& out, const std::string& name, bool ok, const std::string& detail) {
  out[name] = ok ? "pass" : "fail: " + detail;
}

Rational finite(const Val& v, const char* what) {
  if (!v.is_finite()) throw DegenerateInput(std::string(what) + " is not in generic position");
  return v.value();
}

// Keeps the first failure of each randomized identity.
class Tally {
 public:
  void check(const std::string& name, bool ok, const std::string& detail) {
    auto& slot = results_[name];
    if (slot.empty() || slot == "pass") slot = ok ? "pass" : "fail: " + detail;
  }
  Verification result() const { return results_; }

 private:
  Verification results_;
};

}  // namespace

TwoPointsReport check_two_points_projection(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                                            const ProjPoint& p, const ProjPoint& q) {
  if (collinear(p1, p2, p3)) throw DegenerateInput("the three vertices are collinear");
  const std::array<ProjLine, 3> sides{join(p1, p2), join(p2, p3), join(p3, p1)};
  for (const auto& l : sides)
    if (incident(p, l) || incident(q, l)) throw DegenerateInput("p or q lies on a side of the triangle");

  MarkedFlat flat = MarkedFlat::from_vectors(p1.coords(), p2.coords(), p3.coords());
  BuildingPoint x = center_frame(p1, p2, p3, p);
  BuildingPoint y = center_frame(p1, p2, p3, q);
  auto cx = flat_coords(x, flat);
  auto cy = flat_coords(y, flat);
  if (!cx || !cy) throw InternalError("projection of an ideal point is off the flat");

  TwoPointsReport r{*cy - *cx, {}, {}};
  r.predicted[0] = finite(geom_cross_ratio(join(p3, p1), join(p3, p), join(p3, p2), join(p3, q)), "pencil at p3");
  r.predicted[1] = finite(geom_cross_ratio(join(p1, p2), join(p1, p), join(p1, p3), join(p1, q)), "pencil at p1");
  r.predicted[2] = finite(geom_cross_ratio(join(p2, p3), join(p2, p), join(p2, p1), join(p2, q)), "pencil at p2");
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational got = r.vector.root(k);
    record(r.checks, "alpha" + std::to_string(k + 1), got == r.predicted[k],
           "root " + got.get_str() + " vs cross ratio " + r.predicted[k].get_str());
  }
  return r;
}

PointLineReport check_point_line_projection(const Flag& f_minus, const Flag& f_plus, const ProjPoint& p,
                                            const ProjLine& d) {
  if (!opposite(f_minus, f_plus)) throw DegenerateInput("the two flags are not opposite");
  const ProjPoint& pm = f_minus.point();
  const ProjPoint& pp = f_plus.point();
  const ProjLine& dm = f_minus.line();
  const ProjLine& dp = f_plus.line();
  const ProjPoint pmp = meet(dp, dm);
  const ProjLine lmp = join(pp, pm);
  if (incident(p, dm) || incident(p, dp) || incident(p, lmp))
    throw DegenerateInput("p lies on a side of the flat's triangle");
  if (incident(pm, d) || incident(pp, d) || incident(pmp, d))
    throw DegenerateInput("D passes through a vertex of the flat's triangle");

  MarkedFlat flat = MarkedFlat::from_vectors(pp.coords(), pmp.coords(), pm.coords());
  BuildingPoint x = center_frame(pp, pmp, pm, p);
  BuildingPoint xs = center_frame(dp, dm, lmp, d);
  auto cx = flat_coords(x, flat);
  auto cs = flat_coords(xs, flat);
  if (!cx || !cs) throw InternalError("projection of an ideal point is off the flat");

  const ProjPoint dp_d = meet(dp, d);
  const ProjPoint dm_d = meet(dm, d);
  PointLineReport r{*cs - *cx, {}, {}, {}};
  r.z_minus[0] = finite(geom_cross_ratio(pp, meet(dp, join(pm, p)), pmp, dp_d), "D+ quadruple");
  r.z_minus[1] = finite(geom_cross_ratio(dm, join(pm, dp_d), lmp, join(pm, p)), "pencil at p-");
  r.z_plus[0] = finite(geom_cross_ratio(pm, dm_d, pmp, meet(dm, join(pp, p))), "D- quadruple");
  r.z_plus[1] = finite(geom_cross_ratio(dp, join(pp, p), lmp, join(pp, dm_d)), "pencil at p+");

  auto roots = r.vector.simple_root_coords();
  record(r.checks, "z_minus_expressions_agree", r.z_minus[0] == r.z_minus[1],
         r.z_minus[0].get_str() + " vs " + r.z_minus[1].get_str());
  record(r.checks, "z_plus_expressions_agree", r.z_plus[0] == r.z_plus[1],
         r.z_plus[0].get_str() + " vs " + r.z_plus[1].get_str());
  record(r.checks, "alpha1", roots[0] == r.z_minus[0], roots[0].get_str() + " vs " + r.z_minus[0].get_str());
  record(r.checks, "alpha2", roots[1] == r.z_plus[0], roots[1].get_str() + " vs " + r.z_plus[0].get_str());
  return r;
}

Verification check_cross_ratio_identities(const Field& field, std::uint64_t seed, int samples) {
  Sampler s(field, seed);
  Tally tally;
  for (int n = 0; n < samples; ++n) {
    const auto q = s.collinear_quadruple();
    const std::string at = "sample " + std::to_string(n);
    auto g = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
      return geom_cross_ratio(q[a], q[b], q[c], q[e]);
    };
    const Val g1234 = g(0, 1, 2, 3);
    const Val g1423 = g(0, 3, 1, 2);
    const Val g1342 = g(0, 2, 3, 1);
    tally.check("three_cycle_sum", g1234 + g1423 + g1342 == Val(0), at);
    bool ultra = true;
    if (g1234 > Val(0)) ultra = g1342 == Val(0) && g1423 == -g1234;
    tally.check("ultrametric", ultra, at);
    tally.check("ultrametric_max", g1234 <= std::max(Val(0), -g1423), at);
    tally.check("double_transpositions", g(1, 0, 3, 2) == g1234 && g(2, 3, 0, 1) == g1234 && g(3, 2, 1, 0) == g1234, at);
    tally.check("transpositions_13_24", g(2, 1, 0, 3) == -g1234 && g(0, 3, 2, 1) == -g1234, at);
    tally.check("tree_oracle", Val(geombir_tree_oracle(q[0], q[1], q[2], q[3])) == g1234, at);

    const ProjPoint q5 = s.point_on(join(q[0], q[1]));
    bool distinct = true;
    for (const auto& x : q) distinct = distinct && !(x == q5);
    if (distinct) {
      tally.check("cocycle",
                  g1234 + geom_cross_ratio(q[0], q[3], q[2], q5) == geom_cross_ratio(q[0], q[1], q[2], q5), at);
    }
  }
  return tally.result();
}

TwoPointsInstance random_two_points_instance(Sampler& s) {
  while (true) {
    ProjPoint p1 = s.point(), p2 = s.point(), p3 = s.point();
    if (p1 == p2 || p2 == p3 || p3 == p1 || collinear(p1, p2, p3)) continue;
    ProjPoint p = s.point(), q = s.point();
    bool ok = true;
    for (const auto& l : {join(p1, p2), join(p2, p3), join(p3, p1)}) ok = ok && !incident(p, l) && !incident(q, l);
    if (ok) return {p1, p2, p3, p, q};
  }
}

PointLineInstance random_point_line_instance(Sampler& s) {
  while (true) {
    Flag fm = s.flag(), fp = s.flag();
    if (!opposite(fm, fp)) continue;
    ProjPoint p = s.point();
    ProjLine d = s.line();
    const ProjPoint pmp = meet(fp.line(), fm.line());
    const ProjLine lmp = join(fp.point(), fm.point());
    if (incident(p, fm.line()) || incident(p, fp.line()) || incident(p, lmp)) continue;
    if (incident(fm.point(), d) || incident(fp.point(), d) || incident(pmp, d)) continue;
    // the two cross-ratio quadruples on D+ and D- must have four distinct points
    if (meet(fp.line(), join(fm.point(), p)) == meet(fp.line(), d)) continue;
    if (meet(fm.line(), join(fp.point(), p)) == meet(fm.line(), d)) continue;
    return {fm, fp, p, d};
  }
}

}  // namespace a2b
