// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "a2b/transverse.hpp"
#include "a2b/triples.hpp"
#include "a2b/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace a2b;

const Field QT = Field::tadic();
const Field Q5 = Field::padic(5);

const std::vector<const char*> kTadicZ{"t", "1/t", "-1+t", "1", "2", "t^2", "(1+t)/t"};
const std::vector<const char*> kFiveAdicZ{"5", "1/5", "4", "6"};

// Collects the first few failures of a criterion.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void expect_all_pass(const Verification& v, const std::string& where) {
    for (const auto& [name, result] : v) expect(result == "pass", where + " " + name + ": " + result);
  }
  void note(const std::string& s) { summary_ += (summary_.empty() ? "" : ", ") + s; }

  bool ok() const { return failed_ == 0; }
  std::string line() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!summary_.empty()) out << ", " << summary_;
    if (failed_) out << "; " << failed_ << " failed: " << detail_;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::string summary_;
  std::string detail_;
};

std::string tv(const TripleVal& z) { return "(" + z[0].str() + ", " + z[1].str() + ", " + z[2].str() + ")"; }

std::vector<Scalar> test_values() {
  std::vector<Scalar> zs;
  for (const char* z : kTadicZ) zs.push_back(parse_scalar(z, QT));
  for (const char* z : kFiveAdicZ) zs.push_back(parse_scalar(z, Q5));
  return zs;
}

void triple_ratio_identities(Outcome& o) {
  for (const Scalar& z : test_values()) {
    const Scalar one = Scalar(1).in(z.field());
    // valuations read off directly from the scalar, not through cross ratios
    const TripleVal want{{z.logabs(), -(one + z).logabs(), (one + z.inverse()).logabs()}};
    const TripleVal got = geom_triple_ratio(remark_triple(z));
    o.expect(got == want, "Z = " + z.str() + ": " + tv(got) + " expected " + tv(want));
    o.expect(got[0] + got[1] + got[2] == Val(0), "sum for Z = " + z.str());
    // ultrametric: one entry vanishes and the other two are opposite
    bool ultra = false;
    for (std::size_t k = 0; k < 3; ++k)
      ultra = ultra || (got[k] == Val(0) && got[(k + 1) % 3] == -got[(k + 2) % 3]);
    o.expect(ultra, "ultrametricity for Z = " + z.str());
  }
  o.note(std::to_string(test_values().size()) + " values of Z");
}

void symmetry_suite(Outcome& o) {
  for (const Field& f : {QT, Q5}) {
    Sampler s(f, 2002);
    for (int n = 0; n < 200; ++n) {
      const FlagTriple t = s.generic_triple();
      const TripleVal z = geom_triple_ratio(t);
      const std::string tag = f.str() + " #" + std::to_string(n);
      o.expect(geom_triple_ratio(t.rotated()) == z, tag + " cyclic");
      o.expect(geom_triple_ratio(t.rotated().rotated()) == z, tag + " cyclic twice");
      const TripleVal w = geom_triple_ratio(t.swapped());
      o.expect(w == TripleVal{{-z[0], -z[2], -z[1]}}, tag + " swap law");
      o.expect(geom_triple_ratio_dual(t) == geom_triple_ratio(t.reversed()), tag + " duality");
    }
  }
  o.note("200 triples per field");
}

void tripod_reproduction(Outcome& o) {
  // (-1/3, 2/3, -1/3) in coordinates, squared length 2 (1/9 + 4/9 + 1/9)
  const Rational oracle_distance(4, 3);
  for (const Scalar& z : {parse_scalar("-1+t", QT), parse_scalar("-1+5", Q5)}) {
    const std::string tag = "Z = " + z.str();
    TripleAnalysis a(remark_triple(z));
    o.expect(a.zq() == std::array<Rational, 3>{0, 1, -1}, tag + " geometric triple ratio");
    const TripleType type = a.type();
    const auto* tp = std::get_if<Tripod>(&type);
    o.expect(tp != nullptr, tag + " is not a tripod");
    if (!tp) continue;
    const auto& sp = a.special();
    o.expect(equals(sp.y[0], sp.y[1]) && equals(sp.y[1], sp.y[2]), tag + " y1 = y2 = y3");
    o.expect(equals(sp.y_star[0], sp.y_star[1]) && equals(sp.y_star[1], sp.y_star[2]), tag + " y1* = y2* = y3*");
    for (FlatId id : {FlatId::A12, FlatId::A23, FlatId::A31}) {
      const FlatVector d = a.coords(tp->x_star, id) - a.coords(tp->x, id);
      o.expect(d == FlatVector::from_src(-1, 1), tag + " x -> x* in " + to_string(id) + " is " + d.str());
      // eleven points of the segment
      const FlatVector cx = a.coords(tp->x, id);
      for (long k = 0; k <= 10; ++k) {
        const BuildingPoint p = a.flats()[id].point_at(cx + Rational(k, 10) * d);
        for (FlatId other : {FlatId::A12, FlatId::A23, FlatId::A31})
          o.expect(a.on_flat(p, other), tag + " segment point " + std::to_string(k) + " off " + to_string(other));
      }
    }
    o.expect(FlatVector::from_src(-1, 1).norm_sq() == oracle_distance, "norm of from_src(-1, 1)");
    o.expect(distance_sq(tp->x, tp->x_star) == oracle_distance, tag + " distance_sq(x, x*)");
    // minimality over Ap x AD grid pairs, margin 2, step 1/2
    const GridSpec near{2, Rational(1, 2)};
    const MarkedFlat& ap = a.flats()[FlatId::Ap];
    const MarkedFlat& ad = a.flats()[FlatId::AD];
    const MinorProfile<3> prof(ap.basis(), ad.basis());
    std::size_t pairs = 0;
    bool minimal = true;
    for (const auto& u : a.grid(FlatId::Ap, near))
      for (const auto& v : a.grid(FlatId::AD, near)) {
        ++pairs;
        minimal = minimal && FlatVector(prof.cartan(u.coords(), v.coords())).norm_sq() >= oracle_distance;
      }
    o.expect(minimal, tag + " a grid pair is closer than x, x*");
    // spot-check the batched distance against distance_sq on a few pairs
    const auto gu = a.grid(FlatId::Ap, near), gv = a.grid(FlatId::AD, near);
    for (std::size_t k = 0; k < gu.size() && k < gv.size(); k += 17)
      o.expect(FlatVector(prof.cartan(gu[k].coords(), gv[k].coords())).norm_sq() ==
                   distance_sq(ap.point_at(gu[k]), ad.point_at(gv[k])),
               tag + " batched distance");
    o.note(std::to_string(pairs) + " pairs for " + z.str());
    Verification v = a.verify_theorems(a.default_grid());
    for (auto it = v.begin(); it != v.end();) it = it->first.rfind("tripod.", 0) == 0 ? std::next(it) : v.erase(it);
    o.expect(v.size() == 6, tag + " tripod checks missing");
    o.expect_all_pass(v, tag);
  }
}

void triangle_reproduction(Outcome& o) {
  for (const char* zs : {"t", "1/t"}) {
    const Scalar z = parse_scalar(zs, QT);
    const std::string tag = std::string("Z = ") + zs;
    TripleAnalysis a(remark_triple(z));
    const TripleType type = a.type();
    const auto* tr = std::get_if<FlatTriangle>(&type);
    o.expect(tr != nullptr, tag + " is not a flat triangle");
    if (!tr) continue;
    const auto& Z = a.zq();
    const Rational plus = Z[0] > 0 ? Z[0] : Rational(0), minus = Z[0] < 0 ? Rational(-Z[0]) : Rational(0);
    const FlatVector edge = FlatVector::from_src(plus, minus);
    for (long i = 0; i < 3; ++i) {
      const auto k = static_cast<std::size_t>(i), next = static_cast<std::size_t>((i + 1) % 3);
      const FlatVector d = a.coords(tr->x[next], pair_flat(i)) - a.coords(tr->x[k], pair_flat(i));
      o.expect(d == edge, tag + " edge in " + to_string(pair_flat(i)) + " is " + d.str() + ", expected " + edge.str());
    }
    Verification v = a.verify_theorems(a.default_grid());
    std::size_t triangle_checks = 0;
    for (const auto& [name, result] : v)
      if (name.rfind("triangle.", 0) == 0) ++triangle_checks;
    o.expect(triangle_checks >= 6, tag + " triangle checks missing");
    o.expect(v.count("triangle.tree_projections") == 1, tag + " center identities missing");
    o.expect_all_pass(v, tag);
  }
}

void partition_oracles(Outcome& o) {
  const GridSpec grid{4, Rational(1, 2)};
  std::vector<Scalar> zs = test_values();
  zs.push_back(parse_scalar("-1+5", Q5));
  std::size_t least = SIZE_MAX;
  for (const Scalar& z : zs) {
    TripleAnalysis a(remark_triple(z));
    for (FlatId id : kAllFlats) {
      const PartitionReport r = a.partition_check(id, grid);
      const std::string tag = "Z = " + z.str() + " " + to_string(id);
      o.expect(r.ok(), tag + ": " + (r.failures.empty() ? "" : r.failures.front()));
      o.expect(r.grid_points >= 169, tag + " has " + std::to_string(r.grid_points) + " grid points");
      least = std::min(least, r.grid_points);
    }
  }
  o.note(std::to_string(zs.size()) + " triples, at least " + std::to_string(least) + " points per flat");
}

void cross_ratio_bridge(Outcome& o) {
  for (const Field& f : {QT, Q5}) {
    Sampler s(f, 6006);
    for (int n = 0; n < 500; ++n) {
      const auto q = s.collinear_quadruple();
      const Val alg = cross_ratio(q[0], q[1], q[2], q[3]).logabs();
      const Val tree(geombir_tree_oracle(q[0], q[1], q[2], q[3]));
      o.expect(tree == alg, f.str() + " #" + std::to_string(n) + ": " + tree.str() + " vs " + alg.str());
    }
  }
  o.note("500 quadruples per field");
}

void projection_propositions(Outcome& o) {
  for (const Field& f : {QT, Q5}) {
    Sampler two(f, kTwoPointsSeed);
    Sampler pl(f, kPointLineSeed);
    for (int n = 0; n < 100; ++n) {
      const auto i = random_two_points_instance(two);
      o.expect_all_pass(check_two_points_projection(i.p1, i.p2, i.p3, i.p, i.q).checks,
                        f.str() + " two points #" + std::to_string(n));
      const auto j = random_point_line_instance(pl);
      o.expect_all_pass(check_point_line_projection(j.f_minus, j.f_plus, j.p, j.d).checks,
                        f.str() + " point-line #" + std::to_string(n));
    }
  }
  o.note("100 instances of each per field");
}

void kernel_oracle(Outcome& o) {
  for (const Field& f : {QT, Q5}) {
    Sampler s(f, 8008);
    for (int n = 0; n < 200; ++n) {
      const BuildingPoint x = testing::random_point(s, true);
      const BuildingPoint y = testing::random_point(s, true);
      const FlatVector got = cartan_vector(x, y);
      const FlatVector want = testing::smith_cartan(x, y, f);
      o.expect(got == want, f.str() + " smith #" + std::to_string(n) + ": " + got.str() + " vs " + want.str());
    }
    for (int n = 0; n < 1000; ++n) {
      const BuildingPoint x = testing::random_point(s, false);
      const BuildingPoint y = testing::random_point(s, false);
      const Weights<3> m = MinorProfile<3>(x.basis(), y.basis()).minima(x.weights(), y.weights());
      const std::string tag = f.str() + " concavity #" + std::to_string(n);
      // m[k] is the least valuation of the (k+1)-minors; with m_0 = 0 the sequence is convex
      o.expect(m[1] >= 2 * m[0] && m[0] + m[2] >= 2 * m[1], tag + " log-concavity");
      o.expect(cartan_vector(x, y).in_chamber(), tag + " chamber");
    }
  }
  o.note("200 Smith-form and 1000 concavity instances per field");
}

void remark_matrix_action(Outcome& o) {
  for (const char* zs : {"t", "1/t"}) {
    const Verification v = remark_check(parse_scalar(zs, QT), {2, Rational(1, 2)});
    o.expect(v.count("remark.g_sends_e_to_next_point") == 1, std::string(zs) + " image check missing");
    o.expect_all_pass(v, std::string("Z = ") + zs);
    if (std::string(zs) == "1/t") o.expect(v.count("remark.fixed_points") == 1, "1/t fixed points not checked");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"triple-ratio identities", triple_ratio_identities},
      {"symmetry suite", symmetry_suite},
      {"tripod reproduction", tripod_reproduction},
      {"flat triangle reproduction", triangle_reproduction},
      {"partition oracles", partition_oracles},
      {"cross-ratio bridge", cross_ratio_bridge},
      {"projection propositions", projection_propositions},
      {"kernel oracle", kernel_oracle},
      {"remark matrix", remark_matrix_action},
  };
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    all = all && o.ok();
    std::cout << (o.ok() ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": " << o.line() << " ["
              << ms.count() << " ms]" << std::endl;
  }
  const auto total =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cout << (all ? "all criteria pass" : "some criteria fail") << " [" << total.count() << " ms]" << std::endl;
  return all ? 0 : 1;
}
