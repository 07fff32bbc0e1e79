#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("model flat basics") {
  CHECK(fv(0, 0, 0).roots() == std::array<Rational, 3>{0, 0, 0});
  CHECK(fv(1, 0, -1).roots() == std::array<Rational, 3>{1, 1, -2});
  FlatVector e1 = fv(1, 0, 0);
  CHECK(e1 == FlatVector(Rational(2, 3), Rational(-1, 3), Rational(-1, 3)));
  CHECK(e1.roots() == std::array<Rational, 3>{1, 0, -1});
  CHECK(fv(0, 1, 0).simple_root_coords() == std::array<Rational, 2>{-1, 1});
  FlatVector v = FlatVector::from_src(-1, 1);
  CHECK(v.simple_root_coords() == std::array<Rational, 2>{-1, 1});
  CHECK(fv(-1, 0, 1).weyl_type() == fv(1, 0, -1));
  CHECK(fv(1, 1, -2).weyl_type() == fv(1, 1, -2));
  CHECK(fv(0, 0, 0).norm_sq() == 0);
  CHECK(fv(1, 0, -1).norm_sq() == 4);
  CHECK(FlatVector(Rational(1, 2), Rational(-1, 2), 0).norm_sq() == 1);
  CHECK(FlatVector::from_src(1, 0).norm_sq() == Rational(4, 3));
  CHECK(FlatVector::from_src(-1, 1).norm_sq() == Rational(4, 3));
  CHECK(fv(2, 1, 1).singularity() == Singularity::PointType);
  CHECK(fv(1, 1, 0).singularity() == Singularity::LineType);
  CHECK(fv(3, 1, 0).singularity() == Singularity::Regular);
  CHECK(fv(4, 4, 4).singularity() == Singularity::Zero);
}

TEST_CASE("model flat invariants on a grid") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      FlatVector v = FlatVector::from_src(Rational(a, 2), Rational(b, 3));
      auto r = v.roots();
      CHECK(r[0] + r[1] + r[2] == 0);
      CHECK(FlatVector::from_src(r[0], r[1]) == v);
      CHECK(v.weyl_type().weyl_type() == v.weyl_type());
      FlatVector w(v[1], v[2], v[0]);
      CHECK(w.weyl_type() == v.weyl_type());
      CHECK(w.norm_sq() == v.norm_sq());
      CHECK(v.weyl_type().in_chamber());
    }
}

TEST_CASE("cartan vector examples") {
  BuildingPoint o(eye(QT), {0, 0, 0});
  BuildingPoint y(eye(QT), {1, 3, -1});
  CHECK(cartan_vector(o, y) == fv(3, 1, -1));

  Mat<3> f = eye(QT);
  f(0, 2) = qt("1/t");
  BuildingPoint z(f, {0, 0, 0});
  CHECK(cartan_vector(o, z) == fv(1, 0, -1));
  CHECK_FALSE(equals(o, z));
  CHECK(distance_sq(o, z) == 4);
  CHECK(distance_sq(o, BuildingPoint(eye(QT), {1, 1, -2})) == 12);
  CHECK(equals(o, o));
  CHECK(distance_sq(o, o) == 0);

  // rescaled basis vectors with compensating weights
  Mat<3> s = Mat<3>::from_columns({Vec<3>{qt("t"), qt("0"), qt("0")}, Vec<3>{qt("0"), qt("3"), qt("0")},
                                   Vec<3>{qt("0"), qt("0"), qt("1/t^2")}});
  CHECK(equals(o, BuildingPoint(s, {1, 0, -2})));
  CHECK_FALSE(equals(o, BuildingPoint(s, {0, 0, 0})));
}

TEST_CASE("norm evaluation") {
  BuildingPoint o(eye(QT), {0, 0, 0});
  CHECK(norm_logeval(o, vec(QT, "1", "0", "0")) == Val(0));
  CHECK(norm_logeval(o, vec(QT, "1", "t", "0")) == Val(0));
  BuildingPoint x(eye(QT), {1, 0, -1});
  CHECK(norm_logeval(x, vec(QT, "0", "0", "1")) == Val(1));
  CHECK_THROWS_AS(norm_logeval(o, vec(QT, "0", "0", "0")), DegenerateInput);
}

TEST_CASE("flat coordinates, duality, group action") {
  MarkedFlat a(eye(QT));
  FlatVector c = FlatVector::from_src(Rational(1, 2), -2);
  CHECK(flat_coords(a.point_at(c), a) == c);

  Mat<3> f = eye(QT);
  f(0, 2) = qt("1/t");
  BuildingPoint z(f, {0, 0, 0});
  CHECK_FALSE(flat_coords(z, a).has_value());
  CHECK(flat_coords(z, MarkedFlat(f)) == fv(0, 0, 0));

  BuildingPoint o(eye(QT), {0, 0, 0});
  CHECK(equals(dualize(o), o));
  BuildingPoint x(eye(QT), {1, 0, -1});
  CHECK(dualize(x).weights() == Weights<3>{-1, 0, 1});
  CHECK(distance_sq(dualize(o), dualize(z)) == 4);

  Mat<3> g = Mat<3>::diagonal(Vec<3>{qt("t"), qt("1/t^2"), qt("5")});
  CHECK(cartan_vector(o, apply_group(g, o)) == fv(-1, 2, 0).weyl_type());
  CHECK(equals(apply_group(eye(QT), x), x));
  CHECK(equals(apply_group(g, o), BuildingPoint(eye(QT), {-1, 2, 0})));

  MarkedFlat ray(eye(QT));
  CHECK(ray.chamber_at_infinity() == Flag(pt(QT, "1", "0", "0"), ln(QT, "0", "0", "1")));
}

TEST_CASE("flat transitions agree with direct membership") {
  Sampler s(QT, 5);
  for (int n = 0; n < 6; ++n) {
    Mat<3> b1 = Mat<3>::from_columns({s.vector(), s.vector(), s.vector()});
    if (b1.det().is_zero()) continue;
    // share two directions so the flats meet in a half-plane-like region
    Mat<3> b2 = Mat<3>::from_columns({b1.column(0), b1.column(1), s.vector()});
    if (b2.det().is_zero()) continue;
    MarkedFlat f1(b1), f2(b2);
    FlatTransition tr(f1, f2);
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) {
        FlatVector c = FlatVector::from_src(Rational(a, 2), Rational(b, 2));
        CHECK(tr.coords_in_target(c) == flat_coords(f1.point_at(c), f2));
      }
  }
}

TEST_CASE("cartan agrees with elimination over the valuation ring") {
  for (const Field& f : {QT, Q5}) {
    Sampler s(f, 8);
    for (int n = 0; n < 40; ++n) {
      BuildingPoint x = random_point(s, true);
      BuildingPoint y = random_point(s, true);
      CHECK(cartan_vector(x, y) == smith_cartan(x, y, f));
    }
  }
}

TEST_CASE("cartan vector properties") {
  for (const Field& f : {QT, Q5}) {
    Sampler s(f, 99);
    for (int n = 0; n < 40; ++n) {
      BuildingPoint x = random_point(s, false);
      BuildingPoint y = random_point(s, false);
      BuildingPoint z = random_point(s, false);
      FlatVector xy = cartan_vector(x, y);
      CHECK(xy.in_chamber());
      CHECK(cartan_vector(y, x) == xy.opposite());
      CHECK(distance_sq(x, y) == distance_sq(y, x));
      Weights<3> m = MinorProfile<3>(x.basis(), y.basis()).minima(x.weights(), y.weights());
      CHECK(m[0] + m[0] <= m[1]);  // m_0 = 0
      CHECK(m[0] + m[2] >= 2 * m[1]);
      // triangle inequality, squared form
      double dxy = approx_sqrt(distance_sq(x, y));
      double dyz = approx_sqrt(distance_sq(y, z));
      double dxz = approx_sqrt(distance_sq(x, z));
      CHECK(dxz <= dxy + dyz + 1e-9);
      // homothety
      BuildingPoint xs(x.basis(), {x.weights()[0] + 5, x.weights()[1] + 5, x.weights()[2] + 5});
      CHECK(cartan_vector(xs, y) == xy);
      // duality is an isometry
      CHECK(distance_sq(dualize(x), dualize(y)) == distance_sq(x, y));
      CHECK(equals(dualize(dualize(x)), x));
    }
  }
}
