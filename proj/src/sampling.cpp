#include "a2b/sampling.hpp"

namespace a2b {

Scalar Sampler::base(bool allow_zero) {
  while (true) {
    Scalar s;
    if (field_.kind() == Field::Kind::TAdic) {
      auto poly = [&](long max_degree) {
        std::vector<Integer> c(static_cast<std::size_t>(uniform(0, max_degree)) + 1);
        for (auto& x : c) x = uniform(-9, 9);
        return IntPoly(std::move(c));
      };
      IntPoly den = uniform(0, 1) == 0 ? IntPoly(Integer(uniform(1, 9))) : poly(3);
      if (den.is_zero()) continue;
      s = Scalar::of(field_, RatFunc(poly(3), den));
    } else {
      s = Scalar::of(field_, Rational(uniform(-9, 9), uniform(1, 9)));
    }
    if (uniform(0, 1) == 1) s *= Scalar::uniformizer(field_).pow(uniform(-2, 2));
    if (allow_zero || !s.is_zero()) return s;
  }
}

Scalar Sampler::scalar() { return uniform(0, 7) == 0 ? Scalar(0).in(field_) : base(false); }

Scalar Sampler::nonzero() { return base(false); }

Scalar Sampler::integral_ish() {
  Scalar s;
  if (field_.kind() == Field::Kind::TAdic) {
    std::vector<Integer> c(static_cast<std::size_t>(uniform(0, 3)) + 1);
    for (auto& x : c) x = uniform(-9, 9);
    s = Scalar::of(field_, RatFunc(IntPoly(std::move(c)), IntPoly(Integer(1))));
  } else {
    s = Scalar::of(field_, Rational(uniform(-9, 9)));
  }
  if (uniform(0, 1) == 1) s *= Scalar::uniformizer(field_).pow(uniform(-2, 2));
  return s;
}

Vec<3> Sampler::vector() {
  while (true) {
    Vec<3> v{scalar(), scalar(), scalar()};
    if (!is_zero(v)) return v;
  }
}

Vec<3> Sampler::integral_vector() {
  while (true) {
    auto entry = [&] { return uniform(0, 7) == 0 ? Scalar(0).in(field_) : integral_ish(); };
    Vec<3> v{entry(), entry(), entry()};
    if (!is_zero(v)) return v;
  }
}

ProjPoint Sampler::point() { return ProjPoint(integral_vector()); }

ProjLine Sampler::line() { return ProjLine(integral_vector()); }

ProjPoint Sampler::point_on(const ProjLine& l) {
  while (true) {
    Vec<3> c = cross(l.coords(), integral_vector());
    if (!is_zero(c)) return ProjPoint(c);
  }
}

Flag Sampler::flag() {
  ProjLine l = line();
  return Flag(point_on(l), l);
}

FlagTriple Sampler::generic_triple() {
  while (true) {
    FlagTriple t(flag(), flag(), flag());
    if (generic(t)) return t;
  }
}

std::array<ProjPoint, 4> Sampler::collinear_quadruple() {
  ProjLine l = line();
  while (true) {
    std::array<ProjPoint, 4> q{point_on(l), point_on(l), point_on(l), point_on(l)};
    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) distinct = distinct && !(q[i] == q[j]);
    if (distinct) return q;
  }
}

}  // namespace a2b
