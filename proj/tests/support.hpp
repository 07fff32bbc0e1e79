#pragma once

// Shared helpers and independent oracles for the test binaries.

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "a2b/bpoints.hpp"
#include "a2b/sampling.hpp"
#include "a2b/triples.hpp"
#include "oracles.hpp"

#include <doctest.h>

namespace doctest {

template <>
struct StringMaker<a2b::FlatVector> {
  static String convert(const a2b::FlatVector& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<a2b::Val> {
  static String convert(const a2b::Val& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<a2b::Scalar> {
  static String convert(const a2b::Scalar& v) { return v.str().c_str(); }
};
template <>
struct StringMaker<a2b::Rational> {
  static String convert(const a2b::Rational& v) { return v.get_str().c_str(); }
};
template <>
struct StringMaker<a2b::TripleVal> {
  static String convert(const a2b::TripleVal& v) {
    return ("(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")").c_str();
  }
};

}  // namespace doctest

namespace testing {

using namespace a2b;

inline const Field QT = Field::tadic();
inline const Field Q5 = Field::padic(5);

inline Scalar sc(const Field& f, const char* s) { return parse_scalar(s, f); }
inline Scalar qt(const char* s) { return parse_scalar(s, QT); }

inline Vec<3> vec(const Field& f, const char* a, const char* b, const char* c) {
  return {sc(f, a), sc(f, b), sc(f, c)};
}
inline ProjPoint pt(const Field& f, const char* a, const char* b, const char* c) { return ProjPoint(vec(f, a, b, c)); }
inline ProjLine ln(const Field& f, const char* a, const char* b, const char* c) { return ProjLine(vec(f, a, b, c)); }

inline Mat<3> eye(const Field& f) { return Mat<3>::identity(f); }

inline void check_all_pass(const Verification& v) {
  for (const auto& [name, result] : v) {
    INFO(name);
    CHECK(result == "pass");
  }
}

inline FlatVector fv(long a, long b, long c) { return FlatVector(Rational(a), Rational(b), Rational(c)); }

}  // namespace testing
