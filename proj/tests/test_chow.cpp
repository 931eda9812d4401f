#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "finst/chow.hpp"

using namespace finst;

namespace {

// F = P1 x F1 with l^2 = 1, e^2 = -1, l.e = 0 on F1 and xi the P1 fibre class:
// D1 D2 D3 picks xi from exactly one factor and intersects the other two on F1.
Int f1_dot(const DivClass& a, const DivClass& b) { return a.l * b.l - a.e * b.e; }

Int triple_oracle(const DivClass& a, const DivClass& b, const DivClass& c) {
  return a.xi * f1_dot(b, c) + b.xi * f1_dot(a, c) + c.xi * f1_dot(a, b);
}

}  // namespace

TEST_CASE("triple intersections agree with the product-surface oracle") {
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c) {
        const DivClass d1{a, b, c}, d2{b, c - a, a + 1}, d3{c, a, b - 1};
        CHECK(triple(d1, d2, d3) == triple_oracle(d1, d2, d3));
        CHECK(curve_dot_div(div_mul(d1, d2), d3) == triple(d1, d2, d3));
        CHECK(div_mul(d1, d2) == div_mul(d2, d1));
      }
}

TEST_CASE("ring relations") {
  CHECK(div_mul(kL, kL) == -div_mul(kE, kE));
  CHECK(div_mul(kL, kE) == CurveClass{});
  CHECK(div_mul(kXi, kXi) == CurveClass{});
  CHECK(triple(kL, kL, kXi) == 1);
  CHECK(triple(kE, kE, kXi) == -1);
}

TEST_CASE("constants of F") {
  const auto& k = constants();
  CHECK(k.h == kH);
  CHECK(k.omega == -kH);
  CHECK(k.degree == 48);
  CHECK(triple(kH, kH, kH) == 48);
  CHECK(k.c2_omega == CurveClass{6, -2, 4});
  CHECK(curve_dot_div(k.c2_omega, kH) == 24);
  CHECK(k.chi_O == 1);
  CHECK(k.index == 1);
}

TEST_CASE("slopes") {
  CHECK(slope(1, {-1, 0, -2}) == -28);
  CHECK(slope(1, {-2, 1, 0}) == -20);
  CHECK(slope(2, kOmega) == -24);
  CHECK_THROWS_AS(slope(0, kH), std::invalid_argument);
}

TEST_CASE("stability half-space") {
  CHECK(hoppe_region(0, 6, 0));
  CHECK_FALSE(hoppe_region(0, 7, 0));
  CHECK(hoppe_region(-1, 1, -1));
  CHECK_FALSE(hoppe_region(-2, 1, 0));
}

TEST_CASE("truncated powers of 1 + d") {
  for (Int a = -2; a <= 2; ++a)
    for (Int c = -2; c <= 2; ++c) {
      const DivClass d{a, 1 - a, c};
      const ChowElement one_d = ChowElement::one() + ChowElement::of(d);
      CHECK(one_plus_power(d, 2) == one_d * one_d);
      CHECK(one_plus_power(d, 3) * one_plus_power(d, -3) == ChowElement::one());
      CHECK(one_plus_power(d, -1) * one_d == ChowElement::one());
      CHECK(one_plus_power(d, 0) == ChowElement::one());
    }
}

TEST_CASE("checked arithmetic refuses overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked::add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked::mul(big / 2 + 1, 2), std::overflow_error);
  const DivClass huge{big, 0, 0};
  CHECK_THROWS_AS(huge + kL, std::overflow_error);
  CHECK(checked::sub(-5, 7) == -12);
}
