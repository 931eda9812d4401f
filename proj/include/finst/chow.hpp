#pragma once

// Intersection theory on the Chow ring of F = P1 x F1.
//
// A(F) = Z<1> + Z<l, e, xi> + Z<l*xi, e*xi, l^2> + Z<l^2*xi> with
//   l^2 = -e^2,  l*e = 0,  xi^2 = 0,  deg(l^2*xi) = 1.
//
// Sign convention: DivClass stores the signed coefficient of e.  The class
// written O_F(a l - b e + c xi) is DivClass{a, -b, c}; likewise the charge
// alpha*l*xi - beta*e*xi + gamma*l^2 is CurveClass{alpha, -beta, gamma}.

#include <compare>
#include <cstdint>
#include <gmpxx.h>

namespace finst {

using Int = std::int64_t;
using Rational = mpq_class;

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
}  // namespace checked

struct DivClass {
  Int l = 0;
  Int e = 0;
  Int xi = 0;

  friend DivClass operator+(const DivClass& a, const DivClass& b) {
    return {checked::add(a.l, b.l), checked::add(a.e, b.e), checked::add(a.xi, b.xi)};
  }
  friend DivClass operator-(const DivClass& a, const DivClass& b) {
    return {checked::sub(a.l, b.l), checked::sub(a.e, b.e), checked::sub(a.xi, b.xi)};
  }
  friend DivClass operator-(const DivClass& a) { return DivClass{} - a; }
  friend DivClass operator*(Int k, const DivClass& a) {
    return {checked::mul(k, a.l), checked::mul(k, a.e), checked::mul(k, a.xi)};
  }
  friend auto operator<=>(const DivClass&, const DivClass&) = default;
};

struct CurveClass {
  Int lxi = 0;
  Int exi = 0;
  Int l2 = 0;

  friend CurveClass operator+(const CurveClass& a, const CurveClass& b) {
    return {checked::add(a.lxi, b.lxi), checked::add(a.exi, b.exi), checked::add(a.l2, b.l2)};
  }
  friend CurveClass operator-(const CurveClass& a, const CurveClass& b) {
    return {checked::sub(a.lxi, b.lxi), checked::sub(a.exi, b.exi), checked::sub(a.l2, b.l2)};
  }
  friend CurveClass operator-(const CurveClass& a) { return CurveClass{} - a; }
  friend CurveClass operator*(Int k, const CurveClass& a) {
    return {checked::mul(k, a.lxi), checked::mul(k, a.exi), checked::mul(k, a.l2)};
  }
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

/// Multiple of the point class l^2*xi.
struct PointClass {
  Int deg = 0;
  friend auto operator<=>(const PointClass&, const PointClass&) = default;
};

/// Basis divisors.
inline constexpr DivClass kL{1, 0, 0};
inline constexpr DivClass kE{0, 1, 0};
inline constexpr DivClass kXi{0, 0, 1};

CurveClass div_mul(const DivClass& d1, const DivClass& d2);
Int curve_dot_div(const CurveClass& c, const DivClass& d);
Int triple(const DivClass& d1, const DivClass& d2, const DivClass& d3);

/// mu = c1 . h^2 / rank, exact.
Rational slope(Int rank, const DivClass& c1);

/// Stability half-space for twists O_F(-a l + b e - c xi): 3a + 2c + 6 >= b.
bool hoppe_region(Int a, Int b, Int c);

struct Constants {
  DivClass h;
  DivClass omega;
  CurveClass c2_omega;
  Int chi_O;
  int index;
  int q;
  Int degree;
};

const Constants& constants();

/// Fundamental class h = 3l - e + 2xi.
inline constexpr DivClass kH{3, -1, 2};
inline constexpr DivClass kOmega{-3, 1, -2};

/// Element of the graded ring A(F), truncated above degree 3.
struct ChowElement {
  Int deg0 = 0;
  DivClass deg1;
  CurveClass deg2;
  Int deg3 = 0;

  static ChowElement one() { return {1, {}, {}, 0}; }
  static ChowElement of(const DivClass& d) { return {0, d, {}, 0}; }

  friend ChowElement operator+(const ChowElement& a, const ChowElement& b);
  friend ChowElement operator-(const ChowElement& a, const ChowElement& b);
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
  friend bool operator==(const ChowElement&, const ChowElement&) = default;
};

/// (1 + d)^k for any integer k; negative powers use the truncated inverse
/// 1 - d + d^2 - d^3.
ChowElement one_plus_power(const DivClass& d, Int k);

}  // namespace finst
