#include "finst/chow.hpp"

#include <stdexcept>

namespace finst {

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in class arithmetic");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in class arithmetic");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in class arithmetic");
  return r;
}

}  // namespace checked

using checked::add;
using checked::mul;
using checked::sub;

CurveClass div_mul(const DivClass& d1, const DivClass& d2) {
  // l*xi, e*xi and l^2 = -e^2 survive; l*e = xi^2 = 0.
  return {add(mul(d1.l, d2.xi), mul(d2.l, d1.xi)),
          add(mul(d1.e, d2.xi), mul(d2.e, d1.xi)),
          sub(mul(d1.l, d2.l), mul(d1.e, d2.e))};
}

Int curve_dot_div(const CurveClass& c, const DivClass& d) {
  // l*xi.l = 1, e*xi.e = e^2*xi = -1, l^2.xi = 1; everything else vanishes.
  return add(sub(mul(c.lxi, d.l), mul(c.exi, d.e)), mul(c.l2, d.xi));
}

Int triple(const DivClass& d1, const DivClass& d2, const DivClass& d3) {
  return curve_dot_div(div_mul(d1, d2), d3);
}

Rational slope(Int rank, const DivClass& c1) {
  if (rank < 1) throw std::invalid_argument("slope: rank must be positive");
  Rational mu(static_cast<long>(triple(c1, kH, kH)), static_cast<long>(rank));
  mu.canonicalize();
  return mu;
}

bool hoppe_region(Int a, Int b, Int c) {
  return add(add(mul(3, a), mul(2, c)), 6) >= b;
}

const Constants& constants() {
  static const Constants k{kH, kOmega, CurveClass{6, -2, 4}, 1, 1, 0, triple(kH, kH, kH)};
  return k;
}

ChowElement operator+(const ChowElement& a, const ChowElement& b) {
  return {add(a.deg0, b.deg0), a.deg1 + b.deg1, a.deg2 + b.deg2, add(a.deg3, b.deg3)};
}

ChowElement operator-(const ChowElement& a, const ChowElement& b) {
  return {sub(a.deg0, b.deg0), a.deg1 - b.deg1, a.deg2 - b.deg2, sub(a.deg3, b.deg3)};
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
  ChowElement r;
  r.deg0 = mul(a.deg0, b.deg0);
  r.deg1 = a.deg0 * b.deg1 + b.deg0 * a.deg1;
  r.deg2 = a.deg0 * b.deg2 + b.deg0 * a.deg2 + div_mul(a.deg1, b.deg1);
  r.deg3 = add(add(mul(a.deg0, b.deg3), mul(b.deg0, a.deg3)),
               add(curve_dot_div(b.deg2, a.deg1), curve_dot_div(a.deg2, b.deg1)));
  return r;
}

ChowElement one_plus_power(const DivClass& d, Int k) {
  ChowElement base = ChowElement::one() + ChowElement::of(d);
  if (k < 0) {
    ChowElement dd = ChowElement::of(d);
    ChowElement d2 = dd * dd;
    base = ChowElement::one() - dd + d2 - d2 * dd;
    k = -k;
  }
  ChowElement r = ChowElement::one();
  for (Int i = 0; i < k; ++i) r = r * base;
  return r;
}

}  // namespace finst
