#include "finst/cohomology.hpp"

#include <algorithm>
#include <string>

#include "finst/errors.hpp"

namespace finst {

namespace {

std::string pair_str(Int u, Int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

Rational q(Int n) { return Rational(static_cast<long>(n)); }

}  // namespace

Int CohomTable::operator[](int i) const {
  switch (i) {
    case 0: return h0;
    case 1: return h1;
    case 2: return h2;
    case 3: return h3;
    default: return 0;
  }
}

Int choose2(Int n) { return n >= 2 ? checked::mul(n, n - 1) / 2 : 0; }

Int h0_f1(Int u, Int v) {
  if (u < 0 || u - v < 0) return 0;
  // Negative v imposes no base-point condition.
  return choose2(u + 2) - choose2(v + 1);
}

Int chi_f1(Int u, Int v) {
  Int twice = checked::add(2, checked::add(checked::sub(checked::mul(u, u), checked::mul(v, v)),
                                           checked::sub(checked::mul(3, u), v)));
  if (twice % 2 != 0) throw InternalDefect("chi_f1: non-integral Euler characteristic at " + pair_str(u, v));
  return twice / 2;
}

CohomTable cohom_f1(Int u, Int v) {
  CohomTable t;
  t.h0 = h0_f1(u, v);
  t.h2 = h0_f1(-u - 3, -v - 1);
  t.h1 = t.h0 + t.h2 - chi_f1(u, v);
  if (t.h1 < 0) throw InternalDefect("cohom_f1: negative h1 at " + pair_str(u, v));
  return t;
}

CohomTable cohom_p1(Int c) { return {std::max<Int>(c + 1, 0), std::max<Int>(-c - 1, 0), 0, 0}; }

CohomTable cohom_f(const DivClass& d) {
  const CohomTable s = cohom_f1(d.l, -d.e);
  const CohomTable p = cohom_p1(d.xi);
  CohomTable t;
  t.h0 = s.h0 * p.h0;
  t.h1 = s.h1 * p.h0 + s.h0 * p.h1;
  t.h2 = s.h2 * p.h0 + s.h1 * p.h1;
  t.h3 = s.h2 * p.h1;
  return t;
}

Rational chi_rr_general(Int rank, const DivClass& c1, const CurveClass& c2, Int c3) {
  const Constants& k = constants();
  Rational chi = q(rank) * q(k.chi_O);
  chi += (q(triple(c1, c1, c1)) - 3 * q(curve_dot_div(c2, c1)) + 3 * q(c3)) / 6;
  chi -= (q(triple(k.omega, c1, c1)) - 2 * q(curve_dot_div(c2, k.omega))) / 4;
  chi += (q(triple(k.omega, k.omega, c1)) + q(curve_dot_div(k.c2_omega, c1))) / 12;
  chi.canonicalize();
  return chi;
}

bool serre_dual_check(const DivClass& d) {
  const CohomTable a = cohom_f(d);
  const CohomTable b = cohom_f(kOmega - d);
  return a.h0 == b.h3 && a.h1 == b.h2 && a.h2 == b.h1 && a.h3 == b.h0;
}

CohomTable ext_table_linebundles(const DivClass& src, const DivClass& dst) { return cohom_f(dst - src); }

}  // namespace finst
