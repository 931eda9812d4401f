#pragma once

// Closed-form cohomology of line bundles on P1, F1 and F = P1 x F1.
//
// On F1 the class u*l - v*e is addressed by the pair (u, v);
// on F a DivClass{l, e, xi} restricts to (u, v) = (l, -e) and P1 degree xi.

#include <array>

#include "finst/chow.hpp"

namespace finst {

struct CohomTable {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;
  Int h3 = 0;

  Int operator[](int i) const;
  Int euler() const { return h0 - h1 + h2 - h3; }
  friend bool operator==(const CohomTable&, const CohomTable&) = default;
};

/// C(n, 2) for n >= 2, else 0.
Int choose2(Int n);

Int h0_f1(Int u, Int v);
Int chi_f1(Int u, Int v);
CohomTable cohom_f1(Int u, Int v);
CohomTable cohom_p1(Int c);
CohomTable cohom_f(const DivClass& d);

/// Riemann-Roch on F for a sheaf with the given Chern data.
Rational chi_rr_general(Int rank, const DivClass& c1, const CurveClass& c2, Int c3);

/// h^i(d) == h^{3-i}(omega - d).
bool serre_dual_check(const DivClass& d);

/// Ext^k(O(src), O(dst)) = H^k(O(dst - src)).
CohomTable ext_table_linebundles(const DivClass& src, const DivClass& dst);

}  // namespace finst
