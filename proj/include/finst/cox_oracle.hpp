#pragma once

// Brute-force section spaces in Cox coordinates.
//
// Cox ring of F: x1, x2 of class l - e; y of class e; z of class l;
// s0, s1 of class xi.  Irrelevant ideal (x1,x2) * (y,z) * (s0,s1).
// H^0(O_F(d)) is spanned by the monomials of multidegree d.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "finst/chow.hpp"
#include "finst/linalg.hpp"

namespace finst {

enum CoxVar : int { kX1 = 0, kX2, kY, kZ, kS0, kS1, kNumCoxVars };

struct CoxMonomial {
  std::array<std::uint32_t, kNumCoxVars> exp{};  // x1, x2, y, z, s0, s1

  DivClass multidegree() const;
  CoxMonomial operator*(const CoxMonomial& o) const;
  friend auto operator<=>(const CoxMonomial&, const CoxMonomial&) = default;
};

/// Parses "x1*y", "s0^2*z", "1".
CoxMonomial parse_monomial(std::string_view text);
std::string format_monomial(const CoxMonomial& m);

struct Basis {
  DivClass cls;
  std::vector<CoxMonomial> monomials;   // lexicographically descending
  std::map<CoxMonomial, std::size_t> index;
};

/// Monomial basis of H^0(O_F(d)); cached, safe for concurrent readers.
std::shared_ptr<const Basis> basis(const DivClass& d);

/// Convenience copy of basis(d)->monomials.
std::vector<CoxMonomial> basis_f(const DivClass& d);

/// Monomial count on F1 for O(u l - v e), independent of the F-level cache.
Int count_f1(Int u, Int v);

using CoxPolynomial = std::map<CoxMonomial, Rational>;

/// A section of O_F(cls) as coefficients over basis(cls).
struct SectionVector {
  DivClass cls;
  std::vector<Rational> coeffs;

  static SectionVector zero(const DivClass& cls);
  static SectionVector from_monomial(const CoxMonomial& m);
  /// Homogeneous polynomial of class cls; throws if a term has another class.
  static SectionVector from_polynomial(const DivClass& cls, const CoxPolynomial& p);

  CoxPolynomial polynomial() const;
  bool is_zero() const;
  SectionVector operator*(const SectionVector& o) const;
};

/// Matrix of multiplication by s from basis(source) (rows) to
/// basis(source + s.cls) (columns).
linalg::SparseMatrix mult_matrix(const SectionVector& s, const DivClass& source);

using CoxPoint = std::array<Rational, kNumCoxVars>;

/// (x1,x2) != 0, (y,z) != 0 and (s0,s1) != 0.
bool irrelevant_check(const CoxPoint& point);

Rational evaluate(const CoxPolynomial& p, const CoxPoint& point);

}  // namespace finst
