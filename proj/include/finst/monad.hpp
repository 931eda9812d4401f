#pragma once

// Monad shapes C^-1 -> C^0 -> C^1 for instanton bundles on F, their K-classes,
// Chern data and twisted Euler characteristics.  Only the terms are built;
// the differentials are not.

#include <map>
#include <utility>
#include <vector>

#include "finst/charge.hpp"
#include "finst/chow.hpp"

namespace finst {

using Summands = std::vector<std::pair<DivClass, Int>>;  // (line bundle, multiplicity)

struct MonadShape {
  Summands minus1;
  Summands zero;
  Summands plus1;
};

/// Formal signed combination of line bundles.
class KClass {
 public:
  KClass() = default;
  void add(const DivClass& d, Int multiplicity);
  Int rank() const;
  KClass twisted(const DivClass& d) const;
  const std::map<DivClass, Int>& terms() const { return terms_; }
  friend KClass operator-(const KClass& a, const KClass& b);
  friend KClass operator+(const KClass& a, const KClass& b);
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  std::map<DivClass, Int> terms_;  // no zero multiplicities
};

struct ChernData {
  Int rank = 0;
  DivClass c1;
  CurveClass c2;
  Int c3 = 0;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Terms of the monad for (charge, defect); throws NegativeMultiplicity.
MonadShape build_shape(const InstantonCharge& ch, const CohomDefect& defect);

/// zero - minus1 - plus1; throws RankMismatch unless the rank is 2.
KClass kclass(const MonadShape& shape);

ChernData chern(const KClass& k);

/// chi(K (x) O(d)) summed over line bundles; cross-checked against
/// Riemann-Roch on the Chern data, throws ConsistencyFailure on mismatch.
Int chi_twist(const KClass& k, const DivClass& d);

}  // namespace finst
