#pragma once

#include "finst/chow.hpp"

namespace finst {

/// c2 = alpha*l*xi - beta*e*xi + gamma*l^2; note the sign of beta.
struct InstantonCharge {
  Int alpha = 0;
  Int beta = 0;
  Int gamma = 0;

  CurveClass curve() const { return {alpha, -beta, gamma}; }
  friend auto operator<=>(const InstantonCharge&, const InstantonCharge&) = default;
};

/// delta = h^1(E(-e)), epsilon = h^1(E(-e-xi)).
struct CohomDefect {
  Int delta = 0;
  Int epsilon = 0;
  friend auto operator<=>(const CohomDefect&, const CohomDefect&) = default;
};

/// alpha >= 3, gamma >= 2, alpha + gamma >= 6, alpha - beta >= 2.
bool is_admissible(const InstantonCharge& ch);

/// delta >= max(0, 1-beta), epsilon >= max(0, 2-beta-gamma) and 2 delta >= epsilon.
bool is_valid_defect(const InstantonCharge& ch, const CohomDefect& d);

/// Smallest valid defect for the charge.
CohomDefect minimal_defect(const InstantonCharge& ch);

}  // namespace finst
