#include "finst/monad.hpp"

#include <algorithm>
#include <string>

#include "finst/cohomology.hpp"
#include "finst/errors.hpp"
#include "finst/notation.hpp"

namespace finst {

bool is_admissible(const InstantonCharge& ch) {
  return ch.alpha >= 3 && ch.gamma >= 2 && ch.alpha + ch.gamma >= 6 && ch.alpha - ch.beta >= 2;
}

bool is_valid_defect(const InstantonCharge& ch, const CohomDefect& d) {
  return d.delta >= std::max<Int>(0, 1 - ch.beta) && d.epsilon >= std::max<Int>(0, 2 - ch.beta - ch.gamma) &&
         2 * d.delta >= d.epsilon;
}

CohomDefect minimal_defect(const InstantonCharge& ch) {
  CohomDefect d;
  d.epsilon = std::max<Int>(0, 2 - ch.beta - ch.gamma);
  d.delta = std::max({Int{0}, 1 - ch.beta, (d.epsilon + 1) / 2});
  return d;
}

void KClass::add(const DivClass& d, Int multiplicity) {
  if (multiplicity == 0) return;
  Int& m = terms_[d];
  m = checked::add(m, multiplicity);
  if (m == 0) terms_.erase(d);
}

Int KClass::rank() const {
  Int r = 0;
  for (const auto& [d, m] : terms_) r = checked::add(r, m);
  return r;
}

KClass KClass::twisted(const DivClass& d) const {
  KClass out;
  for (const auto& [c, m] : terms_) out.add(c + d, m);
  return out;
}

KClass operator+(const KClass& a, const KClass& b) {
  KClass out = a;
  for (const auto& [d, m] : b.terms_) out.add(d, m);
  return out;
}

KClass operator-(const KClass& a, const KClass& b) {
  KClass out = a;
  for (const auto& [d, m] : b.terms_) out.add(d, -m);
  return out;
}

MonadShape build_shape(const InstantonCharge& ch, const CohomDefect& defect) {
  const Int a = ch.alpha, b = ch.beta, g = ch.gamma, dl = defect.delta, ep = defect.epsilon;
  const DivClass m2l_e_xi{-2, 1, -1};  // -2l + e - xi
  const DivClass ml_xi{-1, 0, -1};     // -l - xi
  const DivClass ml_e_xi{-1, 1, -1};   // -l + e - xi
  const DivClass m2l_e{-2, 1, 0};      // -2l + e
  const DivClass ml{-1, 0, 0};         // -l
  const DivClass mxi{0, 0, -1};        // -xi
  const DivClass ml_e{-1, 1, 0};       // -l + e

  MonadShape s;
  s.minus1 = {{m2l_e_xi, a + g - 6}, {ml_xi, ep}};
  s.zero = {{ml_xi, b + g + ep - 2}, {ml_e_xi, a - b + g - 4}, {m2l_e, a - 3}, {ml, dl}};
  s.plus1 = {{mxi, g - 2}, {ml, b + dl - 1}, {ml_e, a - b - 2}};

  auto check = [](const char* term, const Summands& list) {
    for (const auto& [d, m] : list)
      if (m < 0)
        throw NegativeMultiplicity(std::string(term) + ": O_F(" + format_div(d) + ") has multiplicity " +
                                   std::to_string(m));
  };
  check("C^-1", s.minus1);
  check("C^0", s.zero);
  check("C^1", s.plus1);
  return s;
}

KClass kclass(const MonadShape& shape) {
  KClass k;
  for (const auto& [d, m] : shape.zero) k.add(d, m);
  for (const auto& [d, m] : shape.minus1) k.add(d, -m);
  for (const auto& [d, m] : shape.plus1) k.add(d, -m);
  if (k.rank() != 2) throw RankMismatch("monad K-class has rank " + std::to_string(k.rank()) + ", expected 2");
  return k;
}

ChernData chern(const KClass& k) {
  ChowElement total = ChowElement::one();
  for (const auto& [d, m] : k.terms()) total = total * one_plus_power(d, m);
  return {k.rank(), total.deg1, total.deg2, total.deg3};
}

Int chi_twist(const KClass& k, const DivClass& d) {
  Int by_summands = 0;
  for (const auto& [c, m] : k.terms()) by_summands = checked::add(by_summands, checked::mul(m, cohom_f(c + d).euler()));

  const ChernData ch = chern(k.twisted(d));
  const Rational by_rr = chi_rr_general(ch.rank, ch.c1, ch.c2, ch.c3);
  if (by_rr != Rational(static_cast<long>(by_summands)))
    throw ConsistencyFailure("chi_twist: summand route gives " + std::to_string(by_summands) +
                             " but Riemann-Roch gives " + by_rr.get_str() + " at twist " + format_div(d));
  return by_summands;
}

}  // namespace finst
