#include "finst/numerics.hpp"

#include <algorithm>
#include <sstream>

#include "finst/errors.hpp"
#include "finst/exceptional.hpp"
#include "finst/monad.hpp"

namespace finst {

namespace {

std::string charge_str(const InstantonCharge& ch) {
  return "(" + std::to_string(ch.alpha) + "," + std::to_string(ch.beta) + "," + std::to_string(ch.gamma) + ")";
}

Int floor_div(Int a, Int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

}  // namespace

Int charge_degree(const InstantonCharge& ch) { return curve_dot_div(ch.curve(), kH); }

MinimalEnumeration enumerate_minimal(Int cap) {
  MinimalEnumeration out;
  if (cap < 14) {
    out.diagnostic = "CapTooSmall: every instanton on F has c2.h >= 14, cap " + std::to_string(cap) + " admits none";
    return out;
  }
  // beta <= alpha - 2 gives degree >= 2 alpha + 2 gamma + 2, so
  // alpha + gamma <= (cap - 2) / 2; then beta >= 3 alpha + 2 gamma - cap.
  out.alpha_plus_gamma_bound = floor_div(cap - 2, 2);
  for (Int alpha = 3; alpha + 2 <= out.alpha_plus_gamma_bound; ++alpha)
    for (Int gamma = 2; alpha + gamma <= out.alpha_plus_gamma_bound; ++gamma)
      for (Int beta = 3 * alpha + 2 * gamma - cap; beta <= alpha - 2; ++beta) {
        InstantonCharge ch{alpha, beta, gamma};
        if (!is_admissible(ch)) continue;
        const Int deg = charge_degree(ch);
        if (deg > cap) throw InternalDefect("enumerate_minimal: bound admitted degree " + std::to_string(deg));
        out.charges.emplace_back(ch, deg);
      }
  std::sort(out.charges.begin(), out.charges.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.first > y.first;
  });
  return out;
}

Int moduli_dim(const InstantonCharge& ch) {
  if (!is_admissible(ch)) throw NotAdmissible("charge " + charge_str(ch) + " violates the admissibility inequalities");
  const Int dim = 6 * ch.alpha - 2 * ch.beta + 4 * ch.gamma - 27;
  // Same number from 2 c2.h - deg(F)/2 - 3.
  const Int via_degree = 2 * charge_degree(ch) - constants().degree / 2 - 3;
  if (dim != via_degree) throw ConsistencyFailure("moduli_dim: closed form and degree route disagree");
  return dim;
}

std::string Table1::render() const {
  std::ostringstream os;
  for (int q = 7; q >= 0; --q) {
    os << "q=" << q << " |";
    for (int p = -7; p <= 0; ++p) os << ' ' << at(p, q);
    os << '\n';
  }
  os << "     p=-7..0\n";
  return os.str();
}

Table1 table1(const InstantonCharge& ch, const CohomDefect& defect) {
  if (!is_admissible(ch)) throw NotAdmissible("charge " + charge_str(ch) + " violates the admissibility inequalities");
  if (!is_valid_defect(ch, defect))
    throw InvalidDefect("defect (" + std::to_string(defect.delta) + "," + std::to_string(defect.epsilon) +
                        ") is not valid for charge " + charge_str(ch));
  const Int a = ch.alpha, b = ch.beta, g = ch.gamma, dl = defect.delta, ep = defect.epsilon;
  Table1 t;
  t.set(-7, 6, a + g - 6);
  t.set(-6, 6, b + g + ep - 2);
  t.set(-6, 5, ep);
  t.set(-5, 5, a - b + g - 4);
  t.set(-4, 5, g - 2);
  t.set(-3, 3, a - 3);
  t.set(-2, 3, b + dl - 1);
  t.set(-2, 2, dl);
  t.set(-1, 2, a - b - 2);
  for (int p = -7; p <= 0; ++p)
    for (int q = 0; q <= 7; ++q)
      if (t.at(p, q) < 0) throw NegativeEntry(p, q, t.at(p, q));
  return t;
}

EulerCheck table1_euler_check(const InstantonCharge& ch, const CohomDefect& defect) {
  const Table1 t = table1(ch, defect);
  const KClass k = kclass(build_shape(ch, defect));
  const auto& f = f_collection();
  EulerCheck out;
  for (int p = -7; p <= 0; ++p) {
    const auto& fp = f[static_cast<std::size_t>(-p)];
    EulerColumn col;
    col.p = p;
    for (int q = 0; q <= 7; ++q) {
      const Int sign = ((q - fp.shift) % 2 == 0) ? 1 : -1;
      col.table_sum += sign * t.at(p, q);
    }
    col.k_class_chi = chi_twist(k, -fp.cls);
    out.columns[static_cast<std::size_t>(p + 7)] = col;
    out.pass = out.pass && col.ok();
  }
  return out;
}

CurveFamilyData curve_family(CurveFamily which) {
  CurveFamilyData d{};
  switch (which) {
    case CurveFamily::Line: d.name = "Line"; d.cls = {0, 1, 0}; break;
    case CurveFamily::A: d.name = "A"; d.cls = {1, 0, 0}; break;
    case CurveFamily::B: d.name = "B"; d.cls = {1, -1, 0}; break;
    case CurveFamily::C: d.name = "C"; d.cls = {0, 0, 1}; break;
  }
  d.h_degree = curve_dot_div(d.cls, kH);
  // All four families are smooth rational curves.
  d.hilbert_slope = d.h_degree;
  d.dot_l_plus_e = curve_dot_div(d.cls, DivClass{1, 1, 0});
  d.dot_l_minus_e = curve_dot_div(d.cls, DivClass{1, -1, 0});
  return d;
}

Int general_fano_bound(int index, Int degree) {
  switch (index) {
    case 4:
    case 3: return 1;
    case 2: return 2;
    case 1: return -floor_div(-degree, 4);
    default: throw InvalidArgument("Fano index must be in 1..4, got " + std::to_string(index));
  }
}

}  // namespace finst
