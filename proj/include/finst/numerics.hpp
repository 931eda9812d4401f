#pragma once

// Charge calculus for instanton bundles on F: degree, minimality, moduli
// dimension, the e^{p,q} table and its Euler-characteristic check.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finst/charge.hpp"
#include "finst/chow.hpp"

namespace finst {

/// c2 . h = 3 alpha - beta + 2 gamma.
Int charge_degree(const InstantonCharge& ch);

struct MinimalEnumeration {
  std::vector<std::pair<InstantonCharge, Int>> charges;  // sorted by degree
  /// alpha + gamma <= this bound on the whole search region.
  Int alpha_plus_gamma_bound = 0;
  std::optional<std::string> diagnostic;
};

/// All admissible charges of degree <= cap.  Below 14 the result is empty
/// and carries a CapTooSmall diagnostic.
MinimalEnumeration enumerate_minimal(Int degree_cap);

/// dim Ext^1(E,E) = 6 alpha - 2 beta + 4 gamma - 27; throws NotAdmissible.
Int moduli_dim(const InstantonCharge& ch);

inline constexpr std::array<Int, 8> kShifts{0, 0, 1, 1, 3, 3, 4, 4};

class Table1 {
 public:
  /// p in [-7, 0], q in [0, 7].
  Int at(int p, int q) const { return cells_.at(static_cast<std::size_t>(p + 7)).at(static_cast<std::size_t>(q)); }
  void set(int p, int q, Int v) { cells_.at(static_cast<std::size_t>(p + 7)).at(static_cast<std::size_t>(q)) = v; }
  /// Rows q = 7..0 top to bottom, columns p = -7..0, as printed.
  std::string render() const;
  friend bool operator==(const Table1&, const Table1&) = default;

 private:
  std::array<std::array<Int, 8>, 8> cells_{};
};

/// Throws NotAdmissible, InvalidDefect or NegativeEntry.
Table1 table1(const InstantonCharge& ch, const CohomDefect& defect);

struct EulerColumn {
  int p = 0;
  Int table_sum = 0;  // sum_q (-1)^{q - v_{-p}} e^{p,q}
  Int k_class_chi = 0;
  bool ok() const { return table_sum == k_class_chi; }
};

struct EulerCheck {
  bool pass = true;
  std::array<EulerColumn, 8> columns{};  // p = -7..0
};

EulerCheck table1_euler_check(const InstantonCharge& ch, const CohomDefect& defect);

enum class CurveFamily { Line, A, B, C };

struct CurveFamilyData {
  const char* name;
  CurveClass cls;
  Int h_degree;
  Int hilbert_slope;     // chi(O_C(t)) = hilbert_slope * t + 1
  Int dot_l_plus_e;      // (l + e) . C
  Int dot_l_minus_e;     // (l - e) . C
};

CurveFamilyData curve_family(CurveFamily which);

/// Lower bound k_X for c2(E).h on a Fano threefold of the given index.
Int general_fano_bound(int index, Int degree);

}  // namespace finst
