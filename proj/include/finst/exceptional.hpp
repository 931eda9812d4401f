#pragma once

// The exceptional collection (F_0[v_0], ..., F_7[v_7]) on F and its right dual
// (G_0, ..., G_7), checked entirely through line-bundle cohomology.
// Fullness is not checked.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "finst/cohomology.hpp"

namespace finst {

struct ShiftedLineBundle {
  DivClass cls;
  Int shift = 0;
};

/// O, O(l-e), O(e), O(l), O(xi), O(l-e+xi), O(e+xi), O(l+xi) with shifts 0,0,1,1,3,3,4,4.
const std::array<ShiftedLineBundle, 8>& f_collection();
/// O(-2l+e-xi), O(-l-xi), O(-l+e-xi), O(-xi), O(-2l+e), O(-l), O(-l+e), O.
const std::array<DivClass, 8>& g_collection();

/// Cohomological window used for the dual pattern: shifts <= 4 plus dimension 3.
inline constexpr int kMaxK = 10;

struct CollectionReport {
  bool pass = true;
  std::size_t checks = 0;
  std::optional<std::string> first_failure;
  /// [i][j] = true when the pair (i, j) passed.
  std::array<std::array<bool, 8>, 8> matrix{};
};

CollectionReport verify_exceptional_pairs();
CollectionReport verify_strong_dual();

struct DualPatternReport : CollectionReport {
  /// [i][j] = sum over k of h^{k - v_i}(G_j - F_i); the anti-diagonal permutation when passing.
  std::array<std::array<Int, 8>, 8> pattern{};
};

DualPatternReport verify_right_dual_pattern();

}  // namespace finst
