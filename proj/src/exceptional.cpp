#include "finst/exceptional.hpp"

#include "finst/notation.hpp"

namespace finst {

const std::array<ShiftedLineBundle, 8>& f_collection() {
  static const std::array<ShiftedLineBundle, 8> f{{
      {{0, 0, 0}, 0},
      {{1, -1, 0}, 0},
      {{0, 1, 0}, 1},
      {{1, 0, 0}, 1},
      {{0, 0, 1}, 3},
      {{1, -1, 1}, 3},
      {{0, 1, 1}, 4},
      {{1, 0, 1}, 4},
  }};
  return f;
}

const std::array<DivClass, 8>& g_collection() {
  static const std::array<DivClass, 8> g{{
      {-2, 1, -1},
      {-1, 0, -1},
      {-1, 1, -1},
      {0, 0, -1},
      {-2, 1, 0},
      {-1, 0, 0},
      {-1, 1, 0},
      {0, 0, 0},
  }};
  return g;
}

namespace {

std::string describe(const char* what, std::size_t i, std::size_t j, const CohomTable& t) {
  return std::string(what) + " (" + std::to_string(i) + "," + std::to_string(j) + "): h^* = (" + std::to_string(t.h0) +
         "," + std::to_string(t.h1) + "," + std::to_string(t.h2) + "," + std::to_string(t.h3) + ")";
}

void record(CollectionReport& rep, std::size_t i, std::size_t j, bool ok, const std::string& detail) {
  ++rep.checks;
  rep.matrix[i][j] = ok;
  if (!ok) {
    rep.pass = false;
    if (!rep.first_failure) rep.first_failure = detail;
  }
}

const CohomTable kPoint{1, 0, 0, 0};

}  // namespace

CollectionReport verify_exceptional_pairs() {
  CollectionReport rep;
  const auto& f = f_collection();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const CohomTable t = ext_table_linebundles(f[i].cls, f[j].cls);
      bool ok = true;
      if (i == j) ok = t == kPoint;
      else if (i > j) ok = t == CohomTable{};
      record(rep, i, j, ok, describe("Ext(F_i,F_j)", i, j, t));
    }
  return rep;
}

CollectionReport verify_strong_dual() {
  CollectionReport rep;
  const auto& g = g_collection();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const CohomTable t = ext_table_linebundles(g[i], g[j]);
      bool ok;
      if (i == j) ok = t == kPoint;
      else if (i > j) ok = t == CohomTable{};
      else ok = t.h1 == 0 && t.h2 == 0 && t.h3 == 0;
      record(rep, i, j, ok, describe("Ext(G_i,G_j)", i, j, t));
    }
  return rep;
}

DualPatternReport verify_right_dual_pattern() {
  DualPatternReport rep;
  const auto& f = f_collection();
  const auto& g = g_collection();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const CohomTable t = ext_table_linebundles(f[i].cls, g[j]);
      bool ok = true;
      Int total = 0;
      for (int k = 0; k <= kMaxK; ++k) {
        const Int value = t[k - static_cast<int>(f[i].shift)];
        const Int expected = (i + j == 7 && static_cast<std::size_t>(k) == i) ? 1 : 0;
        total += value;
        ok = ok && value == expected;
      }
      rep.pattern[i][j] = total;
      record(rep, i, j, ok, describe("Ext^{k-v_i}(F_i,G_j)", i, j, t));
    }
  return rep;
}

}  // namespace finst
