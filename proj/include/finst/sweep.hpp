#pragma once

// Grid property sweeps over a bounded worker pool.  Cells are independent;
// the reported counterexample is always the one with the smallest cell index,
// so the result does not depend on scheduling.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "finst/chow.hpp"

namespace finst {

enum class SweepKind { CohomRR, Serre, Oracle, MonadChern, Table1 };

std::optional<SweepKind> parse_sweep_kind(const std::string& name);
const char* sweep_kind_name(SweepKind kind);

struct SweepConfig {
  SweepKind kind = SweepKind::CohomRR;
  Int bound = 8;        // cohom-rr, serre: DivClass box [-bound, bound]^3
  Int f1_bound = 12;    // oracle: F1 box
  Int f_bound = 6;      // oracle: F box
  Int alpha_max = 10;   // monad-chern, table1: alpha, gamma <= alpha_max
  Int beta_max = 8;     // |beta| <= beta_max
  Int defect_max = 4;   // delta, epsilon <= defect_max
  std::size_t workers = 0;  // 0: FINST_WORKERS or hardware concurrency
};

struct SweepResult {
  SweepKind kind;
  std::size_t cells = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
};

/// Worker count from FINST_WORKERS, else hardware concurrency; at least 1.
std::size_t default_workers();

/// Runs fn(i) for i in [0, n) on up to `workers` threads.  fn returns a
/// description on failure.  Exceptions are rethrown for the lowest index.
SweepResult run_cells(SweepKind kind, std::size_t n, std::size_t workers,
                      const std::function<std::optional<std::string>(std::size_t)>& fn);

SweepResult sweep(const SweepConfig& cfg);

}  // namespace finst
