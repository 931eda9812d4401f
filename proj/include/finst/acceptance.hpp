#pragma once

// The full verification suite for the two minimal instantons and the ten
// acceptance criteria, shared by the CLI and the acceptance test binary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finst/kernel_bundles.hpp"

namespace finst {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CheckVerdict {
  std::string name;
  bool decided = true;
  bool pass = true;
  std::string detail;
};

enum VerifyMask : unsigned {
  kVerifySurjective = 1u << 0,
  kVerifyInstanton = 1u << 1,   // h0 = h1 = 0
  kVerifyStability = 1u << 2,
  kVerifyAcm = 1u << 3,
  kVerifyEarnest = 1u << 4,
  kVerifyUlrich = 1u << 5,
  kVerifyLine = 1u << 6,
  kVerifyAll = (1u << 7) - 1,
};

struct MinimalSuite {
  std::string label;
  std::optional<SurjectivityCertificate> surjectivity;
  std::optional<TwistMap> h0_map;
  std::optional<TwistCohomResult> h1;
  std::optional<StabilityReport> stability;
  std::optional<AcmReport> acm;
  std::optional<EarnestReport> earnest;
  std::optional<UlrichReport> ulrich;
  std::optional<LineSplitting> line;
  std::size_t max_rows = 0;  // largest H^0(V(d)) -> H^0(T(d)) matrix touched
  std::size_t max_cols = 0;
  std::vector<CheckVerdict> verdicts;

  bool pass() const;  // every decided verdict passes
  bool all_decided() const;
};

MinimalSuite verify_minimal(const KernelBundlePresentation& pres, unsigned mask, Int window, std::uint64_t seed);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criterion `id` (1..10).
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// The m = 0 degeneration of the 422 presentation.
KernelBundlePresentation degenerate_422();

}  // namespace finst
