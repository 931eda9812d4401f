#pragma once

// Minimal instantons presented as kernels
//
//   0 -> E -> V = (+)_i O_F(source_i) --M--> O_F(target) -> 0,
//
// with M = (entry_i) and entry_i in H^0(O_F(target - source_i)).  Every
// cohomology number below comes from exact linear algebra on the maps
// H^0(V(d)) -> H^0(T(d)) built from Cox monomial bases.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finst/charge.hpp"
#include "finst/cox_oracle.hpp"
#include "finst/errors.hpp"
#include "finst/monad.hpp"

namespace finst {

struct KernelBundlePresentation {
  std::string label;
  std::vector<DivClass> sources;
  DivClass target;
  std::vector<SectionVector> entries;  // entries[i] has class target - sources[i]
  InstantonCharge charge;

  /// Class checks and rank(V) - 1 == 2; throws InvalidArgument.
  void validate() const;
  KClass kclass() const;
};

enum class MinimalCharge { Charge422, Charge313 };

/// 422: V = O(-l-xi)^2 + O(-2l+e) -> O(-l) with (s0, s1, x1).
/// 313: V = O(-l-xi)^2 + O(-l+e-xi) -> O(-xi) with (z, x1*y, x2).
KernelBundlePresentation minimal_presentation(MinimalCharge which);

/// Same shape with random rational coefficients drawn from `seed`.
KernelBundlePresentation random_presentation(MinimalCharge which, std::uint64_t seed);

/// Builds and validates a presentation from monomial/polynomial entries.
KernelBundlePresentation make_presentation(std::string label, std::vector<DivClass> sources, DivClass target,
                                           std::vector<SectionVector> entries, InstantonCharge charge);

// ---------------------------------------------------------------------------
// Surjectivity

class NotSurjective : public Error {
 public:
  NotSurjective(const std::string& what, std::optional<CoxPoint> witness) : Error(what), witness_(std::move(witness)) {}
  const std::optional<CoxPoint>& witness() const { return witness_; }

 private:
  std::optional<CoxPoint> witness_;
};

struct ChartCertificate {
  std::array<CoxVar, 3> units;   // coordinates set to 1 on this chart
  int degree = -1;               // degree bound of the multipliers found
  std::vector<std::string> multipliers;  // g_i with sum g_i * entry_i = 1 on the chart
};

struct SurjectivityCertificate {
  std::vector<ChartCertificate> charts;
  std::size_t samples = 0;  // valid Cox points checked in the sampling pass
  std::uint64_t seed = 0;
};

/// Chart-by-chart unit-ideal certificate plus a seeded sampling pass.
/// Throws NotSurjective with a witness point when the entries share a zero.
SurjectivityCertificate verify_surjective(const KernelBundlePresentation& pres, std::uint64_t seed = 20240611,
                                          std::size_t samples = 10000);

// ---------------------------------------------------------------------------
// Twisted cohomology

struct TwistMap {
  DivClass twist;
  std::size_t rows = 0;   // h^0(V(d))
  std::size_t cols = 0;   // h^0(T(d))
  std::size_t rank = 0;   // exact over Q
  std::optional<std::size_t> rank_mod_p;  // pre-screen, when the matrix is small enough

  Int kernel() const { return static_cast<Int>(rows - rank); }
  Int cokernel() const { return static_cast<Int>(cols - rank); }
};

TwistMap twist_map(const KernelBundlePresentation& pres, const DivClass& d);

Int h0_twist(const KernelBundlePresentation& pres, const DivClass& d);

struct TwistCohomResult {
  bool exact = true;
  Int lo = 0;
  Int hi = 0;
  std::string provenance;

  static TwistCohomResult Exact(Int n, std::string why) { return {true, n, n, std::move(why)}; }
  static TwistCohomResult Interval(Int lo, Int hi, std::string why) { return {false, lo, hi, std::move(why)}; }
  bool is_exact_zero() const { return exact && lo == 0; }
};

TwistCohomResult h1_twist(const KernelBundlePresentation& pres, const DivClass& d);

/// h^3(E(d)) from the dual maps H^0(omega - T - d) -> H^0(omega - source_i - d);
/// nullopt unless h^2(T(d)) = 0.
std::optional<Int> h3_twist_dual(const KernelBundlePresentation& pres, const DivClass& d);

// ---------------------------------------------------------------------------
// Stability

/// Twists d = -a l + b e - c xi with 3a + 2c + 6 >= b and h^0(V(d)) > 0.
std::vector<DivClass> enumerate_destabilizer_candidates(const KernelBundlePresentation& pres);

struct StabilityCheck {
  DivClass twist;
  Int h0 = 0;
  bool boundary = false;  // mu(O(-d)) == mu(E)
};

struct StabilityReport {
  bool stable = true;
  std::vector<StabilityCheck> checks;
  std::optional<StabilityCheck> destabilized;  // first nonzero section found
};

StabilityReport verify_stability(const KernelBundlePresentation& pres);

// ---------------------------------------------------------------------------
// aCM, earnestness, weakly Ulrich window, line splitting

struct AcmCell {
  Int t = 0;
  TwistCohomResult h1;
};

struct AcmReport {
  bool pass = true;          // no decided nonzero value
  bool all_exact_zero = true;
  std::vector<AcmCell> cells;
  std::vector<Int> inconclusive;
};

AcmReport verify_acm(const KernelBundlePresentation& pres, Int window);

/// The 2 delta >= epsilon gate.
bool defect_gate(const CohomDefect& d);

struct EarnestReport {
  TwistCohomResult delta;
  TwistCohomResult epsilon;
  bool earnest = false;   // delta == Exact(0)
  bool gate_ok = false;   // 2 delta >= epsilon, when both exact
};

EarnestReport verify_earnest(const KernelBundlePresentation& pres);

struct UlrichCell {
  int i = 0;
  Int t = 0;
  bool decided = false;
  Int value = 0;        // when decided
  std::string route;
};

struct UlrichReport {
  bool pass = true;        // every decided cell vanishes
  bool all_decided = true;
  std::vector<UlrichCell> cells;
};

/// Required vanishings of F = E(2h) for t in [-window-4, window].
UlrichReport weakly_ulrich_window(const KernelBundlePresentation& pres, Int window);

struct LineSplitting {
  Int a = 0;
  Int b = 0;
  std::array<Rational, 2> base_point;
  std::array<Int, 3> h0_values{};  // h^0(E|_L(t)) for t = -1, 0, 1
  Int degree = 0;                  // c1(E) . L
  int attempts = 0;
};

/// Splitting type on the line {y = 0} x {base point}; retries three fallback
/// base points before throwing SpecialLine.
LineSplitting restrict_to_line(const KernelBundlePresentation& pres,
                               std::array<Rational, 2> base_point = {Rational(1), Rational(0)});

/// h^0(E|_L(t)) on the given line; throws SpecialLine when the restricted
/// map is not surjective there.
Int h0_on_line(const KernelBundlePresentation& pres, const std::array<Rational, 2>& base_point, Int t);

// ---------------------------------------------------------------------------
// Cross-checks

struct ChiConsistency {
  std::size_t trials = 0;
  std::size_t determined = 0;   // twists where all four h^i were exact
  std::size_t mismatches = 0;
  std::optional<DivClass> first_mismatch;
};

/// Alternating sums from the kernel route vs the K-class Euler characteristic
/// on `trials` seeded random twists in [-3,3]^3.
ChiConsistency check_chi_consistency(const KernelBundlePresentation& pres, std::size_t trials, std::uint64_t seed);

}  // namespace finst
