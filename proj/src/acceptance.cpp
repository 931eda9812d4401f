#include "finst/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "finst/cohomology.hpp"
#include "finst/exceptional.hpp"
#include "finst/notation.hpp"
#include "finst/numerics.hpp"
#include "finst/sweep.hpp"

namespace finst {

namespace {

std::string result_str(const TwistCohomResult& r) {
  return r.exact ? std::to_string(r.lo) : "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

void dims(const KernelBundlePresentation& pres, const DivClass& d, MinimalSuite& out) {
  std::size_t rows = 0;
  for (const auto& s : pres.sources) rows += basis(s + d)->monomials.size();
  out.max_rows = std::max(out.max_rows, rows);
  out.max_cols = std::max(out.max_cols, basis(pres.target + d)->monomials.size());
}

std::string sweep_detail(const SweepResult& r) {
  std::string s = std::string(sweep_kind_name(r.kind)) + ": " + std::to_string(r.cells) + " cells, " +
                  std::to_string(r.failures) + " failures";
  if (r.first_counterexample) s += " (first: " + *r.first_counterexample + ")";
  return s;
}

CriterionResult oracle_equivalence() {
  SweepConfig cfg;
  cfg.kind = SweepKind::Oracle;
  const auto r = sweep(cfg);
  return {1, "oracle equivalence", r.failures == 0, sweep_detail(r)};
}

CriterionResult rr_kunneth() {
  SweepConfig cfg;
  cfg.kind = SweepKind::CohomRR;
  cfg.bound = 8;
  const auto rr = sweep(cfg);
  cfg.kind = SweepKind::Serre;
  const auto serre = sweep(cfg);
  return {2, "Riemann-Roch / Kunneth / Serre", rr.failures == 0 && serre.failures == 0,
          sweep_detail(rr) + "; " + sweep_detail(serre)};
}

CriterionResult scalars() {
  struct Item {
    const char* what;
    Rational got;
    Rational want;
  };
  const Item items[] = {
      {"chi(O_F1(-2l))", chi_f1(-2, 0), 0},
      {"chi(O_F1(-l-e))", chi_f1(-1, 1), -1},
      {"h1(O_F(-l+e))", cohom_f({-1, 1, 0}).h1, 0},
      {"h1(O_F(-l-e))", cohom_f({-1, -1, 0}).h1, 1},
      {"deg F", triple(kH, kH, kH), 48},
      {"mu(O(-l-2xi))", slope(1, {-1, 0, -2}), -28},
      {"mu(O(-2l+e))", slope(1, {-2, 1, 0}), -20},
  };
  CriterionResult out{3, "reference scalars", true, ""};
  for (const auto& it : items) {
    const bool ok = it.got == it.want;
    out.pass = out.pass && ok;
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += std::string(it.what) + " = " + it.got.get_str() + (ok ? "" : " (expected " + it.want.get_str() + ")");
  }
  return out;
}

CriterionResult monad_chern() {
  SweepConfig cfg;
  cfg.kind = SweepKind::MonadChern;
  const auto r = sweep(cfg);
  return {4, "monad Chern suite", r.failures == 0 && r.cells > 0, sweep_detail(r)};
}

CriterionResult table1_euler() {
  SweepConfig cfg;
  cfg.kind = SweepKind::Table1;
  const auto r = sweep(cfg);
  return {5, "e^{p,q} table Euler consistency", r.failures == 0 && r.cells > 0, sweep_detail(r)};
}

CriterionResult minimality() {
  CriterionResult out{6, "minimality", true, ""};
  const auto m14 = enumerate_minimal(14);
  std::vector<InstantonCharge> got;
  for (const auto& [ch, deg] : m14.charges) got.push_back(ch);
  const std::vector<InstantonCharge> want{{4, 2, 2}, {3, 1, 3}};
  const bool list_ok = got == want;
  const auto m13 = enumerate_minimal(13);
  const bool empty_ok = m13.charges.empty();
  const bool dim_ok = moduli_dim({4, 2, 2}) == 1 && moduli_dim({3, 1, 3}) == 1;
  std::size_t checked = 0;
  bool identity_ok = true;
  for (Int a = 3; a <= 10; ++a)
    for (Int b = -8; b <= 8; ++b)
      for (Int g = 2; g <= 10; ++g) {
        const InstantonCharge ch{a, b, g};
        if (!is_admissible(ch)) continue;
        ++checked;
        identity_ok = identity_ok && moduli_dim(ch) == 2 * charge_degree(ch) - 27;
      }
  out.pass = list_ok && empty_ok && dim_ok && identity_ok;
  out.detail = "cap 14: " + std::to_string(got.size()) + " charges" + (list_ok ? "" : " (wrong list)") +
               "; cap 13: " + (empty_ok ? "empty" : "non-empty") + "; moduli_dim(422,313) " +
               (dim_ok ? "= 1" : "!= 1") + "; 2*deg-27 identity on " + std::to_string(checked) + " charges " +
               (identity_ok ? "holds" : "fails");
  return out;
}

CriterionResult exceptional() {
  const auto pairs = verify_exceptional_pairs();
  const auto strong = verify_strong_dual();
  const auto dual = verify_right_dual_pattern();
  bool anti = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) anti = anti && dual.pattern[i][j] == (i + j == 7 ? 1 : 0);
  CriterionResult out{7, "exceptional collection", pairs.pass && strong.pass && dual.pass && anti, ""};
  out.detail = "pairs " + std::to_string(pairs.checks) + (pairs.pass ? " ok" : " FAIL") + ", strong dual " +
               (strong.pass ? "ok" : "FAIL") + ", dual pattern " + (dual.pass && anti ? "anti-diagonal" : "FAIL");
  for (const auto* r : {&static_cast<const CollectionReport&>(pairs), &strong,
                        &static_cast<const CollectionReport&>(dual)})
    if (r->first_failure) out.detail += "; " + *r->first_failure;
  return out;
}

CriterionResult minimal_suite(int id, MinimalCharge which, std::uint64_t seed) {
  const auto pres = minimal_presentation(which);
  const MinimalSuite s = verify_minimal(pres, kVerifyAll, 3, seed);
  CriterionResult out{id, "minimal instanton " + pres.label, true, ""};
  // The criterion is stricter than "all decided checks pass": every cell must be decided.
  out.pass = s.pass() && s.all_decided() && s.acm && s.acm->all_exact_zero && s.earnest &&
             s.earnest->epsilon.is_exact_zero();
  for (const auto& v : s.verdicts) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += v.name + " " + (!v.decided ? "undecided" : v.pass ? "ok" : "FAIL");
    if (!v.detail.empty()) out.detail += " (" + v.detail + ")";
  }
  out.detail += "; largest matrix " + std::to_string(s.max_rows) + "x" + std::to_string(s.max_cols);
  return out;
}

CriterionResult negative_controls() {
  const auto rep = verify_stability(degenerate_422());
  const bool destabilized = !rep.stable && rep.destabilized.has_value();
  const bool gate_rejects = !defect_gate({0, 1});
  CriterionResult out{10, "negative controls", destabilized && gate_rejects, ""};
  out.detail = std::string("m = 0: ") +
               (destabilized ? "destabilized at " + format_div(rep.destabilized->twist) + " (h0 = " +
                                   std::to_string(rep.destabilized->h0) + ")"
                             : "not destabilized") +
               "; defect (0,1) " + (gate_rejects ? "rejected" : "accepted");
  return out;
}

}  // namespace

bool MinimalSuite::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const CheckVerdict& v) { return !v.decided || v.pass; });
}

bool MinimalSuite::all_decided() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const CheckVerdict& v) { return v.decided; });
}

KernelBundlePresentation degenerate_422() {
  auto pres = minimal_presentation(MinimalCharge::Charge422);
  pres.label = "422-m0";
  pres.entries[2] = SectionVector::zero(pres.entries[2].cls);
  return pres;
}

MinimalSuite verify_minimal(const KernelBundlePresentation& pres, unsigned mask, Int window, std::uint64_t seed) {
  MinimalSuite s;
  s.label = pres.label;
  dims(pres, {}, s);

  if (mask & kVerifySurjective) {
    try {
      s.surjectivity = verify_surjective(pres, seed);
      s.verdicts.push_back({"surjective", true, true,
                            std::to_string(s.surjectivity->charts.size()) + " charts, " +
                                std::to_string(s.surjectivity->samples) + " samples"});
    } catch (const NotSurjective& e) {
      s.verdicts.push_back({"surjective", true, false, e.what()});
    }
  }
  if (mask & kVerifyInstanton) {
    s.h0_map = twist_map(pres, {});
    s.h1 = h1_twist(pres, {});
    s.verdicts.push_back({"h0", true, s.h0_map->kernel() == 0, "h0 = " + std::to_string(s.h0_map->kernel())});
    s.verdicts.push_back({"h1", s.h1->exact, s.h1->lo == 0, "h1 = " + result_str(*s.h1)});
  }
  if (mask & kVerifyStability) {
    s.stability = verify_stability(pres);
    for (const auto& c : s.stability->checks) dims(pres, c.twist, s);
    std::string detail = std::to_string(s.stability->checks.size()) + " candidates";
    if (s.stability->destabilized) detail += ", destabilized at " + format_div(s.stability->destabilized->twist);
    s.verdicts.push_back({"stability", true, s.stability->stable, detail});
  }
  if (mask & kVerifyAcm) {
    s.acm = verify_acm(pres, window);
    for (Int t = -window; t <= window; ++t) dims(pres, t * kH, s);
    std::string detail = "|t| <= " + std::to_string(window);
    if (!s.acm->inconclusive.empty()) detail += ", " + std::to_string(s.acm->inconclusive.size()) + " inconclusive";
    s.verdicts.push_back({"acm", s.acm->inconclusive.empty(), s.acm->pass, detail});
  }
  if (mask & kVerifyEarnest) {
    s.earnest = verify_earnest(pres);
    dims(pres, -kE, s);
    dims(pres, -kE - kXi, s);
    const bool decided = s.earnest->delta.exact && s.earnest->epsilon.exact;
    s.verdicts.push_back({"earnest", decided, s.earnest->earnest && s.earnest->gate_ok,
                          "delta = " + result_str(s.earnest->delta) + ", epsilon = " + result_str(s.earnest->epsilon)});
  }
  if (mask & kVerifyUlrich) {
    s.ulrich = weakly_ulrich_window(pres, window);
    for (Int t = -window - 2; t <= window + 2; ++t) dims(pres, t * kH, s);
    s.verdicts.push_back({"ulrich", s.ulrich->all_decided, s.ulrich->pass,
                          std::to_string(s.ulrich->cells.size()) + " cells"});
  }
  if (mask & kVerifyLine) {
    try {
      s.line = restrict_to_line(pres);
      s.verdicts.push_back({"line", true, s.line->a == 0 && s.line->b == -1,
                            "(" + std::to_string(s.line->a) + "," + std::to_string(s.line->b) + ")"});
    } catch (const SpecialLine& e) {
      s.verdicts.push_back({"line", true, false, e.what()});
    }
  }
  return s;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = oracle_equivalence(); break;
    case 2: r = rr_kunneth(); break;
    case 3: r = scalars(); break;
    case 4: r = monad_chern(); break;
    case 5: r = table1_euler(); break;
    case 6: r = minimality(); break;
    case 7: r = exceptional(); break;
    case 8: r = minimal_suite(8, MinimalCharge::Charge422, seed); break;
    case 9: r = minimal_suite(9, MinimalCharge::Charge313, seed); break;
    case 10: r = negative_controls(); break;
    default: throw InvalidArgument("acceptance criteria are numbered 1..10, got " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace finst
