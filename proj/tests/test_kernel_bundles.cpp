#include <doctest.h>

#include <algorithm>

#include "finst/acceptance.hpp"
#include "finst/cohomology.hpp"
#include "finst/kernel_bundles.hpp"

using namespace finst;

namespace {

SectionVector m(const char* text) { return SectionVector::from_monomial(parse_monomial(text)); }

bool contains(const std::vector<DivClass>& v, const DivClass& d) { return std::find(v.begin(), v.end(), d) != v.end(); }

const KernelBundlePresentation& p422() {
  static const auto p = minimal_presentation(MinimalCharge::Charge422);
  return p;
}

const KernelBundlePresentation& p313() {
  static const auto p = minimal_presentation(MinimalCharge::Charge313);
  return p;
}

}  // namespace

TEST_CASE("presentations have the instanton K-class") {
  for (const auto* p : {&p422(), &p313()}) {
    const ChernData c = chern(p->kclass());
    CHECK(c.rank == 2);
    CHECK(c.c1 == kOmega);
    CHECK(c.c2 == p->charge.curve());
    CHECK(c.c3 == 0);
  }
}

TEST_CASE("malformed presentations") {
  CHECK_THROWS_AS(make_presentation("bad", {{-1, 0, -1}}, {-1, 0, 0}, {m("x1")}, {}), InvalidArgument);
  CHECK_THROWS_AS(make_presentation("short", {{-1, 0, -1}, {-1, 0, -1}}, {-1, 0, 0}, {m("s0")}, {}), InvalidArgument);
  CHECK_THROWS_AS(make_presentation("rank1", {{-1, 0, -1}, {-1, 0, -1}}, {-1, 0, 0}, {m("s0"), m("s1")}, {}),
                  RankMismatch);
}

TEST_CASE("surjectivity certificates") {
  for (const auto* p : {&p422(), &p313()}) {
    const auto cert = verify_surjective(*p, 11, 2000);
    CHECK(cert.charts.size() == 8);
    CHECK(cert.samples == 2000);
  }
}

TEST_CASE("a shared zero is reported with a witness") {
  const auto bad = make_presentation("shared", {{-1, 0, -1}, {-1, 0, -1}, {-2, 1, 0}}, {-1, 0, 0},
                                     {m("s0"), m("s0"), m("x1")}, {4, 2, 2});
  try {
    verify_surjective(bad);
    FAIL("expected NotSurjective");
  } catch (const NotSurjective& e) {
    REQUIRE(e.witness().has_value());
    const CoxPoint& w = *e.witness();
    CHECK(irrelevant_check(w));
    for (const auto& entry : bad.entries) CHECK(evaluate(entry.polynomial(), w) == 0);
  }
}

TEST_CASE("minimal instantons have no sections and no h1") {
  for (const auto* p : {&p422(), &p313()}) {
    const TwistMap tm = twist_map(*p, {});
    CHECK(tm.kernel() == 0);
    const auto h1 = h1_twist(*p, {});
    CHECK(h1.is_exact_zero());
  }
}

TEST_CASE("twist maps: kernel plus rank accounts for h0 of V") {
  for (Int l = -2; l <= 2; ++l)
    for (Int e = -2; e <= 2; ++e)
      for (Int xi = -1; xi <= 2; ++xi) {
        const DivClass d{l, e, xi};
        const TwistMap tm = twist_map(p422(), d);
        Int h0v = 0;
        for (const auto& s : p422().sources) h0v += cohom_f(s + d).h0;
        CHECK(static_cast<Int>(tm.rows) == h0v);
        CHECK(static_cast<Int>(tm.cols) == cohom_f(p422().target + d).h0);
        if (tm.rank_mod_p) CHECK(*tm.rank_mod_p <= tm.rank);
      }
}

TEST_CASE("h0 agrees with h3 of the opposite twist through the dual maps") {
  std::size_t compared = 0;
  for (const auto* p : {&p422(), &p313()})
    for (Int l = -3; l <= 3; ++l)
      for (Int e = -3; e <= 3; ++e)
        for (Int xi = -2; xi <= 2; ++xi) {
          const DivClass d{l, e, xi};
          if (auto h3 = h3_twist_dual(*p, -d)) {
            CHECK(h0_twist(*p, d) == *h3);
            ++compared;
          }
        }
  CHECK(compared > 100);
}

TEST_CASE("Euler characteristics of random twists") {
  for (const auto* p : {&p422(), &p313()}) {
    const auto r = check_chi_consistency(*p, 200, 5);
    CHECK(r.trials == 200);
    CHECK(r.determined > 50);
    CHECK(r.mismatches == 0);
  }
}

TEST_CASE("destabilizer candidates") {
  const auto c = enumerate_destabilizer_candidates(p422());
  CHECK(contains(c, {2, 0, 0}));
  CHECK(contains(c, {1, 0, 1}));
  CHECK(contains(c, {1, 1, 1}));
  // Every twist in a wide box with h0(V(d)) > 0 in the half-space is listed.
  for (const auto* p : {&p422(), &p313()}) {
    const auto list = enumerate_destabilizer_candidates(*p);
    for (Int a = -10; a <= 10; ++a)
      for (Int b = -10; b <= 30; ++b)
        for (Int cc = -10; cc <= 10; ++cc) {
          if (!hoppe_region(a, b, cc)) continue;
          const DivClass d{-a, b, -cc};
          bool effective = false;
          for (const auto& s : p->sources) effective = effective || cohom_f(s + d).h0 > 0;
          CHECK(effective == contains(list, d));
        }
  }
}

TEST_CASE("stability") {
  CHECK(verify_stability(p422()).stable);
  CHECK(verify_stability(p313()).stable);
  const auto rep = verify_stability(degenerate_422());
  CHECK_FALSE(rep.stable);
  REQUIRE(rep.destabilized.has_value());
  CHECK(rep.destabilized->twist == DivClass{2, -1, 0});
  CHECK(rep.destabilized->h0 == 1);
}

TEST_CASE("aCM window") {
  for (const auto* p : {&p422(), &p313()}) {
    const auto r = verify_acm(*p, 3);
    CHECK(r.pass);
    CHECK(r.all_exact_zero);
    CHECK(r.cells.size() == 7);
  }
}

TEST_CASE("earnestness and the defect gate") {
  for (const auto* p : {&p422(), &p313()}) {
    const auto r = verify_earnest(*p);
    CHECK(r.earnest);
    CHECK(r.gate_ok);
    CHECK(r.epsilon.is_exact_zero());
  }
  CHECK(defect_gate({0, 0}));
  CHECK(defect_gate({1, 2}));
  CHECK_FALSE(defect_gate({0, 1}));
}

TEST_CASE("weakly Ulrich window of E(2h)") {
  for (const auto* p : {&p422(), &p313()}) {
    const auto r = weakly_ulrich_window(*p, 3);
    CHECK(r.pass);
    CHECK(r.all_decided);
  }
}

TEST_CASE("splitting on a line") {
  for (const auto* p : {&p422(), &p313()}) {
    const auto s = restrict_to_line(*p);
    CHECK(s.a == 0);
    CHECK(s.b == -1);
    CHECK(s.degree == -1);
    CHECK(s.attempts == 1);
    CHECK(s.h0_values == std::array<Int, 3>{0, 1, 3});
  }
}

TEST_CASE("special lines") {
  const auto pres = make_presentation("shared", {{-1, 0, -1}, {-1, 0, -1}, {-2, 1, 0}}, {-1, 0, 0},
                                      {m("s0"), m("s0"), m("x1")}, {4, 2, 2});
  CHECK_THROWS_AS(h0_on_line(pres, {Rational(0), Rational(1)}, 0), SpecialLine);
  const auto s = restrict_to_line(pres, {Rational(0), Rational(1)});
  CHECK(s.attempts == 2);
  const auto hopeless = make_presentation("vanishing", {{-1, 0, -1}, {-1, 0, -1}, {-1, 1, -1}}, {0, 0, -1},
                                          {m("x1*y"), m("x2*y"), m("x2")}, {3, 1, 3});
  CHECK_THROWS_AS(restrict_to_line(hopeless), SpecialLine);
}

TEST_CASE("random sections") {
  for (auto which : {MinimalCharge::Charge422, MinimalCharge::Charge313})
    for (std::uint64_t seed : {1u, 2u}) {
      const auto p = random_presentation(which, seed);
      CHECK(p.label.find("random") != std::string::npos);
      CHECK_NOTHROW(verify_surjective(p, seed, 500));
      CHECK(h0_twist(p, {}) == 0);
      CHECK(verify_stability(p).stable);
      CHECK(verify_acm(p, 2).all_exact_zero);
      const auto line = restrict_to_line(p);
      CHECK(line.a == 0);
      CHECK(line.b == -1);
    }
  const auto a = random_presentation(MinimalCharge::Charge422, 9);
  const auto b = random_presentation(MinimalCharge::Charge422, 9);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a.entries[i].coeffs == b.entries[i].coeffs);
}

TEST_CASE("suite verdicts") {
  const auto s = verify_minimal(p422(), kVerifyAll, 3, kDefaultSeed);
  CHECK(s.pass());
  CHECK(s.all_decided());
  CHECK(s.verdicts.size() == 8);
  const auto only = verify_minimal(p313(), kVerifyStability, 3, kDefaultSeed);
  CHECK(only.verdicts.size() == 1);
  CHECK_FALSE(only.acm.has_value());
}
