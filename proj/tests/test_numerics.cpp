#include <doctest.h>

#include <set>

#include "finst/errors.hpp"
#include "finst/monad.hpp"
#include "finst/numerics.hpp"

using namespace finst;

namespace {

std::set<InstantonCharge> brute_minimal(Int cap) {
  std::set<InstantonCharge> out;
  for (Int a = -5; a <= 40; ++a)
    for (Int b = -60; b <= 40; ++b)
      for (Int g = -5; g <= 40; ++g) {
        const InstantonCharge ch{a, b, g};
        if (is_admissible(ch) && 3 * a - b + 2 * g <= cap) out.insert(ch);
      }
  return out;
}

}  // namespace

TEST_CASE("degree of a charge") {
  CHECK(charge_degree({4, 2, 2}) == 14);
  CHECK(charge_degree({3, 1, 3}) == 14);
  CHECK(charge_degree({5, 3, 2}) == 16);
}

TEST_CASE("minimal charges") {
  const auto m = enumerate_minimal(14);
  REQUIRE(m.charges.size() == 2);
  CHECK(m.charges[0].first == InstantonCharge{4, 2, 2});
  CHECK(m.charges[1].first == InstantonCharge{3, 1, 3});
  CHECK_FALSE(m.diagnostic.has_value());
  const auto none = enumerate_minimal(13);
  CHECK(none.charges.empty());
  REQUIRE(none.diagnostic.has_value());
  CHECK(none.diagnostic->find("CapTooSmall") == 0);
}

TEST_CASE("enumeration agrees with a brute-force box search") {
  for (Int cap = 12; cap <= 24; ++cap) {
    std::set<InstantonCharge> got;
    for (const auto& [ch, deg] : enumerate_minimal(cap).charges) {
      CHECK(deg == charge_degree(ch));
      got.insert(ch);
    }
    CHECK(got == brute_minimal(cap));
  }
  bool has532 = false;
  for (const auto& [ch, deg] : enumerate_minimal(16).charges) has532 = has532 || ch == InstantonCharge{5, 3, 2};
  CHECK(has532);
}

TEST_CASE("moduli dimension") {
  CHECK(moduli_dim({4, 2, 2}) == 1);
  CHECK(moduli_dim({3, 1, 3}) == 1);
  CHECK_THROWS_AS(moduli_dim({2, 0, 4}), NotAdmissible);
  for (const auto& [ch, deg] : enumerate_minimal(30).charges) CHECK(moduli_dim(ch) == 2 * deg - 27);
}

TEST_CASE("table of the minimal charge 422") {
  const Table1 t = table1({4, 2, 2}, {0, 0});
  CHECK(t.at(-7, 6) == 0);
  CHECK(t.at(-6, 6) == 2);
  CHECK(t.at(-5, 5) == 0);
  CHECK(t.at(-3, 3) == 1);
  CHECK(t.at(-2, 3) == 1);
  CHECK(t.at(-1, 2) == 0);
  CHECK(t.at(0, 0) == 0);
  CHECK(t.render().find("q=7") == 0);
}

TEST_CASE("table errors") {
  CHECK_THROWS_AS(table1({2, 0, 4}, {0, 0}), NotAdmissible);
  CHECK_THROWS_AS(table1({4, 2, 2}, {0, 1}), InvalidDefect);
}

TEST_CASE("Euler columns match the K-class") {
  for (Int a = 3; a <= 8; ++a)
    for (Int b = -6; b <= 6; ++b)
      for (Int g = 2; g <= 8; ++g) {
        const InstantonCharge ch{a, b, g};
        if (!is_admissible(ch)) continue;
        for (Int d = 0; d <= 3; ++d)
          for (Int e = 0; e <= 3; ++e)
            if (is_valid_defect(ch, {d, e})) CHECK(table1_euler_check(ch, {d, e}).pass);
      }
}

TEST_CASE("curve families") {
  const auto line = curve_family(CurveFamily::Line);
  CHECK(line.cls == CurveClass{0, 1, 0});
  CHECK(line.h_degree == 1);
  CHECK(curve_family(CurveFamily::A).h_degree == 3);
  CHECK(curve_family(CurveFamily::B).h_degree == 2);
  CHECK(curve_family(CurveFamily::C).h_degree == 2);
  for (auto f : {CurveFamily::Line, CurveFamily::A, CurveFamily::B, CurveFamily::C}) {
    const auto d = curve_family(f);
    CHECK(d.hilbert_slope == d.h_degree);
  }
}

TEST_CASE("Fano bounds") {
  CHECK(general_fano_bound(4, 64) == 1);
  CHECK(general_fano_bound(2, 40) == 2);
  CHECK(general_fano_bound(1, 48) == 12);
  CHECK(general_fano_bound(1, 22) == 6);
  CHECK_THROWS_AS(general_fano_bound(5, 1), InvalidArgument);
}
