#include <doctest.h>

#include <stdexcept>

#include "finst/sweep.hpp"

using namespace finst;

TEST_CASE("sweep kinds by name") {
  for (const char* name : {"cohom-rr", "serre", "oracle", "monad-chern", "table1"}) {
    const auto k = parse_sweep_kind(name);
    REQUIRE(k.has_value());
    CHECK(std::string(sweep_kind_name(*k)) == name);
  }
  CHECK_FALSE(parse_sweep_kind("nope").has_value());
}

TEST_CASE("every property sweep passes on small grids") {
  SweepConfig cfg;
  cfg.bound = 4;
  cfg.f1_bound = 8;
  cfg.f_bound = 3;
  cfg.alpha_max = 6;
  cfg.beta_max = 4;
  cfg.defect_max = 2;
  for (auto k : {SweepKind::CohomRR, SweepKind::Serre, SweepKind::Oracle, SweepKind::MonadChern, SweepKind::Table1}) {
    cfg.kind = k;
    const auto r = sweep(cfg);
    CHECK(r.cells > 0);
    CHECK(r.failures == 0);
    CHECK_FALSE(r.first_counterexample.has_value());
  }
}

TEST_CASE("aggregation does not depend on the worker count") {
  auto fn = [](std::size_t i) -> std::optional<std::string> {
    if (i % 97 == 13) return "cell " + std::to_string(i);
    return std::nullopt;
  };
  const auto one = run_cells(SweepKind::Oracle, 5000, 1, fn);
  for (std::size_t w : {2u, 3u, 8u}) {
    const auto many = run_cells(SweepKind::Oracle, 5000, w, fn);
    CHECK(many.failures == one.failures);
    CHECK(many.first_counterexample == one.first_counterexample);
  }
  CHECK(one.first_counterexample == std::optional<std::string>("cell 13"));
}

TEST_CASE("exceptions surface from the lowest failing cell") {
  auto fn = [](std::size_t i) -> std::optional<std::string> {
    if (i == 700 || i == 4000) throw std::runtime_error("cell " + std::to_string(i));
    return std::nullopt;
  };
  try {
    run_cells(SweepKind::Serre, 5000, 4, fn);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "cell 700");
  }
}

TEST_CASE("empty grids") {
  const auto r = run_cells(SweepKind::Serre, 0, 4, [](std::size_t) -> std::optional<std::string> { return "x"; });
  CHECK(r.cells == 0);
  CHECK(r.failures == 0);
  CHECK(default_workers() >= 1);
}
