#include "finst/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "finst/cohomology.hpp"
#include "finst/cox_oracle.hpp"
#include "finst/errors.hpp"
#include "finst/monad.hpp"
#include "finst/notation.hpp"
#include "finst/numerics.hpp"

namespace finst {

namespace {

const std::map<std::string, SweepKind>& kinds() {
  static const std::map<std::string, SweepKind> k{{"cohom-rr", SweepKind::CohomRR},
                                                  {"serre", SweepKind::Serre},
                                                  {"oracle", SweepKind::Oracle},
                                                  {"monad-chern", SweepKind::MonadChern},
                                                  {"table1", SweepKind::Table1}};
  return k;
}

std::vector<DivClass> box(Int bound) {
  std::vector<DivClass> out;
  for (Int l = -bound; l <= bound; ++l)
    for (Int e = -bound; e <= bound; ++e)
      for (Int xi = -bound; xi <= bound; ++xi) out.push_back({l, e, xi});
  return out;
}

std::vector<std::pair<InstantonCharge, CohomDefect>> charge_grid(const SweepConfig& cfg) {
  std::vector<std::pair<InstantonCharge, CohomDefect>> out;
  for (Int a = 3; a <= cfg.alpha_max; ++a)
    for (Int b = -cfg.beta_max; b <= cfg.beta_max; ++b)
      for (Int g = 2; g <= cfg.alpha_max; ++g) {
        const InstantonCharge ch{a, b, g};
        if (!is_admissible(ch)) continue;
        for (Int d = 0; d <= cfg.defect_max; ++d)
          for (Int e = 0; e <= cfg.defect_max; ++e)
            if (is_valid_defect(ch, {d, e})) out.emplace_back(ch, CohomDefect{d, e});
      }
  return out;
}

std::string charge_str(const InstantonCharge& ch, const CohomDefect& df) {
  return "charge (" + std::to_string(ch.alpha) + "," + std::to_string(ch.beta) + "," + std::to_string(ch.gamma) +
         ") defect (" + std::to_string(df.delta) + "," + std::to_string(df.epsilon) + ")";
}

}  // namespace

std::optional<SweepKind> parse_sweep_kind(const std::string& name) {
  auto it = kinds().find(name);
  if (it == kinds().end()) return std::nullopt;
  return it->second;
}

const char* sweep_kind_name(SweepKind kind) {
  for (const auto& [name, k] : kinds())
    if (k == kind) return name.c_str();
  return "?";
}

std::size_t default_workers() {
  if (const char* env = std::getenv("FINST_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_cells(SweepKind kind, std::size_t n, std::size_t workers,
                      const std::function<std::optional<std::string>(std::size_t)>& fn) {
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, std::max<std::size_t>(n, 1));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failures{0};
  std::mutex mu;
  std::size_t first_index = n;
  std::string first_text;
  std::size_t error_index = n;
  std::exception_ptr error;

  auto work = [&] {
    constexpr std::size_t kChunk = 64;
    for (;;) {
      const std::size_t lo = next.fetch_add(kChunk);
      if (lo >= n) return;
      const std::size_t hi = std::min(n, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          if (auto bad = fn(i)) {
            failures.fetch_add(1);
            std::lock_guard lock(mu);
            if (i < first_index) {
              first_index = i;
              first_text = std::move(*bad);
            }
          }
        } catch (...) {
          std::lock_guard lock(mu);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  SweepResult out{kind, n, failures.load(), std::nullopt};
  if (first_index < n) out.first_counterexample = first_text;
  return out;
}

SweepResult sweep(const SweepConfig& cfg) {
  switch (cfg.kind) {
    case SweepKind::CohomRR: {
      const auto cells = box(cfg.bound);
      return run_cells(cfg.kind, cells.size(), cfg.workers, [&](std::size_t i) -> std::optional<std::string> {
        const DivClass& d = cells[i];
        const Int sum = cohom_f(d).euler();
        const Rational rr = chi_rr_general(1, d, {}, 0);
        if (rr == sum) return std::nullopt;
        return format_div(d) + ": alternating sum " + std::to_string(sum) + " vs Riemann-Roch " + rr.get_str();
      });
    }
    case SweepKind::Serre: {
      const auto cells = box(cfg.bound);
      return run_cells(cfg.kind, cells.size(), cfg.workers, [&](std::size_t i) -> std::optional<std::string> {
        if (serre_dual_check(cells[i])) return std::nullopt;
        return format_div(cells[i]) + ": h^i(d) != h^(3-i)(omega - d)";
      });
    }
    case SweepKind::Oracle: {
      std::vector<std::pair<Int, Int>> f1;
      for (Int u = -cfg.f1_bound; u <= cfg.f1_bound; ++u)
        for (Int v = -cfg.f1_bound; v <= cfg.f1_bound; ++v) f1.emplace_back(u, v);
      const auto f = box(cfg.f_bound);
      return run_cells(cfg.kind, f1.size() + f.size(), cfg.workers,
                       [&](std::size_t i) -> std::optional<std::string> {
                         if (i < f1.size()) {
                           const auto [u, v] = f1[i];
                           const Int closed = h0_f1(u, v), count = count_f1(u, v);
                           if (closed == count) return std::nullopt;
                           return "F1 (" + std::to_string(u) + "," + std::to_string(v) + "): h0 " +
                                  std::to_string(closed) + " vs " + std::to_string(count) + " monomials";
                         }
                         const DivClass& d = f[i - f1.size()];
                         const Int closed = cohom_f(d).h0;
                         const auto count = static_cast<Int>(basis(d)->monomials.size());
                         if (closed == count) return std::nullopt;
                         return format_div(d) + ": h0 " + std::to_string(closed) + " vs " + std::to_string(count) +
                                " monomials";
                       });
    }
    case SweepKind::MonadChern: {
      const auto cells = charge_grid(cfg);
      return run_cells(cfg.kind, cells.size(), cfg.workers, [&](std::size_t i) -> std::optional<std::string> {
        const auto& [ch, df] = cells[i];
        const ChernData got = chern(kclass(build_shape(ch, df)));
        const ChernData want{2, kOmega, ch.curve(), 0};
        if (got == want) return std::nullopt;
        return charge_str(ch, df) + ": c1 " + format_div(got.c1) + ", c2 " + format_curve(got.c2) + ", c3 " +
               std::to_string(got.c3);
      });
    }
    case SweepKind::Table1: {
      const auto cells = charge_grid(cfg);
      return run_cells(cfg.kind, cells.size(), cfg.workers, [&](std::size_t i) -> std::optional<std::string> {
        const auto& [ch, df] = cells[i];
        const EulerCheck chk = table1_euler_check(ch, df);
        if (chk.pass) return std::nullopt;
        for (const auto& col : chk.columns)
          if (!col.ok())
            return charge_str(ch, df) + ": column p=" + std::to_string(col.p) + " sums to " +
                   std::to_string(col.table_sum) + ", K-class gives " + std::to_string(col.k_class_chi);
        return charge_str(ch, df);
      });
    }
  }
  throw InvalidArgument("unknown sweep kind");
}

}  // namespace finst
