#include "report.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "finst/acceptance.hpp"
#include "finst/cohomology.hpp"
#include "finst/cox_oracle.hpp"
#include "finst/errors.hpp"
#include "finst/exceptional.hpp"
#include "finst/kernel_bundles.hpp"
#include "finst/monad.hpp"
#include "finst/notation.hpp"
#include "finst/numerics.hpp"
#include "finst/sweep.hpp"

namespace finst::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Checks {
  Json list = Json::array();
  bool failed = false;

  void add(const std::string& name, bool pass, bool decided = true, const std::string& detail = {}) {
    Json c{{"name", name}, {"decided", decided}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    list.push_back(std::move(c));
    if (decided && !pass) failed = true;
  }
};

Json div_json(const DivClass& d) { return Json{{"text", format_div(d)}, {"l", d.l}, {"e", d.e}, {"xi", d.xi}}; }

Json curve_json(const CurveClass& c) {
  return Json{{"text", format_curve(c)}, {"lxi", c.lxi}, {"exi", c.exi}, {"l2", c.l2}};
}

Json cohom_json(const CohomTable& t) {
  return Json{{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"h3", t.h3}, {"chi", t.euler()}};
}

Json twist_json(const TwistCohomResult& r) {
  Json j{{"exact", r.exact}};
  if (r.exact) j["value"] = r.lo;
  else j["interval"] = {r.lo, r.hi};
  j["provenance"] = r.provenance;
  return j;
}

Json summands_json(const Summands& s) {
  Json a = Json::array();
  for (const auto& [d, m] : s) a.push_back({{"bundle", "O(" + format_div(d) + ")"}, {"multiplicity", m}});
  return a;
}

Json bool_matrix(const std::array<std::array<bool, 8>, 8>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (bool b : r) row.push_back(b ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

InstantonCharge parse_triple_charge(const std::string& text) {
  const DivClass d = parse_div("(" + text + ")");
  return {d.l, d.e, d.xi};
}

// ---------------------------------------------------------------------------
// Pretty printing of a report

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void pretty(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v)) {
        const std::string s = scalar_str(v);
        if (s.find('\n') != std::string::npos) {
          os << pad << k << ":\n";
          std::istringstream lines(s);
          for (std::string line; std::getline(lines, line);) os << pad << "  " << line << '\n';
        } else {
          os << pad << k << ": " << s << '\n';
        }
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_str(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        pretty(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (scalar(v)) {
        os << pad << "- " << scalar_str(v) << '\n';
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
        os << pad << "-";
        for (const auto& x : v) os << ' ' << scalar_str(x);
        os << '\n';
      } else {
        os << pad << "-\n";
        pretty(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar_str(j) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Commands

Json cmd_cohom(const std::string& bundle, Checks& checks) {
  const DivClass d = parse_div(bundle);
  const CohomTable t = cohom_f(d);
  const Rational rr = chi_rr_general(1, d, {}, 0);
  checks.add("riemann_roch", rr == t.euler(), true, "chi = " + rr.get_str());
  checks.add("serre_duality", serre_dual_check(d));
  Json j{{"bundle", div_json(d)}};
  const Json table = cohom_json(t);
  for (const auto& [k, v] : table.items()) j[k] = v;
  return j;
}

Json cmd_sections(const std::string& bundle, bool list, Checks& checks) {
  const DivClass d = parse_div(bundle);
  const auto b = basis(d);
  const auto count = static_cast<Int>(b->monomials.size());
  checks.add("count_matches_h0", count == cohom_f(d).h0);
  Json j{{"bundle", div_json(d)}, {"count", count}};
  if (list) {
    Json m = Json::array();
    for (const auto& mono : b->monomials) m.push_back(format_monomial(mono));
    j["monomials"] = m;
  }
  return j;
}

Json cmd_charge(const InstantonCharge& ch, const std::optional<CohomDefect>& given, Checks& checks) {
  Json j{{"charge", {{"alpha", ch.alpha}, {"beta", ch.beta}, {"gamma", ch.gamma}}},
         {"c2", curve_json(ch.curve())},
         {"degree", charge_degree(ch)}};
  const bool admissible = is_admissible(ch);
  j["admissible"] = admissible;
  checks.add("admissible", admissible);
  if (!admissible) return j;
  j["moduli_dim"] = moduli_dim(ch);
  const CohomDefect df = given.value_or(minimal_defect(ch));
  j["defect"] = {{"delta", df.delta}, {"epsilon", df.epsilon}, {"source", given ? "given" : "minimal"}};
  const bool valid = is_valid_defect(ch, df);
  checks.add("defect_valid", valid);
  if (!valid) return j;
  const Table1 t = table1(ch, df);
  Json rows = Json::array();
  for (int q = 7; q >= 0; --q) {
    Json row = Json::array();
    for (int p = -7; p <= 0; ++p) row.push_back(t.at(p, q));
    rows.push_back(row);
  }
  j["table1"] = {{"layout", "rows q = 7..0, columns p = -7..0"}, {"rows", rows}};
  const EulerCheck ec = table1_euler_check(ch, df);
  Json cols = Json::array();
  for (const auto& c : ec.columns)
    cols.push_back({{"p", c.p}, {"table_sum", c.table_sum}, {"k_class_chi", c.k_class_chi}, {"ok", c.ok()}});
  j["euler_check"] = {{"pass", ec.pass}, {"columns", cols}};
  checks.add("euler_check", ec.pass);
  return j;
}

Json cmd_monad(const InstantonCharge& ch, const std::optional<CohomDefect>& given, Checks& checks) {
  if (!is_admissible(ch))
    throw NotAdmissible("charge (" + std::to_string(ch.alpha) + "," + std::to_string(ch.beta) + "," +
                        std::to_string(ch.gamma) + ") is not admissible");
  const CohomDefect df = given.value_or(minimal_defect(ch));
  if (!is_valid_defect(ch, df))
    throw InvalidDefect("defect (" + std::to_string(df.delta) + "," + std::to_string(df.epsilon) +
                        ") is not valid for this charge");
  const MonadShape shape = build_shape(ch, df);
  const KClass k = kclass(shape);
  const ChernData c = chern(k);
  Json kj = Json::array();
  for (const auto& [d, m] : k.terms()) kj.push_back({{"bundle", "O(" + format_div(d) + ")"}, {"multiplicity", m}});
  checks.add("rank", c.rank == 2);
  checks.add("c1", c.c1 == kOmega, true, format_div(c.c1));
  checks.add("c2", c.c2 == ch.curve(), true, format_curve(c.c2));
  checks.add("c3", c.c3 == 0);
  return Json{{"charge", {{"alpha", ch.alpha}, {"beta", ch.beta}, {"gamma", ch.gamma}}},
              {"defect", {{"delta", df.delta}, {"epsilon", df.epsilon}}},
              {"shape", {{"C-1", summands_json(shape.minus1)}, {"C0", summands_json(shape.zero)},
                         {"C1", summands_json(shape.plus1)}}},
              {"k_class", kj},
              {"chern", {{"rank", c.rank}, {"c1", div_json(c.c1)}, {"c2", curve_json(c.c2)}, {"c3", c.c3}}}};
}

Json collection_json(const CollectionReport& r) {
  Json j{{"pass", r.pass}, {"checks", r.checks}, {"matrix", bool_matrix(r.matrix)}};
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  return j;
}

Json cmd_exccoll(Checks& checks) {
  const auto pairs = verify_exceptional_pairs();
  const auto strong = verify_strong_dual();
  const auto dual = verify_right_dual_pattern();
  checks.add("exceptional_pairs", pairs.pass);
  checks.add("strong_dual", strong.pass);
  checks.add("right_dual_pattern", dual.pass);
  Json dj = collection_json(dual);
  Json pattern = Json::array();
  for (const auto& r : dual.pattern) pattern.push_back(r);
  dj["pattern"] = pattern;
  return Json{{"exceptional_pairs", collection_json(pairs)}, {"strong_dual", collection_json(strong)},
              {"right_dual_pattern", dj}};
}

unsigned verify_mask(const std::string& what) {
  if (what == "all") return kVerifyAll;
  if (what == "stability") return kVerifyStability;
  if (what == "acm") return kVerifyAcm;
  if (what == "earnest") return kVerifyEarnest;
  if (what == "ulrich") return kVerifyUlrich;
  if (what == "line") return kVerifyLine;
  throw InvalidArgument("--verify must be one of all|stability|acm|earnest|ulrich|line");
}

Json cmd_minimal(const std::string& which, const std::string& what, Int window, bool random, std::uint64_t seed,
                 Checks& checks) {
  MinimalCharge mc;
  if (which == "422") mc = MinimalCharge::Charge422;
  else if (which == "313") mc = MinimalCharge::Charge313;
  else throw InvalidArgument("--charge must be 422 or 313");
  if (window < 0) throw InvalidArgument("--window must be non-negative");
  const auto pres = random ? random_presentation(mc, seed) : minimal_presentation(mc);
  const MinimalSuite s = verify_minimal(pres, verify_mask(what), window, seed);

  Json entries = Json::array();
  for (std::size_t i = 0; i < pres.sources.size(); ++i) {
    Json terms = Json::array();
    for (const auto& [m, c] : pres.entries[i].polynomial())
      terms.push_back({{"monomial", format_monomial(m)}, {"coefficient", c.get_str()}});
    entries.push_back({{"source", "O(" + format_div(pres.sources[i]) + ")"}, {"terms", terms}});
  }
  Json j{{"presentation",
          {{"label", pres.label}, {"target", "O(" + format_div(pres.target) + ")"}, {"entries", entries}}},
         {"window", window},
         {"matrix_dims", {{"max_rows", s.max_rows}, {"max_cols", s.max_cols}}}};
  if (s.surjectivity) {
    Json charts = Json::array();
    for (const auto& c : s.surjectivity->charts) {
      Json units = Json::array();
      for (CoxVar v : c.units) units.push_back(format_monomial([&] {
        CoxMonomial m;
        m.exp[static_cast<std::size_t>(v)] = 1;
        return m;
      }()));
      charts.push_back({{"units", units}, {"degree", c.degree}, {"multipliers", c.multipliers}});
    }
    j["surjectivity"] = {{"charts", charts}, {"samples", s.surjectivity->samples}, {"seed", s.surjectivity->seed}};
  }
  if (s.h0_map)
    j["h0"] = {{"value", s.h0_map->kernel()}, {"rows", s.h0_map->rows}, {"cols", s.h0_map->cols},
               {"rank", s.h0_map->rank}};
  if (s.h1) j["h1"] = twist_json(*s.h1);
  if (s.stability) {
    Json list = Json::array();
    for (const auto& c : s.stability->checks)
      list.push_back({{"twist", div_json(c.twist)}, {"h0", c.h0}, {"boundary", c.boundary}});
    Json sj{{"stable", s.stability->stable}, {"candidates", list}};
    if (s.stability->destabilized) sj["destabilized_at"] = div_json(s.stability->destabilized->twist);
    j["stability"] = sj;
  }
  if (s.acm) {
    Json cells = Json::array();
    for (const auto& c : s.acm->cells) cells.push_back({{"t", c.t}, {"h1", twist_json(c.h1)}});
    j["acm"] = {{"pass", s.acm->pass}, {"all_exact_zero", s.acm->all_exact_zero}, {"inconclusive", s.acm->inconclusive},
                {"cells", cells}};
  }
  if (s.earnest)
    j["earnest"] = {{"delta", twist_json(s.earnest->delta)}, {"epsilon", twist_json(s.earnest->epsilon)},
                    {"earnest", s.earnest->earnest}, {"gate_ok", s.earnest->gate_ok}};
  if (s.ulrich) {
    Json cells = Json::array();
    for (const auto& c : s.ulrich->cells) {
      Json cj{{"i", c.i}, {"t", c.t}, {"decided", c.decided}};
      if (c.decided) cj["value"] = c.value;
      cj["route"] = c.route;
      cells.push_back(cj);
    }
    j["weakly_ulrich"] = {{"bundle", "E(2h)"}, {"pass", s.ulrich->pass}, {"all_decided", s.ulrich->all_decided},
                          {"cells", cells}};
  }
  if (s.line)
    j["line"] = {{"splitting", {s.line->a, s.line->b}},
                 {"base_point", {s.line->base_point[0].get_str(), s.line->base_point[1].get_str()}},
                 {"h0_t_minus1_0_1", s.line->h0_values},
                 {"degree", s.line->degree},
                 {"attempts", s.line->attempts}};
  for (const auto& v : s.verdicts) checks.add(v.name, v.pass, v.decided, v.detail);
  return j;
}

Json cmd_sweep(const SweepConfig& cfg, Checks& checks) {
  const SweepResult r = sweep(cfg);
  Json j{{"kind", sweep_kind_name(r.kind)}, {"cells", r.cells}, {"failures", r.failures}};
  switch (cfg.kind) {
    case SweepKind::CohomRR:
    case SweepKind::Serre: j["bound"] = cfg.bound; break;
    case SweepKind::Oracle: j["f1_bound"] = cfg.f1_bound; j["f_bound"] = cfg.f_bound; break;
    case SweepKind::MonadChern:
    case SweepKind::Table1:
      j["alpha_max"] = cfg.alpha_max;
      j["beta_max"] = cfg.beta_max;
      j["defect_max"] = cfg.defect_max;
      break;
  }
  j["first_counterexample"] = r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr);
  checks.add(sweep_kind_name(r.kind), r.failures == 0, true,
             std::to_string(r.failures) + " failures in " + std::to_string(r.cells) + " cells");
  return j;
}

Json cmd_accept(int only, std::uint64_t seed, bool timing, Checks& checks) {
  Json list = Json::array();
  for (int id = 1; id <= 10; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = run_criterion(id, seed);
    Json c{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    if (timing) c["seconds"] = r.seconds;
    list.push_back(c);
    checks.add("criterion " + std::to_string(r.id), r.pass);
  }
  return Json{{"seed", seed}, {"criteria", list}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus for rank-2 instanton bundles on P1 x F1", "finst"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--pretty", [&](std::int64_t) { format = "pretty"; }, "Same as --format pretty");
  app.add_option("--seed", seed, "Seed for randomized passes");
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");

  std::string bundle;
  auto* cohom = app.add_subcommand("cohom", "Cohomology of a line bundle O_F(D)");
  cohom->add_option("--bundle", bundle, "Class such as \"3l - e + 2xi\"")->required();

  bool list = false;
  auto* sections = app.add_subcommand("sections", "Cox monomial basis of H^0(O_F(D))");
  sections->add_option("--bundle", bundle, "Class such as \"l + xi\"")->required();
  sections->add_flag("--list", list, "Print the monomials");

  Int alpha = 0, beta = 0, gamma = 0;
  std::optional<Int> delta, epsilon;
  auto* charge = app.add_subcommand("charge", "Numerics of an instanton charge");
  charge->add_option("--alpha", alpha)->required();
  charge->add_option("--beta", beta)->required();
  charge->add_option("--gamma", gamma)->required();
  charge->add_option("--delta", delta);
  charge->add_option("--epsilon", epsilon);

  std::string charge_text, defect_text;
  auto* monad = app.add_subcommand("monad", "Monad terms, K-class and Chern classes");
  monad->add_option("--charge", charge_text, "alpha,beta,gamma")->required();
  monad->add_option("--defect", defect_text, "delta,epsilon (default: minimal)");

  bool verify = false;
  auto* exccoll = app.add_subcommand("exccoll", "Ext tables of the exceptional collection and its dual");
  exccoll->add_flag("--verify", verify, "Run the checks (default)");

  std::string which, what = "all";
  Int window = 3;
  bool random = false;
  auto* minimal = app.add_subcommand("minimal", "Verify a minimal instanton presentation");
  minimal->add_option("--charge", which, "422 or 313")->required();
  minimal->add_option("--verify", what, "all|stability|acm|earnest|ulrich|line");
  minimal->add_option("--window", window, "Twist window T");
  minimal->add_flag("--random-sections", random, "Random rational entries drawn from --seed");

  std::string kind;
  SweepConfig cfg;
  auto* sweep_cmd = app.add_subcommand("sweep", "Grid property sweep");
  sweep_cmd->add_option("kind", kind, "cohom-rr|serre|oracle|monad-chern|table1")->required();
  sweep_cmd->add_option("--bound", cfg.bound, "Box [-B,B]^3 for cohom-rr and serre");
  sweep_cmd->add_option("--f1-bound", cfg.f1_bound, "F1 box for oracle");
  sweep_cmd->add_option("--f-bound", cfg.f_bound, "F box for oracle");
  sweep_cmd->add_option("--alpha-max", cfg.alpha_max, "alpha, gamma <= A for monad-chern and table1");
  sweep_cmd->add_option("--beta-max", cfg.beta_max, "|beta| <= B");
  sweep_cmd->add_option("--defect-max", cfg.defect_max, "delta, epsilon <= D");
  sweep_cmd->add_option("--workers", cfg.workers, "Worker threads (default: FINST_WORKERS or hardware)");

  int criterion = 0;
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  accept->add_option("--criterion", criterion, "Run a single criterion 1..10")->check(CLI::Range(1, 10));

  std::vector<std::string> argv_store{"finst"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;

  const auto t0 = std::chrono::steady_clock::now();
  Checks checks;
  Json result;
  try {
    if (*cohom) {
      result = cmd_cohom(bundle, checks);
    } else if (*sections) {
      result = cmd_sections(bundle, list, checks);
    } else if (*charge) {
      if (delta.has_value() != epsilon.has_value())
        throw InvalidArgument("--delta and --epsilon must be given together");
      std::optional<CohomDefect> df;
      if (delta) df = CohomDefect{*delta, *epsilon};
      result = cmd_charge({alpha, beta, gamma}, df, checks);
    } else if (*monad) {
      std::optional<CohomDefect> df;
      if (!defect_text.empty()) {
        const DivClass d = parse_div("(" + defect_text + ",0)");
        df = CohomDefect{d.l, d.e};
      }
      result = cmd_monad(parse_triple_charge(charge_text), df, checks);
    } else if (*exccoll) {
      result = cmd_exccoll(checks);
    } else if (*minimal) {
      result = cmd_minimal(which, what, window, random, seed, checks);
    } else if (*sweep_cmd) {
      const auto k = parse_sweep_kind(kind);
      if (!k) throw InvalidArgument("unknown sweep kind '" + kind + "'; use cohom-rr|serre|oracle|monad-chern|table1");
      cfg.kind = *k;
      result = cmd_sweep(cfg, checks);
    } else if (*accept) {
      result = cmd_accept(criterion, seed, timing, checks);
    }
  } catch (const InternalDefect& e) {
    err << "finst: internal defect: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidArgument& e) {
    err << "finst: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "finst: " << e.what() << " (input too large)\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "finst: internal defect: " << e.what() << '\n';
    return kInternal;
  }

  Json report{{"schema_version", kSchemaVersion},
              {"command", echo},
              {"conventions", kConventionBanner},
              {"result", result},
              {"checks", checks.list},
              {"status", checks.failed ? "fail" : "pass"}};
  if (timing)
    report["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (format == "json") out << report.dump(2) << '\n';
  else pretty(out, report, 0);
  return checks.failed ? kCheckFailed : kPass;
}

}  // namespace finst::cli
