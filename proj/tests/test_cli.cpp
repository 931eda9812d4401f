#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "report.hpp"

using finst::cli::run;
using nlohmann::json;

namespace {

struct Out {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

}  // namespace

TEST_CASE("cohom") {
  const auto r = call({"cohom", "--bundle", "-l - e"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["schema_version"] == 1);
  CHECK(j["result"]["h1"] == 1);
  CHECK(j["result"]["chi"] == -1);
  CHECK(j["conventions"].get<std::string>().find("e") != std::string::npos);
  CHECK(j["status"] == "pass");
}

TEST_CASE("sections") {
  const auto r = call({"sections", "--bundle", "xi", "--list"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["count"] == 2);
  CHECK(j["result"]["monomials"] == json::array({"s0", "s1"}));
}

TEST_CASE("charge") {
  const auto r = call({"charge", "--alpha", "4", "--beta", "2", "--gamma", "2"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["degree"] == 14);
  CHECK(j["result"]["moduli_dim"] == 1);
  CHECK(j["result"]["euler_check"]["pass"] == true);
  CHECK(j["result"]["table1"]["rows"].size() == 8);

  const auto bad = call({"charge", "--alpha", "2", "--beta", "0", "--gamma", "4"});
  CHECK(bad.code == 1);
  CHECK(bad.report()["result"]["admissible"] == false);

  CHECK(call({"charge", "--alpha", "4", "--beta", "2", "--gamma", "2", "--delta", "1"}).code == 2);
  CHECK(call({"charge", "--alpha", "4", "--beta", "2", "--gamma", "2", "--delta", "0", "--epsilon", "1"}).code == 1);
}

TEST_CASE("monad") {
  const auto r = call({"monad", "--charge", "4,2,2", "--defect", "0,0"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["chern"]["rank"] == 2);
  CHECK(j["result"]["chern"]["c1"]["text"] == "-3l + e - 2xi");
  CHECK(call({"monad", "--charge", "2,0,4"}).code == 2);
  CHECK(call({"monad", "--charge", "4,2"}).code == 2);
}

TEST_CASE("exccoll") {
  const auto r = call({"exccoll", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["right_dual_pattern"]["pattern"][0][7] == 1);
}

TEST_CASE("minimal") {
  const auto r = call({"minimal", "--charge", "313", "--verify", "stability"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["stability"]["stable"] == true);
  CHECK(j["result"]["matrix_dims"]["max_rows"].get<int>() > 0);
  CHECK(call({"minimal", "--charge", "999"}).code == 2);
  CHECK(call({"minimal", "--charge", "422", "--verify", "everything"}).code == 2);
  const auto line = call({"minimal", "--charge", "422", "--verify", "line"});
  CHECK(line.report()["result"]["line"]["splitting"] == json::array({0, -1}));
}

TEST_CASE("sweep and accept") {
  const auto s = call({"sweep", "serre", "--bound", "3"});
  CHECK(s.code == 0);
  CHECK(s.report()["result"]["failures"] == 0);
  CHECK(s.report()["result"]["cells"] == 343);
  CHECK(call({"sweep", "bogus"}).code == 2);
  const auto a = call({"accept", "--criterion", "3"});
  CHECK(a.code == 0);
  CHECK(a.report()["result"]["criteria"].size() == 1);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"cohom"}).code == 2);
  CHECK(call({"cohom", "--bundle", "3q"}).code == 2);
  CHECK(call({"cohom", "--bundle", "l", "--format", "xml"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"minimal", "--charge", "422", "--random-sections", "--seed", "3", "--verify", "acm"};
  CHECK(call(args).out == call(args).out);
  const auto a = call({"minimal", "--charge", "422", "--random-sections", "--seed", "4", "--verify", "acm"});
  CHECK(a.out != call(args).out);
}

TEST_CASE("pretty output") {
  const auto r = call({"cohom", "--bundle", "h", "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("h0: 27") != std::string::npos);
  CHECK(r.out.find("schema_version: 1") == 0);
  const auto t = call({"charge", "--alpha", "4", "--beta", "2", "--gamma", "2", "--pretty"});
  CHECK(t.out.find("euler_check:") != std::string::npos);
}
