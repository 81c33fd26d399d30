#include <doctest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tgkz/report.hpp"

using namespace tgkz;
using nlohmann::json;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TGKZ_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    CHECK(exit_code_for(e) == kExitParse);
    return e.code();
  }
  FAIL("spec parsed unexpectedly");
  return ErrorCode::InternalCheckFailed;
}

json run_json(const std::string& file, Command c, unsigned threads = 1) {
  return json::parse(run(parse_spec(read_data(file)), c, RunOptions{threads, std::nullopt}).json);
}

const char* kBattery[] = {"prod_struct.json", "torsion_z4.json", "plane_three.json", "line_one_two.json",
                          "z3_plane.json",    "z2z2_square.json", "not_pointed.json"};

}  // namespace

TEST_CASE("spec parsing") {
  auto spec = parse_spec(read_data("prod_struct.json"));
  CHECK(spec.group.torsion_index() == 2);
  CHECK(spec.group.free_rank() == 1);
  CHECK(spec.columns.size() == 1);
  CHECK(spec.beta == std::vector<Cyclotomic>{Cyclotomic(Rational(1, 2))});
  CHECK(spec.bounds.binomial_degree == 16);

  auto z3 = parse_spec(read_data("z3_plane.json"));
  CHECK(z3.module_kind == ModuleKind::KInterior);
  CHECK(z3.beta[1] == Cyclotomic::root_of_unity(3, 1));

  CHECK(parse_error_code(R"({"columns": [{"free": [1]}], "beta": [0, 1]})") == ErrorCode::DimensionMismatch);
  CHECK(parse_error_code(R"({"torsion_orders": [1], "columns": [{"torsion": [0], "free": [1]}]})") ==
        ErrorCode::Malformed);
  CHECK(parse_error_code(R"({"columns": [{"free": [1]}], "beta": [0.5]})") == ErrorCode::UnsupportedCharacterValue);
  CHECK(parse_error_code(R"({"columns": [{"free": [1]}, {"free": [1, 2]}]})") == ErrorCode::DimensionMismatch);
  CHECK(parse_error_code(R"({"columns": [{"free": [1]}], "colour": 3})") == ErrorCode::Malformed);
  CHECK(parse_error_code(R"({"columns": [{"free": [1]}], "module": "M"})") == ErrorCode::Malformed);
  CHECK(parse_error_code(R"({"torsion_orders": [2], "columns": [{"free": [1]}]})") == ErrorCode::DimensionMismatch);
  try {
    parse_spec("{\n  \"columns\": [\n    {\"free\": [1]\n  ]\n}");
    FAIL("accepted broken JSON");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  try {
    parse_spec(R"({"columns": [{"free": [1]}, {"free": ["x"]}]})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("columns[1].free[0]") != std::string::npos);
  }
}

TEST_CASE("commands") {
  auto rank = run_json("prod_struct.json", Command::Rank);
  CHECK(rank["rank"]["rank"] == 2);
  CHECK(!rank.contains("system"));
  auto primes = run_json("torsion_z4.json", Command::Primes);
  CHECK(primes["primes"]["count"] == 4);
  CHECK(primes["primes"]["intersection_equals_I_calA"] == true);
  auto ideals = run_json("torsion_z4.json", Command::Ideals);
  CHECK(ideals["ideals"]["I_calA"] == json::array({"d1^8 - d2^4"}));
  CHECK(ideals["notes"].size() == 1);
  CHECK(run_json("prod_struct.json", Command::Ideals)["notes"].empty());
  auto module = run_json("prod_struct.json", Command::Module);
  CHECK(module["module"]["T_prim"].size() == 2);
  auto sys = run_json("prod_struct.json", Command::System);
  CHECK(sys["system"]["relation_counts"]["binomial"] == 0);
  CHECK(sys["system"]["binomial_degree_bound"] == 16);
  CHECK(sys["bounds"]["binomial_degree"] == 16);
  auto dual = run_json("line_one_two.json", Command::Dual);
  CHECK(dual["dual"]["dual_parameter"] == json::array({"-3"}));
}

TEST_CASE("reports are self-describing") {
  auto text = read_data("torsion_z4.json");
  auto r = json::parse(run(parse_spec(text), Command::Report).json);
  CHECK(r["schema"] == 1);
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  CHECK(r["spec_hash"] == std::string("fnv1a64:") + hash);
  CHECK(r["bounds"].contains("binomial_degree"));
  CHECK(r["bounds"].contains("truncation"));
  CHECK(r["bounds"].contains("pair_budget"));
  CHECK(r["conventions"].contains("volume"));
  for (const char* block : {"hypotheses", "ideals", "primes", "module", "system", "rank", "dual", "analysis"})
    CHECK(r.contains(block));
  CHECK(r["analysis"]["character_split"]["certified"] == true);
}

TEST_CASE("refusal when hypotheses fail") {
  auto spec = parse_spec(read_data("not_pointed.json"));
  auto check = run(spec, Command::Check);
  CHECK(check.exit_code == kExitHypothesis);
  CHECK(json::parse(check.json)["hypotheses"]["pointed"] == false);
  for (Command c : {Command::System, Command::Rank, Command::Dual, Command::Report}) {
    auto res = run(spec, c);
    auto j = json::parse(res.json);
    CHECK(res.exit_code == kExitHypothesis);
    CHECK(!j.contains("system"));
    CHECK(!j.contains("rank"));
    CHECK(!j.contains("dual"));
    CHECK(!j.contains("analysis"));
    CHECK(!j["refused"].empty());
  }
  CHECK(run(spec, Command::Ideals).exit_code == kExitOk);
}

TEST_CASE("deterministic reports across runs and threads") {
  for (const char* file : kBattery) {
    auto spec = parse_spec(read_data(file));
    auto first = run(spec, Command::Report, {1, std::nullopt}).json;
    CHECK(run(spec, Command::Report, {1, std::nullopt}).json == first);
    CHECK(run(spec, Command::Report, {4, std::nullopt}).json == first);
  }
}

TEST_CASE("budget overflow maps to its exit code") {
  Error e(ErrorCode::BudgetExceeded, "exact_algebra", "x");
  CHECK(exit_code_for(e) == kExitBudget);
  CHECK(exit_code_for(Error(ErrorCode::HypothesisFailure, "rank_duality", "x")) == kExitHypothesis);
}
