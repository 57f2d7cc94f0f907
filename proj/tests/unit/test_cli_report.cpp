#include <doctest.h>

#include <sstream>

#include "submul/cli_report.hpp"
#include "submul/error.hpp"

using namespace submul;
using nlohmann::json;

namespace {

GroupRecipe recipe(const std::string& family, json params = json::object()) { return build_recipe({family, params}); }

RunConfig small_config() {
  RunConfig c;
  c.workers = 2;
  return c;
}

}  // namespace

TEST_CASE("verdict encoding") {
  CHECK(verdict_to_json(Verdict::holds) == json(true));
  CHECK(verdict_to_json(Verdict::fails) == json(false));
  CHECK(verdict_to_json(Verdict::holds_capped) == json("holds-capped"));
  for (auto v : {Verdict::holds, Verdict::fails, Verdict::holds_capped, Verdict::vacuous, Verdict::inconclusive})
    CHECK(verdict_from_json(verdict_to_json(v)) == v);
}

TEST_CASE("exit codes") {
  PropertyReport r;
  r.verdict = Verdict::holds;
  CHECK(exit_code(r) == 0);
  r.verdict = Verdict::fails;
  CHECK(exit_code(r) == 1);
  for (auto v : {Verdict::holds_capped, Verdict::vacuous, Verdict::inconclusive}) {
    r.verdict = v;
    CHECK(exit_code(r) == 2);
  }
}

TEST_CASE("reports round-trip through both formats") {
  RunConfig config = small_config();
  config.seed = 99;
  for (const auto& [prop, fam, params] : std::vector<std::tuple<std::string, std::string, json>>{
           {"s", "wreath_cp_cp", {{"p", 3}}},
           {"s", "heisenberg", {{"p", 3}}},
           {"regular", "wreath_cp_cp", {{"p", 3}}},
           {"p2", "heisenberg", {{"p", 3}}},
           {"v-regular", "heisenberg", {{"p", 3}}},
           {"order-submultiplicativity", "quaternion8", json::object()},
           {"s-hat", "basic", {{"p", 3}, {"c", 2}, {"e", 1}}}}) {
    auto r = cmd_check(prop, recipe(fam, params), config);
    REQUIRE(r.seed == std::optional<std::uint64_t>{99});
    json j = r;
    REQUIRE(json::parse(j.dump()).get<PropertyReport>() == r);
    REQUIRE(report_from_text(report_to_text(r)) == r);
  }
}

TEST_CASE("text output mirrors the structured fields") {
  auto r = cmd_check("s", recipe("quaternion8"), small_config());
  std::string text = report_to_text(r);
  json j = r;
  std::istringstream lines(text);
  std::string line;
  std::vector<std::string> keys;
  while (std::getline(lines, line)) keys.push_back(line.substr(0, line.find(':')));
  std::vector<std::string> want;
  for (const auto& [k, v] : j.items()) want.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::sort(want.begin(), want.end());
  CHECK(keys == want);
}

TEST_CASE("checks by name") {
  auto config = small_config();
  CHECK(cmd_check("s", recipe("heisenberg", {{"p", 3}}), config).verdict == Verdict::holds);
  CHECK(cmd_check("regular", recipe("wreath_cp_cp", {{"p", 3}}), config).verdict == Verdict::fails);
  CHECK(cmd_check("engel", recipe("basic", {{"p", 3}, {"c", 2}, {"e", 1}}), config).verdict == Verdict::holds);
  CHECK(cmd_check("chi-containment", recipe("heisenberg", {{"p", 5}}), config, {0, 2}).verdict == Verdict::holds);
  CHECK(cmd_check("irreducible", recipe("heisenberg", {{"p", 3}}), config).verdict == Verdict::holds);
  CHECK_THROWS_AS(cmd_check("bogus", recipe("heisenberg", {{"p", 3}}), config), InvalidArgument);
  for (const auto& name : property_names())
    CHECK_NOTHROW(cmd_check(name, recipe(name == "chi-containment" || name == "irreducible" ? "heisenberg" : "wreath_cp_cp",
                                          {{"p", 3}}),
                            config));
}

TEST_CASE("caps surface as non-zero verdicts") {
  auto config = small_config();
  auto p2 = cmd_check("p2", recipe("cyclic", {{"m", 2048}}), config);
  CHECK(p2.verdict == Verdict::holds_capped);
  CHECK(exit_code(p2) == 2);
  config.closure_cap = 100;
  auto big = cmd_check("s", recipe("basic", {{"p", 3}, {"c", 2}, {"e", 2}}), config);
  CHECK(big.verdict == Verdict::inconclusive);
  CHECK_FALSE(big.caps.empty());
  RunConfig bad;
  bad.section_cap = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("analyze") {
  auto h = analyze(load_group(recipe("heisenberg", {{"p", 3}})));
  CHECK(h["order"] == 27);
  CHECK(h["exponent"] == 3);
  CHECK(h["class"] == 2);
  CHECK(h["center_order"] == 3);
  CHECK(h["lower_central_series"] == json::array({27, 3, 1}));
  auto w = analyze(load_group(recipe("wreath_cp_cp", {{"p", 3}})));
  CHECK(w["order"] == 81);
  CHECK(w["exponent"] == 9);
  CHECK(w["class"] == 3);
  CHECK(w["power_structure"].size() == 2);
  auto c = analyze(load_group(recipe("cyclic", {{"m", 9}})));
  CHECK(c["order"] == 9);
  CHECK(c["exponent"] == 9);
  CHECK(c["class"] == 1);
}

TEST_CASE("construct writes the group file") {
  std::ostringstream out;
  CHECK(cmd_construct({"cyclic", {{"m", 9}}}, "", out) == 0);
  json j = json::parse(out.str());
  CHECK(j["carrier"] == "monomial");
  REQUIRE(j["generators"].size() == 1);
  CHECK(j["generators"][0]["entries"][0] == json{{"num", 1}, {"den", 9}});
}

TEST_CASE("verify runs single suites") {
  std::ostringstream out;
  CHECK(cmd_verify("T4", small_config(), out) == 0);
  CHECK(out.str().rfind("[PASS] T4", 0) == 0);
  CHECK_THROWS_AS(cmd_verify("T10", small_config(), out), InvalidArgument);
}

TEST_CASE("seeded oracle suite is reproducible") {
  RunConfig config = small_config();
  config.seed = 7;
  auto a = run_suite("T1", config), b = run_suite("T1", config);
  CHECK(a.passed);
  CHECK(a.lines == b.lines);
}
