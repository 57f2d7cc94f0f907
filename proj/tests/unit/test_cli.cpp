#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("submul_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::path out = workdir() / "stdout.txt";
  std::string cmd = std::string(SUBMUL_CLI) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string file(const std::string& name) { return (workdir() / name).string(); }

}  // namespace

TEST_CASE("construct") {
  REQUIRE(run("construct heisenberg --p 3 -o " + file("heisenberg3.json")).code == 0);
  json h = json::parse(std::ifstream(file("heisenberg3.json")));
  CHECK(h["carrier"] == "monomial");
  CHECK(h["generators"].size() == 2);
  CHECK(h["generators"][0]["n"] == 3);

  REQUIRE(run("construct basic --p 3 --c 2 --e 1 -o " + file("basic.json")).code == 0);
  CHECK(json::parse(std::ifstream(file("basic.json")))["carrier"] == "affine");

  auto c = run("construct cyclic --m 9");
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["generators"][0]["entries"][0] == json{{"num", 1}, {"den", 9}});

  REQUIRE(run("construct wreath_cp_cp --p 3 -o " + file("wreath3.json")).code == 0);
  REQUIRE(run("construct cyclic --m 2048 -o " + file("cyclic2048.json")).code == 0);
  REQUIRE(run("construct direct_product --factor heisenberg:p=3 --factor cyclic:m=3 -o " + file("prod.json")).code == 0);
}

TEST_CASE("check exit codes") {
  REQUIRE(run("construct heisenberg --p 3 -o " + file("heisenberg3.json")).code == 0);
  REQUIRE(run("construct wreath_cp_cp --p 3 -o " + file("wreath3.json")).code == 0);
  REQUIRE(run("construct cyclic --m 2048 -o " + file("cyclic2048.json")).code == 0);

  auto s = run("check s " + file("heisenberg3.json"));
  CHECK(s.code == 0);
  CHECK(s.out.find("holds: true") != std::string::npos);

  auto reg = run("--format structured check regular " + file("wreath3.json"));
  CHECK(reg.code == 1);
  json r = json::parse(reg.out);
  CHECK(r["holds"] == false);
  CHECK(r["witness"].contains("pair"));
  CHECK(r["seed"] == 1);

  CHECK(run("check p2 " + file("cyclic2048.json")).code == 2);
  CHECK(run("--cap 50 check s " + file("wreath3.json")).code == 2);
  CHECK(run("--powers 2 check v-regular " + file("heisenberg3.json")).code == 2);
}

TEST_CASE("invalid input exits 3") {
  CHECK(run("construct heisenberg --p 4").code == 3);
  CHECK(run("check nonsense " + file("heisenberg3.json")).code == 3);
  CHECK(run("check s /nonexistent/file.json").code == 3);
  CHECK(run("--cap 0 analyze " + file("heisenberg3.json")).code == 3);
  CHECK(run("").code == 3);
}

TEST_CASE("analyze and spectrum") {
  REQUIRE(run("construct heisenberg --p 3 -o " + file("heisenberg3.json")).code == 0);
  auto a = run("--format structured analyze " + file("heisenberg3.json"));
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["order"] == 27);
  CHECK(j["exponent"] == 3);
  CHECK(j["class"] == 2);
  CHECK(j["center_order"] == 3);

  {
    std::ofstream m(file("swap.json"));
    m << R"({"n": 2, "perm": [1, 0], "entries": [{"num": 0, "den": 1}, {"num": 1, "den": 2}]})";
  }
  auto sp = run("--format structured spectrum " + file("swap.json"));
  REQUIRE(sp.code == 0);
  CHECK(json::parse(sp.out)["spectrum"] == json::array({json{{"num", 1}, {"den", 4}}, json{{"num", 3}, {"den", 4}}}));
}

TEST_CASE("output file mirrors stdout") {
  REQUIRE(run("construct wreath_cp_cp --p 3 -o " + file("wreath3.json")).code == 0);
  auto r = run("check wp2 " + file("wreath3.json") + " -o " + file("report.txt"));
  CHECK(r.code == 1);
  std::stringstream ss;
  ss << std::ifstream(file("report.txt")).rdbuf();
  CHECK(ss.str() == r.out);
}

TEST_CASE("verify with a seed") {
  auto v = run("--seed 7 verify T1");
  CHECK(v.code == 0);
  CHECK(v.out.rfind("[PASS] T1", 0) == 0);
}
