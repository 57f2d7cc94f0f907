// submul: construct monomial p-groups, analyze them and check spectral and
// power-structure properties.
//
// Exit status: 0 holds, 1 fails with a witness, 2 capped or inconclusive,
// 3 invalid input.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "submul/cli_report.hpp"
#include "submul/error.hpp"

namespace {

using nlohmann::json;
using submul::InvalidArgument;

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: '" + text + "'");
    }
  }
  return out;
}

// "1,2,0;0,1,2" -> [[1,2,0],[0,1,2]]
json parse_rows(const std::string& text) {
  json rows = json::array();
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_list(row));
  return rows;
}

// "heisenberg:p=3" or "basic:p=3,c=2,e=1"
json parse_factor(const std::string& text) {
  auto colon = text.find(':');
  json f{{"family", text.substr(0, colon)}, {"params", json::object()}};
  if (colon == std::string::npos) return f;
  std::stringstream ss(text.substr(colon + 1));
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidArgument("factor parameter needs key=value: '" + kv + "'");
    f["params"][kv.substr(0, eq)] = parse_list(kv.substr(eq + 1)).at(0);
  }
  return f;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw InvalidArgument(path + ": " + ex.what());
  }
}

// Output goes to the terminal and, when -o is given, to the file as well.
int emit(const std::string& path, const std::function<int(std::ostream&)>& body) {
  std::ostringstream buf;
  int code = body(buf);
  std::cout << buf.str();
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << buf.str();
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for monomial p-groups and their spectral properties"};
  app.require_subcommand(1);
  app.fallthrough();

  submul::RunConfig config;
  std::string format = "text", out_path;
  app.add_option("--cap", config.closure_cap, "Maximum group order for closures")->capture_default_str();
  app.add_option("--section-cap", config.section_cap, "Maximum order for section enumeration")->capture_default_str();
  app.add_option("--powers", config.power_cap, "Direct powers checked for V-regularity")->capture_default_str();
  app.add_option("--workers", config.workers, "Worker threads for pair scans")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for oracle sampling")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_option("-o", out_path, "Output file");

  auto* construct = app.add_subcommand("construct", "Build a group file from a family recipe");
  std::string family;
  std::int64_t p = 0, c = 0, e = 0, m = 0;
  std::string chi, diag;
  std::vector<std::string> factors;
  construct->add_option("family", family, "cyclic | heisenberg | wreath_cp_cp | basic | quaternion8 | dihedral8 | "
                                          "diagonal_abelian | direct_product | induced_rep")
      ->required();
  construct->add_option("--p", p, "Prime");
  construct->add_option("--c", c, "Class parameter of a basic group");
  construct->add_option("--e", e, "Exponent parameter of a basic group");
  construct->add_option("--m", m, "Cyclic order or diagonal modulus");
  construct->add_option("--chi", chi, "Character values on a_1..a_c, comma separated");
  construct->add_option("--diag", diag, "Diagonal exponent rows, e.g. 1,2,0;0,1,2");
  construct->add_option("--factor", factors, "Direct factor, e.g. heisenberg:p=3 (repeatable)");

  auto* analyze = app.add_subcommand("analyze", "Order, exponent, class, series and power structure");
  std::string group_path;
  analyze->add_option("group", group_path, "Group file")->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Check one property");
  std::string property;
  submul::CheckArgs check_args;
  check->add_option("property", property, "Property name")->required()->check(CLI::IsMember(submul::property_names()));
  check->add_option("group", group_path, "Group file")->required()->check(CLI::ExistingFile);
  check->add_option("--k", check_args.engel_k, "Engel length (default p-1)");
  check->add_option("--j", check_args.chi_j, "Lower central term for chi-containment")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum of a matrix file or of a group's generators");
  std::string matrix_path;
  spectrum->add_option("file", matrix_path, "Matrix or group file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Run verification suites T1..T9");
  std::string suite = "all";
  bool verbose = false;
  verify->add_option("suite", suite, "Suite id or 'all'")->capture_default_str();
  verify->add_flag("-v,--verbose", verbose, "Print every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex);
    return code == 0 ? 0 : 3;
  }
  config.format = format == "structured" ? submul::OutputFormat::structured : submul::OutputFormat::text;

  try {
    config.validate();
    if (*construct) {
      json params = json::object();
      if (p) params["p"] = p;
      if (c) params["c"] = c;
      if (e) params["e"] = e;
      if (m) params["m"] = m;
      if (!chi.empty()) params["chi"] = parse_list(chi);
      if (!diag.empty()) params["diag"] = parse_rows(diag);
      if (!factors.empty()) {
        params["factors"] = json::array();
        for (const auto& f : factors) params["factors"].push_back(parse_factor(f));
      }
      return submul::cmd_construct(submul::GroupFamilySpec{family, params}, out_path, std::cout);
    }
    if (*analyze) {
      auto recipe = read_json(group_path).get<submul::GroupRecipe>();
      return emit(out_path, [&](std::ostream& os) { return submul::cmd_analyze(recipe, config, os); });
    }
    if (*check) {
      auto recipe = read_json(group_path).get<submul::GroupRecipe>();
      return emit(out_path, [&](std::ostream& os) {
        auto report = submul::cmd_check(property, recipe, config, check_args);
        submul::print_report(report, config, os);
        return submul::exit_code(report);
      });
    }
    if (*spectrum) {
      auto file = read_json(matrix_path);
      return emit(out_path, [&](std::ostream& os) { return submul::cmd_spectrum(file, config, os); });
    }
    if (*verify) {
      if (out_path.empty()) return submul::cmd_verify(suite, config, std::cout, verbose);
      return emit(out_path, [&](std::ostream& os) { return submul::cmd_verify(suite, config, os, verbose); });
    }
  } catch (const submul::Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  } catch (const json::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  }
  return 3;
}
