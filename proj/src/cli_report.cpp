#include "submul/cli_report.hpp"

#include <fstream>
#include <iostream>

#include "submul/error.hpp"

namespace submul {

void RunConfig::validate() const {
  if (closure_cap == 0 || section_cap == 0 || power_cap < 1) throw InvalidArgument("caps must be positive");
}

std::vector<std::string> property_names() {
  return {"s",       "s-hat", "s-tilde", "wp2",   "p1",        "p2", "regular", "v-regular", "p-abelian", "engel",
          "order-submultiplicativity", "chi-containment", "irreducible"};
}

std::vector<RepImages> catalog_for(const GroupRecipe& recipe, const FiniteGroup& g) {
  if (g.has_matrices()) return galois_catalog(g);
  if (recipe.carrier == "affine" && recipe.spec.family == "basic") {
    const auto& P = recipe.spec.params;
    return induced_catalog(P.at("p").get<std::int64_t>(), P.at("c").get<int>(), P.at("e").get<int>());
  }
  return {};
}

namespace {

PropertyReport inconclusive(const std::string& property, const std::string& why) {
  PropertyReport r;
  r.property = property;
  r.verdict = Verdict::inconclusive;
  r.witness = nullptr;
  r.caps.push_back(why);
  return r;
}

std::int64_t p_of(const FiniteGroup& g) {
  std::int64_t p = group_prime(g);
  return p == 0 ? 2 : p;
}

}  // namespace

PropertyReport cmd_check(const std::string& property, const GroupRecipe& recipe, const RunConfig& config, const CheckArgs& args) {
  config.validate();
  const auto& names = property_names();
  if (std::find(names.begin(), names.end(), property) == names.end())
    throw InvalidArgument("unknown property '" + property + "'");
  PropertyReport r;
  try {
    if (property == "chi-containment") {
      r = chi_containment(recipe_matrices(recipe), args.chi_j, config.closure_cap);
    } else {
      FiniteGroup g = load_group(recipe, config.closure_cap);
      unsigned w = config.workers;
      if (property == "s") {
        r = has_property_s(g, w);
      } else if (property == "s-hat") {
        r = has_property_s_hat(g, catalog_for(recipe, g), w);
      } else if (property == "s-tilde") {
        r = has_property_s_tilde(g, catalog_for(recipe, g), w);
      } else if (property == "wp2") {
        r = has_wp2(g);
      } else if (property == "p1") {
        r = has_p1(g, config.section_cap);
      } else if (property == "p2") {
        r = has_p2(g, config.section_cap);
      } else if (property == "regular") {
        r = is_regular(g, w);
      } else if (property == "v-regular") {
        r = is_v_regular_bounded(g, config.power_cap, config.closure_cap, w);
      } else if (property == "p-abelian") {
        r = is_p_abelian(g, w);
      } else if (property == "engel") {
        int k = args.engel_k > 0 ? args.engel_k : static_cast<int>(p_of(g) - 1);
        r = is_engel(g, std::max(k, 1), w);
      } else if (property == "order-submultiplicativity") {
        r = order_submultiplicativity(g, w);
      } else {
        if (!g.has_matrices()) throw InvalidArgument("irreducible: group has no matrix carrier");
        r = irreducibility_report(g);
      }
    }
  } catch (const CapExceeded& ex) {
    r = inconclusive(property, ex.what());
  }
  r.seed = config.seed;
  return r;
}

int cmd_construct(const GroupFamilySpec& spec, const std::string& out_path, std::ostream& out) {
  GroupRecipe recipe = build_recipe(spec);
  nlohmann::json j = recipe;
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) throw InvalidArgument("cannot write " + out_path);
  f << j.dump(2) << '\n';
  out << "wrote " << recipe_label(recipe) << " (" << recipe.carrier << ", " << recipe.generators.size() << " generators) to "
      << out_path << '\n';
  return 0;
}

nlohmann::json analyze(const FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["carrier"] = to_string(g.carrier_kind());
  j["generators"] = g.generators().size();
  j["exponent"] = exponent(g);
  std::int64_t p = group_prime(g);
  j["prime"] = p;
  auto series = lower_central_series(g);
  j["class"] = series.size() - 1;
  std::vector<std::size_t> orders;
  for (const auto& s : series) orders.push_back(s.order());
  j["lower_central_series"] = orders;
  j["center_order"] = center(g).order();
  j["abelian"] = is_abelian(g);
  j["metabelian"] = is_metabelian(g);
  nlohmann::json power = nlohmann::json::array();
  if (p != 0)
    for (int k = 1; k <= exponent_log(g); ++k)
      power.push_back({{"k", k},
                       {"delta", delta_k(g, k).size()},
                       {"omega", omega_k(g, k).order()},
                       {"nabla", nabla_k(g, k).size()},
                       {"mho", mho_k(g, k).order()}});
  j["power_structure"] = power;
  return j;
}

void print_object(const nlohmann::json& j, const RunConfig& config, std::ostream& out) {
  if (config.format == OutputFormat::structured) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

int cmd_analyze(const GroupRecipe& recipe, const RunConfig& config, std::ostream& out) {
  config.validate();
  try {
    FiniteGroup g = load_group(recipe, config.closure_cap);
    nlohmann::json j = analyze(g);
    j["group"] = recipe_label(recipe);
    print_object(j, config, out);
    return 0;
  } catch (const CapExceeded& ex) {
    out << "cap exceeded: " << ex.what() << '\n';
    return 2;
  }
}

namespace {

nlohmann::json matrix_summary(const MonomialMatrix& m) {
  return nlohmann::json{{"matrix", m},
                        {"spectrum", mm_spectrum(m)},
                        {"eigenvalues", mm_eigenvalues(m)},
                        {"order", mm_order(m)},
                        {"det", mm_det(m)}};
}

}  // namespace

int cmd_spectrum(const nlohmann::json& file, const RunConfig& config, std::ostream& out) {
  nlohmann::json j;
  if (file.contains("perm")) {
    j = matrix_summary(file.get<MonomialMatrix>());
  } else {
    GroupRecipe recipe = file.get<GroupRecipe>();
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& m : recipe_matrices(recipe)) gens.push_back(matrix_summary(m));
    j["group"] = recipe_label(recipe);
    j["generators"] = gens;
  }
  print_object(j, config, out);
  return 0;
}

void print_report(const PropertyReport& r, const RunConfig& config, std::ostream& out) {
  if (config.format == OutputFormat::structured)
    out << nlohmann::json(r).dump(2) << '\n';
  else
    out << report_to_text(r);
}

int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out, bool verbose) {
  config.validate();
  std::vector<std::string> ids;
  if (suite == "all") {
    ids = suite_ids();
  } else {
    auto all = suite_ids();
    if (std::find(all.begin(), all.end(), suite) == all.end()) throw InvalidArgument("unknown suite '" + suite + "'");
    ids.push_back(suite);
  }
  bool ok = true;
  for (const auto& id : ids) {
    SuiteResult r = run_suite(id, config);
    ok = ok && r.passed;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << " (" << secs << " s)\n";
    if (verbose || !r.passed)
      for (const auto& line : r.lines) out << "    " << line << '\n';
    out.flush();
  }
  return ok ? 0 : 1;
}

}  // namespace submul
