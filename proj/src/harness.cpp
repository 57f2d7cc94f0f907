#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "submul/cli_report.hpp"
#include "submul/error.hpp"
#include "submul/oracles.hpp"

namespace submul {

void SuiteResult::expect(bool cond, const std::string& what) {
  lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  passed = passed && cond;
}

void SuiteResult::note(const std::string& what) { lines.push_back("     " + what); }

namespace {

using nlohmann::json;

GroupRecipe recipe(const std::string& family, json params = json::object()) {
  return build_recipe(GroupFamilySpec{family, std::move(params)});
}

std::string verdict_name(const PropertyReport& r) { return verdict_to_text(r.verdict); }

std::string num(std::uint64_t v) { return std::to_string(v); }

bool same_units(std::vector<CyclotomicUnit> a, std::vector<CyclotomicUnit> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Suite T1: exact spectra against a dense floating-point eigensolver.
void suite_spectrum_oracle(SuiteResult& out, const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  const std::int64_t primes[] = {2, 3, 5};
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<int> pick(0, 2), power(1, 2);
  double worst = 0;
  int mismatches = 0;
  const int cases = 500;
  for (int t = 0; t < cases; ++t) {
    std::int64_t p = primes[pick(rng)];
    std::int64_t modulus = ipow(p, power(rng));
    std::size_t n = dim(rng);
    MonomialMatrix m = oracle::random_monomial(rng, n, modulus);
    std::vector<CyclotomicUnit> rounded;
    for (auto z : oracle::float_eigenvalues(m)) {
      double residual = 0;
      rounded.push_back(oracle::nearest_root_of_unity(z, static_cast<std::int64_t>(n) * p * p, &residual));
      worst = std::max(worst, residual);
    }
    bool ok = same_units(rounded, mm_eigenvalues(m)) && Spectrum(rounded) == mm_spectrum(m);
    if (!ok && ++mismatches <= 3) out.note("mismatch on " + m.to_string());
  }
  out.expect(mismatches == 0, num(cases) + " random matrices: exact spectrum equals rounded float eigenvalues (" +
                                  num(static_cast<std::uint64_t>(mismatches)) + " mismatches)");
  std::ostringstream os;
  os << worst;
  out.expect(worst < 1e-8, "max rounding residual " + os.str() + " < 1e-8");
}

// Suite T2: Q8 and D8 fail (S); abelian 2-groups pass.
void suite_two_groups(SuiteResult& out, const RunConfig& config) {
  for (const char* name : {"quaternion8", "dihedral8"}) {
    FiniteGroup g = load_group(recipe(name), config.closure_cap);
    PropertyReport r = has_property_s(g, config.workers);
    out.expect(g.order() == 8 && !is_abelian(g), std::string(name) + ": nonabelian of order 8");
    out.expect(r.verdict == Verdict::fails, std::string(name) + ": fails (S)");
    out.expect(replay_witness(g, r), std::string(name) + ": witness replays");
    if (std::string(name) == "dihedral8" && r.verdict == Verdict::fails) {
      auto a = r.witness["a"].get<MonomialMatrix>(), b = r.witness["b"].get<MonomialMatrix>();
      auto i = CyclotomicUnit::make(1, 4), minus = CyclotomicUnit::make(1, 2);
      out.expect(mm_spectrum(a * b) == Spectrum{CyclotomicUnit{}, minus} &&
                     spectrum_product(mm_spectrum(a), mm_spectrum(b)) == Spectrum{i, i.inverse()},
                 "dihedral8: sigma(rs) = {1,-1} outside sigma(r)sigma(s) = {i,-i}");
    }
  }
  int abelian = 0;
  for (const auto& entry : corpus()) {
    if (entry.recipe.carrier != "monomial") continue;
    FiniteGroup g = load_group(entry.recipe, config.closure_cap);
    if (!is_abelian(g) || group_prime(g) != 2 || g.order() > 16) continue;
    ++abelian;
    out.expect(has_property_s(g, config.workers).verdict == Verdict::holds, entry.name + ": abelian 2-group passes (S)");
  }
  out.expect(abelian >= 3, num(static_cast<std::uint64_t>(abelian)) + " abelian 2-groups of order <= 16 checked");
}

// Suite T3: exponent-p groups have (S).
void suite_exponent_p(SuiteResult& out, const RunConfig& config) {
  for (std::int64_t p : {3, 5}) {
    FiniteGroup g = close(heisenberg_rep(p), config.closure_cap);
    PropertyReport r = has_property_s(g, config.workers);
    std::uint64_t n = g.order();
    out.expect(n == static_cast<std::uint64_t>(p * p * p) && exponent(g) == p,
               "heisenberg(" + std::to_string(p) + "): order " + num(n) + ", exponent " + std::to_string(exponent(g)));
    out.expect(r.verdict == Verdict::holds && r.counters["pairs_checked"] == n * n,
               "heisenberg(" + std::to_string(p) + "): (S) holds over all " + num(r.counters["pairs_checked"]) + " pairs");
  }
}

// Suite T4: the wreath product C3 wr C3 fails wP2, regularity and (S).
void suite_wreath(SuiteResult& out, const RunConfig& config) {
  FiniteGroup g = close(wreath_cp_cp(3), config.closure_cap);
  out.expect(g.order() == 81, "order " + num(g.order()) + " = 81");
  out.expect(nilpotency_class(g) == 3, "class " + std::to_string(nilpotency_class(g)) + " = 3");
  out.expect(exponent(g) == 9, "exponent " + std::to_string(exponent(g)) + " = 9");
  for (const PropertyReport& r : {has_wp2(g), is_regular(g, config.workers), has_property_s(g, config.workers)}) {
    out.expect(r.verdict == Verdict::fails, r.property + " fails");
    out.expect(replay_witness(g, r), r.property + " witness replays");
  }
  PropertyReport s = has_property_s(g, config.workers);
  out.expect(s.witness["eigenvalue"].get<CyclotomicUnit>() == CyclotomicUnit::make(1, 9),
             "(S) witness eigenvalue is a primitive ninth root of unity");
}

// Suite T5: basic groups B_p(2,1) for p = 3, 5.
void suite_metabelian(SuiteResult& out, const RunConfig& config) {
  for (std::int64_t p : {3, 5}) {
    std::string name = "B" + std::to_string(p) + "(2,1)";
    FiniteGroup g = basic_group(p, 2, 1, config.closure_cap);
    int failures = 0, reps = 0, homs = 0;
    for (const auto& chi : all_characters(p, 2, 1)) {
      auto images = basic_generator_images(induced_monomial_rep(p, 2, 1, chi));
      ++reps;
      if (extend_homomorphism(g, images)) ++homs;
      FiniteGroup img = close(images, config.closure_cap);
      if (has_property_s(img, config.workers).verdict != Verdict::holds) ++failures;
    }
    out.expect(homs == reps, name + ": all " + std::to_string(reps) + " induced representations are homomorphisms");
    out.expect(failures == 0, name + ": all induced representations pass (S)");
    int k = static_cast<int>(p - 1);
    out.expect(is_engel(g, k, config.workers).verdict == Verdict::holds, name + ": " + std::to_string(k) + "-Engel");
    out.expect(nilpotency_class(g) <= k, name + ": class " + std::to_string(nilpotency_class(g)) + " <= p-1");
    PropertyReport hat = has_property_s_hat(g, induced_catalog(p, 2, 1), config.workers);
    out.expect(hat.verdict == Verdict::holds, name + ": s-hat verdict " + verdict_name(hat));
  }
}

// Suite T6: chi(G^(j)) inside im(I - pi)^j.
void suite_chi(SuiteResult& out, const RunConfig& config) {
  for (std::int64_t p : {3, 5}) {
    auto gens = heisenberg_rep(p);
    int cls = nilpotency_class(close(gens, config.closure_cap));
    for (int j = 0; j <= cls; ++j) {
      PropertyReport r = chi_containment(gens, j, config.closure_cap);
      out.expect(r.verdict == Verdict::holds, "heisenberg(" + std::to_string(p) + "), j = " + std::to_string(j) + ": " +
                                                  num(r.counters["elements_checked"]) + " elements of G^(j) map into im(I-pi)^j");
    }
    bool dims = true;
    for (int j = 0; j <= p; ++j) dims = dims && im_I_minus_pi_power(p, j).size() == static_cast<std::size_t>(p - j);
    out.expect(dims, "p = " + std::to_string(p) + ": dim im(I-pi)^j = p - j for j = 0..p");
  }
}

struct Loaded {
  CorpusEntry entry;
  FiniteGroup group;
};

std::vector<Loaded> load_corpus(const RunConfig& config) {
  std::vector<Loaded> out;
  for (auto& e : corpus()) {
    FiniteGroup g = load_group(e.recipe, config.closure_cap);
    out.push_back({std::move(e), std::move(g)});
  }
  return out;
}

// Suite T7: implications over the corpus.
void suite_implications(SuiteResult& out, const RunConfig& config) {
  auto groups = load_corpus(config);
  out.expect(groups.size() >= 12, num(groups.size()) + " corpus groups");

  std::vector<std::size_t> s_passing;
  std::vector<std::pair<std::size_t, std::vector<RepImages>>> hat_evidence;
  for (std::size_t idx = 0; idx < groups.size(); ++idx) {
    const auto& [entry, g] = groups[idx];
    std::string label = entry.name + " (order " + num(g.order()) + ")";
    if (g.has_matrices()) {
      PropertyReport s = has_property_s(g, config.workers);
      if (s.verdict == Verdict::holds) {
        s_passing.push_back(idx);
        out.expect(has_wp2(g).verdict == Verdict::holds, label + ": (S) => wP2");
        out.expect(order_submultiplicativity(g, config.workers).verdict == Verdict::holds, label + ": (S) => |xy| divides max");
        if (group_prime(g) == 2 && g.matrices().front().dim() == 2 && is_irreducible(g))
          out.expect(is_abelian(g), label + ": irreducible degree-2 2-group with (S) is abelian");
      } else {
        out.expect(order_submultiplicativity(g, config.workers).verdict == Verdict::vacuous,
                   label + ": fails (S); divisibility reported vacuous");
      }
    }
    auto catalog = catalog_for(entry.recipe, g);
    PropertyReport hat = has_property_s_hat(g, catalog, config.workers);
    PropertyReport reg = is_regular(g, config.workers);
    if (hat.verdict == Verdict::holds) out.expect(reg.verdict == Verdict::holds, label + ": s-hat (exhaustive) => regular");
    if (reg.verdict == Verdict::fails)
      out.expect(hat.verdict != Verdict::holds && hat.verdict != Verdict::holds_capped,
                 label + ": irregular => s-hat fails (" + verdict_name(hat) + ")");
    if (hat.verdict != Verdict::fails && !catalog.empty()) hat_evidence.emplace_back(idx, std::move(catalog));
  }

  // Tensor products of (S)-groups.
  std::mt19937_64 rng(config.seed);
  std::vector<std::pair<std::size_t, std::size_t>> tensor_pairs;
  for (std::size_t a : s_passing)
    for (std::size_t b : s_passing) {
      const auto& ga = groups[a].group;
      const auto& gb = groups[b].group;
      if (ga.matrices().front().dim() * gb.matrices().front().dim() <= 36 && ga.order() * gb.order() <= 2048)
        tensor_pairs.emplace_back(a, b);
    }
  std::shuffle(tensor_pairs.begin(), tensor_pairs.end(), rng);
  if (tensor_pairs.size() > 10) tensor_pairs.resize(10);
  for (auto [a, b] : tensor_pairs) {
    const auto& ga = groups[a].group;
    const auto& gb = groups[b].group;
    std::size_t da = ga.matrices().front().dim(), db = gb.matrices().front().dim();
    std::vector<MonomialMatrix> gens;
    for (Index s : ga.generators()) gens.push_back(mm_tensor(ga.matrix(s), MonomialMatrix::identity(db)));
    for (Index s : gb.generators()) gens.push_back(mm_tensor(MonomialMatrix::identity(da), gb.matrix(s)));
    FiniteGroup t = close(gens, config.closure_cap);
    out.expect(has_property_s(t, config.workers).verdict == Verdict::holds,
               groups[a].entry.name + " (x) " + groups[b].entry.name + ": tensor group of order " + num(t.order()) + " has (S)");
  }
  out.expect(!tensor_pairs.empty(), num(tensor_pairs.size()) + " tensor pairs sampled");

  // Direct products of s-hat evidence groups, on outer tensor products of
  // sampled catalog representations.
  std::vector<std::pair<std::size_t, std::size_t>> product_pairs;
  for (std::size_t a = 0; a < hat_evidence.size(); ++a)
    for (std::size_t b = a; b < hat_evidence.size(); ++b) {
      const auto& ga = groups[hat_evidence[a].first].group;
      const auto& gb = groups[hat_evidence[b].first].group;
      if (ga.order() * gb.order() <= 1024) product_pairs.emplace_back(a, b);
    }
  std::shuffle(product_pairs.begin(), product_pairs.end(), rng);
  if (product_pairs.size() > 6) product_pairs.resize(6);
  for (auto [a, b] : product_pairs) {
    const auto& [ia, cat_a] = hat_evidence[a];
    const auto& [ib, cat_b] = hat_evidence[b];
    const auto& ga = groups[ia].group;
    const auto& gb = groups[ib].group;
    const RepImages& ra = cat_a[std::uniform_int_distribution<std::size_t>(0, cat_a.size() - 1)(rng)];
    const RepImages& rb = cat_b[std::uniform_int_distribution<std::size_t>(0, cat_b.size() - 1)(rng)];
    FiniteGroup prod = direct_product(ga, gb, config.closure_cap);
    RepImages images;
    std::size_t da = ra.front().dim(), db = rb.front().dim();
    for (const auto& m : ra) images.push_back(mm_tensor(m, MonomialMatrix::identity(db)));
    for (const auto& m : rb) images.push_back(mm_tensor(MonomialMatrix::identity(da), m));
    PropertyReport r = has_property_s_hat(prod, {images}, config.workers);
    out.expect(r.verdict != Verdict::fails, groups[ia].entry.name + " x " + groups[ib].entry.name +
                                                ": sampled product representation keeps (S) (" + verdict_name(r) + ")");
  }
  out.expect(!product_pairs.empty(), num(product_pairs.size()) + " direct products sampled");
}

// Suite T8: irreducible SL_p groups of degree p with (S) have exponent p.
void suite_slp(SuiteResult& out, const RunConfig& config) {
  int counted = 0;
  for (const auto& entry : corpus()) {
    if (entry.recipe.carrier != "monomial") continue;
    auto gens = recipe_matrices(entry.recipe);
    auto p = static_cast<std::int64_t>(gens.front().dim());
    if (!is_prime(p)) continue;
    if (!std::all_of(gens.begin(), gens.end(), [](const MonomialMatrix& m) { return mm_det(m).is_identity(); })) continue;
    FiniteGroup g = close(gens, config.closure_cap);
    if (!is_irreducible(g) || has_property_s(g, config.workers).verdict != Verdict::holds) continue;
    ++counted;
    out.expect(exponent(g) == p, entry.name + ": irreducible in SL_" + std::to_string(p) + " with (S), exponent " +
                                     std::to_string(exponent(g)));
  }
  out.expect(counted >= 2, num(static_cast<std::uint64_t>(counted)) + " qualifying corpus groups");
}

// Suite T9: regularity against the literal definition.
void suite_regularity_oracle(SuiteResult& out, const RunConfig& config) {
  int compared = 0;
  for (const auto& [entry, g] : load_corpus(config)) {
    if (g.order() > 243) continue;
    std::int64_t p = group_prime(g);
    if (p == 0) p = 2;
    bool fast = is_regular(g, config.workers).verdict == Verdict::holds;
    bool slow = oracle::brute_force_regular(g, p);
    ++compared;
    out.expect(fast == slow, entry.name + " (order " + num(g.order()) + "): regular = " + (fast ? "true" : "false") +
                                 ", oracle = " + (slow ? "true" : "false"));
  }
  out.expect(compared >= 12, num(static_cast<std::uint64_t>(compared)) + " groups compared");
  FiniteGroup b = basic_group(3, 2, 1, config.closure_cap);
  PropertyReport v = is_v_regular_bounded(b, 2, std::max<std::size_t>(config.closure_cap, 729), config.workers);
  out.expect(v.verdict == Verdict::holds_capped,
             "B3(2,1) x B3(2,1) (order 729) regular; bounded V-regularity verdict " + verdict_name(v));
}

struct SuiteDef {
  const char* id;
  const char* title;
  void (*run)(SuiteResult&, const RunConfig&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"T1", "spectrum oracle", suite_spectrum_oracle},
      {"T2", "2-group counterexamples", suite_two_groups},
      {"T3", "exponent-p groups have (S)", suite_exponent_p},
      {"T4", "wreath product counterexample chain", suite_wreath},
      {"T5", "basic groups B_p(2,1)", suite_metabelian},
      {"T6", "chi containment", suite_chi},
      {"T7", "implications over the corpus", suite_implications},
      {"T8", "SL_p groups with (S) have exponent p", suite_slp},
      {"T9", "regularity oracle and bounded V-regularity", suite_regularity_oracle},
  };
  return defs;
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, GroupRecipe r) { out.push_back({std::move(name), std::move(r)}); };
  add("cyclic9", recipe("cyclic", {{"m", 9}}));
  add("cyclic8", recipe("cyclic", {{"m", 8}}));
  add("cyclic16", recipe("cyclic", {{"m", 16}}));
  add("diag3x3", recipe("diagonal_abelian", {{"m", 3}, {"diag", {{1, 2, 0}, {0, 1, 2}}}}));
  add("c4xc2", recipe("diagonal_abelian", {{"m", 4}, {"diag", {{1, 0}, {0, 2}}}}));
  add("c2^3", recipe("diagonal_abelian", {{"m", 2}, {"diag", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}));
  add("c4xc4", recipe("diagonal_abelian", {{"m", 4}, {"diag", {{1, 0}, {0, 1}}}}));
  add("quaternion8", recipe("quaternion8"));
  add("dihedral8", recipe("dihedral8"));
  add("heisenberg3", recipe("heisenberg", {{"p", 3}}));
  add("heisenberg5", recipe("heisenberg", {{"p", 5}}));
  add("wreath2", recipe("wreath_cp_cp", {{"p", 2}}));
  add("wreath3", recipe("wreath_cp_cp", {{"p", 3}}));
  add("basic(3,2,1)", recipe("basic", {{"p", 3}, {"c", 2}, {"e", 1}}));
  add("basic(5,2,1)", recipe("basic", {{"p", 5}, {"c", 2}, {"e", 1}}));
  add("basic(3,1,2)", recipe("basic", {{"p", 3}, {"c", 1}, {"e", 2}}));
  add("induced(3,2,1;0,1)", recipe("induced_rep", {{"p", 3}, {"c", 2}, {"e", 1}, {"chi", {0, 1}}}));
  add("induced(3,2,2;0,1)", recipe("induced_rep", {{"p", 3}, {"c", 2}, {"e", 2}, {"chi", {0, 1}}}));
  add("heisenberg3xcyclic3", recipe("direct_product", {{"factors", {{{"family", "heisenberg"}, {"params", {{"p", 3}}}},
                                                                    {{"family", "cyclic"}, {"params", {{"m", 3}}}}}}}));
  add("basic(3,2,1)xcyclic9", recipe("direct_product", {{"factors", {{{"family", "basic"}, {"params", {{"p", 3}, {"c", 2}, {"e", 1}}}},
                                                                     {{"family", "cyclic"}, {"params", {{"m", 9}}}}}}}));
  return out;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : suites()) ids.push_back(s.id);
  return ids;
}

SuiteResult run_suite(const std::string& id, const RunConfig& config) {
  for (const auto& s : suites()) {
    if (id != s.id) continue;
    SuiteResult r;
    r.id = s.id;
    r.title = s.title;
    auto start = std::chrono::steady_clock::now();
    try {
      s.run(r, config);
    } catch (const std::exception& ex) {
      r.expect(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw InvalidArgument("unknown suite '" + id + "'");
}

}  // namespace submul
