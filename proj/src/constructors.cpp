#include "submul/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "submul/error.hpp"

namespace submul {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_prime(std::int64_t p, const char* what) {
  if (!is_prime(p)) throw InvalidArgument(std::string(what) + ": p must be prime, got " + std::to_string(p));
}

// C(j, i) mod m for j = 0..n-1, by Pascal's rule along j.
std::vector<std::int64_t> binomials_mod(std::size_t n, int i, std::int64_t m) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(i) + 1, 0);  // C(j, 0..i)
  std::vector<std::int64_t> out(n);
  row[0] = 1 % m;
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = row[static_cast<std::size_t>(i)];
    for (int u = i; u >= 1; --u) row[u] = (row[u] + row[u - 1]) % m;
  }
  return out;
}

std::size_t checked_dim(std::int64_t p, int k, const char* what) {
  if (k < 1) throw InvalidArgument(std::string(what) + ": k must be at least 1");
  require_prime(p, what);
  std::int64_t n = ipow(p, k);
  if (n > (1 << 20)) throw InvalidArgument(std::string(what) + ": dimension too large");
  return static_cast<std::size_t>(n);
}

}  // namespace

MonomialMatrix big_cycle(std::int64_t p, int k) {
  std::size_t n = checked_dim(p, k, "big_cycle");
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = (j + 1) % n;
  return MonomialMatrix::permutation(std::move(perm));
}

MonomialMatrix dk_matrix(std::int64_t p, int k, int i, CyclotomicUnit eta) {
  std::size_t n = checked_dim(p, k, "dk_matrix");
  if (i < 0) throw InvalidArgument("dk_matrix: i must be non-negative");
  auto pk = static_cast<std::int64_t>(n);
  if (pk % eta.order() != 0) throw InvalidArgument("dk_matrix: eta " + eta.to_string() + " is not a p^k-th root of unity");
  std::vector<std::int64_t> exps = binomials_mod(n, i, eta.order());
  std::vector<CyclotomicUnit> entries(n);
  for (std::size_t j = 0; j < n; ++j) entries[j] = eta.pow(exps[j]);
  return MonomialMatrix::diagonal(std::move(entries));
}

BlockSimilarityResult dk_block_similarity(std::int64_t p, int k, int i, CyclotomicUnit eta) {
  BlockSimilarityResult out;
  if (k < 2) throw InvalidArgument("dk_block_similarity: k must be at least 2");
  MonomialMatrix d = dk_matrix(p, k, i, eta);
  std::size_t n = d.dim();
  auto up = static_cast<std::size_t>(p);
  std::size_t block = n / up;
  std::int64_t pk = static_cast<std::int64_t>(n);

  // Residue classes mod p, each in increasing order.
  for (std::size_t m = 0; m < up; ++m)
    for (std::size_t s = 0; s < block; ++s) out.order.push_back(m + up * s);

  MonomialMatrix q = MonomialMatrix::permutation(out.order);
  MonomialMatrix reordered = q.inverse() * d * q;
  if (!reordered.is_diagonal()) {
    out.detail = "reordering does not keep D diagonal";
    return out;
  }
  MonomialMatrix cycle_power = q.inverse() * big_cycle(p, k).pow(p) * q;
  MonomialMatrix small_cycle = big_cycle(p, k - 1);
  MonomialMatrix expected_cycles = small_cycle;
  for (std::size_t m = 1; m < up; ++m) expected_cycles = mm_direct_sum(expected_cycles, small_cycle);
  if (cycle_power != expected_cycles) {
    out.detail = "reordering does not split P_k^p into copies of P_(k-1)";
    return out;
  }

  // Within block m, position s carries eta^{f(s)} with f(s) = C(m + p s, i).
  // Expanding f in the binomial basis C(s, u) by forward differences gives
  // the block as eta^{c_0} * prod_{u >= 1} D_{k-1}(u, eta^{c_u}).
  std::vector<std::int64_t> all = binomials_mod(n, i, pk);
  std::int64_t sub = pk / p;
  for (std::size_t m = 0; m < up; ++m) {
    std::vector<std::int64_t> diff(block);
    for (std::size_t s = 0; s < block; ++s) diff[s] = all[m + up * s];
    BlockFactorization f;
    std::vector<std::int64_t> coeffs;
    for (int u = 0; u <= i && static_cast<std::size_t>(u) < block; ++u) {
      coeffs.push_back(diff[0]);
      for (std::size_t s = 0; s + 1 < diff.size(); ++s) diff[s] = floor_mod(diff[s + 1] - diff[s], pk);
      diff.pop_back();
    }
    f.scalar = eta.pow(coeffs[0]);
    MonomialMatrix product = MonomialMatrix::identity(block);
    for (std::size_t u = 1; u < coeffs.size(); ++u) {
      CyclotomicUnit theta = eta.pow(coeffs[u]);
      if (sub % theta.order() != 0) {
        out.detail = "block " + std::to_string(m) + ": theta_" + std::to_string(u) + " = " + theta.to_string() +
                     " is not in Gamma_(k-1)";
        return out;
      }
      if (theta.is_identity()) continue;
      f.factors.emplace_back(static_cast<int>(u), theta);
      product = product * dk_matrix(p, k - 1, static_cast<int>(u), theta);
    }
    std::vector<CyclotomicUnit> actual(reordered.entries().begin() + static_cast<std::ptrdiff_t>(m * block),
                                       reordered.entries().begin() + static_cast<std::ptrdiff_t>((m + 1) * block));
    if (product.scaled(f.scalar) != MonomialMatrix::diagonal(actual)) {
      out.detail = "block " + std::to_string(m) + " does not match its factorization";
      return out;
    }
    if (!mm_det(product).is_identity()) {
      out.detail = "block " + std::to_string(m) + ": factor product has determinant " + mm_det(product).to_string();
      return out;
    }
    out.blocks.push_back(std::move(f));
  }
  out.verified = true;
  out.detail = "ok";
  return out;
}

std::vector<MonomialMatrix> heisenberg_rep(std::int64_t p) {
  require_prime(p, "heisenberg_rep");
  if (p == 2) throw InvalidArgument("heisenberg_rep: p must be odd");
  return {big_cycle(p, 1), dk_matrix(p, 1, 1, CyclotomicUnit::primitive(p))};
}

std::vector<MonomialMatrix> wreath_cp_cp(std::int64_t p) {
  require_prime(p, "wreath_cp_cp");
  std::vector<CyclotomicUnit> d(static_cast<std::size_t>(p));
  d[0] = CyclotomicUnit::primitive(p);
  return {big_cycle(p, 1), MonomialMatrix::diagonal(std::move(d))};
}

std::vector<MonomialMatrix> quaternion8() {
  auto i = CyclotomicUnit::make(1, 4);
  return {MonomialMatrix::diagonal({i, i.inverse()}), MonomialMatrix({1, 0}, {CyclotomicUnit{}, CyclotomicUnit::make(1, 2)})};
}

std::vector<MonomialMatrix> dihedral8() {
  auto i = CyclotomicUnit::make(1, 4);
  return {MonomialMatrix::diagonal({i, i.inverse()}), MonomialMatrix::permutation({1, 0})};
}

std::vector<MonomialMatrix> cyclic_rep(std::int64_t m) {
  if (m < 1) throw InvalidArgument("cyclic_rep: m must be positive");
  return {MonomialMatrix::diagonal({CyclotomicUnit::primitive(m)})};
}

std::vector<MonomialMatrix> diagonal_abelian(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows) {
  if (modulus < 1) throw InvalidArgument("diagonal_abelian: modulus must be positive");
  if (rows.empty()) throw InvalidArgument("diagonal_abelian: need at least one generator");
  std::vector<MonomialMatrix> out;
  for (const auto& r : rows) {
    if (r.empty() || r.size() != rows.front().size())
      throw InvalidArgument("diagonal_abelian: rows must be non-empty and of equal length");
    std::vector<CyclotomicUnit> e;
    for (auto x : r) e.push_back(CyclotomicUnit::make(x, modulus));
    out.push_back(MonomialMatrix::diagonal(std::move(e)));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> basic_action(std::int64_t p, int c, int e) {
  require_prime(p, "basic_action");
  if (c < 1 || e < 1) throw InvalidArgument("basic_action: need c >= 1 and e >= 1");
  auto n = static_cast<std::size_t>(c);
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  // Column i is the image of e_i: e_i + e_{i+1}, and e_c is fixed.
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
    if (i + 1 < n) m[i + 1][i] = 1;
  }
  return m;
}

FiniteGroup basic_group(std::int64_t p, int c, int e, std::size_t cap) {
  auto action = basic_action(p, c, e);
  std::int64_t q = ipow(p, e);
  auto n = static_cast<std::size_t>(c);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> unit(n, 0);
    unit[i] = 1;
    if (affine_act(action, q, unit, q) != unit)
      throw InvalidArgument("basic_group: the action does not have order dividing p^e (need c <= p)");
  }

  int log_order = e * (c + 1);
  std::int64_t expected = 1;
  for (int k = 0; k < log_order; ++k) {
    expected *= p;
    if (static_cast<std::size_t>(expected) > cap) throw CapExceeded("basic_group: order exceeds cap", static_cast<std::size_t>(expected), cap);
  }

  AffinePair a{std::vector<std::int64_t>(n, 0), 0};
  a.v[0] = 1;
  AffinePair b{std::vector<std::int64_t>(n, 0), 1 % q};
  FiniteGroup g = close_affine({a, b}, action, q, cap);
  if (static_cast<std::int64_t>(g.order()) != expected)
    throw Error("basic_group: closure has order " + std::to_string(g.order()) + ", expected " + std::to_string(expected));

  std::map<AffinePair, Index> where;
  for (Index x = 0; x < g.order(); ++x) where.emplace(g.affine(x), x);
  std::vector<Index> ai;
  for (std::size_t i = 0; i < n; ++i) {
    AffinePair u{std::vector<std::int64_t>(n, 0), 0};
    u.v[i] = 1;
    ai.push_back(where.at(u));
  }
  Index bi = g.generators()[1];
  auto fail = [](const std::string& rel) { throw Error("basic_group: relation " + rel + " violated"); };
  if (g.pow(bi, q) != 0) fail("b^(p^e) = 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.pow(ai[i], q) != 0) fail("a_i^(p^e) = 1");
    for (std::size_t j = 0; j < n; ++j)
      if (g.mul(ai[i], ai[j]) != g.mul(ai[j], ai[i])) fail("a_i a_j = a_j a_i");
    Index lhs = g.conj(ai[i], bi);
    Index rhs = i + 1 < n ? g.mul(ai[i], ai[i + 1]) : ai[i];
    if (lhs != rhs) fail("b^-1 a_i b = a_i a_(i+1)");
  }
  return g;
}

std::vector<MonomialMatrix> induced_monomial_rep(std::int64_t p, int c, int e, const std::vector<std::int64_t>& chi) {
  require_prime(p, "induced_monomial_rep");
  if (c < 1 || e < 1) throw InvalidArgument("induced_monomial_rep: need c >= 1 and e >= 1");
  if (chi.size() != static_cast<std::size_t>(c))
    throw InvalidArgument("induced_monomial_rep: character needs one value per generator a_i");
  std::int64_t q = ipow(p, e);
  auto n = static_cast<std::size_t>(q);
  auto omega = CyclotomicUnit::primitive(q);

  // b^-j a_i b^j = prod_u a_{i+u}^{C(j,u)}, so its character value is
  // omega^{sum_u C(j,u) chi[i+u]}.
  std::vector<std::vector<std::int64_t>> binom(static_cast<std::size_t>(c));
  for (int u = 0; u < c; ++u) binom[u] = binomials_mod(n, u, q);

  std::vector<MonomialMatrix> out;
  for (int i = 0; i < c; ++i) {
    std::vector<CyclotomicUnit> d(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t x = 0;
      for (int u = 0; i + u < c; ++u) x = (x + binom[u][j] * floor_mod(chi[i + u], q)) % q;
      d[j] = omega.pow(x);
    }
    out.push_back(MonomialMatrix::diagonal(std::move(d)));
  }
  out.push_back(big_cycle(p, e));
  return out;
}

std::vector<MonomialMatrix> basic_generator_images(const std::vector<MonomialMatrix>& rep) {
  if (rep.size() < 2) throw InvalidArgument("basic_generator_images: expected [psi(a_1), ..., psi(b)]");
  return {rep.front(), rep.back()};
}

std::vector<std::vector<std::int64_t>> all_characters(std::int64_t p, int c, int e) {
  std::int64_t q = ipow(p, e);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(static_cast<std::size_t>(c), 0);
  while (true) {
    out.push_back(x);
    int pos = c - 1;
    while (pos >= 0 && ++x[pos] == q) x[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

void to_json(nlohmann::json& j, const GroupRecipe& r) {
  j = nlohmann::json{{"family", r.spec.family}, {"params", r.spec.params}, {"carrier", r.carrier}, {"generators", r.generators}};
}

void from_json(const nlohmann::json& j, GroupRecipe& r) {
  try {
    r.spec.family = j.at("family").get<std::string>();
    r.spec.params = j.value("params", nlohmann::json::object());
    r.carrier = j.at("carrier").get<std::string>();
    r.generators = j.at("generators");
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed group file: ") + ex.what());
  }
}

namespace {

std::int64_t int_param(const nlohmann::json& params, const char* name) {
  if (!params.contains(name) || !params[name].is_number_integer())
    throw InvalidArgument(std::string("missing integer parameter '") + name + "'");
  return params[name].get<std::int64_t>();
}

int small_param(const nlohmann::json& params, const char* name) {
  std::int64_t v = int_param(params, name);
  if (v < 1 || v > 64) throw InvalidArgument(std::string("parameter '") + name + "' out of range");
  return static_cast<int>(v);
}

GroupRecipe monomial_recipe(const GroupFamilySpec& spec, const std::vector<MonomialMatrix>& gens) {
  return GroupRecipe{spec, "monomial", nlohmann::json(gens)};
}

}  // namespace

GroupRecipe build_recipe(const GroupFamilySpec& spec) {
  const auto& P = spec.params;
  const std::string& f = spec.family;
  if (f == "cyclic") return monomial_recipe(spec, cyclic_rep(int_param(P, "m")));
  if (f == "heisenberg") return monomial_recipe(spec, heisenberg_rep(int_param(P, "p")));
  if (f == "wreath_cp_cp") return monomial_recipe(spec, wreath_cp_cp(int_param(P, "p")));
  if (f == "quaternion8") return monomial_recipe(spec, quaternion8());
  if (f == "dihedral8") return monomial_recipe(spec, dihedral8());
  if (f == "diagonal_abelian") {
    if (!P.contains("diag") || !P["diag"].is_array()) throw InvalidArgument("diagonal_abelian: missing 'diag' rows");
    return monomial_recipe(spec, diagonal_abelian(int_param(P, "m"), P["diag"].get<std::vector<std::vector<std::int64_t>>>()));
  }
  if (f == "induced_rep") {
    std::int64_t p = int_param(P, "p");
    int c = small_param(P, "c"), e = small_param(P, "e");
    if (!P.contains("chi") || !P["chi"].is_array()) throw InvalidArgument("induced_rep: missing 'chi'");
    auto rep = induced_monomial_rep(p, c, e, P["chi"].get<std::vector<std::int64_t>>());
    return monomial_recipe(spec, basic_generator_images(rep));
  }
  if (f == "basic") {
    std::int64_t p = int_param(P, "p");
    int c = small_param(P, "c"), e = small_param(P, "e");
    auto action = basic_action(p, c, e);
    std::int64_t q = ipow(p, e);
    std::vector<std::int64_t> unit(static_cast<std::size_t>(c), 0);
    for (std::size_t i = 0; i < unit.size(); ++i) {
      unit.assign(unit.size(), 0);
      unit[i] = 1;
      if (affine_act(action, q, unit, q) != unit)
        throw InvalidArgument("basic: the action does not have order dividing p^e (need c <= p)");
    }
    AffinePair a{std::vector<std::int64_t>(static_cast<std::size_t>(c), 0), 0};
    a.v[0] = 1;
    AffinePair b{std::vector<std::int64_t>(static_cast<std::size_t>(c), 0), 1};
    return GroupRecipe{spec, "affine", nlohmann::json::array({a, b})};
  }
  if (f == "direct_product") {
    if (!P.contains("factors") || !P["factors"].is_array() || P["factors"].empty())
      throw InvalidArgument("direct_product: need a non-empty 'factors' list");
    std::vector<GroupRecipe> parts;
    for (const auto& fj : P["factors"]) {
      if (!fj.is_object() || !fj.contains("family")) throw InvalidArgument("direct_product: each factor needs a 'family'");
      parts.push_back(build_recipe(GroupFamilySpec{fj["family"].get<std::string>(), fj.value("params", nlohmann::json::object())}));
    }
    bool all_monomial = std::all_of(parts.begin(), parts.end(), [](const GroupRecipe& r) { return r.carrier == "monomial"; });
    if (!all_monomial) return GroupRecipe{spec, "product", nlohmann::json(parts)};

    // Block-diagonal embedding: generators of factor t act on block t.
    std::vector<std::vector<MonomialMatrix>> gens;
    std::vector<std::size_t> dims;
    for (const auto& r : parts) {
      gens.push_back(recipe_matrices(r));
      dims.push_back(gens.back().front().dim());
    }
    std::vector<MonomialMatrix> out;
    for (std::size_t t = 0; t < parts.size(); ++t)
      for (const auto& g : gens[t]) {
        MonomialMatrix m = t == 0 ? g : MonomialMatrix::identity(dims[0]);
        for (std::size_t s = 1; s < parts.size(); ++s) m = mm_direct_sum(m, s == t ? g : MonomialMatrix::identity(dims[s]));
        out.push_back(std::move(m));
      }
    return monomial_recipe(spec, out);
  }
  throw InvalidArgument("unknown group family '" + f + "'");
}

std::vector<MonomialMatrix> recipe_matrices(const GroupRecipe& recipe) {
  if (recipe.carrier != "monomial") throw InvalidArgument("group '" + recipe_label(recipe) + "' has no matrix generators");
  try {
    auto gens = recipe.generators.get<std::vector<MonomialMatrix>>();
    if (gens.empty()) throw InvalidArgument("group file has no generators");
    return gens;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed generators: ") + ex.what());
  }
}

FiniteGroup load_group(const GroupRecipe& recipe, std::size_t cap) {
  if (recipe.carrier == "monomial") return close(recipe_matrices(recipe), cap);
  if (recipe.carrier == "affine") {
    if (recipe.spec.family != "basic") throw InvalidArgument("affine carrier requires the basic family");
    const auto& P = recipe.spec.params;
    std::int64_t p = int_param(P, "p");
    int c = small_param(P, "c"), e = small_param(P, "e");
    std::vector<AffinePair> gens;
    try {
      gens = recipe.generators.get<std::vector<AffinePair>>();
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument(std::string("malformed affine generators: ") + ex.what());
    }
    return close_affine(gens, basic_action(p, c, e), ipow(p, e), cap);
  }
  if (recipe.carrier == "product") {
    std::vector<GroupRecipe> parts;
    try {
      parts = recipe.generators.get<std::vector<GroupRecipe>>();
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument(std::string("malformed product factors: ") + ex.what());
    }
    if (parts.empty()) throw InvalidArgument("product carrier needs factors");
    FiniteGroup g = load_group(parts[0], cap);
    for (std::size_t t = 1; t < parts.size(); ++t) g = direct_product(g, load_group(parts[t], cap), cap);
    return g;
  }
  throw InvalidArgument("unknown carrier '" + recipe.carrier + "'");
}

std::string recipe_label(const GroupRecipe& recipe) {
  std::ostringstream os;
  os << recipe.spec.family;
  const auto& P = recipe.spec.params;
  if (P.is_object() && !P.empty()) {
    os << '(';
    bool first = true;
    for (const auto& [k, v] : P.items()) {
      if (!first) os << ',';
      first = false;
      os << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    os << ')';
  }
  return os.str();
}

}  // namespace submul
