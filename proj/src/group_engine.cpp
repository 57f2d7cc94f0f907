#include "submul/group_engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace submul {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

template <class T>
struct Closed {
  std::vector<T> elements;
  std::vector<Index> table;
  std::vector<Index> generator_indices;
};

// BFS over right multiplication by generators. Each layer is sorted by the
// carrier's canonical key before indices are handed out. The full table is
// then filled column by column: if x_j = x_p * g_k with p < j, then
// x_i * x_j = (x_i * x_p) * g_k.
template <class T, class Mul>
Closed<T> close_generic(const std::vector<T>& gens, const T& identity, Mul mul, std::size_t cap, const char* what) {
  Closed<T> out;
  std::map<T, Index> index;
  std::vector<Index> parent{0};
  std::vector<std::size_t> via{0};
  out.elements.push_back(identity);
  index.emplace(identity, 0);

  std::vector<Index> layer{0};
  while (!layer.empty()) {
    std::map<T, std::pair<Index, std::size_t>> fresh;
    for (Index x : layer)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        T y = mul(out.elements[x], gens[k]);
        if (index.contains(y)) continue;
        fresh.try_emplace(std::move(y), x, k);
      }
    std::vector<Index> next;
    for (auto& [y, origin] : fresh) {
      if (out.elements.size() >= cap) throw CapExceeded(std::string(what) + ": closure exceeds cap", out.elements.size() + 1, cap);
      auto id = static_cast<Index>(out.elements.size());
      index.emplace(y, id);
      out.elements.push_back(y);
      parent.push_back(origin.first);
      via.push_back(origin.second);
      next.push_back(id);
    }
    layer = std::move(next);
  }

  std::size_t n = out.elements.size();
  std::size_t ng = gens.size();
  std::vector<Index> right(n * ng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < ng; ++k) right[i * ng + k] = index.at(mul(out.elements[i], gens[k]));

  out.table.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) out.table[i * n] = static_cast<Index>(i);
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t p = parent[j], k = via[j];
    for (std::size_t i = 0; i < n; ++i) out.table[i * n + j] = right[std::size_t{out.table[i * n + p]} * ng + k];
  }
  for (const auto& g : gens) out.generator_indices.push_back(index.at(g));
  return out;
}

// Closure of a mask that already contains the identity, under right
// multiplication by the given generators.
void close_mask(const FiniteGroup& g, std::vector<bool>& mask, std::span<const Index> gens) {
  std::deque<Index> todo;
  for (Index i = 0; i < mask.size(); ++i)
    if (mask[i]) todo.push_back(i);
  while (!todo.empty()) {
    Index x = todo.front();
    todo.pop_front();
    for (Index s : gens) {
      Index y = g.mul(x, s);
      if (!mask[y]) {
        mask[y] = true;
        todo.push_back(y);
      }
    }
  }
}

std::int64_t require_prime(const FiniteGroup& g, const char* what) {
  if (g.order() == 1) return 0;
  std::int64_t p = group_prime(g);
  if (p == 0) throw InvalidArgument(std::string(what) + ": group of order " + std::to_string(g.order()) + " is not a p-group");
  return p;
}

}  // namespace

void to_json(nlohmann::json& j, const AffinePair& a) { j = nlohmann::json{{"v", a.v}, {"t", a.t}}; }

void from_json(const nlohmann::json& j, AffinePair& a) {
  a.v = j.at("v").get<std::vector<std::int64_t>>();
  a.t = j.at("t").get<std::int64_t>();
}

std::string to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::monomial: return "monomial";
    case CarrierKind::affine: return "affine";
    case CarrierKind::product: return "product";
    case CarrierKind::quotient: return "quotient";
    case CarrierKind::subgroup: return "subgroup";
  }
  return "unknown";
}

FiniteGroup::FiniteGroup(std::vector<Index> table, std::vector<Index> generators, detail::Carrier carrier)
    : order_(0), generators_(std::move(generators)) {
  std::size_t n = 0;
  while (n * n < table.size()) ++n;
  if (n == 0 || n * n != table.size()) throw InvalidArgument("multiplication table is not square");
  order_ = n;
  std::vector<Index> inverse(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == 0) {
        inverse[a] = static_cast<Index>(b);
        found = true;
        break;
      }
    if (!found) throw InvalidArgument("multiplication table has an element without inverse");
  }
  table_ = std::make_shared<const std::vector<Index>>(std::move(table));
  inverse_ = std::make_shared<const std::vector<Index>>(std::move(inverse));
  if (auto* mats = std::get_if<std::vector<MonomialMatrix>>(&carrier)) {
    auto idx = std::make_shared<std::map<MonomialMatrix, Index>>();
    for (std::size_t i = 0; i < mats->size(); ++i) idx->emplace((*mats)[i], static_cast<Index>(i));
    matrix_index_ = std::move(idx);
  }
  carrier_ = std::make_shared<const detail::Carrier>(std::move(carrier));
}

Index FiniteGroup::pow(Index a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Index result = identity();
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

CarrierKind FiniteGroup::carrier_kind() const noexcept { return static_cast<CarrierKind>(carrier_->index()); }

const MonomialMatrix& FiniteGroup::matrix(Index i) const { return matrices().at(i); }

const std::vector<MonomialMatrix>& FiniteGroup::matrices() const {
  auto* mats = std::get_if<std::vector<MonomialMatrix>>(carrier_.get());
  if (!mats) throw InvalidArgument("group carrier is " + to_string(carrier_kind()) + ", not monomial");
  return *mats;
}

const AffinePair& FiniteGroup::affine(Index i) const {
  auto* pairs = std::get_if<std::vector<AffinePair>>(carrier_.get());
  if (!pairs) throw InvalidArgument("group carrier is " + to_string(carrier_kind()) + ", not affine");
  return pairs->at(i);
}

nlohmann::json FiniteGroup::describe(Index i) const {
  return std::visit(
      [&](const auto& c) -> nlohmann::json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, std::vector<MonomialMatrix>>) {
          return c.at(i);
        } else if constexpr (std::is_same_v<C, std::vector<AffinePair>>) {
          return c.at(i);
        } else if constexpr (std::is_same_v<C, detail::ProductCarrier>) {
          Index n2 = static_cast<Index>(c.right->order());
          return nlohmann::json{{"components", {c.left->describe(i / n2), c.right->describe(i % n2)}}};
        } else if constexpr (std::is_same_v<C, detail::QuotientCarrier>) {
          return nlohmann::json{{"coset_of", c.parent->describe(c.representatives.at(i))}};
        } else {
          return c.parent->describe(c.members.at(i));
        }
      },
      *carrier_);
}

std::optional<Index> FiniteGroup::find(const MonomialMatrix& m) const {
  if (!matrix_index_) return std::nullopt;
  auto it = matrix_index_->find(m);
  if (it == matrix_index_->end()) return std::nullopt;
  return it->second;
}

FiniteGroup close(const std::vector<MonomialMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidArgument("close: need at least one generator");
  std::size_t n = generators.front().dim();
  for (const auto& g : generators)
    if (g.dim() != n) throw InvalidArgument("close: generators have different dimensions");
  auto closed = close_generic(generators, MonomialMatrix::identity(n),
                              [](const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; }, cap, "monomial group");
  return FiniteGroup(std::move(closed.table), std::move(closed.generator_indices), std::move(closed.elements));
}

std::vector<std::int64_t> affine_act(const std::vector<std::vector<std::int64_t>>& action, std::int64_t modulus,
                                     const std::vector<std::int64_t>& v, std::int64_t s) {
  std::vector<std::int64_t> out = v;
  // Only valid when M^modulus = I, which the basic-group builder checks.
  s = floor_mod(s, modulus);
  for (std::int64_t step = 0; step < s; ++step) {
    std::vector<std::int64_t> next(out.size(), 0);
    for (std::size_t r = 0; r < out.size(); ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < out.size(); ++c) acc += action[r][c] * out[c];
      next[r] = floor_mod(acc, modulus);
    }
    out = std::move(next);
  }
  return out;
}

FiniteGroup close_affine(const std::vector<AffinePair>& generators, const std::vector<std::vector<std::int64_t>>& action,
                         std::int64_t modulus, std::size_t cap) {
  if (generators.empty()) throw InvalidArgument("close_affine: need at least one generator");
  std::size_t c = action.size();
  for (const auto& g : generators)
    if (g.v.size() != c) throw InvalidArgument("close_affine: generator length differs from action size");
  AffinePair identity{std::vector<std::int64_t>(c, 0), 0};
  auto mul = [&](const AffinePair& x, const AffinePair& y) {
    AffinePair out{affine_act(action, modulus, x.v, y.t), floor_mod(x.t + y.t, modulus)};
    for (std::size_t i = 0; i < c; ++i) out.v[i] = floor_mod(out.v[i] + y.v[i], modulus);
    return out;
  };
  auto closed = close_generic(generators, identity, mul, cap, "affine group");
  return FiniteGroup(std::move(closed.table), std::move(closed.generator_indices), std::move(closed.elements));
}

Subgroup::Subgroup(std::vector<bool> mask) : mask_(std::move(mask)) {
  for (Index i = 0; i < mask_.size(); ++i)
    if (mask_[i]) members_.push_back(i);
}

std::int64_t element_order(const FiniteGroup& g, Index i) {
  std::int64_t k = 1;
  for (Index x = i; x != FiniteGroup::identity(); x = g.mul(x, i)) ++k;
  return k;
}

std::int64_t exponent(const FiniteGroup& g) {
  std::int64_t e = 1;
  for (Index i = 0; i < g.order(); ++i) e = std::lcm(e, element_order(g, i));
  return e;
}

std::int64_t group_prime(const FiniteGroup& g) { return prime_of_power(static_cast<std::int64_t>(g.order())); }

Index commutator(const FiniteGroup& g, Index x, Index y) { return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)); }

Subgroup whole_group(const FiniteGroup& g) { return Subgroup(std::vector<bool>(g.order(), true)); }

Subgroup trivial_subgroup(const FiniteGroup& g) {
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  return Subgroup(std::move(mask));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  close_mask(g, mask, gens);
  return Subgroup(std::move(mask));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::initializer_list<Index> gens) {
  return subgroup_generated(g, std::span<const Index>(gens.begin(), gens.size()));
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<bool> hit(g.order(), false);
  std::vector<Index> gens;
  for (Index x : a.members())
    for (Index y : b.members()) {
      Index c = commutator(g, x, y);
      if (!hit[c]) {
        hit[c] = true;
        gens.push_back(c);
      }
    }
  return subgroup_generated(g, gens);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!h.contains(FiniteGroup::identity())) return false;
  for (Index x : h.members()) {
    if (!h.contains(g.inv(x))) return false;
    for (Index y : h.members())
      if (!h.contains(g.mul(x, y))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Index s : g.generators())
    for (Index x : h.members())
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<bool> hit(g.order(), false);
  std::vector<Index> conjugates;
  for (Index x : gens)
    for (Index t = 0; t < g.order(); ++t) {
      Index c = g.conj(x, t);
      if (!hit[c]) {
        hit[c] = true;
        conjugates.push_back(c);
      }
    }
  return subgroup_generated(g, conjugates);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  Subgroup all = series.front();
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next.order() == series.back().order())
      throw InvalidArgument("lower central series stalls at order " + std::to_string(next.order()) + ": group is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const FiniteGroup& g) { return static_cast<int>(lower_central_series(g).size()) - 1; }

Subgroup center(const FiniteGroup& g) {
  std::vector<bool> mask(g.order(), false);
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    mask[x] = central;
  }
  return Subgroup(std::move(mask));
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (Index a : gens)
    for (Index b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_metabelian(const FiniteGroup& g) {
  Subgroup derived = commutator_subgroup(g, whole_group(g), whole_group(g));
  for (Index a : derived.members())
    for (Index b : derived.members())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int exponent_log(const FiniteGroup& g) {
  std::int64_t p = require_prime(g, "exponent_log");
  if (p == 0) return 0;
  std::int64_t e = exponent(g);
  int k = 0;
  while (e > 1) {
    e /= p;
    ++k;
  }
  return k;
}

std::vector<Index> delta_k(const FiniteGroup& g, int k) {
  std::int64_t p = require_prime(g, "delta_k");
  if (p == 0) return {FiniteGroup::identity()};
  std::int64_t q = ipow(p, k);
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x)
    if (g.pow(x, q) == FiniteGroup::identity()) out.push_back(x);
  return out;
}

std::vector<Index> nabla_k(const FiniteGroup& g, int k) {
  std::int64_t p = require_prime(g, "nabla_k");
  if (p == 0) return {FiniteGroup::identity()};
  std::int64_t q = ipow(p, k);
  std::vector<bool> mask(g.order(), false);
  for (Index x = 0; x < g.order(); ++x) mask[g.pow(x, q)] = true;
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

Subgroup omega_k(const FiniteGroup& g, int k) {
  auto d = delta_k(g, k);
  return subgroup_generated(g, d);
}

Subgroup mho_k(const FiniteGroup& g, int k) {
  auto d = nabla_k(g, k);
  return subgroup_generated(g, d);
}

namespace {

struct MaskHash {
  std::size_t operator()(const std::vector<bool>& m) const noexcept { return std::hash<std::vector<bool>>{}(m); }
};

// A seed subgroup together with a generating list for it.
struct Seed {
  Subgroup group;
  std::vector<Index> gens;
};

// Grow a family of subgroups closed under joins with the seeds. Each entry
// keeps a generating list so a join is one closure of the union of lists.
SubgroupEnumeration join_closure(const FiniteGroup& g, const std::vector<Seed>& seeds, std::size_t limit) {
  SubgroupEnumeration out;
  std::unordered_set<std::vector<bool>, MaskHash> seen;
  std::vector<std::pair<Subgroup, std::vector<Index>>> found;
  std::deque<std::size_t> todo;

  auto add = [&](Subgroup h, std::vector<Index> gens) {
    if (!seen.insert(h.mask()).second) return;
    found.emplace_back(std::move(h), std::move(gens));
    todo.push_back(found.size() - 1);
  };

  add(trivial_subgroup(g), {});
  for (const auto& seed : seeds) add(seed.group, seed.gens);

  while (!todo.empty()) {
    if (found.size() > limit) {
      out.capped = true;
      out.reason = "more than " + std::to_string(limit) + " subgroups";
      return out;
    }
    std::size_t at = todo.front();
    todo.pop_front();
    for (const auto& seed : seeds) {
      const Subgroup& h = found[at].first;
      if (std::all_of(seed.gens.begin(), seed.gens.end(), [&](Index x) { return h.contains(x); })) continue;
      std::vector<bool> mask = h.mask();
      std::vector<Index> gens = found[at].second;
      for (Index x : seed.gens)
        if (!h.contains(x)) gens.push_back(x);
      close_mask(g, mask, gens);
      add(Subgroup(std::move(mask)), std::move(gens));
    }
  }

  for (auto& entry : found) out.subgroups.push_back(std::move(entry.first));
  std::sort(out.subgroups.begin(), out.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

}  // namespace

SubgroupEnumeration normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    SubgroupEnumeration out;
    out.capped = true;
    out.reason = "group order " + std::to_string(g.order()) + " exceeds normal-subgroup cap " + std::to_string(cap);
    return out;
  }
  std::vector<Seed> seeds;
  std::unordered_set<std::vector<bool>, MaskHash> seen;
  for (Index x = 1; x < g.order(); ++x) {
    Index one[] = {x};
    Subgroup ncl = normal_closure(g, one);
    if (!seen.insert(ncl.mask()).second) continue;
    std::vector<Index> conjugacy_class;
    for (Index t = 0; t < g.order(); ++t) {
      Index c = g.conj(x, t);
      if (std::find(conjugacy_class.begin(), conjugacy_class.end(), c) == conjugacy_class.end()) conjugacy_class.push_back(c);
    }
    seeds.push_back({std::move(ncl), std::move(conjugacy_class)});
  }
  return join_closure(g, seeds, 100000);
}

SubgroupEnumeration all_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    SubgroupEnumeration out;
    out.capped = true;
    out.reason = "group order " + std::to_string(g.order()) + " exceeds subgroup-enumeration cap " + std::to_string(cap);
    return out;
  }
  std::vector<Seed> seeds;
  std::unordered_set<std::vector<bool>, MaskHash> seen;
  for (Index x = 1; x < g.order(); ++x) {
    Subgroup cyc = subgroup_generated(g, {x});
    if (seen.insert(cyc.mask()).second) seeds.push_back({std::move(cyc), {x}});
  }
  return join_closure(g, seeds, 200000);
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InvalidArgument("quotient: subgroup is not normal");
  constexpr Index unset = ~Index{0};
  std::vector<Index> coset(g.order(), unset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    auto id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index m : n.members()) coset[g.mul(x, m)] = id;
  }
  std::size_t q = reps.size();
  std::vector<Index> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<Index> gens;
  for (Index s : g.generators()) {
    Index c = coset[s];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  return FiniteGroup(std::move(table), std::move(gens),
                     detail::QuotientCarrier{std::make_shared<const FiniteGroup>(g), std::move(reps)});
}

FiniteGroup as_group(const FiniteGroup& g, const Subgroup& h) {
  const auto& members = h.members();
  std::vector<Index> position(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<Index>(i);
  std::size_t n = members.size();
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = position[g.mul(members[a], members[b])];

  std::vector<Index> parent_gens;
  std::vector<bool> reached(g.order(), false);
  reached[0] = true;
  for (Index x : members) {
    if (reached[x]) continue;
    parent_gens.push_back(x);
    close_mask(g, reached, parent_gens);
  }
  std::vector<Index> gens;
  for (Index x : parent_gens) gens.push_back(position[x]);
  return FiniteGroup(std::move(table), std::move(gens),
                     detail::SubgroupCarrier{std::make_shared<const FiniteGroup>(g), members});
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::size_t cap) {
  std::size_t n1 = g1.order(), n2 = g2.order();
  if (n1 * n2 > cap) throw CapExceeded("direct product exceeds cap", n1 * n2, cap);
  std::size_t n = n1 * n2;
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto a1 = static_cast<Index>(a / n2), a2 = static_cast<Index>(a % n2);
    for (std::size_t b = 0; b < n; ++b) {
      auto b1 = static_cast<Index>(b / n2), b2 = static_cast<Index>(b % n2);
      table[a * n + b] = static_cast<Index>(std::size_t{g1.mul(a1, b1)} * n2 + g2.mul(a2, b2));
    }
  }
  std::vector<Index> gens;
  for (Index s : g1.generators()) gens.push_back(static_cast<Index>(std::size_t{s} * n2));
  for (Index s : g2.generators()) gens.push_back(s);
  return FiniteGroup(std::move(table), std::move(gens),
                     detail::ProductCarrier{std::make_shared<const FiniteGroup>(g1), std::make_shared<const FiniteGroup>(g2)});
}

FiniteGroup direct_power(const FiniteGroup& g, int m, std::size_t cap) {
  if (m < 1) throw InvalidArgument("direct_power: m must be at least 1");
  FiniteGroup out = g;
  for (int i = 1; i < m; ++i) out = direct_product(out, g, cap);
  return out;
}

Index engel_bracket(const FiniteGroup& g, Index x, Index y, int k) {
  if (k < 1) throw InvalidArgument("engel_bracket: k must be at least 1");
  Index r = commutator(g, x, y);
  for (int i = 2; i <= k; ++i) r = commutator(g, r, y);
  return r;
}

std::optional<std::vector<MonomialMatrix>> extend_homomorphism(const FiniteGroup& g,
                                                               const std::vector<MonomialMatrix>& generator_images) {
  const auto& gens = g.generators();
  if (gens.size() != generator_images.size())
    throw InvalidArgument("extend_homomorphism: " + std::to_string(generator_images.size()) + " images for " +
                          std::to_string(gens.size()) + " generators");
  if (generator_images.empty()) throw InvalidArgument("extend_homomorphism: no generators");
  std::size_t dim = generator_images.front().dim();
  std::vector<std::optional<MonomialMatrix>> image(g.order());
  image[0] = MonomialMatrix::identity(dim);
  std::deque<Index> todo{0};
  // Consistency on every edge x -> x*s of the Cayley graph is equivalent to
  // the homomorphism property.
  while (!todo.empty()) {
    Index x = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Index y = g.mul(x, gens[k]);
      MonomialMatrix candidate = *image[x] * generator_images[k];
      if (!image[y]) {
        image[y] = std::move(candidate);
        todo.push_back(y);
      } else if (*image[y] != candidate) {
        return std::nullopt;
      }
    }
  }
  std::vector<MonomialMatrix> out;
  out.reserve(g.order());
  for (auto& m : image) out.push_back(std::move(*m));
  return out;
}

}  // namespace submul
