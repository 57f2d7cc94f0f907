#pragma once

// Finite groups as flat multiplication tables over canonically ordered
// elements.
//
// Every group is closed once and then immutable. Index 0 is always the
// identity. Groups obtained by closing generators order their elements by
// BFS layer (distance from the identity in the right Cayley graph) and then
// by canonical carrier key, so indices are reproducible across runs.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "submul/error.hpp"
#include "submul/monomial.hpp"

namespace submul {

using Index = std::uint32_t;

/// Element of a basic group B_p(c,e): the word b^t a^v, with v in
/// (Z_{p^e})^c and t in Z_{p^e}.
struct AffinePair {
  std::vector<std::int64_t> v;
  std::int64_t t = 0;

  bool operator==(const AffinePair&) const = default;
  auto operator<=>(const AffinePair&) const = default;
};

void to_json(nlohmann::json& j, const AffinePair& a);
void from_json(const nlohmann::json& j, AffinePair& a);

enum class CarrierKind { monomial, affine, product, quotient, subgroup };

std::string to_string(CarrierKind kind);

class FiniteGroup;

namespace detail {

struct ProductCarrier {
  std::shared_ptr<const FiniteGroup> left;
  std::shared_ptr<const FiniteGroup> right;
};

struct QuotientCarrier {
  std::shared_ptr<const FiniteGroup> parent;
  std::vector<Index> representatives;
};

struct SubgroupCarrier {
  std::shared_ptr<const FiniteGroup> parent;
  std::vector<Index> members;
};

using Carrier = std::variant<std::vector<MonomialMatrix>, std::vector<AffinePair>, ProductCarrier, QuotientCarrier,
                             SubgroupCarrier>;

}  // namespace detail

class FiniteGroup {
 public:
  /// Build from a complete multiplication table. Used by the closure and the
  /// derived-group constructions; validates shape only.
  FiniteGroup(std::vector<Index> table, std::vector<Index> generators, detail::Carrier carrier);

  std::size_t order() const noexcept { return order_; }
  static constexpr Index identity() noexcept { return 0; }

  Index mul(Index a, Index b) const noexcept { return (*table_)[std::size_t{a} * order_ + b]; }
  Index inv(Index a) const noexcept { return (*inverse_)[a]; }
  Index pow(Index a, std::int64_t k) const;
  Index conj(Index x, Index g) const noexcept { return mul(mul(inv(g), x), g); }

  /// Indices of the generators the group was built from.
  const std::vector<Index>& generators() const noexcept { return generators_; }

  CarrierKind carrier_kind() const noexcept;
  bool has_matrices() const noexcept { return carrier_kind() == CarrierKind::monomial; }
  const MonomialMatrix& matrix(Index i) const;
  const std::vector<MonomialMatrix>& matrices() const;
  const AffinePair& affine(Index i) const;

  /// Serialized form of an element, for witnesses.
  nlohmann::json describe(Index i) const;

  /// Index of a carrier element, if present.
  std::optional<Index> find(const MonomialMatrix& m) const;

 private:
  std::size_t order_;
  std::shared_ptr<const std::vector<Index>> table_;
  std::shared_ptr<const std::vector<Index>> inverse_;
  std::vector<Index> generators_;
  std::shared_ptr<const detail::Carrier> carrier_;
  std::shared_ptr<const std::map<MonomialMatrix, Index>> matrix_index_;
};

/// Close a set of monomial matrices. Throws CapExceeded past cap elements and
/// InvalidArgument for an empty list or mixed dimensions.
FiniteGroup close(const std::vector<MonomialMatrix>& generators, std::size_t cap = 4096);

/// Close affine generators under (v,t)(w,s) = (M^s v + w, t+s), where M is
/// the given c x c matrix over Z_modulus (row-major).
FiniteGroup close_affine(const std::vector<AffinePair>& generators, const std::vector<std::vector<std::int64_t>>& action,
                         std::int64_t modulus, std::size_t cap = 4096);

/// Apply M^s to v over Z_modulus.
std::vector<std::int64_t> affine_act(const std::vector<std::vector<std::int64_t>>& action, std::int64_t modulus,
                                     const std::vector<std::int64_t>& v, std::int64_t s);

/// A subgroup of some FiniteGroup: sorted member indices plus a mask.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<bool> mask);

  std::size_t order() const noexcept { return members_.size(); }
  const std::vector<Index>& members() const noexcept { return members_; }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  bool contains(Index i) const noexcept { return i < mask_.size() && mask_[i]; }
  bool is_trivial() const noexcept { return members_.size() <= 1; }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  std::vector<Index> members_;
  std::vector<bool> mask_;
};

/// Result of a size-limited enumeration. When capped, subgroups is empty and
/// the reason explains which limit was hit.
struct SubgroupEnumeration {
  std::vector<Subgroup> subgroups;
  bool capped = false;
  std::string reason;
};

std::int64_t element_order(const FiniteGroup& g, Index i);
std::int64_t exponent(const FiniteGroup& g);

/// Prime p when |G| = p^k (k >= 1), else 0.
std::int64_t group_prime(const FiniteGroup& g);

Index commutator(const FiniteGroup& g, Index x, Index y);

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> gens);
Subgroup subgroup_generated(const FiniteGroup& g, std::initializer_list<Index> gens);

/// [A, B], generated by all commutators [a, b].
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Index> gens);

/// G = G^(0) > G^(1) > ... down to the trivial group. Throws if the series
/// stalls above the trivial group (G not nilpotent).
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
int nilpotency_class(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_metabelian(const FiniteGroup& g);

/// Elements with x^(p^k) = 1. Requires a p-group.
std::vector<Index> delta_k(const FiniteGroup& g, int k);
/// Elements that are p^k-th powers. Requires a p-group.
std::vector<Index> nabla_k(const FiniteGroup& g, int k);
Subgroup omega_k(const FiniteGroup& g, int k);
Subgroup mho_k(const FiniteGroup& g, int k);

/// Largest e with p^e = exponent for a p-group; 0 for the trivial group.
int exponent_log(const FiniteGroup& g);

/// Normal subgroups as joins of normal closures of single elements.
SubgroupEnumeration normal_subgroups(const FiniteGroup& g, std::size_t cap = 1024);

/// All subgroups, grown by joining cyclic subgroups. Sorted by order, then
/// by member list.
SubgroupEnumeration all_subgroups(const FiniteGroup& g, std::size_t cap = 256);

/// G/N on cosets ordered by least member index. Throws if N is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

/// The subgroup H as a group in its own right, members in parent order.
FiniteGroup as_group(const FiniteGroup& g, const Subgroup& h);

/// G1 x G2 with (i1, i2) at index i1 * |G2| + i2.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::size_t cap = 4096);
FiniteGroup direct_power(const FiniteGroup& g, int m, std::size_t cap = 4096);

/// [x, 1y] = [x, y], [x, ky] = [[x, (k-1)y], y].
Index engel_bracket(const FiniteGroup& g, Index x, Index y, int k);

/// Images of every element under the homomorphism determined by generator
/// images, following a BFS over right multiplication by generators. Returns
/// nullopt if the assignment is not a well-defined homomorphism.
std::optional<std::vector<MonomialMatrix>> extend_homomorphism(const FiniteGroup& g,
                                                               const std::vector<MonomialMatrix>& generator_images);

}  // namespace submul
