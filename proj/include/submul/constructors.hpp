#pragma once

// Builders for the matrix and abstract group families used throughout:
// cyclic matrices P_k, the diagonal matrices D_k(i, eta), the Heisenberg and
// wreath monomial groups, the basic metabelian groups B_p(c, e) and their
// induced monomial representations, Q8 and D8.
//
// Every builder is deterministic: the same parameters give the same
// generator list, element for element.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "submul/group_engine.hpp"
#include "submul/monomial.hpp"

namespace submul {

/// The p^k x p^k cyclic permutation matrix, e_j -> e_{j+1 mod p^k}.
MonomialMatrix big_cycle(std::int64_t p, int k);

/// diag(eta^{C(0,i)}, eta^{C(1,i)}, ..., eta^{C(p^k-1,i)}), with C(j,i) = 0
/// for j < i. Requires eta to be a p^k-th root of unity. Determinant one is
/// only guaranteed for 1 <= i <= p-2.
MonomialMatrix dk_matrix(std::int64_t p, int k, int i, CyclotomicUnit eta);

/// One diagonal block of the reordered D_k(i, eta): scalar * prod_u D_{k-1}(u, theta_u).
struct BlockFactorization {
  CyclotomicUnit scalar;
  std::vector<std::pair<int, CyclotomicUnit>> factors;  // (u, theta_u), theta_u in Gamma_{k-1}
};

struct BlockSimilarityResult {
  bool verified = false;
  /// New basis order: position t holds old basis vector order[t].
  std::vector<std::size_t> order;
  std::vector<BlockFactorization> blocks;
  std::string detail;
};

/// Reorders the basis of D_k(i, eta) into residue classes mod p and checks
/// that each of the p diagonal blocks is a scalar times a determinant-one
/// product of D_{k-1}(u, theta) with u <= i and theta in Gamma_{k-1}. Also
/// checks that the same reordering turns P_k^p into p copies of P_{k-1}.
BlockSimilarityResult dk_block_similarity(std::int64_t p, int k, int i, CyclotomicUnit eta);

/// Generators {P, diag(1, w, ..., w^{p-1})} of the order-p^3 exponent-p
/// group, p odd.
std::vector<MonomialMatrix> heisenberg_rep(std::int64_t p);

/// Generators {P, diag(w, 1, ..., 1)} of C_p wr C_p.
std::vector<MonomialMatrix> wreath_cp_cp(std::int64_t p);

std::vector<MonomialMatrix> quaternion8();
std::vector<MonomialMatrix> dihedral8();

/// 1 x 1 generator exp(2 pi i / m).
std::vector<MonomialMatrix> cyclic_rep(std::int64_t m);

/// Diagonal generators diag(w^{r_0}, ..., w^{r_{n-1}}) for each row r, w a
/// primitive modulus-th root of unity.
std::vector<MonomialMatrix> diagonal_abelian(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows);

/// The automorphism a_i -> a_i a_{i+1}, a_c -> a_c of (Z_{p^e})^c as a
/// c x c matrix acting on column vectors.
std::vector<std::vector<std::int64_t>> basic_action(std::int64_t p, int c, int e);

/// B_p(c, e) on the affine carrier, generated by a = (e_1, 0) and b = (0, 1).
/// The defining relations and the order p^{e(c+1)} are verified after
/// closure. Throws InvalidArgument if the action does not have order
/// dividing p^e, CapExceeded if the order exceeds cap.
FiniteGroup basic_group(std::int64_t p, int c, int e, std::size_t cap = 4096);

/// Monomial representation of B_p(c, e) induced from the character
/// a_i -> w^{chi[i]} of A, w = exp(2 pi i / p^e). Returns
/// [psi(a_1), ..., psi(a_c), psi(b)].
std::vector<MonomialMatrix> induced_monomial_rep(std::int64_t p, int c, int e, const std::vector<std::int64_t>& chi);

/// Images of the two group generators (a, b) from an induced_monomial_rep list.
std::vector<MonomialMatrix> basic_generator_images(const std::vector<MonomialMatrix>& rep);

/// All characters of (Z_{p^e})^c as exponent vectors, lexicographic.
std::vector<std::vector<std::int64_t>> all_characters(std::int64_t p, int c, int e);

/// Declarative recipe: family name plus parameters.
struct GroupFamilySpec {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
};

/// The group file form: recipe plus serialized generators.
struct GroupRecipe {
  GroupFamilySpec spec;
  std::string carrier;  // "monomial", "affine" or "product"
  nlohmann::json generators = nlohmann::json::array();
};

void to_json(nlohmann::json& j, const GroupRecipe& r);
void from_json(const nlohmann::json& j, GroupRecipe& r);

/// Validates parameters per family and produces the generators.
GroupRecipe build_recipe(const GroupFamilySpec& spec);

/// Close the recipe's generators into a group.
FiniteGroup load_group(const GroupRecipe& recipe, std::size_t cap = 4096);

/// Generators of a monomial recipe.
std::vector<MonomialMatrix> recipe_matrices(const GroupRecipe& recipe);

/// Short label such as "heisenberg(p=3)".
std::string recipe_label(const GroupRecipe& recipe);

}  // namespace submul
