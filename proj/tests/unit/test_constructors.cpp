#include <doctest.h>

#include "submul/constructors.hpp"
#include "submul/properties.hpp"

using namespace submul;
using nlohmann::json;

namespace {

CyclotomicUnit cu(std::int64_t n, std::int64_t d) { return CyclotomicUnit::make(n, d); }
const CyclotomicUnit one{};

}  // namespace

TEST_CASE("big cycle") {
  CHECK(mm_order(big_cycle(3, 1)) == 3);
  CHECK(mm_spectrum(big_cycle(3, 2)) == gamma(3, 2));
  CHECK(mm_det(big_cycle(2, 1)) == cu(1, 2));
  CHECK(big_cycle(5, 1).perm()[4] == 0);
  CHECK_THROWS_AS(big_cycle(4, 1), InvalidArgument);
}

TEST_CASE("D_k matrices") {
  CHECK(dk_matrix(3, 1, 1, cu(1, 3)) == MonomialMatrix::diagonal({one, cu(1, 3), cu(2, 3)}));
  CHECK(dk_matrix(3, 2, 1, one).is_identity());
  for (int i = 1; i <= 3; ++i) CHECK(mm_det(dk_matrix(5, 1, i, cu(1, 5))) == one);
  for (int i = 1; i <= 3; ++i)
    for (std::int64_t t = 0; t < 25; ++t) REQUIRE(mm_det(dk_matrix(5, 2, i, cu(t, 25))) == one);
  // Entry j is eta^C(j, i): for i = 2 and p = 3 that is 1, 1, w.
  CHECK(dk_matrix(3, 1, 2, cu(1, 3)) == MonomialMatrix::diagonal({one, one, cu(1, 3)}));
  CHECK_THROWS_AS(dk_matrix(3, 1, 1, cu(1, 9)), InvalidArgument);
}

TEST_CASE("block similarity of D_k") {
  auto r = dk_block_similarity(3, 2, 1, cu(1, 9));
  CHECK_MESSAGE(r.verified, r.detail);
  CHECK(r.blocks.size() == 3);
  CHECK(r.order.size() == 9);
  CHECK(dk_block_similarity(3, 2, 1, one).verified);
  auto r5 = dk_block_similarity(5, 2, 2, cu(1, 25));
  CHECK_MESSAGE(r5.verified, r5.detail);
  for (const auto& b : r5.blocks)
    for (const auto& [u, theta] : b.factors) {
      REQUIRE(u <= 2);
      REQUIRE(5 % theta.order() == 0);
    }
  for (int i = 1; i <= 3; ++i)
    for (std::int64_t t : {1, 2, 7, 13}) REQUIRE(dk_block_similarity(5, 2, i, cu(t, 25)).verified);
  CHECK(dk_block_similarity(3, 3, 1, cu(1, 27)).verified);
}

TEST_CASE("Heisenberg groups") {
  auto g = close(heisenberg_rep(3));
  CHECK(g.order() == 27);
  CHECK(exponent(g) == 3);
  CHECK(is_irreducible(g));
  CHECK(is_irreducible(heisenberg_rep(5)));
  CHECK_THROWS_AS(heisenberg_rep(2), InvalidArgument);
}

TEST_CASE("wreath product C3 wr C3") {
  auto g = close(wreath_cp_cp(3));
  CHECK(g.order() == 81);
  CHECK(nilpotency_class(g) == 3);
  CHECK(exponent(g) == 9);
  CHECK(close(wreath_cp_cp(2)).order() == 8);
}

TEST_CASE("basic groups") {
  auto b = basic_group(3, 2, 1);
  CHECK(b.order() == 27);
  CHECK(exponent(b) == 3);
  CHECK(nilpotency_class(b) == 2);
  auto b5 = basic_group(5, 4, 1);
  CHECK(b5.order() == 3125);
  CHECK(is_metabelian(b5));
  CHECK(nilpotency_class(b5) == 4);
  auto b312 = basic_group(3, 1, 2);
  CHECK(b312.order() == 81);
  CHECK(exponent(b312) == 9);
  CHECK_THROWS_AS(basic_group(3, 2, 2, 100), CapExceeded);
  CHECK_THROWS_AS(basic_group(4, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(basic_group(3, 4, 1), InvalidArgument);
}

TEST_CASE("basic group relations by substitution") {
  for (auto [p, c, e] : std::vector<std::tuple<std::int64_t, int, int>>{{3, 1, 1}, {3, 2, 1}, {3, 1, 2}, {5, 2, 1}, {3, 3, 1}}) {
    auto g = basic_group(p, c, e);
    Index a = g.generators()[0], b = g.generators()[1];
    std::int64_t q = ipow(p, e);
    REQUIRE(g.pow(a, q) == 0);
    REQUIRE(g.pow(b, q) == 0);
    // a_{i+1} = [a_i, b], and a_c is central.
    std::vector<Index> ai{a};
    for (int i = 1; i < c; ++i) ai.push_back(commutator(g, ai.back(), b));
    REQUIRE(commutator(g, ai.back(), b) == 0);
    for (Index x : ai)
      for (Index y : ai) REQUIRE(g.mul(x, y) == g.mul(y, x));
    REQUIRE(g.order() == static_cast<std::size_t>(ipow(p, e * (c + 1))));
  }
}

TEST_CASE("induced representations") {
  auto rep = induced_monomial_rep(3, 2, 1, {0, 1});
  REQUIRE(rep.size() == 3);
  CHECK(rep[0] == MonomialMatrix::diagonal({one, cu(1, 3), cu(2, 3)}));
  CHECK(rep[0] == dk_matrix(3, 1, 1, cu(1, 3)));
  CHECK(rep[2] == big_cycle(3, 1));
  auto trivial = induced_monomial_rep(3, 2, 1, {0, 0});
  CHECK(trivial[0].is_identity());
  CHECK(trivial[1].is_identity());
  auto gens = basic_generator_images(rep);
  REQUIRE(gens.size() == 2);
  CHECK(is_irreducible(gens));
  CHECK(is_irreducible(basic_generator_images(induced_monomial_rep(3, 2, 2, {0, 1}))));
  CHECK_FALSE(is_irreducible(basic_generator_images(induced_monomial_rep(3, 2, 1, {1, 0}))));
}

TEST_CASE("induced representations are homomorphisms of the basic group") {
  for (auto [p, c, e] : std::vector<std::tuple<std::int64_t, int, int>>{{3, 2, 1}, {3, 1, 2}, {5, 2, 1}}) {
    auto g = basic_group(p, c, e);
    for (const auto& chi : all_characters(p, c, e)) {
      auto gens = basic_generator_images(induced_monomial_rep(p, c, e, chi));
      REQUIRE(extend_homomorphism(g, gens).has_value());
      auto image = close(gens);
      REQUIRE(g.order() % image.order() == 0);
      if (chi.back() % p != 0) REQUIRE(image.order() == g.order());
    }
  }
  CHECK(all_characters(3, 2, 1).size() == 9);
  CHECK(all_characters(3, 1, 2).size() == 9);
}

TEST_CASE("Q8 and D8") {
  auto q = close(quaternion8()), d = close(dihedral8());
  CHECK(q.order() == 8);
  CHECK(d.order() == 8);
  CHECK_FALSE(is_abelian(q));
  CHECK_FALSE(is_abelian(d));
  CHECK(exponent(q) == 4);
  CHECK(exponent(d) == 4);
  // Q8 has one involution, D8 has five.
  CHECK(delta_k(q, 1).size() == 2);
  CHECK(delta_k(d, 1).size() == 6);
}

TEST_CASE("recipes") {
  auto r = build_recipe({"heisenberg", {{"p", 3}}});
  CHECK(r.carrier == "monomial");
  CHECK(r.generators.size() == 2);
  CHECK(recipe_label(r) == "heisenberg(p=3)");
  CHECK(load_group(r).order() == 27);

  auto basic = build_recipe({"basic", {{"p", 3}, {"c", 2}, {"e", 1}}});
  CHECK(basic.carrier == "affine");
  CHECK(load_group(basic).order() == 27);

  auto cyc = build_recipe({"cyclic", {{"m", 9}}});
  REQUIRE(recipe_matrices(cyc).size() == 1);
  CHECK(recipe_matrices(cyc)[0] == MonomialMatrix::diagonal({cu(1, 9)}));

  auto dp = build_recipe({"direct_product", {{"factors", json::array({json{{"family", "heisenberg"}, {"params", {{"p", 3}}}},
                                                                      json{{"family", "cyclic"}, {"params", {{"m", 3}}}}})}}});
  CHECK(dp.carrier == "monomial");
  CHECK(load_group(dp).order() == 81);

  auto mixed = build_recipe({"direct_product", {{"factors", json::array({json{{"family", "basic"}, {"params", {{"p", 3}, {"c", 2}, {"e", 1}}}},
                                                                         json{{"family", "cyclic"}, {"params", {{"m", 9}}}}})}}});
  CHECK(mixed.carrier == "product");
  CHECK(load_group(mixed).order() == 243);
  CHECK_THROWS_AS(recipe_matrices(mixed), InvalidArgument);
}

TEST_CASE("recipes validate parameters") {
  CHECK_THROWS_AS(build_recipe({"heisenberg", {{"p", 4}}}), InvalidArgument);
  CHECK_THROWS_AS(build_recipe({"heisenberg", json::object()}), InvalidArgument);
  CHECK_THROWS_AS(build_recipe({"nope", json::object()}), InvalidArgument);
  CHECK_THROWS_AS(build_recipe({"cyclic", {{"m", 0}}}), InvalidArgument);
  CHECK_THROWS_AS(build_recipe({"induced_rep", {{"p", 3}, {"c", 2}, {"e", 1}, {"chi", {1}}}}), InvalidArgument);
}

TEST_CASE("recipes are deterministic and round-trip") {
  for (const auto& spec : std::vector<GroupFamilySpec>{{"heisenberg", {{"p", 5}}},
                                                       {"wreath_cp_cp", {{"p", 3}}},
                                                       {"basic", {{"p", 3}, {"c", 2}, {"e", 1}}},
                                                       {"induced_rep", {{"p", 3}, {"c", 2}, {"e", 2}, {"chi", {0, 1}}}},
                                                       {"diagonal_abelian", {{"m", 3}, {"diag", {{1, 2, 0}, {0, 1, 2}}}}},
                                                       {"quaternion8", json::object()}}) {
    json a = build_recipe(spec), b = build_recipe(spec);
    REQUIRE(a.dump() == b.dump());
    GroupRecipe back = json::parse(a.dump()).get<GroupRecipe>();
    REQUIRE(json(back).dump() == a.dump());
    REQUIRE(load_group(back).order() == load_group(build_recipe(spec)).order());
  }
}
