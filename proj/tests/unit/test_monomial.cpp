#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "submul/constructors.hpp"
#include "submul/error.hpp"
#include "submul/monomial.hpp"
#include "submul/oracles.hpp"

using namespace submul;

namespace {

CyclotomicUnit cu(std::int64_t n, std::int64_t d) { return CyclotomicUnit::make(n, d); }
const CyclotomicUnit one{};

MonomialMatrix random_matrix(std::mt19937_64& rng, std::size_t max_n = 12) {
  std::size_t n = 1 + rng() % max_n;
  static const std::int64_t moduli[] = {2, 3, 4, 6, 8, 9, 12, 27};
  return oracle::random_monomial(rng, n, moduli[rng() % 8]);
}

MonomialMatrix random_diagonal(std::mt19937_64& rng, std::int64_t p, std::int64_t modulus) {
  std::vector<CyclotomicUnit> e;
  for (std::int64_t i = 0; i < p; ++i) e.push_back(cu(static_cast<std::int64_t>(rng() % modulus), modulus));
  return MonomialMatrix::diagonal(e);
}

}  // namespace

TEST_CASE("construction validates the permutation") {
  CHECK_THROWS_AS(MonomialMatrix({0, 0}, {one, one}), InvalidArgument);
  CHECK_THROWS_AS(MonomialMatrix({0, 1}, {one}), InvalidArgument);
  CHECK(MonomialMatrix::identity(4).is_identity());
  CHECK_FALSE(MonomialMatrix::diagonal({one, cu(1, 2)}).is_identity());
  CHECK_FALSE(MonomialMatrix::permutation({1, 0}).is_identity());
}

TEST_CASE("column convention: M e_j = entries[j] e_perm[j]") {
  MonomialMatrix m({2, 0, 1}, {cu(1, 3), one, cu(1, 2)});
  auto d = oracle::dense(m);
  CHECK(std::abs(d[2 * 3 + 0] - cu(1, 3).to_complex()) < 1e-12);
  CHECK(std::abs(d[0 * 3 + 1] - 1.0) < 1e-12);
  CHECK(std::abs(d[1 * 3 + 2] + 1.0) < 1e-12);
}

TEST_CASE("conjugating a diagonal by the cycle matrix") {
  MonomialMatrix P = big_cycle(3, 1);
  MonomialMatrix D = MonomialMatrix::diagonal({cu(1, 3), one, one});
  CHECK(P.inverse() * D * P == MonomialMatrix::diagonal({one, one, cu(1, 3)}));
  CHECK(P * D * P.inverse() == MonomialMatrix::diagonal({one, cu(1, 3), one}));
}

TEST_CASE("inverse, random") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(rng);
    REQUIRE((a * a.inverse()).is_identity());
    REQUIRE((a.inverse() * a).is_identity());
  }
  CHECK_THROWS_AS(MonomialMatrix::identity(2) * MonomialMatrix::identity(3), InvalidArgument);
}

TEST_CASE("products agree with dense multiplication") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(rng);
    auto b = oracle::random_monomial(rng, a.dim(), 12);
    auto want = oracle::dense_product(oracle::dense(a), oracle::dense(b), a.dim());
    auto got = oracle::dense(a * b);
    for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(std::abs(got[i] - want[i]) < 1e-10);
  }
}

TEST_CASE("orders") {
  CHECK(mm_order(MonomialMatrix::identity(5)) == 1);
  CHECK(mm_order(big_cycle(3, 2)) == 9);
  CHECK(mm_order(MonomialMatrix::diagonal({cu(1, 9)})) == 9);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto a = random_matrix(rng, 8);
    std::int64_t k = mm_order(a);
    REQUIRE(k == mm_order_by_iteration(a));
    REQUIRE(a.pow(k).is_identity());
    for (const auto& lambda : mm_spectrum(a)) REQUIRE(k % lambda.order() == 0);
  }
}

TEST_CASE("spectra") {
  CHECK(mm_spectrum(big_cycle(3, 1)) == Spectrum{cu(0, 1), cu(1, 3), cu(2, 3)});
  MonomialMatrix swap({1, 0}, {one, cu(1, 2)});
  CHECK(mm_spectrum(swap) == Spectrum{cu(1, 4), cu(3, 4)});
}

TEST_CASE("spectra agree with a floating eigensolver") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    auto a = random_matrix(rng);
    std::int64_t bound = 12 * 27 * 2;
    std::vector<CyclotomicUnit> rounded;
    for (auto z : oracle::float_eigenvalues(a)) {
      double residual = 0;
      rounded.push_back(oracle::nearest_root_of_unity(z, bound, &residual));
      REQUIRE(residual < 1e-8);
    }
    REQUIRE(Spectrum(rounded) == mm_spectrum(a));
    REQUIRE(mm_eigenvalues(a).size() == a.dim());
    REQUIRE(mm_spectrum(a).size() <= a.dim());
  }
}

TEST_CASE("spectrum of inverse and of permutation conjugates") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(rng, 6);
    REQUIRE(mm_spectrum(a.inverse()) == mm_spectrum(a).inverse());
    std::vector<std::size_t> perm(a.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto q = MonomialMatrix::permutation(perm);
    REQUIRE(mm_spectrum(q.inverse() * a * q) == mm_spectrum(a));
  }
}

TEST_CASE("determinant") {
  CHECK(mm_det(MonomialMatrix::identity(3)) == one);
  CHECK(mm_det(big_cycle(3, 1)) == one);
  CHECK(mm_det(big_cycle(2, 1)) == cu(1, 2));
  std::mt19937_64 rng(29);
  for (int t = 0; t < 500; ++t) {
    auto a = random_matrix(rng);
    auto b = oracle::random_monomial(rng, a.dim(), 8);
    REQUIRE(mm_det(a * b) == mm_det(a) * mm_det(b));
  }
}

TEST_CASE("tensor products") {
  std::mt19937_64 rng(31);
  auto a = random_matrix(rng, 5);
  auto i2a = mm_tensor(MonomialMatrix::identity(2), a);
  CHECK(i2a == mm_direct_sum(a, a));
  CHECK(mm_spectrum(i2a) == mm_spectrum(a));
  for (int t = 0; t < 200; ++t) {
    auto x = random_matrix(rng, 6), y = random_matrix(rng, 6);
    auto xy = mm_tensor(x, y);
    REQUIRE(xy.dim() == x.dim() * y.dim());
    REQUIRE(mm_spectrum(xy) == spectrum_product(mm_spectrum(x), mm_spectrum(y)));
  }
}

TEST_CASE("chi map") {
  CHECK(chi_map(MonomialMatrix::identity(3), 3, 1).coords == std::vector<std::int64_t>{0, 0, 0});
  auto d = MonomialMatrix::diagonal({one, cu(1, 3), cu(2, 3)});
  CHECK(chi_map(d, 3, 1).coords == std::vector<std::int64_t>{0, 1, 2});
  CHECK(chi_map(MonomialMatrix::diagonal({cu(1, 3)}), 3, 2).coords == std::vector<std::int64_t>{3});
  CHECK_THROWS_AS(chi_map(big_cycle(3, 1), 3, 1), InvalidArgument);
  CHECK_THROWS_AS(chi_map(MonomialMatrix::diagonal({cu(1, 9)}), 3, 1), InvalidArgument);
}

TEST_CASE("chi is a homomorphism and intertwines conjugation with the shift") {
  std::mt19937_64 rng(37);
  for (std::int64_t p : {3, 5, 7})
    for (int t = 0; t < 100; ++t) {
      auto d = random_diagonal(rng, p, p), e = random_diagonal(rng, p, p);
      REQUIRE(chi_map(d * e, p, 1) == chi_map(d, p, 1) + chi_map(e, p, 1));
      auto P = big_cycle(p, 1);
      REQUIRE(chi_map(P.inverse() * d * P, p, 1) == shift_pi(chi_map(d, p, 1)));
    }
}

TEST_CASE("images of (I - pi)^j") {
  CHECK(im_I_minus_pi_power(3, 0).size() == 3);
  CHECK(im_I_minus_pi_power(3, 3).empty());
  for (int j = 0; j <= 5; ++j) CHECK(im_I_minus_pi_power(5, j).size() == static_cast<std::size_t>(5 - j));
  CHECK_THROWS_AS(im_I_minus_pi_power(3, 4), InvalidArgument);
  CHECK_THROWS_AS(im_I_minus_pi_power(3, -1), InvalidArgument);
  // (I - pi) applied to any vector lands in the image for j = 1.
  auto basis = im_I_minus_pi_power(5, 1);
  CHECK(zp_in_span(basis, {1, 4, 0, 0, 0}, 5));
  CHECK_FALSE(zp_in_span(basis, {1, 0, 0, 0, 0}, 5));
}

TEST_CASE("row reduction over Z_p") {
  auto r = zp_row_reduce({{1, 2, 0}, {2, 4, 0}, {0, 1, 1}}, 3);
  CHECK(r.size() == 2);
  CHECK(zp_in_span(r, {1, 0, 1}, 3));
}

TEST_CASE("json form") {
  MonomialMatrix m({1, 0}, {cu(1, 4), one});
  nlohmann::json j = m;
  CHECK(j["n"] == 2);
  CHECK(j.get<MonomialMatrix>() == m);
}
