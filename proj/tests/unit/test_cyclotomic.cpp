#include <doctest.h>

#include <numeric>
#include <random>

#include "submul/cyclotomic.hpp"
#include "submul/error.hpp"

using namespace submul;

namespace {

CyclotomicUnit cu(std::int64_t n, std::int64_t d) { return CyclotomicUnit::make(n, d); }

std::vector<CyclotomicUnit> all_units(std::int64_t max_den) {
  std::vector<CyclotomicUnit> out;
  for (std::int64_t d = 1; d <= max_den; ++d)
    for (std::int64_t n = 0; n < d; ++n)
      if (std::gcd(n, d) == 1 || (n == 0 && d == 1)) out.push_back(cu(n, d));
  return out;
}

}  // namespace

TEST_CASE("make reduces to canonical form") {
  CHECK(cu(5, 10) == cu(1, 2));
  CHECK(cu(5, 10).num() == 1);
  CHECK(cu(5, 10).den() == 2);
  CHECK(cu(0, 7).num() == 0);
  CHECK(cu(0, 7).den() == 1);
  CHECK(cu(-1, 3).num() == 2);
  CHECK(cu(-1, 3).den() == 3);
  CHECK(cu(14, 7).is_identity());
  CHECK_THROWS_AS(cu(1, 0), InvalidArgument);
  CHECK_THROWS_AS(cu(1, -4), InvalidArgument);
}

TEST_CASE("multiplication adds fractions mod 1") {
  CHECK(cu(1, 3) * cu(2, 3) == CyclotomicUnit{});
  CHECK(cu(1, 4) * cu(1, 4) == cu(1, 2));
  CHECK(cu(1, 3) * cu(1, 2) == cu(5, 6));
}

TEST_CASE("powers and orders") {
  CHECK(cu(1, 9).pow(3) == cu(1, 3));
  CHECK(cu(2, 3).order() == 3);
  CHECK(cu(1, 2).pow(-1) == cu(1, 2));
  CHECK(cu(3, 8).pow(8).is_identity());
  CHECK(cu(3, 8).pow(-3) == cu(7, 8));
}

TEST_CASE("complex bridge") {
  auto close = [](std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-12; };
  CHECK(close(cu(0, 1).to_complex(), {1, 0}));
  CHECK(close(cu(1, 2).to_complex(), {-1, 0}));
  CHECK(close(cu(1, 4).to_complex(), {0, 1}));
  for (const auto& u : all_units(64)) CHECK(std::abs(std::abs(u.to_complex()) - 1.0) < 1e-12);
}

TEST_CASE("group axioms by exhaustion over denominators up to 64") {
  auto units = all_units(64);
  REQUIRE(units.size() > 1000);
  const CyclotomicUnit one;
  for (const auto& a : units) {
    REQUIRE(a.num() >= 0);
    REQUIRE(a.num() < a.den());
    REQUIRE((std::gcd(a.num(), a.den()) == 1 || a.is_identity()));
    REQUIRE(a * one == a);
    REQUIRE(one * a == a);
    REQUIRE(a * a.pow(-1) == one);
    REQUIRE(a.pow(-1) == a.inverse());
    // The order is the least k with a^k = 1.
    std::int64_t k = 1;
    while (!a.pow(k).is_identity()) ++k;
    REQUIRE(k == a.order());
  }
  // Commutativity and associativity on a dense slice.
  std::vector<CyclotomicUnit> slice(units.begin(), units.begin() + 160);
  for (const auto& a : slice)
    for (const auto& b : slice) {
      REQUIRE(a * b == b * a);
      for (std::size_t t = 0; t < slice.size(); t += 7) REQUIRE((a * b) * slice[t] == a * (b * slice[t]));
    }
}

TEST_CASE("canonical ordering is denominator first") {
  CHECK(cu(0, 1) < cu(1, 2));
  CHECK(cu(1, 2) < cu(1, 3));
  CHECK(cu(1, 3) < cu(2, 3));
  CHECK(cu(2, 3) < cu(1, 4));
}

TEST_CASE("spectra are sets") {
  Spectrum s{cu(2, 3), cu(1, 3), cu(2, 3)};
  CHECK(s.size() == 2);
  CHECK(s == Spectrum{cu(1, 3), cu(2, 3)});
  CHECK(s.contains(cu(1, 3)));
  CHECK_FALSE(s.contains(cu(0, 1)));
  CHECK(s.inverse() == s);
  CHECK(Spectrum{cu(1, 4)}.inverse() == Spectrum{cu(3, 4)});
}

TEST_CASE("spectrum products") {
  CHECK(spectrum_product(Spectrum{CyclotomicUnit{}}, Spectrum{cu(1, 3), cu(2, 3)}) == Spectrum{cu(1, 3), cu(2, 3)});
  Spectrum pm_i{cu(1, 4), cu(3, 4)};
  CHECK(spectrum_product(pm_i, pm_i) == Spectrum{cu(0, 1), cu(1, 2)});
  CHECK(spectrum_product(gamma(3, 1), gamma(3, 1)) == gamma(3, 1));
}

TEST_CASE("first_outside_product agrees with the materialized product") {
  Spectrum a{cu(1, 4), cu(3, 4)}, target{cu(1, 4), cu(0, 1), cu(1, 2)};
  const CyclotomicUnit* w = first_outside_product(target, a, a);
  REQUIRE(w != nullptr);
  CHECK(*w == cu(1, 4));
  CHECK(first_outside_product(Spectrum{cu(1, 2)}, a, a) == nullptr);
}

TEST_CASE("spectrum_product is commutative and monotone") {
  auto units = all_units(12);
  std::mt19937_64 rng(11);
  auto pick = [&](std::size_t k) {
    std::vector<CyclotomicUnit> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(units[rng() % units.size()]);
    return Spectrum(v);
  };
  for (int trial = 0; trial < 300; ++trial) {
    Spectrum s = pick(1 + rng() % 4), t = pick(1 + rng() % 4), extra = pick(1 + rng() % 3);
    std::vector<CyclotomicUnit> grown(s.begin(), s.end());
    grown.insert(grown.end(), extra.begin(), extra.end());
    Spectrum s2(grown);
    REQUIRE(spectrum_product(s, t) == spectrum_product(t, s));
    REQUIRE(s.is_subset_of(s2));
    REQUIRE(spectrum_product(s, t).is_subset_of(spectrum_product(s2, t)));
    REQUIRE(spectrum_product(t, s).is_subset_of(spectrum_product(t, s2)));
  }
}

TEST_CASE("gamma") {
  CHECK(gamma(3, 0) == Spectrum{CyclotomicUnit{}});
  CHECK(gamma(3, 1) == Spectrum{cu(0, 1), cu(1, 3), cu(2, 3)});
  CHECK(gamma(5, 2).size() == 25);
  for (const auto& u : gamma(5, 2)) CHECK(25 % u.order() == 0);
  CHECK_THROWS_AS(gamma(6, 1), InvalidArgument);
  CHECK_THROWS_AS(gamma(3, -1), InvalidArgument);
}

TEST_CASE("integer helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(ipow(3, 4) == 81);
  CHECK(prime_of_power(81) == 3);
  CHECK(prime_of_power(12) == 0);
  CHECK(prime_of_power(1) == 0);
}

TEST_CASE("json form") {
  nlohmann::json j = cu(3, 9);
  CHECK(j == nlohmann::json{{"num", 1}, {"den", 3}});
  CHECK(j.get<CyclotomicUnit>() == cu(1, 3));
}
