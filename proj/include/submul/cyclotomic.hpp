#pragma once

// Exact roots of unity, stored as reduced fractions in Q/Z.
//
// A CyclotomicUnit (num, den) stands for exp(2*pi*i*num/den). The
// multiplicative group of roots of unity is isomorphic to Q/Z, so products
// are fraction sums mod 1 and the multiplicative order is the denominator.

#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace submul {

class CyclotomicUnit {
 public:
  /// The identity, exp(0) = 1.
  constexpr CyclotomicUnit() noexcept = default;

  /// Canonical form of exp(2*pi*i*num/den). Throws InvalidArgument if den <= 0.
  static CyclotomicUnit make(std::int64_t num, std::int64_t den);

  /// exp(2*pi*i/den), a primitive den-th root of unity.
  static CyclotomicUnit primitive(std::int64_t den) { return make(1, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_identity() const noexcept { return den_ == 1; }

  /// Multiplicative order; equals the reduced denominator.
  std::int64_t order() const noexcept { return den_; }

  CyclotomicUnit operator*(const CyclotomicUnit& other) const;
  CyclotomicUnit& operator*=(const CyclotomicUnit& other) { return *this = *this * other; }
  CyclotomicUnit inverse() const noexcept;
  CyclotomicUnit pow(std::int64_t k) const;

  bool operator==(const CyclotomicUnit&) const = default;
  /// Canonical order: denominator first, then numerator.
  std::strong_ordering operator<=>(const CyclotomicUnit& other) const noexcept {
    if (auto c = den_ <=> other.den_; c != 0) return c;
    return num_ <=> other.num_;
  }

  /// Floating-point value. Used by test oracles and the irreducibility
  /// criterion only; the exact path never goes through this.
  std::complex<double> to_complex() const;

  std::string to_string() const;

 private:
  constexpr CyclotomicUnit(std::int64_t num, std::int64_t den) noexcept : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicUnit& u);

void to_json(nlohmann::json& j, const CyclotomicUnit& u);
void from_json(const nlohmann::json& j, CyclotomicUnit& u);

/// A finite set of roots of unity, kept sorted in canonical order with
/// duplicates removed so that equality is structural.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::initializer_list<CyclotomicUnit> elems);
  explicit Spectrum(std::vector<CyclotomicUnit> elems);

  const std::vector<CyclotomicUnit>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(const CyclotomicUnit& u) const;
  /// Set inclusion: every element of *this lies in other.
  bool is_subset_of(const Spectrum& other) const;

  /// {lambda^-1 : lambda in *this}.
  Spectrum inverse() const;

  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<CyclotomicUnit> elems_;
};

std::ostream& operator<<(std::ostream& os, const Spectrum& s);

void to_json(nlohmann::json& j, const Spectrum& s);

/// {lambda*mu : lambda in s, mu in t}.
Spectrum spectrum_product(const Spectrum& s, const Spectrum& t);

/// First element of target not in s*t, if any, without materializing s*t.
/// The witness is the least such element in canonical order.
const CyclotomicUnit* first_outside_product(const Spectrum& target, const Spectrum& s, const Spectrum& t);

/// All p^k-th roots of unity. Throws InvalidArgument for non-prime p or k < 0.
Spectrum gamma(std::int64_t p, int k);

bool is_prime(std::int64_t n) noexcept;

/// p^k with overflow checking.
std::int64_t ipow(std::int64_t base, int exp);

/// If n = p^k for a prime p and k >= 1, returns p; otherwise 0.
std::int64_t prime_of_power(std::int64_t n) noexcept;

}  // namespace submul
