#include "submul/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "submul/error.hpp"

namespace submul {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CyclotomicUnit CyclotomicUnit::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidArgument("root of unity needs a positive denominator, got " + std::to_string(den));
  num = floor_mod(num, den);
  if (num == 0) return CyclotomicUnit{};
  std::int64_t g = std::gcd(num, den);
  return CyclotomicUnit(num / g, den / g);
}

CyclotomicUnit CyclotomicUnit::operator*(const CyclotomicUnit& other) const {
  if (den_ == other.den_) return make(num_ + other.num_, den_);
  std::int64_t l = std::lcm(den_, other.den_);
  return make(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

CyclotomicUnit CyclotomicUnit::inverse() const noexcept {
  if (num_ == 0) return *this;
  return CyclotomicUnit(den_ - num_, den_);
}

CyclotomicUnit CyclotomicUnit::pow(std::int64_t k) const {
  // num*k can overflow for huge k; reduce k mod den first.
  return make(num_ * floor_mod(k, den_), den_);
}

std::complex<double> CyclotomicUnit::to_complex() const {
  if (num_ == 0) return {1.0, 0.0};
  // Exact quarter turns keep the float bridge free of rounding noise on axes.
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return std::polar(1.0, angle);
}

std::string CyclotomicUnit::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicUnit& u) {
  return os << '(' << u.num() << '/' << u.den() << ')';
}

void to_json(nlohmann::json& j, const CyclotomicUnit& u) { j = nlohmann::json{{"num", u.num()}, {"den", u.den()}}; }

void from_json(const nlohmann::json& j, CyclotomicUnit& u) {
  u = CyclotomicUnit::make(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Spectrum::Spectrum(std::initializer_list<CyclotomicUnit> elems) : Spectrum(std::vector<CyclotomicUnit>(elems)) {}

Spectrum::Spectrum(std::vector<CyclotomicUnit> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool Spectrum::contains(const CyclotomicUnit& u) const { return std::binary_search(elems_.begin(), elems_.end(), u); }

bool Spectrum::is_subset_of(const Spectrum& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

Spectrum Spectrum::inverse() const {
  std::vector<CyclotomicUnit> out;
  out.reserve(elems_.size());
  for (const auto& u : elems_) out.push_back(u.inverse());
  return Spectrum(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Spectrum& s) {
  os << '{';
  bool first = true;
  for (const auto& u : s) {
    if (!first) os << ", ";
    os << u;
    first = false;
  }
  return os << '}';
}

void to_json(nlohmann::json& j, const Spectrum& s) {
  j = nlohmann::json::array();
  for (const auto& u : s) j.push_back(u);
}

Spectrum spectrum_product(const Spectrum& s, const Spectrum& t) {
  std::vector<CyclotomicUnit> out;
  out.reserve(s.size() * t.size());
  for (const auto& a : s)
    for (const auto& b : t) out.push_back(a * b);
  return Spectrum(std::move(out));
}

const CyclotomicUnit* first_outside_product(const Spectrum& target, const Spectrum& s, const Spectrum& t) {
  for (const auto& lambda : target) {
    bool found = false;
    for (const auto& mu : t) {
      if (s.contains(lambda * mu.inverse())) {
        found = true;
        break;
      }
    }
    if (!found) return &lambda;
  }
  return nullptr;
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw InvalidArgument("negative exponent in ipow");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base) throw InvalidArgument("integer overflow in ipow");
    r *= base;
  }
  return r;
}

std::int64_t prime_of_power(std::int64_t n) noexcept {
  if (n < 2) return 0;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return n;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

Spectrum gamma(std::int64_t p, int k) {
  if (!is_prime(p)) throw InvalidArgument("gamma: " + std::to_string(p) + " is not prime");
  if (k < 0) throw InvalidArgument("gamma: negative k");
  std::int64_t m = ipow(p, k);
  std::vector<CyclotomicUnit> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t j = 0; j < m; ++j) out.push_back(CyclotomicUnit::make(j, m));
  return Spectrum(std::move(out));
}

}  // namespace submul
