#include "submul/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "submul/error.hpp"

namespace submul {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::int64_t result = 1, base = floor_mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

template <class Fn>
void for_each_cycle(const MonomialMatrix& a, Fn&& fn) {
  std::vector<bool> seen(a.dim(), false);
  for (std::size_t start = 0; start < a.dim(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    CyclotomicUnit product;
    for (std::size_t j = start; !seen[j]; j = a.perm()[j]) {
      seen[j] = true;
      product *= a.entries()[j];
      ++len;
    }
    fn(len, product);
  }
}

}  // namespace

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> perm, std::vector<CyclotomicUnit> entries)
    : perm_(std::move(perm)), entries_(std::move(entries)) {
  if (perm_.size() != entries_.size())
    throw InvalidArgument("monomial matrix: perm and entries differ in length");
  if (perm_.empty()) throw InvalidArgument("monomial matrix: dimension must be positive");
  std::vector<bool> hit(perm_.size(), false);
  for (std::size_t r : perm_) {
    if (r >= perm_.size() || hit[r]) throw InvalidArgument("monomial matrix: perm is not a bijection");
    hit[r] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return MonomialMatrix(std::move(perm), std::vector<CyclotomicUnit>(n));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<CyclotomicUnit> entries) {
  std::vector<std::size_t> perm(entries.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return MonomialMatrix(std::move(perm), std::move(entries));
}

MonomialMatrix MonomialMatrix::permutation(std::vector<std::size_t> perm) {
  std::size_t n = perm.size();
  return MonomialMatrix(std::move(perm), std::vector<CyclotomicUnit>(n));
}

bool MonomialMatrix::is_identity() const noexcept {
  for (std::size_t j = 0; j < perm_.size(); ++j)
    if (perm_[j] != j || !entries_[j].is_identity()) return false;
  return true;
}

bool MonomialMatrix::is_diagonal() const noexcept {
  for (std::size_t j = 0; j < perm_.size(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  if (dim() != rhs.dim())
    throw InvalidArgument("monomial product: dimension mismatch " + std::to_string(dim()) + " vs " +
                          std::to_string(rhs.dim()));
  // (AB) e_j = b_j A e_{pb(j)} = b_j a_{pb(j)} e_{pa(pb(j))}
  MonomialMatrix out;
  out.perm_.resize(dim());
  out.entries_.resize(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::size_t mid = rhs.perm_[j];
    out.perm_[j] = perm_[mid];
    out.entries_[j] = entries_[mid] * rhs.entries_[j];
  }
  return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix out;
  out.perm_.resize(dim());
  out.entries_.resize(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    out.perm_[perm_[j]] = j;
    out.entries_[perm_[j]] = entries_[j].inverse();
  }
  return out;
}

MonomialMatrix MonomialMatrix::pow(std::int64_t k) const {
  MonomialMatrix base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  MonomialMatrix result = identity(dim());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

MonomialMatrix MonomialMatrix::scaled(const CyclotomicUnit& s) const {
  MonomialMatrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

MonomialMatrix MonomialMatrix::galois_conjugate(std::int64_t s) const {
  MonomialMatrix out = *this;
  for (auto& e : out.entries_) e = e.pow(s);
  return out;
}

std::strong_ordering MonomialMatrix::operator<=>(const MonomialMatrix& other) const {
  if (auto c = dim() <=> other.dim(); c != 0) return c;
  if (auto c = perm_ <=> other.perm_; c != 0) return c;
  return entries_ <=> other.entries_;
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < dim(); ++j) {
    if (j) os << ", ";
    os << j << "->" << perm_[j] << ":" << entries_[j];
  }
  os << "]";
  return os.str();
}

std::int64_t mm_order(const MonomialMatrix& a) {
  std::int64_t order = 1;
  for_each_cycle(a, [&](std::size_t len, const CyclotomicUnit& c) {
    order = std::lcm(order, static_cast<std::int64_t>(len) * c.order());
  });
  return order;
}

std::int64_t mm_order_by_iteration(const MonomialMatrix& a) {
  MonomialMatrix power = a;
  std::int64_t k = 1;
  while (!power.is_identity()) {
    power = power * a;
    ++k;
  }
  return k;
}

std::vector<CyclotomicUnit> mm_eigenvalues(const MonomialMatrix& a) {
  std::vector<CyclotomicUnit> out;
  out.reserve(a.dim());
  for_each_cycle(a, [&](std::size_t len, const CyclotomicUnit& c) {
    auto l = static_cast<std::int64_t>(len);
    // lambda = exp(2 pi i (num/den + t)/l) = (num + den*t) / (den*l)
    for (std::int64_t t = 0; t < l; ++t) out.push_back(CyclotomicUnit::make(c.num() + c.den() * t, c.den() * l));
  });
  return out;
}

Spectrum mm_spectrum(const MonomialMatrix& a) { return Spectrum(mm_eigenvalues(a)); }

CyclotomicUnit mm_det(const MonomialMatrix& a) {
  CyclotomicUnit det;
  std::size_t cycles = 0;
  for_each_cycle(a, [&](std::size_t, const CyclotomicUnit& c) {
    det *= c;
    ++cycles;
  });
  if ((a.dim() - cycles) % 2 == 1) det *= CyclotomicUnit::make(1, 2);
  return det;
}

MonomialMatrix mm_tensor(const MonomialMatrix& a, const MonomialMatrix& b) {
  std::size_t nb = b.dim();
  std::vector<std::size_t> perm(a.dim() * nb);
  std::vector<CyclotomicUnit> entries(a.dim() * nb);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < nb; ++k) {
      perm[i * nb + k] = a.perm()[i] * nb + b.perm()[k];
      entries[i * nb + k] = a.entries()[i] * b.entries()[k];
    }
  return MonomialMatrix(std::move(perm), std::move(entries));
}

MonomialMatrix mm_direct_sum(const MonomialMatrix& a, const MonomialMatrix& b) {
  std::vector<std::size_t> perm = a.perm();
  std::vector<CyclotomicUnit> entries = a.entries();
  for (std::size_t k = 0; k < b.dim(); ++k) {
    perm.push_back(a.dim() + b.perm()[k]);
    entries.push_back(b.entries()[k]);
  }
  return MonomialMatrix(std::move(perm), std::move(entries));
}

void to_json(nlohmann::json& j, const MonomialMatrix& m) {
  j = nlohmann::json{{"n", m.dim()}, {"perm", m.perm()}, {"entries", m.entries()}};
}

void from_json(const nlohmann::json& j, MonomialMatrix& m) {
  auto n = j.at("n").get<std::size_t>();
  auto perm = j.at("perm").get<std::vector<std::size_t>>();
  auto entries = j.at("entries").get<std::vector<CyclotomicUnit>>();
  if (perm.size() != n) throw InvalidArgument("matrix file: perm length differs from n");
  m = MonomialMatrix(std::move(perm), std::move(entries));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.modulus != b.modulus || a.coords.size() != b.coords.size())
    throw InvalidArgument("exponent vectors live in different modules");
  ExponentVector out{a.modulus, a.coords};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = (out.coords[i] + b.coords[i]) % a.modulus;
  return out;
}

ExponentVector chi_map(const MonomialMatrix& d, std::int64_t p, int k) {
  if (!d.is_diagonal()) throw InvalidArgument("chi_map: matrix is not diagonal");
  std::int64_t modulus = ipow(p, k);
  ExponentVector out{modulus, {}};
  out.coords.reserve(d.dim());
  for (const auto& e : d.entries()) {
    if (modulus % e.den() != 0)
      throw InvalidArgument("chi_map: entry " + e.to_string() + " is not a " + std::to_string(modulus) + "-th root of 1");
    out.coords.push_back(e.num() * (modulus / e.den()));
  }
  return out;
}

ExponentVector shift_pi(const ExponentVector& v) {
  ExponentVector out = v;
  if (!out.coords.empty()) std::rotate(out.coords.begin(), out.coords.begin() + 1, out.coords.end());
  return out;
}

std::vector<std::vector<std::int64_t>> zp_row_reduce(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  if (rows.empty()) return rows;
  std::size_t cols = rows.front().size();
  for (auto& r : rows)
    for (auto& x : r) x = floor_mod(x, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::int64_t inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::int64_t f = rows[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] = floor_mod(rows[r][cc] - f * rows[rank][cc], p);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

bool zp_in_span(const std::vector<std::vector<std::int64_t>>& basis, const std::vector<std::int64_t>& v, std::int64_t p) {
  auto rows = basis;
  std::size_t before = zp_row_reduce(rows, p).size();
  rows.push_back(v);
  return zp_row_reduce(std::move(rows), p).size() == before;
}

std::vector<std::vector<std::int64_t>> im_I_minus_pi_power(std::int64_t p, int j) {
  if (!is_prime(p)) throw InvalidArgument("im_I_minus_pi_power: p must be prime");
  if (j < 0 || j > p) throw InvalidArgument("im_I_minus_pi_power: j out of range [0, p]");
  auto n = static_cast<std::size_t>(p);
  // M = (I - pi)^j as a matrix acting on column vectors; (pi v)_r = v_{r+1}.
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r) m[r][r] = 1;
  for (int step = 0; step < j; ++step) {
    std::vector<std::vector<std::int64_t>> next(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) next[r][c] = floor_mod(m[r][c] - m[(r + 1) % n][c], p);
    m = std::move(next);
  }
  // The image is the column space: row-reduce the transpose.
  std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cols[c][r] = m[r][c];
  return zp_row_reduce(std::move(cols), p);
}

}  // namespace submul
