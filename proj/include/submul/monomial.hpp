#pragma once

// Monomial matrices over roots of unity.
//
// Column convention: a MonomialMatrix M of dimension n stores, for each
// column j, the row perm[j] holding the single nonzero entry and that entry
// entries[j]. So M e_j = entries[j] * e_{perm[j]}.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "submul/cyclotomic.hpp"

namespace submul {

class MonomialMatrix {
 public:
  MonomialMatrix() = default;

  /// Validates that perm is a bijection of {0..n-1} and sizes agree.
  MonomialMatrix(std::vector<std::size_t> perm, std::vector<CyclotomicUnit> entries);

  static MonomialMatrix identity(std::size_t n);
  static MonomialMatrix diagonal(std::vector<CyclotomicUnit> entries);
  /// Permutation matrix sending e_j to e_{perm[j]}.
  static MonomialMatrix permutation(std::vector<std::size_t> perm);

  std::size_t dim() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<CyclotomicUnit>& entries() const noexcept { return entries_; }

  bool is_identity() const noexcept;
  bool is_diagonal() const noexcept;

  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  MonomialMatrix inverse() const;
  MonomialMatrix pow(std::int64_t k) const;

  /// Scalar multiple.
  MonomialMatrix scaled(const CyclotomicUnit& s) const;

  /// Entrywise Galois action omega -> omega^s; a field automorphism for s
  /// coprime to every entry order, so it maps representations to
  /// representations.
  MonomialMatrix galois_conjugate(std::int64_t s) const;

  /// Canonical key order: dimension, then permutation, then entries.
  bool operator==(const MonomialMatrix&) const = default;
  std::strong_ordering operator<=>(const MonomialMatrix& other) const;

  std::string to_string() const;

 private:
  std::vector<std::size_t> perm_;
  std::vector<CyclotomicUnit> entries_;
};

/// Least k >= 1 with A^k = I, from the cycle structure: a cycle of length l
/// whose entries multiply to c contributes l * order(c).
std::int64_t mm_order(const MonomialMatrix& a);

/// The same order found by repeated multiplication; used to cross-check.
std::int64_t mm_order_by_iteration(const MonomialMatrix& a);

/// Exact eigenvalue set. A cycle of length l whose entry product is c
/// contributes the l roots of lambda^l = c.
Spectrum mm_spectrum(const MonomialMatrix& a);

/// Eigenvalues with multiplicity, in cycle order.
std::vector<CyclotomicUnit> mm_eigenvalues(const MonomialMatrix& a);

CyclotomicUnit mm_det(const MonomialMatrix& a);

/// Kronecker product; basis index of e_i (x) e_k is i * dim(b) + k.
MonomialMatrix mm_tensor(const MonomialMatrix& a, const MonomialMatrix& b);

/// Block-diagonal sum a (+) b.
MonomialMatrix mm_direct_sum(const MonomialMatrix& a, const MonomialMatrix& b);

void to_json(nlohmann::json& j, const MonomialMatrix& m);
void from_json(const nlohmann::json& j, MonomialMatrix& m);

/// A vector over Z_modulus.
struct ExponentVector {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> coords;

  bool operator==(const ExponentVector&) const = default;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

/// Exponents l_j with D[j][j] = omega^{l_j}, omega = exp(2 pi i / p^k).
/// Throws for non-diagonal D or entries whose order does not divide p^k.
ExponentVector chi_map(const MonomialMatrix& d, std::int64_t p, int k);

/// Cyclic shift (k_1, ..., k_n) -> (k_2, ..., k_n, k_1).
ExponentVector shift_pi(const ExponentVector& v);

/// Row-reduced basis over Z_p of the image of (I - pi)^j acting on Z_p^p,
/// 0 <= j <= p.
std::vector<std::vector<std::int64_t>> im_I_minus_pi_power(std::int64_t p, int j);

/// Reduced row echelon form over Z_p (p prime); zero rows dropped.
std::vector<std::vector<std::int64_t>> zp_row_reduce(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// Whether v lies in the Z_p-span of the given rows.
bool zp_in_span(const std::vector<std::vector<std::int64_t>>& basis, const std::vector<std::int64_t>& v, std::int64_t p);

}  // namespace submul
