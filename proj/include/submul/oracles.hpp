#pragma once

// Independent reference computations used to cross-check the exact engine.
// Nothing here shares code with the decision procedures beyond the
// multiplication table of the group under test.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "submul/cyclotomic.hpp"
#include "submul/group_engine.hpp"
#include "submul/monomial.hpp"

namespace submul::oracle {

/// Dense complex matrix, row-major.
std::vector<std::complex<double>> dense(const MonomialMatrix& m);

/// Eigenvalues of the dense matrix from a general complex eigensolver.
std::vector<std::complex<double>> float_eigenvalues(const MonomialMatrix& m);

/// Nearest root of unity with denominator at most max_den; residual is the
/// distance to it.
CyclotomicUnit nearest_root_of_unity(std::complex<double> z, std::int64_t max_den, double* residual);

/// Dense product via naive triple loop.
std::vector<std::complex<double>> dense_product(const std::vector<std::complex<double>>& a,
                                                const std::vector<std::complex<double>>& b, std::size_t n);

/// A random n x n monomial matrix whose entries have order dividing modulus.
MonomialMatrix random_monomial(std::mt19937_64& rng, std::size_t n, std::int64_t modulus);

/// Regularity by the literal definition: for every pair, build <x,y> by
/// breadth-first search, its commutator subgroup from all commutators, and
/// search it for z with (xy)^p = x^p y^p z^p.
bool brute_force_regular(const FiniteGroup& g, std::int64_t p);

}  // namespace submul::oracle
