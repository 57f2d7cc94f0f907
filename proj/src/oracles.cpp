#include "submul/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace submul::oracle {

std::vector<std::complex<double>> dense(const MonomialMatrix& m) {
  std::size_t n = m.dim();
  std::vector<std::complex<double>> out(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) out[m.perm()[j] * n + j] = m.entries()[j].to_complex();
  return out;
}

std::vector<std::complex<double>> float_eigenvalues(const MonomialMatrix& m) {
  std::size_t n = m.dim();
  auto d = dense(m);
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = d[r * n + c];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

CyclotomicUnit nearest_root_of_unity(std::complex<double> z, std::int64_t max_den, double* residual) {
  double turns = std::arg(z) / (2 * std::numbers::pi);
  if (turns < 0) turns += 1;
  CyclotomicUnit best;
  double best_dist = 1e300;
  for (std::int64_t d = 1; d <= max_den; ++d) {
    auto num = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(d)));
    CyclotomicUnit u = CyclotomicUnit::make(num, d);
    double dist = std::abs(z - u.to_complex());
    if (dist < best_dist) {
      best_dist = dist;
      best = u;
    }
  }
  if (residual) *residual = best_dist;
  return best;
}

std::vector<std::complex<double>> dense_product(const std::vector<std::complex<double>>& a,
                                                const std::vector<std::complex<double>>& b, std::size_t n) {
  std::vector<std::complex<double>> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

MonomialMatrix random_monomial(std::mt19937_64& rng, std::size_t n, std::int64_t modulus) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::int64_t> num(0, modulus - 1);
  std::vector<CyclotomicUnit> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back(CyclotomicUnit::make(num(rng), modulus));
  return MonomialMatrix(std::move(perm), std::move(entries));
}

namespace {

Index power(const FiniteGroup& g, Index x, std::int64_t k) {
  Index r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

std::vector<Index> generated(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{0};
  in[0] = true;
  for (std::size_t at = 0; at < members.size(); ++at)
    for (Index s : gens) {
      Index y = g.mul(members[at], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return members;
}

}  // namespace

bool brute_force_regular(const FiniteGroup& g, std::int64_t p) {
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y) {
      Index lhs = power(g, g.mul(x, y), p);
      Index base = g.mul(power(g, x, p), power(g, y, p));
      if (lhs == base) continue;  // z = 1
      std::vector<Index> h = generated(g, {x, y});
      std::vector<Index> comms;
      std::vector<bool> seen(g.order(), false);
      for (Index a : h)
        for (Index b : h) {
          Index c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
          if (!seen[c]) {
            seen[c] = true;
            comms.push_back(c);
          }
        }
      bool found = false;
      for (Index z : generated(g, comms))
        if (g.mul(base, power(g, z, p)) == lhs) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace submul::oracle
