#pragma once

// Test-only reference computations. Nothing here calls into the solver paths
// it is used to check: matrices are densified, determinants come from exact
// Gaussian elimination, spectra from Eigen's dense solver.

#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hardy/big_rational.hpp"
#include "hardy/matrices.hpp"

namespace hardy::oracle {

using RationalMatrix = std::vector<std::vector<BigRational>>;

inline RationalMatrix dense_rational(const TridiagonalMatrix& t) {
  const std::size_t n = t.size();
  RationalMatrix m(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = t.at(i, j).to_rational();
  return m;
}

inline Eigen::MatrixXd dense(const TridiagonalMatrix& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = std::max<Eigen::Index>(0, i - 1); j < std::min(n, i + 2); ++j)
      m(i, j) = t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
  return m;
}

inline Eigen::MatrixXd dense(const PentadiagonalMatrix& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
  return m;
}

inline Eigen::MatrixXd dense(const BidiagonalMatrix& u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = u.diag()[static_cast<std::size_t>(i)].to_double();
    if (i + 1 < n) m(i, i + 1) = u.superdiag()[static_cast<std::size_t>(i)].to_double();
  }
  return m;
}

/// Determinant by exact Gaussian elimination with row swaps.
inline BigRational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  BigRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].sign() == 0) ++p;
    if (p == n) return BigRational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].sign() == 0) continue;
      const BigRational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Trace of the inverse by exact Gauss-Jordan elimination.
inline BigRational trace_of_inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = BigRational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c].sign() == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const BigRational piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].sign() == 0) continue;
      const BigRational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  BigRational tr;
  for (std::size_t i = 0; i < n; ++i) tr += inv[i][i];
  return tr;
}

/// int f^2 in the b coordinates: (1/2)[sum k^2 b_k^2 + sum k(k+1) b_k b_{k+1}].
inline BigRational f_energy_in_b(const std::vector<BigRational>& b) {
  BigRational s;
  for (std::size_t k = 1; k <= b.size(); ++k) {
    const BigRational kk(static_cast<std::int64_t>(k));
    s += kk * kk * b[k - 1] * b[k - 1];
    if (k < b.size()) s += kk * (kk + BigRational(1)) * b[k - 1] * b[k];
  }
  return s / BigRational(2);
}

/// Symmetric matrix M with t^T M t = 2 * f_energy_in_b(b(t)), b_k = t_k - t_{k+1},
/// read off by polarization on unit vectors.
inline RationalMatrix brute_force_A(std::size_t n) {
  auto form = [n](const std::vector<BigRational>& t) {
    std::vector<BigRational> b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = t[k] - (k + 1 < n ? t[k + 1] : BigRational(0));
    return BigRational(2) * f_energy_in_b(b);
  };
  RationalMatrix a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRational> e(n);
    e[i] = BigRational(1);
    a[i][i] = form(e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<BigRational> e(n);
      e[i] = BigRational(1);
      e[j] = BigRational(1);
      a[i][j] = (form(e) - a[i][i] - a[j][j]) / BigRational(2);
      a[j][i] = a[i][j];
    }
  }
  return a;
}

inline double dense_min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace hardy::oracle
