#pragma once

// Smallest eigenvalue of a symmetric tridiagonal matrix by Sturm-count
// bisection, with shifted inverse iteration as an independent check.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hardy/exact.hpp"
#include "hardy/matrices.hpp"

namespace hardy {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Double-precision working copy of a symmetric tridiagonal matrix.
class RealTridiagonal {
 public:
  explicit RealTridiagonal(const TridiagonalMatrix& t);
  RealTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

  [[nodiscard]] std::size_t size() const { return diag_.size(); }
  [[nodiscard]] std::span<const double> diag() const { return diag_; }
  [[nodiscard]] std::span<const double> offdiag() const { return offdiag_; }
  [[nodiscard]] std::span<const double> offdiag_squared() const { return offdiag_sq_; }
  /// Largest absolute entry.
  [[nodiscard]] double scale() const { return scale_; }
  /// Maximum absolute row sum.
  [[nodiscard]] double inf_norm() const { return inf_norm_; }

  /// y = T x.
  void multiply(std::span<const double> x, std::span<double> y) const;

 private:
  void finish();

  std::vector<double> diag_;
  std::vector<double> offdiag_;
  std::vector<double> offdiag_sq_;
  double scale_ = 0.0;
  double inf_norm_ = 0.0;
};

struct EigenOptions {
  /// Absolute width of the final bracket.
  double tol = 1e-12;
  int max_iterations = 200;
  /// Bracket from [0, min diagonal]; fail if the count at 0 is nonzero.
  bool assume_positive_definite = true;
};

/// Smallest eigenvalue with its bisection bracket. sturm_count(bracket_lo) == 0
/// and sturm_count(bracket_hi) >= 1.
struct EigenResult {
  double lambda_min = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  std::size_t matrix_size = 0;
};

/// Unit-norm vector, sign fixed so the entries sum to a nonnegative value.
struct Eigenvector {
  std::vector<double> values;
};

struct EigenPair {
  double lambda = 0.0;
  Eigenvector vector;
  /// ||T v - lambda v||_2 at exit.
  double residual = 0.0;
  int iterations = 0;
};

/// Result for A_n, solved through its two parity blocks.
struct ABlockResult {
  EigenResult odd_block;                  ///< B_{floor((n+1)/2)}
  std::optional<EigenResult> even_block;  ///< C_{floor(n/2)}, absent for n = 1
  double lambda_min = 0.0;
  bool min_from_odd_block = true;
};

/// Number of eigenvalues strictly below `lambda`.
///
/// Counts negative pivots of the LDL^T factorization of T - lambda I. A zero
/// pivot is replaced by -eps * scale.
std::size_t sturm_count(const RealTridiagonal& t, double lambda);
std::size_t sturm_count(const TridiagonalMatrix& t, double lambda);

/// Bisection on sturm_count. Throws SolverError if the initial bracket does
/// not enclose the smallest eigenvalue (e.g. a non positive definite input
/// under assume_positive_definite) or if max_iterations is exhausted.
EigenResult smallest_eigenvalue(const RealTridiagonal& t, const EigenOptions& options = {});
EigenResult smallest_eigenvalue(const TridiagonalMatrix& t, const EigenOptions& options = {});

/// lambda_min(A_n) as the minimum over its parity blocks.
ABlockResult smallest_eigenvalue_A(std::size_t n, const EigenOptions& options = {});

/// Shifted inverse iteration started from the all-ones vector. The returned
/// eigenvalue is the Rayleigh quotient of the final iterate. Throws
/// SolverError if ||T v - lambda v|| <= 1e-8 ||T||_inf is not reached within
/// max_iterations.
EigenPair inverse_iteration(const RealTridiagonal& t, double shift, int max_iterations = 50);
EigenPair inverse_iteration(const TridiagonalMatrix& t, double shift, int max_iterations = 50);

/// Q_m(lambda) with exact coefficients; lambda is taken as the exact value of
/// the double and only the final result is rounded.
double qpoly_residual(std::size_t m, double lambda,
                      std::size_t cap = exact::kDefaultQPolynomialCap);
double qpoly_residual(const exact::QPolynomial& q, double lambda);

}  // namespace hardy
