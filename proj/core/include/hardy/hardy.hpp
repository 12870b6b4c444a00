#pragma once

// Best constants c_n (continuous, polynomial-times-e^{-x/2} subspace) and
// d_n (discrete, R^n) in the Hardy inequality, their two-sided bounds, and
// the quotient evaluators used to check them.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hardy/eigensolve.hpp"

namespace hardy {

enum class Kind { discrete, continuous };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

struct TheoremBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// 4(1 - 2/(ln((n+1)/2) + 2)) <= c_n <= 4(1 - 8/(ln((n+1)/2) + 4)^2), n >= 1.
TheoremBounds continuous_bounds(std::size_t n);
/// 4(1 - 4/(ln n + 4)) <= d_n <= 4(1 - 8/(ln n + 4)^2); only stated for n >= 3.
std::optional<TheoremBounds> discrete_bounds(std::size_t n);

struct HardyRecord {
  std::size_t n = 0;
  Kind kind = Kind::continuous;
  double constant = 0.0;
  /// Absent when the bound's hypotheses fail (discrete, n < 3).
  std::optional<double> thm_lower;
  std::optional<double> thm_upper;
  /// lambda_min(D_m) for the continuous constant, lambda_min(H_n) for the
  /// discrete one.
  double lambda_min = 0.0;
  std::size_t m_used = 0;
  int iterations = 0;
  double tol = 0.0;
};

/// c_n = 4 / (2 lambda_min(D_m) + 1), m = floor((n+1)/2).
HardyRecord continuous_constant(std::size_t n, const EigenOptions& options = {});
/// d_n = 1 / lambda_min(H_n).
HardyRecord discrete_constant(std::size_t n, const EigenOptions& options = {});
HardyRecord hardy_constant(std::size_t n, Kind kind, const EigenOptions& options = {});

/// A finite sequence a_1 .. a_n.
struct SequenceSample {
  std::vector<double> values;
};

/// sum_k ((1/k) sum_{j<=k} a_j)^2 / sum_k a_k^2. Throws std::invalid_argument
/// for an empty or identically zero sequence.
double discrete_quotient(std::span<const double> a);
inline double discrete_quotient(const SequenceSample& a) { return discrete_quotient(a.values); }

/// a_j = sqrt(j) - sqrt(j-1), j = 1..n.
SequenceSample sqrt_test_sequence(std::size_t n);
double harmonic_number(std::size_t n);
/// 4 - 16/(H_n + 4); d_n exceeds it.
double harmonic_lower_bound(std::size_t n);

/// Coordinates of F(x) = e^{-x/2} sum_k b_k k (L_k(x) - L_{k-1}(x)) in the
/// basis b and in the summed basis t, b_k = t_k - t_{k+1} with t_{n+1} = 0.
class CoefficientVector {
 public:
  static CoefficientVector from_b(std::vector<double> b);
  static CoefficientVector from_t(std::vector<double> t);

  [[nodiscard]] std::size_t size() const { return b_.size(); }
  [[nodiscard]] std::span<const double> b() const { return b_; }
  [[nodiscard]] std::span<const double> t() const { return t_; }

 private:
  CoefficientVector(std::vector<double> b, std::vector<double> t) : b_(std::move(b)), t_(std::move(t)) {}

  std::vector<double> b_;
  std::vector<double> t_;
};

/// The two integrals of the continuous inequality for one F.
struct QuadraticForms {
  double integral_f_sq = 0.0;     ///< int_0^inf f(x)^2 dx
  double integral_mean_sq = 0.0;  ///< int_0^inf (F(x)/x)^2 dx

  /// integral_f_sq / integral_mean_sq; its infimum is 1/c_n.
  [[nodiscard]] double ratio() const { return integral_f_sq / integral_mean_sq; }
};

/// Closed form: (t^T A_n t / 2, sum t_k^2).
QuadraticForms quadratic_forms(const CoefficientVector& coeffs);

/// Largest size accepted by quadrature_oracle.
inline constexpr std::size_t kQuadratureMaxSize = 12;

/// Gauss-Laguerre evaluation of the same two integrals from the Laguerre
/// expansion of F, independent of A_n. Requires size() <= kQuadratureMaxSize
/// and npts >= size() + 1 for exactness.
QuadraticForms quadrature_oracle(const CoefficientVector& coeffs, std::size_t npts);

/// Sequence attaining d_n: the bottom eigenvector of H_n pushed through
/// b = U_n v and a_k = k b_k - (k-1) b_{k-1}.
SequenceSample extremal_sequence(std::size_t n, const EigenOptions& options = {});
/// Coefficients attaining 1/c_n: the bottom eigenvector of the minimizing
/// parity block of A_n, zero on the other parity.
CoefficientVector extremal_coefficients(std::size_t n, const EigenOptions& options = {});

}  // namespace hardy
