#include "hardy/hardy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hardy/laguerre.hpp"
#include "hardy/matrices.hpp"

namespace hardy {

namespace {

void require_size(std::size_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::discrete ? "discrete" : "continuous"; }

std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "discrete") return Kind::discrete;
  if (name == "continuous") return Kind::continuous;
  return std::nullopt;
}

TheoremBounds continuous_bounds(std::size_t n) {
  require_size(n, "continuous_bounds");
  const double l = std::log((static_cast<double>(n) + 1.0) / 2.0);
  return {4.0 * (1.0 - 2.0 / (l + 2.0)), 4.0 * (1.0 - 8.0 / ((l + 4.0) * (l + 4.0)))};
}

std::optional<TheoremBounds> discrete_bounds(std::size_t n) {
  if (n < 3) return std::nullopt;
  const double l = std::log(static_cast<double>(n));
  return TheoremBounds{4.0 * (1.0 - 4.0 / (l + 4.0)), 4.0 * (1.0 - 8.0 / ((l + 4.0) * (l + 4.0)))};
}

HardyRecord continuous_constant(std::size_t n, const EigenOptions& options) {
  require_size(n, "continuous_constant");
  const std::size_t m = (n + 1) / 2;
  const EigenResult eig = smallest_eigenvalue(build_D(m), options);
  const TheoremBounds bounds = continuous_bounds(n);
  HardyRecord r;
  r.n = n;
  r.kind = Kind::continuous;
  r.lambda_min = eig.lambda_min;
  r.constant = 4.0 / (2.0 * eig.lambda_min + 1.0);
  r.thm_lower = bounds.lower;
  r.thm_upper = bounds.upper;
  r.m_used = m;
  r.iterations = eig.iterations;
  r.tol = options.tol;
  return r;
}

HardyRecord discrete_constant(std::size_t n, const EigenOptions& options) {
  require_size(n, "discrete_constant");
  const EigenResult eig = smallest_eigenvalue(build_H(n), options);
  HardyRecord r;
  r.n = n;
  r.kind = Kind::discrete;
  r.lambda_min = eig.lambda_min;
  r.constant = 1.0 / eig.lambda_min;
  if (const auto bounds = discrete_bounds(n)) {
    r.thm_lower = bounds->lower;
    r.thm_upper = bounds->upper;
  }
  r.m_used = n;
  r.iterations = eig.iterations;
  r.tol = options.tol;
  return r;
}

HardyRecord hardy_constant(std::size_t n, Kind kind, const EigenOptions& options) {
  return kind == Kind::discrete ? discrete_constant(n, options) : continuous_constant(n, options);
}

// ---------------------------------------------------------------------------

double discrete_quotient(std::span<const double> a) {
  if (a.empty()) throw std::invalid_argument("discrete_quotient: empty sequence");
  double prefix = 0.0;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    prefix += a[k];
    const double mean = prefix / static_cast<double>(k + 1);
    num += mean * mean;
    den += a[k] * a[k];
  }
  if (den == 0.0) throw std::invalid_argument("discrete_quotient: zero sequence");
  return num / den;
}

SequenceSample sqrt_test_sequence(std::size_t n) {
  require_size(n, "sqrt_test_sequence");
  SequenceSample s;
  s.values.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double jd = static_cast<double>(j);
    // sqrt(j) - sqrt(j-1) without cancellation.
    s.values[j - 1] = 1.0 / (std::sqrt(jd) + std::sqrt(jd - 1.0));
  }
  return s;
}

double harmonic_number(std::size_t n) {
  double h = 0.0;
  for (std::size_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

double harmonic_lower_bound(std::size_t n) {
  require_size(n, "harmonic_lower_bound");
  return 4.0 - 16.0 / (harmonic_number(n) + 4.0);
}

// ---------------------------------------------------------------------------

CoefficientVector CoefficientVector::from_b(std::vector<double> b) {
  if (b.empty()) throw std::invalid_argument("CoefficientVector: empty");
  std::vector<double> t(b.size());
  double acc = 0.0;
  for (std::size_t k = b.size(); k-- > 0;) {
    acc += b[k];
    t[k] = acc;
  }
  return {std::move(b), std::move(t)};
}

CoefficientVector CoefficientVector::from_t(std::vector<double> t) {
  if (t.empty()) throw std::invalid_argument("CoefficientVector: empty");
  std::vector<double> b(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) b[k] = t[k] - (k + 1 < t.size() ? t[k + 1] : 0.0);
  return {std::move(b), std::move(t)};
}

QuadraticForms quadratic_forms(const CoefficientVector& coeffs) {
  const auto t = coeffs.t();
  const PentadiagonalMatrix a = build_A(coeffs.size());
  const auto d = a.diag();
  const auto e = a.offdiag2();
  double form = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    form += d[k].to_double() * t[k] * t[k];
    if (k < e.size()) form += 2.0 * e[k].to_double() * t[k] * t[k + 2];
    sum_sq += t[k] * t[k];
  }
  return {0.5 * form, sum_sq};
}

QuadraticForms quadrature_oracle(const CoefficientVector& coeffs, std::size_t npts) {
  const std::size_t n = coeffs.size();
  if (n > kQuadratureMaxSize) {
    throw std::invalid_argument("quadrature_oracle: size " + std::to_string(n) + " exceeds " +
                                std::to_string(kQuadratureMaxSize));
  }
  if (npts < n + 1) throw std::invalid_argument("quadrature_oracle: need at least n + 1 nodes");
  const GaussLaguerreRule rule = gauss_laguerre(npts);
  const auto b = coeffs.b();

  QuadraticForms out;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const LaguerreJet jet = laguerre_jet(n, x);
    // p(x) = sum_k b_k k (L_k - L_{k-1}); F = e^{-x/2} p, f = e^{-x/2} (p' - p/2).
    double p = 0.0;
    double dp = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double c = b[k - 1] * static_cast<double>(k);
      p += c * (jet.value[k] - jet.value[k - 1]);
      dp += c * (jet.derivative[k] - jet.derivative[k - 1]);
    }
    const double f = dp - 0.5 * p;
    const double mean = p / x;
    out.integral_f_sq += rule.weights[i] * f * f;
    out.integral_mean_sq += rule.weights[i] * mean * mean;
  }
  return out;
}

// ---------------------------------------------------------------------------

SequenceSample extremal_sequence(std::size_t n, const EigenOptions& options) {
  require_size(n, "extremal_sequence");
  const RealTridiagonal h(build_H(n));
  const EigenResult eig = smallest_eigenvalue(h, options);
  const EigenPair pair = inverse_iteration(h, eig.lambda_min);
  const auto& v = pair.vector.values;

  // b = U v with u_kk = k, u_{k,k+1} = -k.
  std::vector<double> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k + 1);
    b[k] = kk * v[k] - (k + 1 < n ? kk * v[k + 1] : 0.0);
  }
  SequenceSample a;
  a.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k + 1);
    a.values[k] = kk * b[k] - (k > 0 ? (kk - 1.0) * b[k - 1] : 0.0);
  }
  const double nrm = std::sqrt(std::inner_product(a.values.begin(), a.values.end(), a.values.begin(), 0.0));
  for (double& x : a.values) x /= nrm;
  return a;
}

CoefficientVector extremal_coefficients(std::size_t n, const EigenOptions& options) {
  require_size(n, "extremal_coefficients");
  const ParityBlocks blocks = split_A(build_A(n));
  const ABlockResult eig = smallest_eigenvalue_A(n, options);
  const bool odd = eig.min_from_odd_block;
  const TridiagonalMatrix& block = odd ? blocks.odd : *blocks.even;
  const double lambda = odd ? eig.odd_block.lambda_min : eig.even_block->lambda_min;
  const EigenPair pair = inverse_iteration(block, lambda);

  std::vector<double> t(n, 0.0);
  const std::size_t offset = odd ? 0 : 1;
  for (std::size_t i = 0; i < pair.vector.values.size(); ++i) t[2 * i + offset] = pair.vector.values[i];
  return CoefficientVector::from_t(std::move(t));
}

}  // namespace hardy
