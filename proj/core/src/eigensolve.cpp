#include "hardy/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hardy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<double> to_doubles(std::span<const HalfInteger> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](HalfInteger h) { return h.to_double(); });
  return out;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// LU factorization with partial pivoting of a general tridiagonal matrix,
// laid out as in LAPACK's dgttrf: dl (sub), d (diag), du (super), du2 (second
// super created by pivoting).
struct TridiagonalLU {
  std::vector<double> dl, d, du, du2;
  std::vector<char> swapped;

  TridiagonalLU(const RealTridiagonal& t, double shift) {
    const std::size_t n = t.size();
    d.assign(t.diag().begin(), t.diag().end());
    for (double& x : d) x -= shift;
    dl.assign(t.offdiag().begin(), t.offdiag().end());
    du = dl;
    du2.assign(n >= 2 ? n - 2 : 0, 0.0);
    swapped.assign(n, 0);
    const double tiny = kEps * std::max(t.scale(), 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double f = dl[i] / d[i];
        dl[i] = f;
        d[i + 1] -= f * du[i];
      } else {
        swapped[i] = 1;
        const double f = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = f;
        const double tmp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = tmp - f * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -f * du[i + 1];
        }
      }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double tmp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = tmp - dl[i] * b[i];
      } else {
        b[i + 1] -= dl[i] * b[i];
      }
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = b[ii];
      if (ii + 1 < n) s -= du[ii] * b[ii + 1];
      if (ii + 2 < n) s -= du2[ii] * b[ii + 2];
      b[ii] = s / d[ii];
    }
  }
};

}  // namespace

RealTridiagonal::RealTridiagonal(const TridiagonalMatrix& t)
    : diag_(to_doubles(t.diag())), offdiag_(to_doubles(t.offdiag())) {
  finish();
}

RealTridiagonal::RealTridiagonal(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty() || offdiag_.size() + 1 != diag_.size()) {
    throw std::invalid_argument("RealTridiagonal: need size >= 1 and size - 1 off-diagonals");
  }
  finish();
}

void RealTridiagonal::finish() {
  offdiag_sq_.resize(offdiag_.size());
  scale_ = 0.0;
  inf_norm_ = 0.0;
  for (std::size_t k = 0; k < diag_.size(); ++k) {
    if (!std::isfinite(diag_[k])) throw std::invalid_argument("RealTridiagonal: non-finite entry");
    double row = std::abs(diag_[k]);
    scale_ = std::max(scale_, std::abs(diag_[k]));
    if (k < offdiag_.size()) {
      if (!std::isfinite(offdiag_[k])) throw std::invalid_argument("RealTridiagonal: non-finite entry");
      offdiag_sq_[k] = offdiag_[k] * offdiag_[k];
      row += std::abs(offdiag_[k]);
      scale_ = std::max(scale_, std::abs(offdiag_[k]));
    }
    if (k > 0) row += std::abs(offdiag_[k - 1]);
    inf_norm_ = std::max(inf_norm_, row);
  }
}

void RealTridiagonal::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    double s = diag_[k] * x[k];
    if (k > 0) s += offdiag_[k - 1] * x[k - 1];
    if (k + 1 < n) s += offdiag_[k] * x[k + 1];
    y[k] = s;
  }
}

// ---------------------------------------------------------------------------

std::size_t sturm_count(const RealTridiagonal& t, double lambda) {
  const auto d = t.diag();
  const auto e2 = t.offdiag_squared();
  const double pivmin = kEps * std::max(t.scale(), std::numeric_limits<double>::min());
  std::size_t count = 0;
  double q = d[0] - lambda;
  if (q == 0.0) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t k = 1; k < d.size(); ++k) {
    q = (d[k] - lambda) - e2[k - 1] / q;
    if (q == 0.0) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::size_t sturm_count(const TridiagonalMatrix& t, double lambda) {
  return sturm_count(RealTridiagonal(t), lambda);
}

EigenResult smallest_eigenvalue(const RealTridiagonal& t, const EigenOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("smallest_eigenvalue: tol must be positive");
  const auto d = t.diag();
  const auto e = t.offdiag();
  const std::size_t n = t.size();

  if (n == 1) {
    if (options.assume_positive_definite && !(d[0] > 0.0)) {
      throw SolverError("smallest_eigenvalue: matrix is not positive definite (count at 0 is nonzero)");
    }
    EigenResult r;
    r.lambda_min = r.bracket_hi = d[0];
    r.bracket_lo = std::nextafter(d[0], -std::numeric_limits<double>::infinity());
    r.matrix_size = 1;
    return r;
  }

  double gersh_lo = std::numeric_limits<double>::infinity();
  double gersh_hi = -gersh_lo;
  for (std::size_t k = 0; k < n; ++k) {
    double r = 0.0;
    if (k > 0) r += std::abs(e[k - 1]);
    if (k < e.size()) r += std::abs(e[k]);
    gersh_lo = std::min(gersh_lo, d[k] - r);
    gersh_hi = std::max(gersh_hi, d[k] + r);
  }
  const double slack = 4.0 * kEps * std::max(t.scale(), 1.0) * static_cast<double>(n);
  const double min_diag = *std::min_element(d.begin(), d.end());

  double lo = gersh_lo - slack;
  double hi = min_diag;
  if (options.assume_positive_definite) lo = std::max(lo, 0.0);

  if (sturm_count(t, lo) != 0) {
    throw SolverError(options.assume_positive_definite
                          ? "smallest_eigenvalue: matrix is not positive definite (count at 0 is nonzero)"
                          : "smallest_eigenvalue: lower Gershgorin bound does not bound the spectrum");
  }
  // e_k^T T e_k = d_k, so the count at min_diag is >= 1 except when the
  // minimum is attained there exactly.
  if (sturm_count(t, hi) == 0) hi = std::max(hi, gersh_hi) + slack + options.tol;
  if (sturm_count(t, hi) == 0 || !(lo < hi)) {
    throw SolverError("smallest_eigenvalue: initial bracket contains no eigenvalue");
  }

  EigenResult r;
  r.matrix_size = n;
  while (hi - lo > options.tol) {
    if (r.iterations >= options.max_iterations) {
      throw SolverError("smallest_eigenvalue: iteration cap " + std::to_string(options.max_iterations) +
                        " reached with bracket width " + std::to_string(hi - lo));
    }
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    if (sturm_count(t, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++r.iterations;
  }
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.lambda_min = lo + 0.5 * (hi - lo);
  return r;
}

EigenResult smallest_eigenvalue(const TridiagonalMatrix& t, const EigenOptions& options) {
  return smallest_eigenvalue(RealTridiagonal(t), options);
}

ABlockResult smallest_eigenvalue_A(std::size_t n, const EigenOptions& options) {
  const ParityBlocks blocks = split_A(build_A(n));
  ABlockResult out;
  out.odd_block = smallest_eigenvalue(blocks.odd, options);
  out.lambda_min = out.odd_block.lambda_min;
  if (blocks.even) {
    out.even_block = smallest_eigenvalue(*blocks.even, options);
    if (out.even_block->lambda_min < out.lambda_min) {
      out.lambda_min = out.even_block->lambda_min;
      out.min_from_odd_block = false;
    }
  }
  return out;
}

EigenPair inverse_iteration(const RealTridiagonal& t, double shift, int max_iterations) {
  const std::size_t n = t.size();
  const TridiagonalLU lu(t, shift);
  const double target = 1e-8 * t.inf_norm();
  const double floor = 64.0 * kEps * std::max(t.inf_norm(), 1.0);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> tv(n);
  EigenPair pair;
  pair.residual = std::numeric_limits<double>::infinity();
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int it = 1; it <= max_iterations; ++it) {
    lu.solve(v);
    const double nrm = norm2(v);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw SolverError("inverse_iteration: solve broke down");
    for (double& x : v) x /= nrm;

    t.multiply(v, tv);
    const double lambda = std::inner_product(v.begin(), v.end(), tv.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) r2 += (tv[k] - lambda * v[k]) * (tv[k] - lambda * v[k]);
    pair.lambda = lambda;
    pair.residual = std::sqrt(r2);
    pair.iterations = it;

    const bool settled = std::abs(lambda - previous) <= 4.0 * kEps * std::max(std::abs(lambda), 1.0);
    if (pair.residual <= target && (settled || pair.residual <= floor)) break;
    previous = lambda;
  }
  if (!(pair.residual <= target)) {
    throw SolverError("inverse_iteration: no convergence after " + std::to_string(max_iterations) +
                      " iterations (residual " + std::to_string(pair.residual) + ")");
  }
  if (std::accumulate(v.begin(), v.end(), 0.0) < 0.0) {
    for (double& x : v) x = -x;
  }
  pair.vector.values = std::move(v);
  return pair;
}

EigenPair inverse_iteration(const TridiagonalMatrix& t, double shift, int max_iterations) {
  return inverse_iteration(RealTridiagonal(t), shift, max_iterations);
}

double qpoly_residual(std::size_t m, double lambda, std::size_t cap) {
  return qpoly_residual(exact::q_polynomial(m, cap), lambda);
}

double qpoly_residual(const exact::QPolynomial& q, double lambda) {
  return q.evaluate(BigRational::from_double(lambda)).to_double();
}

}  // namespace hardy
