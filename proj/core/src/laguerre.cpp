#include "hardy/laguerre.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace hardy {

namespace {

constexpr std::size_t kMaxNodes = 100;

}  // namespace

double laguerre_eval(std::size_t k, double alpha, double x) {
  return laguerre_table(k, alpha, x).back();
}

std::vector<double> laguerre_table(std::size_t kmax, double alpha, double x) {
  if (!(alpha > -1.0)) throw std::invalid_argument("laguerre: alpha must exceed -1");
  std::vector<double> l(kmax + 1);
  l[0] = 1.0;
  if (kmax >= 1) l[1] = 1.0 + alpha - x;
  for (std::size_t k = 1; k < kmax; ++k) {
    const double kd = static_cast<double>(k);
    l[k + 1] = ((2.0 * kd + 1.0 + alpha - x) * l[k] - (kd + alpha) * l[k - 1]) / (kd + 1.0);
  }
  return l;
}

LaguerreJet laguerre_jet(std::size_t kmax, double x) {
  LaguerreJet jet{std::vector<double>(kmax + 1), std::vector<double>(kmax + 1)};
  auto& l = jet.value;
  auto& dl = jet.derivative;
  l[0] = 1.0;
  dl[0] = 0.0;
  if (kmax >= 1) {
    l[1] = 1.0 - x;
    dl[1] = -1.0;
  }
  for (std::size_t k = 1; k < kmax; ++k) {
    const double kd = static_cast<double>(k);
    l[k + 1] = ((2.0 * kd + 1.0 - x) * l[k] - kd * l[k - 1]) / (kd + 1.0);
    dl[k + 1] = ((2.0 * kd + 1.0 - x) * dl[k] - l[k] - kd * dl[k - 1]) / (kd + 1.0);
  }
  return jet;
}

GaussLaguerreRule gauss_laguerre(std::size_t npts) {
  if (npts < 1 || npts > kMaxNodes) {
    throw QuadratureError("gauss_laguerre: node count " + std::to_string(npts) + " outside [1, " +
                          std::to_string(kMaxNodes) + "]");
  }
  // Jacobi matrix of the monic Laguerre recurrence: diagonal 2i+1, off-diagonal i.
  Eigen::VectorXd diag(npts);
  Eigen::VectorXd sub(npts > 1 ? npts - 1 : 0);
  for (std::size_t i = 0; i < npts; ++i) diag(static_cast<Eigen::Index>(i)) = 2.0 * static_cast<double>(i) + 1.0;
  for (std::size_t i = 0; i + 1 < npts; ++i) sub(static_cast<Eigen::Index>(i)) = static_cast<double>(i + 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw QuadratureError("gauss_laguerre: eigenvalue solve failed");

  GaussLaguerreRule rule;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);
  double total = 0.0;
  for (std::size_t i = 0; i < npts; ++i) {
    double x = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    double dl = 0.0;
    for (int step = 0; step < 8; ++step) {
      const LaguerreJet jet = laguerre_jet(npts, x);
      dl = jet.derivative[npts];
      const double dx = jet.value[npts] / dl;
      x -= dx;
      if (std::abs(dx) <= 4e-16 * std::abs(x)) break;
    }
    dl = laguerre_jet(npts, x).derivative[npts];
    if (!(x > 0.0) || !std::isfinite(dl) || dl == 0.0) {
      throw QuadratureError("gauss_laguerre: node refinement failed");
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / (x * dl * dl);
    total += rule.weights[i];
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw QuadratureError("gauss_laguerre: weights sum to " + std::to_string(total) + ", expected 1");
  }
  return rule;
}

}  // namespace hardy
