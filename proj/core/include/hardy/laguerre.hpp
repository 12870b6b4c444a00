#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hardy {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L_k^{(alpha)}(x) by the three-term recurrence. Requires alpha > -1.
double laguerre_eval(std::size_t k, double alpha, double x);

/// L_0^{(alpha)}(x) .. L_kmax^{(alpha)}(x).
std::vector<double> laguerre_table(std::size_t kmax, double alpha, double x);

/// Values and first derivatives of L_0 .. L_kmax (alpha = 0) at x, from the
/// differentiated recurrence.
struct LaguerreJet {
  std::vector<double> value;
  std::vector<double> derivative;
};
LaguerreJet laguerre_jet(std::size_t kmax, double x);

/// Gauss rule for the weight e^{-x} on [0, inf): exact for polynomials of
/// degree <= 2 * nodes.size() - 1.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch nodes polished by Newton steps on L_npts. Throws
/// QuadratureError when npts is outside [1, 100] or the rule fails its
/// self-checks.
GaussLaguerreRule gauss_laguerre(std::size_t npts);

}  // namespace hardy
