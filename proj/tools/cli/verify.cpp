#include "cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "cli/run_config.hpp"
#include "cli/tables.hpp"
#include "hardy/exact.hpp"
#include "hardy/hardy.hpp"

namespace hardy::cli {

namespace {

constexpr std::size_t kStructureMax = 200;
constexpr std::size_t kSequenceMax = 2000;
constexpr std::size_t kQPolyMax = 60;
constexpr std::size_t kInterlacingMax = 1000;
constexpr std::size_t kGridMax = 100000;
constexpr double kBoundSlack = 1e-9;

struct Check {
  std::string name;
  std::function<CheckResult(const VerifyOptions&)> run;
};

CheckResult pass(std::string detail = {}) { return {{}, true, std::nullopt, std::move(detail), 0.0}; }

CheckResult fail(std::size_t index, std::string detail) { return {{}, false, index, std::move(detail), 0.0}; }

CheckResult from_report(const exact::InequalityReport& r) {
  CheckResult out;
  out.passed = r.holds;
  out.first_violation = r.first_violation;
  std::ostringstream s;
  s << r.detail << (r.detail.empty() ? "" : "; ") << "indices " << r.first_index << ".." << r.last_index
    << ", min margin " << format_real(r.min_margin);
  out.detail = s.str();
  return out;
}

std::vector<std::size_t> geometric(std::size_t start, std::size_t stop, double ratio) {
  RunConfig c;
  c.n_start = start;
  c.n_stop = stop;
  c.grid = Grid::geometric;
  c.ratio = ratio;
  return n_values(c);
}

EigenOptions solver(const VerifyOptions& o) {
  EigenOptions e;
  e.tol = o.tol;
  return e;
}

TridiagonalMatrix corrupt(const TridiagonalMatrix& t) {
  std::vector<HalfInteger> d(t.diag().begin(), t.diag().end());
  std::vector<HalfInteger> e(t.offdiag().begin(), t.offdiag().end());
  d.back() = d.back() + HalfInteger(1);
  return {std::move(d), std::move(e)};
}

CheckResult check_structure(const VerifyOptions& o) {
  constexpr std::size_t kFaultAt = 7;
  const std::size_t nmax = std::min(kStructureMax, o.max_m);
  for (std::size_t n = 1; n <= nmax; ++n) {
    const std::size_t m_odd = (n + 1) / 2;
    const std::size_t m_even = n / 2;
    ParityBlocks blocks = split_A(build_A(n));
    if (o.fault == Fault::split_A && n == kFaultAt) blocks.odd = corrupt(blocks.odd);
    if (!(blocks.odd == build_B(m_odd))) return fail(n, "odd block of A_n differs from B_m");
    if (m_even > 0 && !(blocks.even && *blocks.even == build_C(m_even))) {
      return fail(n, "even block of A_n differs from C_m");
    }
    const std::size_t m = n;
    const auto b = build_B(m);
    const auto c = build_C(m);
    const auto h = build_H(m);
    if (!(4 * h == b + c)) return fail(m, "4H != B + C");
    if (!(build_F(m) == product_with_transpose(build_U(m)))) return fail(m, "F != U U^T");
    if (!(h == transpose_product(build_U(m)))) return fail(m, "H != U^T U");
    if (!(c - b == 2 * build_G(m))) return fail(m, "C - B != 2G");
    if (!(build_D(m) == b.shifted(-HalfInteger::half()))) return fail(m, "D != B - I/2");
  }
  return pass("n, m <= " + std::to_string(nmax));
}

CheckResult check_determinants(const VerifyOptions& o) {
  constexpr std::size_t kFaultAt = 5;
  const auto dets = exact::det_D_seq(o.max_m);
  const auto dets_g = exact::det_G_seq(o.max_m);
  for (std::size_t m = 1; m <= o.max_m; ++m) {
    BigRational d = dets.at(m);
    if (o.fault == Fault::det_D && m == kFaultAt) d += BigRational(1);
    if (d != exact::det_D_closed_form(m)) return fail(m, "|D_m| != ((2m-1)!!)^2 / 2^m");
    if (dets_g.at(m) != exact::factorial(static_cast<unsigned>(m))) return fail(m, "|G_m| != m!");
  }
  return pass("m <= " + std::to_string(o.max_m));
}

CheckResult check_seed_values(const VerifyOptions&) {
  const auto y = exact::y_seq(1);
  const auto delta = exact::delta_seq(2);
  const auto u = exact::u_seq(1);
  const std::vector<std::pair<std::string, bool>> seeds{
      {"|D_1| = 1/2", exact::det_D(1) == BigRational(1, 2)},
      {"|D_2| = 9/4", exact::det_D(2) == BigRational(9, 4)},
      {"delta_1 = 13/2", delta.at(1) == BigRational(13, 2)},
      {"delta_2 = 389/4", delta.at(2) == BigRational(389, 4)},
      {"u_1 = 26/9", u.at(1) == BigRational(26, 9)},
      {"y_1 = 2", y.at(1) == BigRational(2)},
      {"q_11 = 2", exact::q1(1) == BigRational(2)},
      {"|G_1| = 1", exact::det_G(1) == BigRational(1)},
      {"|G_2| = 2", exact::det_G(2) == BigRational(2)},
  };
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!seeds[i].second) return fail(i + 1, seeds[i].first);
  }
  return pass(std::to_string(seeds.size()) + " values");
}

CheckResult check_delta_linkage(const VerifyOptions& o) {
  const auto delta = exact::delta_seq(o.max_m);
  const auto u = exact::u_seq(o.max_m);
  const auto dets = exact::det_D_seq(o.max_m + 1);
  BigRational power_term(1);  // 2^k (k!)^2
  for (std::size_t k = 1; k <= o.max_m; ++k) {
    const BigRational kk(static_cast<std::int64_t>(k));
    power_term *= BigRational(2) * kk * kk;
    const BigRational odd(static_cast<std::int64_t>(2 * k + 1));
    if (delta.at(k) - odd * odd / BigRational(2) * delta.at(k - 1) != power_term) {
      return fail(k, "delta_k - ((2k+1)^2/2) delta_{k-1} != 2^k (k!)^2");
    }
  }
  for (std::size_t k = 0; k <= o.max_m; ++k) {
    if (u.at(k) != delta.at(k) / dets.at(k + 1)) return fail(k, "u_k != delta_k / |D_{k+1}|");
  }
  return pass("k <= " + std::to_string(o.max_m));
}

CheckResult check_characteristic_polynomial(const VerifyOptions& o) {
  // Q_m(x) = det(D_m - xI) / det(D_m), with det(D_m - xI) from the
  // continuant recurrence at a rational point.
  const BigRational x(1, 3);
  const std::size_t mmax = std::min<std::size_t>(kQPolyMax, o.max_m);
  BigRational prev(1);
  BigRational cur(1);
  const auto d = build_D(mmax);
  for (std::size_t m = 1; m <= mmax; ++m) {
    const BigRational diag = d.diag()[m - 1].to_rational() - x;
    BigRational next = diag * cur;
    if (m >= 2) {
      const BigRational e = d.offdiag()[m - 2].to_rational();
      next -= e * e * prev;
    }
    prev = cur;
    cur = next;
    if (exact::q_polynomial(m).evaluate(x) != cur / exact::det_D(m)) return fail(m, "Q_m(1/3) != |D_m - I/3| / |D_m|");
  }
  return pass("m <= " + std::to_string(mmax));
}

CheckResult check_solver_agreement(const VerifyOptions& o) {
  double worst_gap = 0.0;
  double worst_residual = 0.0;
  for (std::size_t m = 1; m <= kQPolyMax; ++m) {
    const auto d = build_D(m);
    const double bis = smallest_eigenvalue(d, solver(o)).lambda_min;
    const double inv = inverse_iteration(d, bis).lambda;
    const double res = std::abs(qpoly_residual(m, bis));
    worst_gap = std::max(worst_gap, std::abs(bis - inv));
    worst_residual = std::max(worst_residual, res);
    if (std::abs(bis - inv) > 1e-10) return fail(m, "bisection and inverse iteration differ by " + format_real(bis - inv));
    if (res > 1e-8) return fail(m, "|Q_m(lambda)| = " + format_real(res));
  }
  return pass("max gap " + format_real(worst_gap) + ", max |Q_m| " + format_real(worst_residual));
}

CheckResult check_lambda_sandwich(const VerifyOptions& o) {
  for (std::size_t m : {2U, 10U, 100U, 1000U, 10000U, 100000U}) {
    const double lam = smallest_eigenvalue(build_D(m), solver(o)).lambda_min;
    const double l = std::log(static_cast<double>(m));
    if (!(lam > 4.0 / (l * l + 8.0 * l + 8.0))) return fail(m, "lower bound violated");
    if (!(lam < 1.0 / std::log(static_cast<double>(m) + 0.5))) return fail(m, "upper bound violated");
  }
  return pass("m in {2, 10, ..., 1e5}");
}

CheckResult check_shift(const VerifyOptions& o) {
  for (std::size_t m : geometric(1, kGridMax, 1.5)) {
    const double b = smallest_eigenvalue(build_B(m), solver(o)).lambda_min;
    const double d = smallest_eigenvalue(build_D(m), solver(o)).lambda_min;
    if (std::abs(b - d - 0.5) > 2 * o.tol) return fail(m, "lambda(B_m) - lambda(D_m) = " + format_real(b - d));
  }
  return pass("geometric grid to " + std::to_string(kGridMax));
}

CheckResult check_interlacing(const VerifyOptions& o) {
  double previous = smallest_eigenvalue(build_B(1), solver(o)).lambda_min;
  for (std::size_t m = 1; m <= kInterlacingMax; ++m) {
    const double next = smallest_eigenvalue(build_B(m + 1), solver(o)).lambda_min;
    const double c = smallest_eigenvalue(build_C(m), solver(o)).lambda_min;
    if (!(next < previous)) return fail(m, "lambda(B_{m+1}) >= lambda(B_m)");
    if (!(c > previous)) return fail(m, "lambda(C_m) <= lambda(B_m)");
    previous = next;
  }
  return pass("m <= " + std::to_string(kInterlacingMax));
}

CheckResult check_parity_reduction(const VerifyOptions& o) {
  for (std::size_t n = 1; n <= kInterlacingMax; ++n) {
    const auto a = smallest_eigenvalue_A(n, solver(o));
    if (!a.min_from_odd_block) return fail(n, "minimum of A_n attained on the even block");
    const double inv_c = 1.0 / continuous_constant(n, solver(o)).constant;
    if (std::abs(inv_c - 0.5 * a.lambda_min) > 1e-10) return fail(n, "1/c_n != lambda(A_n)/2");
  }
  return pass("n <= " + std::to_string(kInterlacingMax));
}

CheckResult check_bounds(const VerifyOptions& o, Kind kind) {
  std::size_t count = 0;
  for (std::size_t n : geometric(kind == Kind::discrete ? 3 : 1, kGridMax, 1.25)) {
    const auto r = hardy_constant(n, kind, solver(o));
    if (!r.thm_lower || !r.thm_upper) return fail(n, "bounds not applicable");
    if (r.constant < *r.thm_lower - kBoundSlack) return fail(n, "below lower bound by " + format_real(*r.thm_lower - r.constant));
    if (r.constant > *r.thm_upper + kBoundSlack) return fail(n, "above upper bound by " + format_real(r.constant - *r.thm_upper));
    ++count;
  }
  return pass(std::to_string(count) + " grid points to " + std::to_string(kGridMax));
}

CheckResult check_monotone(const VerifyOptions& o) {
  double prev_c = 0.0;
  double prev_d = 0.0;
  for (std::size_t n = 1; n <= 500; ++n) {
    const double c = continuous_constant(n, solver(o)).constant;
    const double d = discrete_constant(n, solver(o)).constant;
    if (c < prev_c || d < prev_d) return fail(n, "constant decreased");
    if (!(c < 4.0 && d < 4.0)) return fail(n, "constant reached 4");
    prev_c = c;
    prev_d = d;
  }
  return pass("n <= 500");
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

CheckResult check_quadrature(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (std::size_t n = 1; n <= kQuadratureMaxSize; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> b(n);
      for (double& x : b) x = normal(rng);
      const auto coeffs = CoefficientVector::from_b(std::move(b));
      const auto closed = quadratic_forms(coeffs);
      const auto quad = quadrature_oracle(coeffs, n + 2);
      const double err = std::max(rel_diff(closed.integral_f_sq, quad.integral_f_sq),
                                  rel_diff(closed.integral_mean_sq, quad.integral_mean_sq));
      worst = std::max(worst, err);
      if (err > 1e-8) return fail(n, "relative disagreement " + format_real(err));
    }
  }
  return pass("max relative disagreement " + format_real(worst));
}

CheckResult check_extremal(const VerifyOptions& o) {
  for (std::size_t n : {2U, 5U, 10U, 100U}) {
    const double d = discrete_constant(n, solver(o)).constant;
    const double q = discrete_quotient(extremal_sequence(n, solver(o)));
    if (std::abs(q - d) > 1e-8) return fail(n, "discrete extremal quotient off by " + format_real(q - d));
    const double ratio = quadratic_forms(extremal_coefficients(n, solver(o))).ratio();
    const double target = 0.5 * smallest_eigenvalue_A(n, solver(o)).lambda_min;
    if (std::abs(ratio - target) > 1e-10) return fail(n, "continuous extremal ratio off by " + format_real(ratio - target));
  }
  return pass("n in {2, 5, 10, 100}");
}

CheckResult check_harmonic(const VerifyOptions&) {
  for (std::size_t n : {10U, 1000U, 100000U}) {
    if (!(discrete_quotient(sqrt_test_sequence(n)) > harmonic_lower_bound(n))) {
      return fail(n, "square-root sequence does not beat 4 - 16/(H_n + 4)");
    }
  }
  return pass("n in {10, 1e3, 1e5}");
}

CheckResult check_random_quotients(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed + 1);
  std::normal_distribution<double> normal;
  for (std::size_t n : {1U, 2U, 3U, 8U, 40U, 300U}) {
    const double d = discrete_constant(n, solver(o)).constant;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> a(n);
      for (double& x : a) x = normal(rng);
      if (discrete_quotient(a) > d + 1e-9) return fail(n, "random sequence exceeds d_n");
    }
  }
  return pass("200 draws per n");
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      {"structure", check_structure},
      {"determinant-identity", check_determinants},
      {"seed-values", check_seed_values},
      {"y-bounds", [](const VerifyOptions&) { return from_report(exact::check_y_bounds(kSequenceMax)); }},
      {"q1-bound", [](const VerifyOptions&) { return from_report(exact::check_q1_bound(kSequenceMax)); }},
      {"u-bound",
       [](const VerifyOptions&) { return from_report(exact::check_u_bound(kSequenceMax, exact::u_seq(kSequenceMax))); }},
      {"delta-linkage", check_delta_linkage},
      {"characteristic-polynomial", check_characteristic_polynomial},
      {"solver-agreement", check_solver_agreement},
      {"lambda-sandwich", check_lambda_sandwich},
      {"half-shift", check_shift},
      {"interlacing", check_interlacing},
      {"parity-reduction", check_parity_reduction},
      {"continuous-bounds", [](const VerifyOptions& o) { return check_bounds(o, Kind::continuous); }},
      {"discrete-bounds", [](const VerifyOptions& o) { return check_bounds(o, Kind::discrete); }},
      {"monotonicity", check_monotone},
      {"quadrature-oracle", check_quadrature},
      {"extremal", check_extremal},
      {"harmonic-bound", check_harmonic},
      {"random-quotients", check_random_quotients},
  };
  return all;
}

}  // namespace

std::optional<Fault> parse_fault(std::string_view name) {
  if (name.empty() || name == "none") return Fault::none;
  if (name == "split_A") return Fault::split_A;
  if (name == "det_D") return Fault::det_D;
  return std::nullopt;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : checks()) out.push_back(c.name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  for (const auto& name : options.only) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw UsageError("unknown check '" + name + "'");
    }
  }
  if (options.max_m == 0) throw UsageError("--max-m must be positive");
  std::vector<CheckResult> results;
  for (const auto& check : checks()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), check.name) == options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check.run(options);
    } catch (const std::exception& e) {
      r = {{}, false, std::nullopt, std::string("exception: ") + e.what(), 0.0};
    }
    r.name = check.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

void write_verify_report(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      ++failed;
      if (r.first_violation) os << " (first violation at index " << *r.first_violation << ")";
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    os << ": " << r.detail << " [" << secs << " s]\n";
  }
  os << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
     << '\n';
}

}  // namespace hardy::cli
