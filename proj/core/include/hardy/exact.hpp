#pragma once

// Exact rational recurrences attached to the Jacobi matrix D_m: its
// determinants, the normalized characteristic polynomials Q_m, and the
// auxiliary sequences used to bound lambda_min(D_m) from both sides.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/big_rational.hpp"

namespace hardy::exact {

/// Default cap on the degree of q_polynomial; coefficient bit sizes grow
/// quadratically in m.
inline constexpr std::size_t kDefaultQPolynomialCap = 512;

enum class Sequence { y, q1, delta, u, detD, detG };

std::string_view to_string(Sequence s);
/// Accepts the names printed by to_string.
std::optional<Sequence> parse_sequence(std::string_view name);

/// Values of one sequence starting at `first_index`.
struct SequenceTable {
  Sequence name;
  std::size_t first_index = 0;
  std::vector<BigRational> values;

  [[nodiscard]] std::size_t last_index() const { return first_index + values.size() - 1; }
  /// Throws std::out_of_range outside [first_index, last_index()].
  [[nodiscard]] const BigRational& at(std::size_t index) const;
};

/// Q_m(x) = 1 + sum_{j=1}^m (-1)^j q_{jm} x^j. coeffs[0] is the constant 1 and
/// coeffs[j] = q_{jm} (positive) for j >= 1.
struct QPolynomial {
  std::size_t degree = 0;
  std::vector<BigRational> coeffs;

  /// Coefficients in the ordinary power basis, signs included.
  [[nodiscard]] std::vector<BigRational> power_coefficients() const;
  [[nodiscard]] BigRational evaluate(const BigRational& x) const;
};

/// n!! as an exact integer; (-1)!! = 0!! = 1.
BigRational double_factorial(long n);
BigRational factorial(unsigned n);

/// |D_m| by the three-term determinant recurrence, m >= 1.
BigRational det_D(std::size_t m);
/// ((2m-1)!!)^2 / 2^m.
BigRational det_D_closed_form(std::size_t m);
/// |G_m| by its determinant recurrence, m >= 1. Equals m!.
BigRational det_G(std::size_t m);

/// y_1 .. y_kmax from (2k-1)^2 y_k = 4(k-1)^2 y_{k-1} + 2, y_1 = 2.
SequenceTable y_seq(std::size_t kmax);
/// q_{1m} = y_1 + ... + y_m; q_{10} = 0.
BigRational q1(std::size_t m);
/// q_{10} .. q_{1,mmax}.
SequenceTable q1_seq(std::size_t mmax);
/// delta_0 .. delta_kmax, delta_k the determinant of D_{k+1} without its
/// first row and column (delta_0 = 1, delta_1 = 13/2).
SequenceTable delta_seq(std::size_t kmax);
/// u_0 .. u_kmax by summing 2((2k)!!/(2k+1)!!)^2. u_0 = 2 is the k = 0 term
/// alone; u_1 = 26/9.
SequenceTable u_seq(std::size_t kmax);
/// |D_1| .. |D_mmax| or |G_1| .. |G_mmax| as tables.
SequenceTable det_D_seq(std::size_t mmax);
SequenceTable det_G_seq(std::size_t mmax);
/// Dispatch on a sequence name; `upto` is the last index.
SequenceTable sequence_table(Sequence name, std::size_t upto);

/// Q_m by its three-term recurrence. Throws std::invalid_argument if m > cap.
QPolynomial q_polynomial(std::size_t m, std::size_t cap = kDefaultQPolynomialCap);

/// Outcome of checking an inequality index by index.
///
/// The transcendental side is evaluated in double precision. A strict
/// inequality only counts as holding when its margin exceeds kSafetyMargin;
/// non-strict ones at an index where the logarithm is exactly zero are
/// decided in exact arithmetic.
struct InequalityReport {
  static constexpr double kSafetyMargin = 1e-9;

  std::string name;
  std::size_t first_index = 0;
  std::size_t last_index = 0;
  bool holds = true;
  std::optional<std::size_t> first_violation;
  std::string detail;
  /// Smallest margin seen over all checked indices.
  double min_margin = 0.0;
};

/// ln k/(2k) < y_k <= (ln k + 4)/(2k) and y_k > ln k/(2k-1), k = 1..kmax.
InequalityReport check_y_bounds(std::size_t kmax);
InequalityReport check_y_bounds(const SequenceTable& y);
/// q_{1m} <= (ln^2 m + 8 ln m + 8)/4, m = 1..mmax.
InequalityReport check_q1_bound(std::size_t mmax);
InequalityReport check_q1_bound(const SequenceTable& q1);
/// u_{m-1} > ln(m + 1/2), m = 1..mmax; `u` must start at index 0.
InequalityReport check_u_bound(std::size_t mmax, const SequenceTable& u);

}  // namespace hardy::exact
