#include "hardy/exact.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hardy::exact {

namespace {

constexpr std::array<std::pair<Sequence, std::string_view>, 6> kNames{{
    {Sequence::y, "y"},
    {Sequence::q1, "q1"},
    {Sequence::delta, "delta"},
    {Sequence::u, "u"},
    {Sequence::detD, "detD"},
    {Sequence::detG, "detG"},
}};

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": index must be at least 1");
}

BigRational big(std::size_t k) { return BigRational(static_cast<std::int64_t>(k)); }

// Accumulates the report for one index. `exact_equal_ok` marks a non-strict
// comparison whose margin has been computed exactly.
struct ReportBuilder {
  InequalityReport report;
  bool first = true;

  ReportBuilder(std::string name, std::size_t first_index) {
    report.name = std::move(name);
    report.first_index = first_index;
    report.last_index = first_index;
  }

  void record(std::size_t index, double margin, bool passed, const char* side) {
    report.last_index = index;
    if (first || margin < report.min_margin) report.min_margin = margin;
    first = false;
    if (!passed && report.holds) {
      report.holds = false;
      report.first_violation = index;
      report.detail = std::string(side) + " fails at index " + std::to_string(index) +
                      " (margin " + std::to_string(margin) + ")";
    }
  }

  void strict(std::size_t index, double margin, const char* side) {
    record(index, margin, margin > InequalityReport::kSafetyMargin, side);
  }

  void non_strict(std::size_t index, double margin, const char* side) {
    record(index, margin, margin > InequalityReport::kSafetyMargin, side);
  }

  void non_strict_exact(std::size_t index, const BigRational& margin, const char* side) {
    record(index, margin.to_double(), margin.sign() >= 0, side);
  }
};

}  // namespace

std::string_view to_string(Sequence s) {
  for (const auto& [seq, name] : kNames) {
    if (seq == s) return name;
  }
  return "?";
}

std::optional<Sequence> parse_sequence(std::string_view name) {
  for (const auto& [seq, n] : kNames) {
    if (n == name) return seq;
  }
  return std::nullopt;
}

const BigRational& SequenceTable::at(std::size_t index) const {
  if (index < first_index || index - first_index >= values.size()) {
    throw std::out_of_range("SequenceTable " + std::string(to_string(name)) + ": index " +
                            std::to_string(index) + " not tabulated");
  }
  return values[index - first_index];
}

std::vector<BigRational> QPolynomial::power_coefficients() const {
  std::vector<BigRational> out = coeffs;
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return out;
}

BigRational QPolynomial::evaluate(const BigRational& x) const {
  const auto p = power_coefficients();
  BigRational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// ---------------------------------------------------------------------------

BigRational double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  mpz_class acc = 1;
  for (long k = n; k > 1; k -= 2) acc *= k;
  return BigRational::from_gmp(mpq_class(acc));
}

BigRational factorial(unsigned n) {
  mpz_class acc;
  mpz_fac_ui(acc.get_mpz_t(), n);
  return BigRational::from_gmp(mpq_class(acc));
}

BigRational det_D(std::size_t m) { return det_D_seq(m).values.back(); }

BigRational det_D_closed_form(std::size_t m) {
  require_positive(m, "det_D_closed_form");
  const BigRational dfact = double_factorial(2 * static_cast<long>(m) - 1);
  return dfact * dfact / pow(BigRational(2), static_cast<unsigned>(m));
}

BigRational det_G(std::size_t m) { return det_G_seq(m).values.back(); }

SequenceTable det_D_seq(std::size_t mmax) {
  require_positive(mmax, "det_D");
  SequenceTable t{Sequence::detD, 1, {}};
  t.values.reserve(mmax);
  t.values.emplace_back(1, 2);
  if (mmax >= 2) t.values.emplace_back(9, 4);
  for (std::size_t m = 3; m <= mmax; ++m) {
    const auto mm = static_cast<std::int64_t>(m);
    const BigRational diag = BigRational(8 * mm * mm - 12 * mm + 5, 2);
    const BigRational root = big((m - 1) * (2 * m - 3));
    const BigRational coupling = root * root;
    const auto& prev = t.values[m - 2];
    const auto& prev2 = t.values[m - 3];
    t.values.push_back(diag * prev - coupling * prev2);
  }
  return t;
}

SequenceTable det_G_seq(std::size_t mmax) {
  require_positive(mmax, "det_G");
  SequenceTable t{Sequence::detG, 1, {}};
  t.values.reserve(mmax);
  t.values.emplace_back(1);
  if (mmax >= 2) t.values.emplace_back(2);
  // |G_{k+1}| = (2k+1)|G_k| - k^2 |G_{k-1}|
  for (std::size_t k = 2; k + 1 <= mmax; ++k) {
    t.values.push_back(big(2 * k + 1) * t.values[k - 1] - big(k * k) * t.values[k - 2]);
  }
  return t;
}

SequenceTable y_seq(std::size_t kmax) {
  require_positive(kmax, "y_seq");
  SequenceTable t{Sequence::y, 1, {}};
  t.values.reserve(kmax);
  t.values.emplace_back(2);
  for (std::size_t k = 2; k <= kmax; ++k) {
    const BigRational num = big(4 * (k - 1) * (k - 1)) * t.values.back() + BigRational(2);
    t.values.push_back(num / big((2 * k - 1) * (2 * k - 1)));
  }
  return t;
}

SequenceTable q1_seq(std::size_t mmax) {
  SequenceTable t{Sequence::q1, 0, {}};
  t.values.reserve(mmax + 1);
  t.values.emplace_back(0);
  if (mmax == 0) return t;
  const SequenceTable y = y_seq(mmax);
  for (const auto& yk : y.values) t.values.push_back(t.values.back() + yk);
  return t;
}

BigRational q1(std::size_t m) { return q1_seq(m).values.back(); }

SequenceTable delta_seq(std::size_t kmax) {
  SequenceTable t{Sequence::delta, 0, {}};
  t.values.reserve(kmax + 1);
  t.values.emplace_back(1);
  if (kmax >= 1) t.values.emplace_back(13, 2);
  if (kmax >= 2) t.values.emplace_back(389, 4);
  for (std::size_t j = 3; j <= kmax; ++j) {
    const auto k = static_cast<std::int64_t>(j + 1);
    const BigRational diag = BigRational(8 * k * k - 12 * k + 5, 2);
    const BigRational root = big(j * (2 * j - 1));
    const BigRational coupling = root * root;
    t.values.push_back(diag * t.values[j - 1] - coupling * t.values[j - 2]);
  }
  return t;
}

SequenceTable u_seq(std::size_t kmax) {
  SequenceTable t{Sequence::u, 0, {}};
  t.values.reserve(kmax + 1);
  t.values.emplace_back(2);
  if (kmax == 0) return t;
  t.values.emplace_back(26, 9);
  // Running (2k)!! and (2k+1)!! starting from k = 1.
  mpz_class even = 2;
  mpz_class odd = 3;
  for (std::size_t k = 2; k <= kmax; ++k) {
    even *= static_cast<unsigned long>(2 * k);
    odd *= static_cast<unsigned long>(2 * k + 1);
    const BigRational ratio = BigRational::from_gmp(mpq_class(even, odd));
    t.values.push_back(t.values.back() + BigRational(2) * ratio * ratio);
  }
  return t;
}

SequenceTable sequence_table(Sequence name, std::size_t upto) {
  switch (name) {
    case Sequence::y: return y_seq(upto);
    case Sequence::q1: return q1_seq(upto);
    case Sequence::delta: return delta_seq(upto);
    case Sequence::u: return u_seq(upto);
    case Sequence::detD: return det_D_seq(upto);
    case Sequence::detG: return det_G_seq(upto);
  }
  throw std::invalid_argument("sequence_table: unknown sequence");
}

QPolynomial q_polynomial(std::size_t m, std::size_t cap) {
  if (m > cap) {
    throw std::invalid_argument("q_polynomial: degree " + std::to_string(m) + " exceeds cap " +
                                std::to_string(cap));
  }
  // Power-basis coefficients of Q_{k-2}, Q_{k-1}.
  std::vector<BigRational> prev2{BigRational(1)};
  std::vector<BigRational> prev1{BigRational(1), BigRational(-2)};
  if (m == 0) return {0, prev2};
  for (std::size_t k = 2; k <= m; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const BigRational a(8 * kk * kk - 12 * kk + 5);
    const BigRational c = big(4 * (k - 1) * (k - 1));
    const BigRational scale = big((2 * k - 1) * (2 * k - 1));
    std::vector<BigRational> next(k + 1);
    for (std::size_t j = 0; j < prev1.size(); ++j) {
      next[j] += a * prev1[j];
      next[j + 1] -= BigRational(2) * prev1[j];
    }
    for (std::size_t j = 0; j < prev2.size(); ++j) next[j] -= c * prev2[j];
    for (auto& v : next) v /= scale;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  QPolynomial q{m, std::move(prev1)};
  for (std::size_t j = 1; j < q.coeffs.size(); j += 2) q.coeffs[j] = -q.coeffs[j];
  return q;
}

// ---------------------------------------------------------------------------

InequalityReport check_y_bounds(std::size_t kmax) { return check_y_bounds(y_seq(kmax)); }

InequalityReport check_y_bounds(const SequenceTable& y) {
  if (y.name != Sequence::y || y.first_index != 1) {
    throw std::invalid_argument("check_y_bounds: expected a y table starting at index 1");
  }
  ReportBuilder rb("ln k/(2k) < y_k <= (ln k + 4)/(2k) and y_k > ln k/(2k-1)", 1);
  for (std::size_t k = 1; k <= y.last_index(); ++k) {
    const BigRational& yk = y.at(k);
    const double yd = yk.to_double();
    const double kd = static_cast<double>(k);
    const double lnk = std::log(kd);
    rb.strict(k, yd - lnk / (2.0 * kd), "lower bound ln k/(2k) < y_k");
    if (k == 1) {
      rb.non_strict_exact(k, BigRational(2) - yk, "upper bound y_k <= (ln k + 4)/(2k)");
    } else {
      rb.non_strict(k, (lnk + 4.0) / (2.0 * kd) - yd, "upper bound y_k <= (ln k + 4)/(2k)");
    }
    rb.strict(k, yd - lnk / (2.0 * kd - 1.0), "sharper lower bound ln k/(2k-1) < y_k");
  }
  return rb.report;
}

InequalityReport check_q1_bound(std::size_t mmax) { return check_q1_bound(q1_seq(mmax)); }

InequalityReport check_q1_bound(const SequenceTable& q) {
  if (q.name != Sequence::q1 || q.first_index != 0) {
    throw std::invalid_argument("check_q1_bound: expected a q1 table starting at index 0");
  }
  ReportBuilder rb("q_1m <= (ln^2 m + 8 ln m + 8)/4", 1);
  for (std::size_t m = 1; m <= q.last_index(); ++m) {
    const BigRational& qm = q.at(m);
    if (m == 1) {
      rb.non_strict_exact(m, BigRational(2) - qm, "q_1m bound");
      continue;
    }
    const double lnm = std::log(static_cast<double>(m));
    rb.non_strict(m, (lnm * lnm + 8.0 * lnm + 8.0) / 4.0 - qm.to_double(), "q_1m bound");
  }
  return rb.report;
}

InequalityReport check_u_bound(std::size_t mmax, const SequenceTable& u) {
  if (u.name != Sequence::u || u.first_index != 0) {
    throw std::invalid_argument("check_u_bound: expected a u table starting at index 0");
  }
  if (mmax == 0 || u.last_index() + 1 < mmax) {
    throw std::invalid_argument("check_u_bound: u table too short for requested range");
  }
  ReportBuilder rb("u_{m-1} > ln(m + 1/2)", 1);
  for (std::size_t m = 1; m <= mmax; ++m) {
    rb.strict(m, u.at(m - 1).to_double() - std::log(static_cast<double>(m) + 0.5), "u bound");
  }
  return rb.report;
}

}  // namespace hardy::exact
