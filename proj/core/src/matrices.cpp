#include "hardy/matrices.hpp"

#include <stdexcept>
#include <string>

namespace hardy {

namespace {

void check_order(std::size_t n, const char* what) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
}

std::int64_t as_int(std::size_t k) { return static_cast<std::int64_t>(k); }

template <typename Fn>
std::vector<HalfInteger> tabulate(std::size_t count, Fn&& entry) {
  std::vector<HalfInteger> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.push_back(entry(as_int(k)));
  return out;
}

}  // namespace

HalfInteger operator*(HalfInteger a, HalfInteger b) {
  const std::int64_t p = a.twice() * b.twice();
  if (p % 2 != 0) throw std::domain_error("HalfInteger: product is not a half-integer");
  return HalfInteger::from_twice(p / 2);
}

// ---------------------------------------------------------------------------

TridiagonalMatrix::TridiagonalMatrix(std::vector<HalfInteger> diag, std::vector<HalfInteger> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw std::invalid_argument("TridiagonalMatrix: size must be at least 1");
  if (offdiag_.size() + 1 != diag_.size()) {
    throw std::invalid_argument("TridiagonalMatrix: off-diagonal length must be size - 1");
  }
}

TridiagonalMatrix TridiagonalMatrix::shifted(HalfInteger shift) const {
  TridiagonalMatrix out = *this;
  for (auto& d : out.diag_) d += shift;
  return out;
}

HalfInteger TridiagonalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("TridiagonalMatrix::at");
  if (i == j) return diag_[i];
  if (i + 1 == j) return offdiag_[i];
  if (j + 1 == i) return offdiag_[j];
  return {};
}

TridiagonalMatrix operator+(const TridiagonalMatrix& a, const TridiagonalMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("TridiagonalMatrix: size mismatch");
  TridiagonalMatrix out = a;
  for (std::size_t k = 0; k < out.diag_.size(); ++k) out.diag_[k] += b.diag_[k];
  for (std::size_t k = 0; k < out.offdiag_.size(); ++k) out.offdiag_[k] += b.offdiag_[k];
  return out;
}

TridiagonalMatrix operator-(const TridiagonalMatrix& a, const TridiagonalMatrix& b) {
  return a + (-1) * b;
}

TridiagonalMatrix operator*(std::int64_t s, const TridiagonalMatrix& t) {
  TridiagonalMatrix out = t;
  for (auto& d : out.diag_) d = s * d;
  for (auto& e : out.offdiag_) e = s * e;
  return out;
}

PentadiagonalMatrix::PentadiagonalMatrix(std::vector<HalfInteger> diag, std::vector<HalfInteger> offdiag2)
    : diag_(std::move(diag)), offdiag2_(std::move(offdiag2)) {
  if (diag_.empty()) throw std::invalid_argument("PentadiagonalMatrix: size must be at least 1");
  const std::size_t expected = diag_.size() >= 2 ? diag_.size() - 2 : 0;
  if (offdiag2_.size() != expected) {
    throw std::invalid_argument("PentadiagonalMatrix: offset-2 band must have length size - 2");
  }
}

HalfInteger PentadiagonalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("PentadiagonalMatrix::at");
  if (i == j) return diag_[i];
  if (i + 2 == j) return offdiag2_[i];
  if (j + 2 == i) return offdiag2_[j];
  return {};
}

BidiagonalMatrix::BidiagonalMatrix(std::vector<HalfInteger> diag, std::vector<HalfInteger> superdiag)
    : diag_(std::move(diag)), superdiag_(std::move(superdiag)) {
  if (diag_.empty()) throw std::invalid_argument("BidiagonalMatrix: size must be at least 1");
  if (superdiag_.size() + 1 != diag_.size()) {
    throw std::invalid_argument("BidiagonalMatrix: superdiagonal length must be size - 1");
  }
}

// ---------------------------------------------------------------------------

PentadiagonalMatrix build_A(std::size_t n) {
  check_order(n, "build_A");
  auto diag = tabulate(n, [](std::int64_t k) { return HalfInteger(k * k - k + 1); });
  auto off = tabulate(n >= 2 ? n - 2 : 0,
                      [](std::int64_t k) { return HalfInteger::from_twice(-k * (k + 1)); });
  return {std::move(diag), std::move(off)};
}

TridiagonalMatrix build_B(std::size_t m) {
  check_order(m, "build_B");
  return {tabulate(m, [](std::int64_t k) { return HalfInteger(4 * k * k - 6 * k + 3); }),
          tabulate(m - 1, [](std::int64_t k) { return HalfInteger(-k * (2 * k - 1)); })};
}

TridiagonalMatrix build_C(std::size_t m) {
  check_order(m, "build_C");
  return {tabulate(m, [](std::int64_t k) { return HalfInteger(4 * k * k - 2 * k + 1); }),
          tabulate(m - 1, [](std::int64_t k) { return HalfInteger(-k * (2 * k + 1)); })};
}

TridiagonalMatrix build_D(std::size_t m) {
  check_order(m, "build_D");
  return build_B(m).shifted(-HalfInteger::half());
}

TridiagonalMatrix build_G(std::size_t m) {
  check_order(m, "build_G");
  return {tabulate(m, [](std::int64_t k) { return HalfInteger(2 * k - 1); }),
          tabulate(m - 1, [](std::int64_t k) { return HalfInteger(-k); })};
}

TridiagonalMatrix build_H(std::size_t n) {
  check_order(n, "build_H");
  return {tabulate(n, [](std::int64_t k) { return HalfInteger(2 * k * k - 2 * k + 1); }),
          tabulate(n - 1, [](std::int64_t k) { return HalfInteger(-k * k); })};
}

BidiagonalMatrix build_U(std::size_t n) {
  check_order(n, "build_U");
  return {tabulate(n, [](std::int64_t k) { return HalfInteger(k); }),
          tabulate(n - 1, [](std::int64_t k) { return HalfInteger(-k); })};
}

TridiagonalMatrix build_F(std::size_t n) { return product_with_transpose(build_U(n)); }

TridiagonalMatrix product_with_transpose(const BidiagonalMatrix& u) {
  const auto d = u.diag();
  const auto s = u.superdiag();
  const std::size_t n = u.size();
  std::vector<HalfInteger> diag(n);
  std::vector<HalfInteger> off(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    diag[k] = d[k] * d[k];
    if (k + 1 < n) {
      diag[k] += s[k] * s[k];
      off[k] = s[k] * d[k + 1];
    }
  }
  return {std::move(diag), std::move(off)};
}

TridiagonalMatrix transpose_product(const BidiagonalMatrix& u) {
  const auto d = u.diag();
  const auto s = u.superdiag();
  const std::size_t n = u.size();
  std::vector<HalfInteger> diag(n);
  std::vector<HalfInteger> off(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    diag[k] = d[k] * d[k];
    if (k > 0) diag[k] += s[k - 1] * s[k - 1];
    if (k + 1 < n) off[k] = d[k] * s[k];
  }
  return {std::move(diag), std::move(off)};
}

ParityBlocks split_by_parity(const PentadiagonalMatrix& a) {
  const auto diag = a.diag();
  const auto off = a.offdiag2();
  std::vector<HalfInteger> odd_d, odd_e, even_d, even_e;
  // Zero-based index i holds one-based index i + 1, so even i is "odd".
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& d = (i % 2 == 0) ? odd_d : even_d;
    d.push_back(diag[i]);
    if (i < off.size()) {
      auto& e = (i % 2 == 0) ? odd_e : even_e;
      e.push_back(off[i]);
    }
  }
  ParityBlocks blocks{TridiagonalMatrix(std::move(odd_d), std::move(odd_e)), std::nullopt};
  if (!even_d.empty()) blocks.even.emplace(std::move(even_d), std::move(even_e));
  return blocks;
}

ParityBlocks split_A(const PentadiagonalMatrix& a) {
  if (!(a == build_A(a.size()))) {
    throw std::invalid_argument("split_A: matrix does not match the A_n pattern");
  }
  return split_by_parity(a);
}

}  // namespace hardy
