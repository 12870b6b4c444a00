#pragma once

// Structured matrix families whose smallest eigenvalues give the finite
// dimensional Hardy constants. All entries are exact half-integers and the
// matrices are stored band by band; nothing here is ever densified.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hardy/big_rational.hpp"

namespace hardy {

/// Largest order accepted by the builders. Keeps 2*(4n^2) inside int64 and
/// every entry exactly representable as a double.
inline constexpr std::size_t kMaxOrder = 100'000'000;

/// Exact value p/2 for integer p.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(std::int64_t integer) : twice_(2 * integer) {}  // NOLINT

  static constexpr HalfInteger from_twice(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger half() { return from_twice(1); }

  [[nodiscard]] constexpr std::int64_t twice() const { return twice_; }
  [[nodiscard]] constexpr bool is_integer() const { return twice_ % 2 == 0; }
  [[nodiscard]] constexpr double to_double() const { return static_cast<double>(twice_) * 0.5; }
  [[nodiscard]] BigRational to_rational() const { return BigRational(twice_, 2); }

  constexpr HalfInteger& operator+=(HalfInteger rhs) {
    twice_ += rhs.twice_;
    return *this;
  }
  constexpr HalfInteger& operator-=(HalfInteger rhs) {
    twice_ -= rhs.twice_;
    return *this;
  }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }
  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInteger operator*(std::int64_t s, HalfInteger h) {
    return from_twice(s * h.twice_);
  }
  /// Throws std::domain_error when the product is a quarter-integer.
  friend HalfInteger operator*(HalfInteger a, HalfInteger b);

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr std::strong_ordering operator<=>(HalfInteger, HalfInteger) = default;

 private:
  std::int64_t twice_ = 0;
};

/// Symmetric tridiagonal (Jacobi) matrix. offdiag[k] couples k and k+1.
class TridiagonalMatrix {
 public:
  TridiagonalMatrix(std::vector<HalfInteger> diag, std::vector<HalfInteger> offdiag);

  [[nodiscard]] std::size_t size() const { return diag_.size(); }
  [[nodiscard]] std::span<const HalfInteger> diag() const { return diag_; }
  [[nodiscard]] std::span<const HalfInteger> offdiag() const { return offdiag_; }

  /// T + shift * I.
  [[nodiscard]] TridiagonalMatrix shifted(HalfInteger shift) const;
  /// Entry (i, j), zero outside the band. Zero-based.
  [[nodiscard]] HalfInteger at(std::size_t i, std::size_t j) const;

  friend TridiagonalMatrix operator+(const TridiagonalMatrix& a, const TridiagonalMatrix& b);
  friend TridiagonalMatrix operator-(const TridiagonalMatrix& a, const TridiagonalMatrix& b);
  friend TridiagonalMatrix operator*(std::int64_t s, const TridiagonalMatrix& t);
  friend bool operator==(const TridiagonalMatrix&, const TridiagonalMatrix&) = default;

 private:
  std::vector<HalfInteger> diag_;
  std::vector<HalfInteger> offdiag_;
};

/// Symmetric matrix with nonzeros only on the main diagonal and at |j-k| = 2.
/// offdiag2[k] couples k and k+2.
class PentadiagonalMatrix {
 public:
  PentadiagonalMatrix(std::vector<HalfInteger> diag, std::vector<HalfInteger> offdiag2);

  [[nodiscard]] std::size_t size() const { return diag_.size(); }
  [[nodiscard]] std::span<const HalfInteger> diag() const { return diag_; }
  [[nodiscard]] std::span<const HalfInteger> offdiag2() const { return offdiag2_; }
  [[nodiscard]] HalfInteger at(std::size_t i, std::size_t j) const;

  friend bool operator==(const PentadiagonalMatrix&, const PentadiagonalMatrix&) = default;

 private:
  std::vector<HalfInteger> diag_;
  std::vector<HalfInteger> offdiag2_;
};

/// Upper bidiagonal matrix. superdiag[k] sits at (k, k+1).
class BidiagonalMatrix {
 public:
  BidiagonalMatrix(std::vector<HalfInteger> diag, std::vector<HalfInteger> superdiag);

  [[nodiscard]] std::size_t size() const { return diag_.size(); }
  [[nodiscard]] std::span<const HalfInteger> diag() const { return diag_; }
  [[nodiscard]] std::span<const HalfInteger> superdiag() const { return superdiag_; }

  friend bool operator==(const BidiagonalMatrix&, const BidiagonalMatrix&) = default;

 private:
  std::vector<HalfInteger> diag_;
  std::vector<HalfInteger> superdiag_;
};

// Builders. Indices in the formulas are one-based; all sizes must lie in
// [1, kMaxOrder] or std::invalid_argument is thrown.

/// a_kk = k^2 - k + 1, a_{k,k+2} = -k(k+1)/2.
PentadiagonalMatrix build_A(std::size_t n);
/// b_kk = 4k^2 - 6k + 3, b_{k,k+1} = -k(2k-1).
TridiagonalMatrix build_B(std::size_t m);
/// c_kk = 4k^2 - 2k + 1, c_{k,k+1} = -k(2k+1).
TridiagonalMatrix build_C(std::size_t m);
/// B_m - I/2.
TridiagonalMatrix build_D(std::size_t m);
/// g_kk = 2k - 1, g_{k,k+1} = -k.
TridiagonalMatrix build_G(std::size_t m);
/// h_kk = 2k^2 - 2k + 1, h_{k,k+1} = -k^2.
TridiagonalMatrix build_H(std::size_t n);
/// u_kk = k, u_{k,k+1} = -k.
BidiagonalMatrix build_U(std::size_t n);
/// U_n U_n^T, formed from the bidiagonal factor.
TridiagonalMatrix build_F(std::size_t n);

/// U U^T for an upper bidiagonal U.
TridiagonalMatrix product_with_transpose(const BidiagonalMatrix& u);
/// U^T U for an upper bidiagonal U.
TridiagonalMatrix transpose_product(const BidiagonalMatrix& u);

/// Blocks of a pentadiagonal matrix after the odd/even index permutation.
/// `odd` collects one-based indices 1, 3, 5, ...; `even` is absent for n = 1.
struct ParityBlocks {
  TridiagonalMatrix odd;
  std::optional<TridiagonalMatrix> even;
};

/// Odd/even permutation of any PentadiagonalMatrix.
ParityBlocks split_by_parity(const PentadiagonalMatrix& a);

/// Split of A_n into (B_{floor((n+1)/2)}, C_{floor(n/2)}). Throws
/// std::invalid_argument when `a` is not entrywise equal to build_A(a.size()).
ParityBlocks split_A(const PentadiagonalMatrix& a);

}  // namespace hardy
