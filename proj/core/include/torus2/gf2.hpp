#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace torus2::gf2 {

inline constexpr int kMaxRank = 16;
// enumerate_gl refuses anything larger; |GL(5,Z2)| is already ~1e7.
inline constexpr int kMaxEnumerableRank = 4;

// An element of (Z2)^n stored as an n-bit mask; bit k is coordinate k.
class Vector {
 public:
  Vector(int n, std::uint32_t bits);

  static Vector zero(int n) { return Vector(n, 0); }
  // Standard basis vector e_{k+1} (k is zero-based).
  static Vector basis(int n, int k);

  int rank() const noexcept { return n_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool coordinate(int k) const noexcept { return (bits_ >> k) & 1u; }

  Vector operator+(const Vector& other) const;
  Vector& operator+=(const Vector& other);

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;

  // "e1+e3" style rendering, "0" for the zero vector.
  std::string to_string() const;

 private:
  std::uint8_t n_;
  std::uint16_t bits_;
};

// An n x n matrix over Z2 stored by columns.
class Matrix {
 public:
  explicit Matrix(std::span<const Vector> columns);

  static Matrix identity(int n);
  // Column j has bit i set iff entry (i, j) is 1.
  static Matrix from_column_bits(int n, std::span<const std::uint32_t> columns);

  int rank() const noexcept { return n_; }
  Vector column(int j) const { return Vector(n_, columns_[static_cast<std::size_t>(j)]); }
  std::uint32_t column_bits(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  bool entry(int row, int col) const { return (column_bits(col) >> row) & 1u; }

  bool is_invertible() const;
  Matrix inverse() const;
  // Multiplicative order; throws InvalidArgument for a singular matrix.
  int order() const;

  Matrix operator*(const Matrix& rhs) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  Matrix(int n, const std::array<std::uint16_t, kMaxRank>& columns) : n_(n), columns_(columns) {}

  int n_;
  std::array<std::uint16_t, kMaxRank> columns_{};
};

// Dimension of the span; 0 for the empty sequence.
int rank(std::span<const Vector> vectors);

bool is_independent(std::span<const Vector> vectors);

// Every invertible n x n matrix exactly once, ordered lexicographically by
// column bitmasks.
std::vector<Matrix> enumerate_gl(int n);

// |GL(n, Z2)| = prod_{k=1..n} (2^n - 2^{k-1}).
std::uint64_t gl_order(int n);

Vector apply(const Matrix& m, const Vector& v);

}  // namespace torus2::gf2
