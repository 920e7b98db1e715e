#include "torus2/gf2.hpp"

#include <bit>

#include "torus2/errors.hpp"

namespace torus2::gf2 {

namespace {

void require_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw InvalidArgument("GF(2) rank must lie in [1, 16], got " + std::to_string(n));
  }
}

std::uint32_t mask_for(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// Incremental row echelon basis, indexed by pivot bit.
class EchelonBasis {
 public:
  // Returns true iff v was outside the current span.
  bool insert(std::uint32_t v) {
    while (v != 0) {
      const int pivot = std::bit_width(v) - 1;
      if (rows_[static_cast<std::size_t>(pivot)] == 0) {
        rows_[static_cast<std::size_t>(pivot)] = v;
        return true;
      }
      v ^= rows_[static_cast<std::size_t>(pivot)];
    }
    return false;
  }

 private:
  std::array<std::uint32_t, 32> rows_{};
};

}  // namespace

Vector::Vector(int n, std::uint32_t bits) {
  require_rank(n);
  if ((bits & ~mask_for(n)) != 0) {
    throw InvalidArgument("vector bits exceed rank " + std::to_string(n));
  }
  n_ = static_cast<std::uint8_t>(n);
  bits_ = static_cast<std::uint16_t>(bits);
}

Vector Vector::basis(int n, int k) {
  if (k < 0 || k >= n) {
    throw InvalidArgument("basis index out of range");
  }
  return Vector(n, 1u << k);
}

Vector Vector::operator+(const Vector& other) const {
  Vector out = *this;
  out += other;
  return out;
}

Vector& Vector::operator+=(const Vector& other) {
  if (n_ != other.n_) {
    throw DimensionMismatch("cannot add vectors of ranks " + std::to_string(n_) + " and " +
                            std::to_string(other.n_));
  }
  bits_ = static_cast<std::uint16_t>(bits_ ^ other.bits_);
  return *this;
}

std::string Vector::to_string() const {
  if (bits_ == 0) return "0";
  std::string out;
  for (int k = 0; k < n_; ++k) {
    if (!coordinate(k)) continue;
    if (!out.empty()) out += '+';
    out += 'e' + std::to_string(k + 1);
  }
  return out;
}

Matrix::Matrix(std::span<const Vector> columns) {
  if (columns.empty()) {
    throw InvalidArgument("matrix needs at least one column");
  }
  n_ = columns.front().rank();
  if (static_cast<int>(columns.size()) != n_) {
    throw DimensionMismatch("square matrix of rank " + std::to_string(n_) + " needs " +
                            std::to_string(n_) + " columns");
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != n_) {
      throw DimensionMismatch("matrix columns have mixed ranks");
    }
    columns_[j] = static_cast<std::uint16_t>(columns[j].bits());
  }
}

Matrix Matrix::identity(int n) {
  require_rank(n);
  std::array<std::uint16_t, kMaxRank> cols{};
  for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(1u << j);
  return Matrix(n, cols);
}

Matrix Matrix::from_column_bits(int n, std::span<const std::uint32_t> columns) {
  std::vector<Vector> cols;
  cols.reserve(columns.size());
  for (auto c : columns) cols.emplace_back(n, c);
  return Matrix(cols);
}

bool Matrix::is_invertible() const {
  EchelonBasis basis;
  for (int j = 0; j < n_; ++j) {
    if (!basis.insert(columns_[static_cast<std::size_t>(j)])) return false;
  }
  return true;
}

Matrix Matrix::inverse() const {
  // Gauss-Jordan on [A | I], row operations done on column-major storage by
  // working with rows extracted as bitmasks.
  std::array<std::uint32_t, kMaxRank> rows{};
  for (int i = 0; i < n_; ++i) {
    std::uint32_t row = 0;
    for (int j = 0; j < n_; ++j) {
      if (entry(i, j)) row |= 1u << j;
    }
    rows[static_cast<std::size_t>(i)] = row | (1u << (n_ + i));
  }
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int i = col; i < n_; ++i) {
      if ((rows[static_cast<std::size_t>(i)] >> col) & 1u) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw InvalidArgument("matrix is singular");
    std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(col)]);
    for (int i = 0; i < n_; ++i) {
      if (i != col && ((rows[static_cast<std::size_t>(i)] >> col) & 1u)) {
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(col)];
      }
    }
  }
  std::array<std::uint16_t, kMaxRank> cols{};
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((rows[static_cast<std::size_t>(i)] >> (n_ + j)) & 1u) {
        cols[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(cols[static_cast<std::size_t>(j)] | (1u << i));
      }
    }
  }
  return Matrix(n_, cols);
}

int Matrix::order() const {
  if (!is_invertible()) throw InvalidArgument("order of a singular matrix");
  const Matrix id = identity(n_);
  Matrix power = *this;
  int k = 1;
  while (power != id) {
    power = power * *this;
    ++k;
  }
  return k;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (n_ != rhs.n_) throw DimensionMismatch("matrix product of different ranks");
  std::array<std::uint16_t, kMaxRank> cols{};
  for (int j = 0; j < n_; ++j) {
    cols[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(apply(*this, rhs.column(j)).bits());
  }
  return Matrix(n_, cols);
}

int rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  const int n = vectors.front().rank();
  EchelonBasis basis;
  int r = 0;
  for (const auto& v : vectors) {
    if (v.rank() != n) throw DimensionMismatch("rank() over vectors of mixed ranks");
    if (basis.insert(v.bits())) ++r;
  }
  return r;
}

bool is_independent(std::span<const Vector> vectors) {
  return rank(vectors) == static_cast<int>(vectors.size());
}

std::uint64_t gl_order(int n) {
  if (n < 1 || n > 8) throw CapacityError("gl_order supports 1 <= n <= 8");
  std::uint64_t order = 1;
  for (int k = 1; k <= n; ++k) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << (k - 1));
  return order;
}

std::vector<Matrix> enumerate_gl(int n) {
  if (n < 1 || n > kMaxEnumerableRank) {
    throw CapacityError("enumerate_gl supports 1 <= n <= " + std::to_string(kMaxEnumerableRank) +
                        ", got " + std::to_string(n));
  }
  std::vector<Matrix> out;
  out.reserve(gl_order(n));
  std::array<std::uint32_t, kMaxRank> cols{};
  const std::uint32_t limit = 1u << n;

  // Column j ranges over vectors outside the span of columns 0..j-1.
  auto extend = [&](auto& self, int j) -> void {
    if (j == n) {
      out.push_back(Matrix::from_column_bits(n, std::span(cols.data(), static_cast<std::size_t>(n))));
      return;
    }
    for (std::uint32_t v = 1; v < limit; ++v) {
      EchelonBasis basis;
      bool independent = true;
      for (int i = 0; i < j && independent; ++i) basis.insert(cols[static_cast<std::size_t>(i)]);
      independent = basis.insert(v);
      if (!independent) continue;
      cols[static_cast<std::size_t>(j)] = v;
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  return out;
}

Vector apply(const Matrix& m, const Vector& v) {
  if (m.rank() != v.rank()) throw DimensionMismatch("apply(): matrix and vector ranks differ");
  std::uint32_t out = 0;
  for (int j = 0; j < v.rank(); ++j) {
    if (v.coordinate(j)) out ^= m.column_bits(j);
  }
  return Vector(v.rank(), out);
}

}  // namespace torus2::gf2
