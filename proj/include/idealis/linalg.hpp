#pragma once

// Exact rank and determinant for small integer matrices.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace idealis {

using BigInt = boost::multiprecision::cpp_int;

/// Characteristic of the coefficient field: 0 (the rationals) or a prime below 2^31.
class FieldChar {
 public:
  constexpr FieldChar() = default;
  /// Throws InvalidArgument unless p is 0 or a prime < 2^31.
  explicit FieldChar(std::int64_t p);

  std::uint32_t value() const { return p_; }
  friend bool operator==(FieldChar, FieldChar) = default;

 private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::int64_t n);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rank over Q (fraction-free elimination) or over F_p.
std::size_t rank(const IntMatrix& m, FieldChar field);

/// Exact determinant of a square matrix.
BigInt determinant(const IntMatrix& m);

}  // namespace idealis
