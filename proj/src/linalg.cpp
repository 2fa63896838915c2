#include "idealis/linalg.hpp"

#include <optional>
#include <utility>

#include "idealis/error.hpp"

namespace idealis {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldChar::FieldChar(std::int64_t p) {
  if (p != 0 && (p >= (std::int64_t{1} << 31) || !is_prime(p))) {
    throw InvalidArgument("field characteristic must be 0 or a prime below 2^31, got " +
                          std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

namespace {

struct Overflow {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

// Fraction-free (Bareiss) elimination. Returns the rank and, for square input,
// the determinant. Pivot columns without a nonzero entry are skipped.
template <class T>
std::pair<std::size_t, T> bareiss(std::vector<std::vector<T>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  T prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = sub(mul(a[i][j], a[r][c]), mul(a[i][c], a[r][j])) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  T det = 0;
  if (rows == cols && r == rows) det = sign > 0 ? prev : T(-prev);
  return {r, det};
}

template <class T>
std::vector<std::vector<T>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  return a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  auto a = to_rows<std::int64_t>(m);
  for (auto& row : a) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t inv = inverse_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m, FieldChar field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.value() != 0) return rank_mod_p(m, field.value());
  try {
    return bareiss(to_rows<std::int64_t>(m), m.cols()).first;
  } catch (const Overflow&) {
    return bareiss(to_rows<BigInt>(m), m.cols()).first;
  }
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  try {
    return bareiss(to_rows<std::int64_t>(m), m.cols()).second;
  } catch (const Overflow&) {
    return bareiss(to_rows<BigInt>(m), m.cols()).second;
  }
}

}  // namespace idealis
