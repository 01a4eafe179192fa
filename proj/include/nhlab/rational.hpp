#pragma once

// Exact arithmetic shared by every module: GMP rationals, weights in the
// fundamental-weight basis, and small dense matrices with fraction-free rank.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nhlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws nhlab::Error (usage) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

/// A weight of the Cartan subalgebra, stored by its coordinates in the basis
/// of fundamental weights. Coordinate i is the pairing with the i-th simple
/// coroot.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Weight from_ints(std::span<const long> values);
  static Weight from_ints(std::initializer_list<long> values);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const;
  bool is_integral() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight w);

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates; used only to key ordered containers.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  std::string to_string() const;
  std::vector<std::string> to_strings() const;

 private:
  std::vector<Rational> coords_;
};

/// Dense row-major rational matrix. Weight-graded blocks are small, so a dense
/// layout keeps elimination simple.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_symmetric() const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Column-compressed sparse matrix; column c lists (row, value) pairs in
/// ascending row order with no zero values.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  /// Replaces column c; entries are sorted and zeros dropped.
  void set_column(std::size_t c, std::vector<Entry> entries);
  std::size_t nonzeros() const;

  RatMatrix to_dense() const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Result of fraction-free row reduction: the rank and the pivot columns,
/// which are the leftmost linearly independent columns.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Bareiss elimination over the integers after clearing row denominators.
Echelon echelon(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Rank by sparse fraction-free elimination on integer-scaled columns.
std::size_t rank(const SparseMatrix& m);

/// Inverse of a nonsingular square matrix (Gauss-Jordan over Q). Throws
/// std::domain_error if the matrix is singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace nhlab
