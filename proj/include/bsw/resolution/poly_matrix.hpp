#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bsw/poly/polynomial.hpp"

namespace bsw::resolution {

using poly::Polynomial;
using poly::Ring;

/// Dense matrix of polynomials over one ring.  Zero rows or columns are
/// allowed (the kernel of an injective map is a matrix with no columns).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static PolyMatrix from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows);
  /// `rows` is needed when there are no columns.
  static PolyMatrix from_columns(Ring ring, std::size_t rows, const std::vector<std::vector<Polynomial>>& cols);
  static PolyMatrix row(Ring ring, const std::vector<Polynomial>& entries);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);

  std::vector<Polynomial> column(std::size_t j) const;
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& other) const;

  PolyMatrix without_row(std::size_t i) const;
  PolyMatrix without_column(std::size_t j) const;

  /// Nested rows of canonical polynomial strings.
  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// All nonzero k x k minors, deduplicated up to a nonzero scalar, in a
/// deterministic order.  k = 0 gives the single minor 1.  Throws BudgetError
/// when the number of minors exceeds `cap`.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, std::size_t cap = 200'000);

/// Determinant of a square matrix.
Polynomial determinant(const PolyMatrix& m);

/// Jacobian of the generators with respect to all ring variables
/// (one row per generator).
PolyMatrix jacobian(const Ring& ring, const std::vector<Polynomial>& gens);

}  // namespace bsw::resolution
