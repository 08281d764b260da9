#include "bsw/resolution/poly_matrix.hpp"

#include <bit>
#include <set>

#include "bsw/error.hpp"

namespace bsw::resolution {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {
  if (!ring_) throw StructuralError("matrix needs a ring");
}

PolyMatrix PolyMatrix::from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  PolyMatrix m(std::move(ring), rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw StructuralError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

PolyMatrix PolyMatrix::from_columns(Ring ring, std::size_t rows,
                                    const std::vector<std::vector<Polynomial>>& cols) {
  PolyMatrix m(std::move(ring), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw StructuralError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

PolyMatrix PolyMatrix::row(Ring ring, const std::vector<Polynomial>& entries) {
  return from_rows(std::move(ring), {entries});
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  if (p.ring() && !poly::same_ring(p.ring(), ring_)) throw StructuralError("matrix entry from another ring");
  if (!p.ring()) p = Polynomial(ring_);
  entries_[i * cols_ + j] = std::move(p);
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw StructuralError("matrix shapes do not compose");
  if (!poly::same_ring(ring_, other.ring_)) throw StructuralError("matrices over different rings");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || other.at(k, j).is_zero()) continue;
        acc += at(i, k) * other.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  return out;
}

PolyMatrix PolyMatrix::without_row(std::size_t r) const {
  if (r >= rows_) throw StructuralError("row index out of range");
  PolyMatrix out(ring_, rows_ - 1, cols_);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) out.set(oi, j, at(i, j));
    ++oi;
  }
  return out;
}

PolyMatrix PolyMatrix::without_column(std::size_t c) const {
  if (c >= cols_) throw StructuralError("column index out of range");
  PolyMatrix out(ring_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out.set(i, oj++, at(i, j));
    }
  return out;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Subsets of {0..n-1} of size k as bitmasks, in colex order.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
  return out;
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, std::size_t cap) {
  const Ring& ring = m.ring();
  if (k == 0) return {Polynomial::constant(ring, 1)};
  if (k > m.rows() || k > m.cols()) return {};
  if (m.cols() > 20 || m.rows() > 20) throw BudgetError("matrix too large for minor enumeration");
  if (binomial(m.rows(), k) * binomial(m.cols(), k) > cap) throw BudgetError("too many minors");

  std::vector<Polynomial> out;
  std::set<std::string> seen;
  const std::size_t nc = m.cols();
  for (std::uint32_t rowmask : subsets(m.rows(), k)) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (rowmask >> i & 1u) rows.push_back(i);
    // dp[mask] = det of rows[0..|mask|-1] against the columns in mask,
    // expanded along the last of those rows.
    std::vector<Polynomial> dp(std::size_t{1} << nc, Polynomial(ring));
    dp[0] = Polynomial::constant(ring, 1);
    for (std::uint32_t mask = 1; mask < (1u << nc); ++mask) {
      const auto t = static_cast<std::size_t>(std::popcount(mask));
      if (t > k) continue;
      const std::size_t r = rows[t - 1];
      Polynomial acc(ring);
      int above = 0;
      for (std::size_t b = nc; b-- > 0;) {
        if (!(mask >> b & 1u)) continue;
        const auto& sub = dp[mask ^ (1u << b)];
        if (!m.at(r, b).is_zero() && !sub.is_zero()) {
          Polynomial term = m.at(r, b) * sub;
          acc = (above % 2 == 0) ? acc + term : acc - term;
        }
        ++above;
      }
      dp[mask] = std::move(acc);
    }
    for (std::uint32_t mask : subsets(nc, k)) {
      const Polynomial& d = dp[mask];
      if (d.is_zero()) continue;
      if (seen.insert(d.monic().to_string()).second) out.push_back(d);
    }
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  auto d = minors(m, m.rows());
  return d.empty() ? Polynomial(m.ring()) : d.front();
}

PolyMatrix jacobian(const Ring& ring, const std::vector<Polynomial>& gens) {
  PolyMatrix out(ring, gens.size(), ring->num_vars());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < ring->num_vars(); ++j) out.set(i, j, poly::partial_derivative(gens[i], j));
  return out;
}

}  // namespace bsw::resolution
