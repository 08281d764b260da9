#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bsw::poly {

/// Exponents of a monomial z^alpha; one entry per ring variable.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> init);
  explicit ExponentVector(std::vector<int> e);

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& data() const noexcept { return e_; }

  long total_degree() const;
  bool is_one() const;

  /// True when this monomial divides `other` (componentwise <=).
  bool divides(const ExponentVector& other) const;
  bool coprime(const ExponentVector& other) const;

  ExponentVector operator*(const ExponentVector& other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  ExponentVector operator/(const ExponentVector& divisor) const;
  ExponentVector lcm(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the raw exponents; a container key,
  /// not a monomial order.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<int> e_;
};

enum class MonomialOrder { Lex, DegRevLex, WeightedDegRevLex, Schreyer };

std::string_view order_name(MonomialOrder order);
std::optional<MonomialOrder> order_from_name(std::string_view name);

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Variables, quasi-homogeneous weights and monomial order of a polynomial
/// ring Q[z_1..z_n].  Immutable and shared between all polynomials of the ring.
///
/// `elimination_block` = k > 0 turns the order into a block order in which any
/// monomial involving the first k variables beats every monomial free of them;
/// used for elimination of auxiliary variables.
class RingContext {
 public:
  static Ring make(std::vector<std::string> names, std::vector<int> weights = {},
                   MonomialOrder order = MonomialOrder::WeightedDegRevLex,
                   std::size_t elimination_block = 0);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  MonomialOrder order() const noexcept { return order_; }
  std::size_t elimination_block() const noexcept { return elimination_block_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  long weighted_degree(const ExponentVector& m) const;

  /// Monomial order.  Throws StructuralError on length mismatch.
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;

  bool same_as(const RingContext& other) const;

  /// Same ring with `name` prepended and an elimination order on it.
  Ring with_eliminated_variable(const std::string& name) const;

 private:
  RingContext() = default;

  std::strong_ordering compare_range(const ExponentVector& a, const ExponentVector& b,
                                     std::size_t lo, std::size_t hi, MonomialOrder order) const;

  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_ = MonomialOrder::WeightedDegRevLex;
  std::size_t elimination_block_ = 0;
};

bool same_ring(const Ring& a, const Ring& b);

/// Free-function form of `RingContext::compare`.
std::strong_ordering cmp_monomials(const ExponentVector& a, const ExponentVector& b,
                                   const RingContext& ctx);

}  // namespace bsw::poly
