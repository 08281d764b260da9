#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "bsw/error.hpp"
#include "bsw/poly/polynomial.hpp"

// Gröbner machinery over free modules R^r, R = Q[z_1..z_n].  Ideals are the
// rank-one case; syzygy modules use the elimination order below.

namespace bsw::groebner {

using poly::ExponentVector;
using poly::Polynomial;
using poly::Rational;
using poly::Ring;

struct ModuleTerm {
  ExponentVector monomial;
  std::size_t component;
  Rational coeff;
};

/// Monomial order on the terms x^a e_i of R^r.
class ModuleOrder {
 public:
  /// Rank one, the ring order itself.
  static std::shared_ptr<const ModuleOrder> ideal(Ring ring);

  /// Term over position: shifted weighted degree deg(x^a) + shift_i, then the
  /// ring order, then position (lower index is larger).
  static std::shared_ptr<const ModuleOrder> graded(Ring ring, std::vector<long> shifts);

  /// Order on R^{u + l}.  Any term in the first u ("upper") components is
  /// larger than any term in the last l components.  Upper terms compare as in
  /// `graded(upper_shifts)`.  A lower term x^a e_{u+j} is ranked by the upper
  /// term x^a * lead(F_j) (the Schreyer order induced by vectors F_j with the
  /// given leading terms), ties broken by j.
  static std::shared_ptr<const ModuleOrder> elimination(
      Ring ring, std::vector<long> upper_shifts,
      std::vector<std::pair<ExponentVector, std::size_t>> lower_leads);

  std::strong_ordering compare(const ExponentVector& a, std::size_t ca, const ExponentVector& b,
                               std::size_t cb) const;

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return upper_ + lower_leads_.size(); }
  std::size_t upper_rank() const noexcept { return upper_; }
  /// Shifts of the upper block; empty for the ungraded ideal order.
  const std::vector<long>& shifts() const noexcept { return shifts_; }

 private:
  ModuleOrder() = default;

  std::strong_ordering compare_upper(const ExponentVector& a, std::size_t ca,
                                     const ExponentVector& b, std::size_t cb) const;

  Ring ring_;
  std::size_t upper_ = 1;
  std::vector<long> shifts_;
  bool use_degree_ = false;
  std::vector<std::pair<ExponentVector, std::size_t>> lower_leads_;
};

using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

/// Element of R^r, stored as terms in strictly descending module order.
class ModuleVector {
 public:
  explicit ModuleVector(ModuleOrderPtr order) : order_(std::move(order)) {}

  static ModuleVector from_terms(ModuleOrderPtr order, std::vector<ModuleTerm> terms);
  static ModuleVector from_components(ModuleOrderPtr order, const std::vector<Polynomial>& comps);
  static ModuleVector from_polynomial(ModuleOrderPtr order, const Polynomial& p);

  const ModuleOrderPtr& order() const noexcept { return order_; }
  const std::vector<ModuleTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const ModuleTerm& leading_term() const;

  /// Dense component list of length rank().
  std::vector<Polynomial> components() const;
  Polynomial component(std::size_t i) const;

  ModuleVector operator+(const ModuleVector& v) const;
  ModuleVector operator-(const ModuleVector& v) const;
  ModuleVector scaled(const Rational& c) const;
  ModuleVector mul_term(const ExponentVector& m, const Rational& c) const;
  /// this - c * x^m * v
  ModuleVector sub_mul_term(const ExponentVector& m, const Rational& c, const ModuleVector& v) const;
  ModuleVector monic() const;
  /// Removes the leading term in place (division bookkeeping).
  void pop_leading();

  /// Same components viewed under another order of the same rank.
  ModuleVector reordered(ModuleOrderPtr order) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  std::vector<ModuleTerm> merged(const std::vector<ModuleTerm>& other, const ExponentVector* m,
                                 const Rational& c) const;

  ModuleOrderPtr order_;
  std::vector<ModuleTerm> terms_;
};

struct ModuleGbOptions {
  std::size_t max_steps = 1'000'000;
  /// Record, for each basis element, its coefficients in the input vectors.
  bool track_representation = false;
  /// Buchberger's coprime-leading-term criterion.  Only valid in rank one.
  bool product_criterion = false;
};

struct ModuleGbResult {
  /// Reduced basis: minimal, tail reduced, monic, sorted by ascending
  /// leading term.
  std::vector<ModuleVector> basis;
  /// representation[i][j] = coefficient of input j in basis[i]; filled only
  /// when tracking was requested.
  std::vector<std::vector<Polynomial>> representation;
  std::size_t steps = 0;
};

/// Raised when the reduction-step budget runs out; carries the basis as it
/// stood at that moment.
class GroebnerBudgetError : public BudgetError {
 public:
  GroebnerBudgetError(const std::string& what, std::vector<ModuleVector> partial)
      : BudgetError(what), partial_(std::move(partial)) {}
  const std::vector<ModuleVector>& partial_basis() const noexcept { return partial_; }

 private:
  std::vector<ModuleVector> partial_;
};

/// Buchberger's algorithm with normal pair selection and the chain criterion
/// (plus the product criterion when enabled).  Zero inputs are ignored.
ModuleGbResult module_groebner_basis(const std::vector<ModuleVector>& gens,
                                     const ModuleGbOptions& options = {});

struct ModuleDivision {
  ModuleVector remainder;
  std::vector<Polynomial> quotients;  // one per divisor
  std::size_t steps = 0;
};

/// Full multivariate division; first divisor whose leading term divides wins.
ModuleDivision module_divide(const ModuleVector& v, const std::vector<ModuleVector>& divisors,
                             std::size_t max_steps = static_cast<std::size_t>(-1));

ModuleVector module_normal_form(const ModuleVector& v, const std::vector<ModuleVector>& basis);

/// S-vector of two elements with equal leading component.
ModuleVector s_vector(const ModuleVector& f, const ModuleVector& g);

/// Post-hoc check that every S-vector of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<ModuleVector>& basis);

}  // namespace bsw::groebner
