#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "bsw/groebner/module.hpp"

namespace bsw::groebner {

struct Budget {
  /// Limit on S-pair reductions plus elementary reduction steps, per Gröbner
  /// basis computation.
  std::size_t max_steps = 1'000'000;
};

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> elements;  // ascending leading monomials
  poly::MonomialOrder order = poly::MonomialOrder::WeightedDegRevLex;
  bool reduced = true;

  bool is_unit() const;
  std::vector<ExponentVector> leading_monomials() const;
};

/// Ideal given by generators.  Zero generators are dropped on construction.
/// Copies share a write-once Gröbner basis cache; concurrent callers may both
/// compute it, but only the first result is published and all see it.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }

  std::shared_ptr<const GroebnerBasis> cached_gb() const;
  /// Returns whichever basis ends up in the cache.
  std::shared_ptr<const GroebnerBasis> publish_gb(std::shared_ptr<const GroebnerBasis> gb) const;

 private:
  struct Cache;

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

GroebnerBasis groebner_basis(const Ideal& ideal, const Budget& budget = {});

/// Remainder of full division by the basis.  StructuralError when the rings
/// (and so the orders) differ.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors);

struct MembershipResult {
  bool member = false;
  /// Cofactors h_i with p = sum h_i * generator_i, when requested and member.
  std::optional<std::vector<Polynomial>> cofactors;
};

MembershipResult ideal_member(const Polynomial& p, const Ideal& ideal, bool want_certificate = false,
                              const Budget& budget = {});

/// True when every generator of `sub` lies in `ideal`.
bool ideal_contains(const Ideal& ideal, const Ideal& sub, const Budget& budget = {});

enum class CombineKind { Sum, Product, Intersection };

/// Sum concatenates, product multiplies pairwise, intersection eliminates t
/// from t*I + (1-t)*J.
Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineKind kind, const Budget& budget = {});

/// Products of ell generators with repetition.  Throws BudgetError when
/// m^ell exceeds `cap`.
Ideal ideal_power(const Ideal& ideal, unsigned ell, std::size_t cap = 100'000);

/// Dimension of V(I): the largest set of variables supporting no leading
/// monomial of the Gröbner basis.  -1 for the unit ideal.
int krull_dimension(const Ideal& ideal, const Budget& budget = {});

/// Same computation starting from known leading monomials.
int dimension_from_leading_monomials(const std::vector<ExponentVector>& leads, std::size_t num_vars);

bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

}  // namespace bsw::groebner
