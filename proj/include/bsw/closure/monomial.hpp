#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "bsw/groebner/ideal.hpp"

namespace bsw::closure {

using poly::ExponentVector;

/// Monomial ideal in n variables, kept as its minimal generators (an antichain
/// under divisibility) in increasing raw-lexicographic order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Non-minimal generators are discarded.  ValidationError when empty.
  MonomialIdeal(std::size_t num_vars, std::vector<ExponentVector> generators);

  /// ValidationError unless every generator is a single term.
  static MonomialIdeal from_ideal(const groebner::Ideal& ideal);

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool contains(const ExponentVector& v) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  MonomialIdeal operator*(const MonomialIdeal& other) const;
  /// BudgetError when the number of products before minimalization exceeds cap.
  MonomialIdeal power(unsigned ell, std::size_t cap = 200'000) const;

  groebner::Ideal to_ideal(const poly::Ring& ring) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Inequality a.v >= b with a >= 0 componentwise.
struct Halfspace {
  std::vector<mpz_class> a;
  mpz_class b;
};

/// conv(generators) + nonnegative orthant, as an exact list of valid
/// inequalities containing every facet.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }

  bool contains(const ExponentVector& v) const;
  /// N * P, which is the polyhedron of the N-th power of the ideal.
  NewtonPolyhedron scaled(unsigned factor) const;

  /// Upper corner of a box holding every minimal lattice point.
  const std::vector<long>& box() const noexcept { return box_; }

 private:
  NewtonPolyhedron() = default;

  std::size_t n_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<long> box_;
};

/// Minimal lattice points of P; BudgetError when the search box exceeds cap.
MonomialIdeal lattice_ideal(const NewtonPolyhedron& p, std::size_t cap = 2'000'000);

/// Integral closure of a monomial ideal.
MonomialIdeal newton_closure(const MonomialIdeal& ideal, std::size_t cap = 2'000'000);

struct ContainmentCheck {
  bool holds = true;
  std::optional<ExponentVector> counterexample;
  unsigned exponent = 0;  // N in closure(M^N)
  unsigned ell = 0;
};

/// Is the closure of M^N inside M^ell?  The first violating closure generator
/// is reported.
ContainmentCheck closure_power_in_power(const MonomialIdeal& ideal, unsigned N, unsigned ell,
                                        std::size_t cap = 2'000'000);

/// closure(M^{min(m,d)+ell-1}) inside M^ell, with m the number of minimal
/// generators.  d = 0 means the number of variables.
ContainmentCheck bs_verify_monomial(const MonomialIdeal& ideal, unsigned ell, unsigned d = 0,
                                    std::size_t cap = 2'000'000);

}  // namespace bsw::closure
