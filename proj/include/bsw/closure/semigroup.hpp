#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace bsw::closure {

/// Numerical semigroup <g_1, ..., g_k> with gcd 1: the value semigroup of an
/// irreducible curve germ parametrized by monomials in t.
class NumericalSemigroup {
 public:
  /// ValidationError for an empty list, nonpositive entries or gcd != 1.
  explicit NumericalSemigroup(std::vector<long> generators);

  /// Minimal generators, increasing.
  const std::vector<long>& generators() const noexcept { return gens_; }
  long conductor() const noexcept { return conductor_; }
  long multiplicity() const noexcept { return gens_.front(); }
  bool contains(long s) const;
  std::vector<long> gaps() const;

 private:
  std::vector<long> gens_;
  long conductor_ = 0;
  std::vector<bool> table_;  // membership below the conductor
};

/// Monomial ideal (t^{s_1}, ..., t^{s_k}) of the semigroup ring, kept as the
/// antichain of minimal shifts (s' - s not in S for distinct shifts).
class SemigroupIdeal {
 public:
  /// ValidationError when a shift is not in S or the list is empty.
  SemigroupIdeal(const NumericalSemigroup& semigroup, std::vector<long> shifts);
  SemigroupIdeal(std::shared_ptr<const NumericalSemigroup> semigroup, std::vector<long> shifts);

  const std::vector<long>& shifts() const noexcept { return shifts_; }
  /// Order v(A) = min shift.
  long order() const noexcept { return shifts_.front(); }

  bool contains(long s) const;
  /// Every element from this value on lies in the ideal.
  long saturation_bound() const noexcept { return order() + semigroup_->conductor(); }

  SemigroupIdeal operator*(const SemigroupIdeal& other) const;
  SemigroupIdeal power(unsigned ell) const;
  /// {s in S : s >= v(A)}.
  SemigroupIdeal closure() const;
  /// Every element of `other` lies in this ideal.
  bool contains(const SemigroupIdeal& other) const;

  const NumericalSemigroup& semigroup() const noexcept { return *semigroup_; }
  const std::shared_ptr<const NumericalSemigroup>& semigroup_ptr() const noexcept { return semigroup_; }

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) { return a.shifts_ == b.shifts_; }

 private:
  std::shared_ptr<const NumericalSemigroup> semigroup_;
  std::vector<long> shifts_;
};

/// t^s in A; ValidationError when s is not in S.
bool germ_ideal_member(long s, const SemigroupIdeal& ideal, const NumericalSemigroup& semigroup);

/// t^s in the integral closure of A, i.e. s >= v(A); ValidationError when s
/// is not in S.
bool germ_closure_member(long s, const SemigroupIdeal& ideal, const NumericalSemigroup& semigroup);

enum class ExponentMode { Power, ClosurePower };

struct GermExponent {
  unsigned exponent = 1;
  /// An element of closure(A^{N-1}) (or closure(A)^{N-1}) outside A^ell,
  /// certifying minimality; empty when N = 1.
  std::optional<long> witness;
};

/// Least N >= 1 with closure(A^N) inside A^ell (Power) or closure(A)^N inside
/// A^ell (ClosurePower).
GermExponent germ_bs_exponent(const SemigroupIdeal& ideal, unsigned ell, const NumericalSemigroup& semigroup,
                              ExponentMode mode = ExponentMode::Power);

/// All ideals given by antichains of shifts with v(A) <= v_max, ordered by
/// order, then number of shifts, then lexicographically.  BudgetError beyond cap.
std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& semigroup, long v_max,
                                             std::size_t cap = 1'000'000);

struct MuSearch {
  unsigned mu = 0;
  std::optional<SemigroupIdeal> witness_ideal;
  unsigned witness_ell = 0;
  std::size_t ideals_checked = 0;
};

/// max over enumerated A and ell <= ell_max of germ_bs_exponent(A, ell) - ell + 1.
/// An empirical lower bound for a uniform exponent; the first maximizer is
/// the witness.
MuSearch huneke_mu(const NumericalSemigroup& semigroup, long v_max, unsigned ell_max,
                   std::size_t cap = 1'000'000);

}  // namespace bsw::closure
