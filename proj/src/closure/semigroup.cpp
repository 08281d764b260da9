#include "bsw/closure/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "bsw/error.hpp"

namespace bsw::closure {

NumericalSemigroup::NumericalSemigroup(std::vector<long> generators) {
  if (generators.empty()) throw ValidationError("semigroup needs at least one generator");
  long g = 0;
  for (long x : generators) {
    if (x <= 0) throw ValidationError("semigroup generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw ValidationError("semigroup generators must have gcd 1");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  const long m = generators.front();
  std::vector<bool> member{true};
  long run = 1, start = 0;
  for (long s = 1; run < m; ++s) {
    bool in = false;
    for (long x : generators)
      if (x <= s && member[static_cast<std::size_t>(s - x)]) in = true;
    member.push_back(in);
    if (in) {
      if (run == 0) start = s;
      ++run;
    } else {
      run = 0;
    }
  }
  conductor_ = start;
  table_.assign(member.begin(), member.begin() + conductor_);

  // minimal generators: not a sum of two nonzero elements
  for (long x : generators) {
    bool decomposable = false;
    for (long y = 1; y < x && !decomposable; ++y)
      decomposable = contains(y) && contains(x - y);
    if (!decomposable) gens_.push_back(x);
  }
}

bool NumericalSemigroup::contains(long s) const {
  if (s < 0) return false;
  if (s >= conductor_) return true;
  return table_[static_cast<std::size_t>(s)];
}

std::vector<long> NumericalSemigroup::gaps() const {
  std::vector<long> out;
  for (long s = 1; s < conductor_; ++s)
    if (!contains(s)) out.push_back(s);
  return out;
}

SemigroupIdeal::SemigroupIdeal(const NumericalSemigroup& semigroup, std::vector<long> shifts)
    : SemigroupIdeal(std::make_shared<const NumericalSemigroup>(semigroup), std::move(shifts)) {}

SemigroupIdeal::SemigroupIdeal(std::shared_ptr<const NumericalSemigroup> semigroup, std::vector<long> shifts)
    : semigroup_(std::move(semigroup)) {
  if (shifts.empty()) throw ValidationError("semigroup ideal needs at least one shift");
  for (long s : shifts)
    if (!semigroup_->contains(s)) throw ValidationError("shift " + std::to_string(s) + " is not in the semigroup");
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  for (long s : shifts) {
    bool redundant = false;
    for (long k : shifts_)
      if (semigroup_->contains(s - k)) redundant = true;
    if (!redundant) shifts_.push_back(s);
  }
}

bool SemigroupIdeal::contains(long s) const {
  for (long k : shifts_)
    if (semigroup_->contains(s - k)) return true;
  return false;
}

bool SemigroupIdeal::contains(const SemigroupIdeal& other) const {
  return std::all_of(other.shifts_.begin(), other.shifts_.end(), [&](long s) { return contains(s); });
}

SemigroupIdeal SemigroupIdeal::operator*(const SemigroupIdeal& other) const {
  std::vector<long> sums;
  for (long a : shifts_)
    for (long b : other.shifts_) sums.push_back(a + b);
  return SemigroupIdeal(semigroup_, std::move(sums));
}

SemigroupIdeal SemigroupIdeal::power(unsigned ell) const {
  SemigroupIdeal acc(semigroup_, {0});
  for (unsigned i = 0; i < ell; ++i) acc = acc * *this;
  return acc;
}

SemigroupIdeal SemigroupIdeal::closure() const {
  // every s >= max(v, c) + m has s - m in the closure, so the minimal
  // generators lie below that bound
  const long v = order();
  const long hi = std::max(v, semigroup_->conductor()) + semigroup_->multiplicity();
  std::vector<long> members;
  for (long s = v; s < hi; ++s)
    if (semigroup_->contains(s)) members.push_back(s);
  return SemigroupIdeal(semigroup_, std::move(members));
}

namespace {

void require_element(long s, const NumericalSemigroup& semigroup) {
  if (!semigroup.contains(s)) throw ValidationError("t^" + std::to_string(s) + " is not an element of the ring");
}

}  // namespace

bool germ_ideal_member(long s, const SemigroupIdeal& ideal, const NumericalSemigroup& semigroup) {
  require_element(s, semigroup);
  return ideal.contains(s);
}

bool germ_closure_member(long s, const SemigroupIdeal& ideal, const NumericalSemigroup& semigroup) {
  require_element(s, semigroup);
  return s >= ideal.order();
}

GermExponent germ_bs_exponent(const SemigroupIdeal& ideal, unsigned ell, const NumericalSemigroup& semigroup,
                              ExponentMode mode) {
  if (ell == 0) throw ValidationError("ell must be at least 1");
  if (semigroup.generators() != ideal.semigroup().generators())
    throw StructuralError("ideal belongs to a different semigroup");
  const NumericalSemigroup& S = ideal.semigroup();
  const SemigroupIdeal target = ideal.power(ell);
  // everything at or beyond this bound lies in A^ell, so checks stop there
  const long bound = target.saturation_bound();
  const long v = ideal.order();

  GermExponent out;
  std::optional<long> last_failure;
  for (unsigned N = 1;; ++N) {
    std::optional<long> failure;
    if (mode == ExponentMode::Power) {
      for (long s = static_cast<long>(N) * v; s < bound && !failure; ++s)
        if (S.contains(s) && !target.contains(s)) failure = s;
    } else {
      const SemigroupIdeal lhs = ideal.closure().power(N);
      for (long s = lhs.order(); s < bound && !failure; ++s)
        if (lhs.contains(s) && !target.contains(s)) failure = s;
    }
    if (!failure) {
      out.exponent = N;
      out.witness = last_failure;
      return out;
    }
    last_failure = failure;
  }
}

std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& semigroup, long v_max, std::size_t cap) {
  auto S = std::make_shared<const NumericalSemigroup>(semigroup);
  std::vector<SemigroupIdeal> out;
  const long c = S->conductor();
  for (long v = 1; v <= v_max; ++v) {
    if (!S->contains(v)) continue;
    std::vector<long> cand;
    for (long s = v + 1; s < v + c; ++s)
      if (S->contains(s) && !S->contains(s - v)) cand.push_back(s);

    std::vector<std::vector<long>> chains;
    std::vector<long> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cand.size()) {
        chains.push_back(cur);
        if (chains.size() + out.size() > cap) throw BudgetError("ideal enumeration exceeds the cap");
        return;
      }
      self(self, i + 1);
      for (long k : cur)
        if (S->contains(cand[i] - k)) return;
      cur.push_back(cand[i]);
      self(self, i + 1);
      cur.pop_back();
    };
    rec(rec, 0);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (auto& ch : chains) {
      std::vector<long> shifts{v};
      shifts.insert(shifts.end(), ch.begin(), ch.end());
      out.emplace_back(S, std::move(shifts));
    }
  }
  return out;
}

MuSearch huneke_mu(const NumericalSemigroup& semigroup, long v_max, unsigned ell_max, std::size_t cap) {
  if (v_max < 1 || ell_max < 1) throw ValidationError("search bounds must be positive");
  MuSearch out;
  for (const auto& A : enumerate_ideals(semigroup, v_max, cap)) {
    ++out.ideals_checked;
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
      const long e = static_cast<long>(germ_bs_exponent(A, ell, semigroup).exponent) - ell + 1;
      if (e > static_cast<long>(out.mu)) {
        out.mu = static_cast<unsigned>(e);
        out.witness_ideal = A;
        out.witness_ell = ell;
      }
    }
  }
  return out;
}

}  // namespace bsw::closure
