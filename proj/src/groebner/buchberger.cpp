#include <algorithm>
#include <set>

#include "bsw/groebner/module.hpp"

namespace bsw::groebner {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;
  std::size_t component;
};

bool lead_divides(const ModuleTerm& d, const ModuleTerm& t) {
  return d.component == t.component && d.monomial.divides(t.monomial);
}

Polynomial zero_of(const Ring& ring) { return Polynomial(ring); }

// rep - sum_k q_k * rep_k
std::vector<Polynomial> combine_representation(const std::vector<Polynomial>& base,
                                               const std::vector<Polynomial>& quotients,
                                               const std::vector<std::vector<Polynomial>>& reps) {
  std::vector<Polynomial> out = base;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    if (quotients[k].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!reps[k][j].is_zero()) out[j] = out[j] - quotients[k] * reps[k][j];
  }
  return out;
}

}  // namespace

ModuleDivision module_divide(const ModuleVector& v, const std::vector<ModuleVector>& divisors,
                             std::size_t max_steps) {
  const Ring& ring = v.order()->ring();
  std::vector<std::vector<poly::Term>> quot(divisors.size());
  std::vector<ModuleTerm> rem;
  ModuleVector p = v;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    const ModuleTerm lt = p.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (divisors[k].is_zero()) continue;
      const ModuleTerm& d = divisors[k].leading_term();
      if (!lead_divides(d, lt)) continue;
      ExponentVector q = lt.monomial / d.monomial;
      Rational c = lt.coeff / d.coeff;
      p = p.sub_mul_term(q, c, divisors[k]);
      quot[k].push_back({std::move(q), std::move(c)});
      reduced = true;
      if (++steps > max_steps) throw BudgetError("reduction step budget exhausted");
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p.pop_leading();
    }
  }
  ModuleDivision out{ModuleVector::from_terms(v.order(), std::move(rem)), {}, steps};
  out.quotients.reserve(quot.size());
  for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  return out;
}

ModuleVector module_normal_form(const ModuleVector& v, const std::vector<ModuleVector>& basis) {
  return module_divide(v, basis).remainder;
}

ModuleVector s_vector(const ModuleVector& f, const ModuleVector& g) {
  const ModuleTerm& a = f.leading_term();
  const ModuleTerm& b = g.leading_term();
  if (a.component != b.component) throw StructuralError("S-vector of different lead components");
  ExponentVector l = a.monomial.lcm(b.monomial);
  return f.mul_term(l / a.monomial, Rational(1) / a.coeff) - g.mul_term(l / b.monomial, Rational(1) / b.coeff);
}

bool satisfies_buchberger_criterion(const std::vector<ModuleVector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].leading_term().component != basis[j].leading_term().component) continue;
      if (!module_normal_form(s_vector(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

ModuleGbResult module_groebner_basis(const std::vector<ModuleVector>& gens,
                                     const ModuleGbOptions& options) {
  ModuleGbResult result;
  if (gens.empty()) return result;
  const ModuleOrderPtr order = gens.front().order();
  const Ring& ring = order->ring();
  for (const auto& g : gens)
    if (g.order() != order) throw StructuralError("generators use different module orders");

  const bool track = options.track_representation;
  std::vector<ModuleVector> basis;
  std::vector<std::vector<Polynomial>> reps;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    basis.push_back(gens[j]);
    if (track) {
      std::vector<Polynomial> r(gens.size(), zero_of(ring));
      r[j] = Polynomial::constant(ring, 1);
      reps.push_back(std::move(r));
    }
  }

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t t) {
    const ModuleTerm& lt = basis[t].leading_term();
    for (std::size_t k = 0; k < t; ++k) {
      const ModuleTerm& lk = basis[k].leading_term();
      if (lk.component != lt.component) continue;
      pairs.push_back({k, t, lk.monomial.lcm(lt.monomial), lt.component});
      pending.insert({k, t});
    }
  };
  for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::size_t steps = 0;
  auto budget_left = [&]() {
    return options.max_steps > steps ? options.max_steps - steps : std::size_t{0};
  };

  try {
    while (!pairs.empty()) {
      // normal strategy: smallest lcm first, ties by indices
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs.size(); ++p) {
        auto c = order->compare(pairs[p].lcm, pairs[p].component, pairs[best].lcm,
                                pairs[best].component);
        if (c < 0 || (c == 0 && std::tie(pairs[p].j, pairs[p].i) < std::tie(pairs[best].j, pairs[best].i)))
          best = p;
      }
      const Pair pr = pairs[best];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
      pending.erase({pr.i, pr.j});

      const ModuleTerm& li = basis[pr.i].leading_term();
      const ModuleTerm& lj = basis[pr.j].leading_term();
      if (options.product_criterion && li.monomial.coprime(lj.monomial)) continue;

      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        const ModuleTerm& lk = basis[k].leading_term();
        if (lk.component != pr.component || !lk.monomial.divides(pr.lcm)) continue;
        if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
      }
      if (chain) continue;

      if (++steps > options.max_steps) throw BudgetError("Gröbner step budget exhausted");
      ModuleVector s = s_vector(basis[pr.i], basis[pr.j]);
      ModuleDivision div = module_divide(s, basis, budget_left());
      steps += div.steps;
      if (div.remainder.is_zero()) continue;

      if (track) {
        const Rational ci = Rational(1) / li.coeff;
        const Rational cj = Rational(1) / lj.coeff;
        const ExponentVector mi = pr.lcm / li.monomial;
        const ExponentVector mj = pr.lcm / lj.monomial;
        std::vector<Polynomial> rs(gens.size(), zero_of(ring));
        for (std::size_t g = 0; g < gens.size(); ++g)
          rs[g] = reps[pr.i][g].mul_term(mi, ci) - reps[pr.j][g].mul_term(mj, cj);
        reps.push_back(combine_representation(rs, div.quotients, reps));
      }
      basis.push_back(std::move(div.remainder));
      add_pairs_for(basis.size() - 1);
    }
  } catch (const GroebnerBudgetError&) {
    throw;
  } catch (const BudgetError& e) {
    throw GroebnerBudgetError(e.what(), basis);
  }

  // Minimalize: drop elements whose leading term is a multiple of another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ModuleTerm& li = basis[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const ModuleTerm& lj = basis[j].leading_term();
      if (!lead_divides(lj, li)) continue;
      if (lj.monomial != li.monomial || j < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }

  std::vector<ModuleVector> minimal;
  std::vector<std::vector<Polynomial>> minimal_reps;
  for (std::size_t i : keep) {
    minimal.push_back(basis[i]);
    if (track) minimal_reps.push_back(reps[i]);
  }

  // Tail reduction against the other minimal elements, then monic.
  std::vector<ModuleVector> reduced;
  std::vector<std::vector<Polynomial>> reduced_reps;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleVector> others;
    std::vector<std::vector<Polynomial>> other_reps;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      if (track) other_reps.push_back(minimal_reps[j]);
    }
    ModuleDivision div = module_divide(minimal[i], others);
    steps += div.steps;
    const Rational inv = Rational(1) / div.remainder.leading_term().coeff;
    reduced.push_back(div.remainder.scaled(inv));
    if (track) {
      auto r = combine_representation(minimal_reps[i], div.quotients, other_reps);
      for (auto& p : r) p = p.scaled(inv);
      reduced_reps.push_back(std::move(r));
    }
  }

  std::vector<std::size_t> idx(reduced.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const ModuleTerm& ta = reduced[a].leading_term();
    const ModuleTerm& tb = reduced[b].leading_term();
    return order->compare(ta.monomial, ta.component, tb.monomial, tb.component) < 0;
  });
  for (std::size_t i : idx) {
    result.basis.push_back(std::move(reduced[i]));
    if (track) result.representation.push_back(std::move(reduced_reps[i]));
  }
  result.steps = steps;
  return result;
}

}  // namespace bsw::groebner
