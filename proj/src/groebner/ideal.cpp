#include "bsw/groebner/ideal.hpp"

#include <algorithm>
#include <mutex>

namespace bsw::groebner {

struct Ideal::Cache {
  std::mutex mutex;
  std::shared_ptr<const GroebnerBasis> gb;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw StructuralError("ideal needs a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!poly::same_ring(g.ring(), ring_)) throw StructuralError("generator belongs to a different ring");
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

std::shared_ptr<const GroebnerBasis> Ideal::cached_gb() const {
  if (!cache_) return nullptr;
  std::lock_guard lock(cache_->mutex);
  return cache_->gb;
}

std::shared_ptr<const GroebnerBasis> Ideal::publish_gb(std::shared_ptr<const GroebnerBasis> gb) const {
  if (!cache_) return gb;
  std::lock_guard lock(cache_->mutex);
  if (!cache_->gb) cache_->gb = std::move(gb);
  return cache_->gb;
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
}

std::vector<ExponentVector> GroebnerBasis::leading_monomials() const {
  std::vector<ExponentVector> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

namespace {

std::vector<ModuleVector> as_vectors(const ModuleOrderPtr& order, const std::vector<Polynomial>& ps) {
  std::vector<ModuleVector> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(ModuleVector::from_polynomial(order, p));
  return out;
}

ModuleGbResult run_buchberger(const Ring& ring, const std::vector<Polynomial>& gens, bool track,
                              const Budget& budget) {
  auto order = ModuleOrder::ideal(ring);
  ModuleGbOptions opts;
  opts.max_steps = budget.max_steps;
  opts.track_representation = track;
  opts.product_criterion = true;
  return module_groebner_basis(as_vectors(order, gens), opts);
}

GroebnerBasis to_basis(const Ring& ring, const ModuleGbResult& r) {
  GroebnerBasis gb;
  gb.ring = ring;
  gb.order = ring->order();
  gb.reduced = true;
  for (const auto& v : r.basis) gb.elements.push_back(v.component(0));
  return gb;
}

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const Budget& budget) {
  if (auto cached = ideal.cached_gb()) return *cached;
  auto gb = std::make_shared<const GroebnerBasis>(
      to_basis(ideal.ring(), run_buchberger(ideal.ring(), ideal.generators(), false, budget)));
  return *ideal.publish_gb(std::move(gb));
}

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  if (p.ring() == nullptr) throw StructuralError("dividend has no ring");
  for (const auto& d : divisors)
    if (!poly::same_ring(d.ring(), p.ring())) throw StructuralError("divisor belongs to a different ring");
  auto order = ModuleOrder::ideal(p.ring());
  auto div = module_divide(ModuleVector::from_polynomial(order, p), as_vectors(order, divisors));
  return {std::move(div.quotients), div.remainder.component(0)};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return p;
  if (!poly::same_ring(p.ring(), basis.ring))
    throw StructuralError("normal form: polynomial and basis use different rings or orders");
  return divide(p, basis.elements).remainder;
}

MembershipResult ideal_member(const Polynomial& p, const Ideal& ideal, bool want_certificate,
                              const Budget& budget) {
  MembershipResult out;
  if (p.is_zero()) {
    out.member = true;
    if (want_certificate) out.cofactors = std::vector<Polynomial>(ideal.size(), Polynomial(ideal.ring()));
    return out;
  }
  if (!poly::same_ring(p.ring(), ideal.ring())) throw StructuralError("membership across different rings");
  if (!want_certificate) {
    out.member = normal_form(p, groebner_basis(ideal, budget)).is_zero();
    return out;
  }
  const Ring& ring = ideal.ring();
  ModuleGbResult r = run_buchberger(ring, ideal.generators(), true, budget);
  GroebnerBasis gb = to_basis(ring, r);
  ideal.publish_gb(std::make_shared<const GroebnerBasis>(gb));
  DivisionResult div = divide(p, gb.elements);
  out.member = div.remainder.is_zero();
  if (out.member) {
    std::vector<Polynomial> h(ideal.size(), Polynomial(ring));
    for (std::size_t k = 0; k < div.quotients.size(); ++k) {
      if (div.quotients[k].is_zero()) continue;
      for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = h[j] + div.quotients[k] * r.representation[k][j];
    }
    out.cofactors = std::move(h);
  }
  return out;
}

bool ideal_contains(const Ideal& ideal, const Ideal& sub, const Budget& budget) {
  const GroebnerBasis gb = groebner_basis(ideal, budget);
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& g) { return normal_form(g, gb).is_zero(); });
}

namespace {

// Drops exact duplicates and scalar multiples, keeping first occurrences.
std::vector<Polynomial> dedupe(std::vector<Polynomial> ps) {
  std::vector<Polynomial> out;
  std::vector<Polynomial> monics;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    Polynomial m = p.monic();
    if (std::find(monics.begin(), monics.end(), m) != monics.end()) continue;
    monics.push_back(std::move(m));
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial lift(const Polynomial& p, const Ring& target) {
  std::vector<poly::Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<int> e{0};
    e.insert(e.end(), t.monomial.data().begin(), t.monomial.data().end());
    terms.push_back({ExponentVector(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

Ideal ideal_combine(const Ideal& a, const Ideal& b, CombineKind kind, const Budget& budget) {
  if (!poly::same_ring(a.ring(), b.ring())) throw StructuralError("ideals belong to different rings");
  const Ring& ring = a.ring();
  switch (kind) {
    case CombineKind::Sum: {
      std::vector<Polynomial> g = a.generators();
      g.insert(g.end(), b.generators().begin(), b.generators().end());
      return Ideal(ring, dedupe(std::move(g)));
    }
    case CombineKind::Product: {
      std::vector<Polynomial> g;
      for (const auto& x : a.generators())
        for (const auto& y : b.generators()) g.push_back(x * y);
      return Ideal(ring, dedupe(std::move(g)));
    }
    case CombineKind::Intersection: {
      if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
      std::string tname = "t_";
      while (ring->index_of(tname)) tname += "_";
      Ring ext = ring->with_eliminated_variable(tname);
      Polynomial t = Polynomial::variable(ext, 0);
      Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
      std::vector<Polynomial> g;
      for (const auto& x : a.generators()) g.push_back(t * lift(x, ext));
      for (const auto& y : b.generators()) g.push_back(one_minus_t * lift(y, ext));
      GroebnerBasis gb = groebner_basis(Ideal(ext, std::move(g)), budget);
      std::vector<Polynomial> out;
      for (const auto& e : gb.elements) {
        bool has_t = std::any_of(e.terms().begin(), e.terms().end(),
                                 [](const poly::Term& term) { return term.monomial[0] > 0; });
        if (has_t) continue;
        std::vector<poly::Term> terms;
        for (const auto& term : e.terms()) {
          std::vector<int> ex(term.monomial.data().begin() + 1, term.monomial.data().end());
          terms.push_back({ExponentVector(std::move(ex)), term.coeff});
        }
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
      return Ideal(ring, std::move(out));
    }
  }
  throw StructuralError("unknown combine kind");
}

Ideal ideal_power(const Ideal& ideal, unsigned ell, std::size_t cap) {
  if (ell == 0) throw ValidationError("ideal power exponent must be at least 1");
  const std::size_t m = ideal.size();
  // guard on m^ell, the number of ordered products
  long double count = 1;
  for (unsigned i = 0; i < ell; ++i) count *= static_cast<long double>(m);
  if (count > static_cast<long double>(cap))
    throw BudgetError("ideal power generator count " + std::to_string(m) + "^" + std::to_string(ell) +
                      " exceeds cap " + std::to_string(cap));
  if (m == 0) return Ideal::zero(ideal.ring());

  // multisets of generator indices i_1 <= ... <= i_ell
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(ell, 0);
  for (;;) {
    Polynomial prod = ideal.generators()[idx[0]];
    for (unsigned k = 1; k < ell; ++k) prod = prod * ideal.generators()[idx[k]];
    out.push_back(std::move(prod));
    int pos = static_cast<int>(ell) - 1;
    while (pos >= 0 && idx[pos] == m - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned k = pos + 1; k < ell; ++k) idx[k] = idx[pos];
  }
  return Ideal(ideal.ring(), dedupe(std::move(out)));
}

int dimension_from_leading_monomials(const std::vector<ExponentVector>& leads, std::size_t num_vars) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  if (num_vars > 20) throw BudgetError("dimension by variable subsets limited to 20 variables");
  std::vector<unsigned> supports;
  for (const auto& m : leads) {
    unsigned s = 0;
    for (std::size_t i = 0; i < num_vars; ++i)
      if (m[i] > 0) s |= 1U << i;
    supports.push_back(s);
  }
  int best = 0;
  const unsigned full = 1U << num_vars;
  for (unsigned subset = 0; subset < full; ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](unsigned s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& ideal, const Budget& budget) {
  const std::size_t n = ideal.ring()->num_vars();
  if (ideal.is_zero()) return static_cast<int>(n);
  return dimension_from_leading_monomials(groebner_basis(ideal, budget).leading_monomials(), n);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  auto order = ModuleOrder::ideal(basis.ring);
  return satisfies_buchberger_criterion(as_vectors(order, basis.elements));
}

}  // namespace bsw::groebner
