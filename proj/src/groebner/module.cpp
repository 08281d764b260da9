#include <algorithm>
#include <map>

#include "bsw/groebner/module.hpp"

namespace bsw::groebner {

std::shared_ptr<const ModuleOrder> ModuleOrder::ideal(Ring ring) {
  auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  o->ring_ = std::move(ring);
  o->upper_ = 1;
  return o;
}

std::shared_ptr<const ModuleOrder> ModuleOrder::graded(Ring ring, std::vector<long> shifts) {
  auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  o->ring_ = std::move(ring);
  o->upper_ = shifts.size();
  o->shifts_ = std::move(shifts);
  o->use_degree_ = true;
  return o;
}

std::shared_ptr<const ModuleOrder> ModuleOrder::elimination(
    Ring ring, std::vector<long> upper_shifts,
    std::vector<std::pair<ExponentVector, std::size_t>> lower_leads) {
  for (const auto& [m, c] : lower_leads)
    if (c >= upper_shifts.size()) throw StructuralError("Schreyer lead outside the upper block");
  auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder());
  o->ring_ = std::move(ring);
  o->upper_ = upper_shifts.size();
  o->shifts_ = std::move(upper_shifts);
  o->use_degree_ = true;
  o->lower_leads_ = std::move(lower_leads);
  return o;
}

std::strong_ordering ModuleOrder::compare_upper(const ExponentVector& a, std::size_t ca,
                                                const ExponentVector& b, std::size_t cb) const {
  if (use_degree_) {
    const long da = ring_->weighted_degree(a) + shifts_[ca];
    const long db = ring_->weighted_degree(b) + shifts_[cb];
    if (da != db) return da <=> db;
  }
  auto c = ring_->compare(a, b);
  if (c != 0) return c;
  return cb <=> ca;
}

std::strong_ordering ModuleOrder::compare(const ExponentVector& a, std::size_t ca,
                                          const ExponentVector& b, std::size_t cb) const {
  const bool ua = ca < upper_;
  const bool ub = cb < upper_;
  if (ua && ub) return compare_upper(a, ca, b, cb);
  if (ua != ub) return ua ? std::strong_ordering::greater : std::strong_ordering::less;
  const std::size_t ja = ca - upper_;
  const std::size_t jb = cb - upper_;
  const auto& la = lower_leads_.at(ja);
  const auto& lb = lower_leads_.at(jb);
  auto c = compare_upper(a * la.first, la.second, b * lb.first, lb.second);
  if (c != 0) return c;
  return jb <=> ja;
}

// ---------------------------------------------------------------------------

namespace {

bool term_greater(const ModuleOrder& o, const ModuleTerm& a, const ModuleTerm& b) {
  return o.compare(a.monomial, a.component, b.monomial, b.component) > 0;
}

}  // namespace

ModuleVector ModuleVector::from_terms(ModuleOrderPtr order, std::vector<ModuleTerm> terms) {
  const std::size_t n = order->ring()->num_vars();
  std::map<std::pair<std::size_t, ExponentVector>, Rational> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != n) throw StructuralError("exponent vector length does not match ring");
    if (t.component >= order->rank()) throw StructuralError("component index out of range");
    acc[{t.component, t.monomial}] += t.coeff;
  }
  ModuleVector v(std::move(order));
  for (auto& [key, c] : acc)
    if (c != 0) v.terms_.push_back({key.second, key.first, c});
  const ModuleOrder& o = *v.order_;
  std::sort(v.terms_.begin(), v.terms_.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return term_greater(o, a, b); });
  return v;
}

ModuleVector ModuleVector::from_components(ModuleOrderPtr order,
                                           const std::vector<Polynomial>& comps) {
  if (comps.size() != order->rank()) throw StructuralError("component count does not match rank");
  std::vector<ModuleTerm> terms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i].is_zero() && !poly::same_ring(comps[i].ring(), order->ring()))
      throw StructuralError("component belongs to a different ring");
    for (const auto& t : comps[i].terms()) terms.push_back({t.monomial, i, t.coeff});
  }
  return from_terms(std::move(order), std::move(terms));
}

ModuleVector ModuleVector::from_polynomial(ModuleOrderPtr order, const Polynomial& p) {
  return from_components(std::move(order), {p});
}

const ModuleTerm& ModuleVector::leading_term() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero vector");
  return terms_.front();
}

std::vector<Polynomial> ModuleVector::components() const {
  std::vector<std::vector<poly::Term>> parts(order_->rank());
  for (const auto& t : terms_) parts[t.component].push_back({t.monomial, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(order_->ring(), std::move(p)));
  return out;
}

Polynomial ModuleVector::component(std::size_t i) const {
  std::vector<poly::Term> part;
  for (const auto& t : terms_)
    if (t.component == i) part.push_back({t.monomial, t.coeff});
  return Polynomial::from_terms(order_->ring(), std::move(part));
}

std::vector<ModuleTerm> ModuleVector::merged(const std::vector<ModuleTerm>& other,
                                             const ExponentVector* m, const Rational& c) const {
  const ModuleOrder& o = *order_;
  std::vector<ModuleTerm> out;
  out.reserve(terms_.size() + other.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](const ModuleTerm& t) {
    return ModuleTerm{m ? t.monomial * *m : t.monomial, t.component, t.coeff * c};
  };
  while (i < terms_.size() && j < other.size()) {
    ModuleTerm b = shifted(other[j]);
    auto cmp = o.compare(terms_[i].monomial, terms_[i].component, b.monomial, b.component);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(b));
      ++j;
    } else {
      Rational s = terms_[i].coeff + b.coeff;
      if (s != 0) out.push_back({terms_[i].monomial, terms_[i].component, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.size(); ++j) out.push_back(shifted(other[j]));
  return out;
}

ModuleVector ModuleVector::operator+(const ModuleVector& v) const {
  ModuleVector r(order_);
  r.terms_ = merged(v.terms_, nullptr, 1);
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& v) const {
  ModuleVector r(order_);
  r.terms_ = merged(v.terms_, nullptr, -1);
  return r;
}

ModuleVector ModuleVector::scaled(const Rational& c) const {
  ModuleVector r(order_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

ModuleVector ModuleVector::mul_term(const ExponentVector& m, const Rational& c) const {
  ModuleVector r(order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.component, t.coeff * c});
  return r;
}

ModuleVector ModuleVector::sub_mul_term(const ExponentVector& m, const Rational& c,
                                        const ModuleVector& v) const {
  ModuleVector r(order_);
  r.terms_ = merged(v.terms_, &m, -c);
  return r;
}

ModuleVector ModuleVector::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / terms_.front().coeff);
}

void ModuleVector::pop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

ModuleVector ModuleVector::reordered(ModuleOrderPtr order) const {
  if (order->rank() != order_->rank()) throw StructuralError("rank mismatch in reorder");
  return from_terms(std::move(order), terms_);
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.component != y.component || x.monomial != y.monomial || x.coeff != y.coeff) return false;
  }
  return true;
}

}  // namespace bsw::groebner
