#include "bsw/poly/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bsw/error.hpp"

namespace bsw::poly {

namespace {

// Merges two descending term lists, `a + sign * b`.
std::vector<Term> merge(const RingContext& ctx, const std::vector<Term>& a,
                        const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ctx.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({ExponentVector(ring->num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->num_vars()) throw StructuralError("variable index out of range");
  ExponentVector m(ring->num_vars());
  m[index] = 1;
  return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(Ring ring, ExponentVector m, Rational c) {
  if (m.size() != ring->num_vars()) throw StructuralError("exponent vector length does not match ring");
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const std::size_t n = ring->num_vars();
  for (const auto& t : terms)
    if (t.monomial.size() != n) throw StructuralError("exponent vector length does not match ring");
  std::map<ExponentVector, Rational> acc;
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  Polynomial p(std::move(ring));
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  const RingContext& ctx = *p.ring_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return ctx.compare(a.monomial, b.monomial) > 0; });
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& q) const {
  if (!same_ring(ring_, q.ring_)) throw StructuralError("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_ring(q);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, q.terms_, +1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  check_ring(q);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, q.terms_, -1);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_ring(q);
  if (is_zero() || q.is_zero()) return Polynomial(ring_);
  if (q.terms_.size() == 1) return mul_term(q.terms_[0].monomial, q.terms_[0].coeff);
  if (terms_.size() == 1) return q.mul_term(terms_[0].monomial, terms_[0].coeff);
  std::map<ExponentVector, Rational> acc;
  for (const auto& a : terms_)
    for (const auto& b : q.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  Polynomial r(ring_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  const RingContext& ctx = *ring_;
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&](const Term& a, const Term& b) { return ctx.compare(a.monomial, b.monomial) > 0; });
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const ExponentVector& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // monomial orders are multiplicative, so the order is preserved
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::sub_mul_term(const ExponentVector& m, const Rational& c,
                                    const Polynomial& q) const {
  check_ring(q);
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, q.mul_term(m, c).terms_, -1);
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string rational_to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    first = false;
    const bool unit = t.monomial.is_one();
    bool need_star = false;
    if (unit || c != 1) {
      os << rational_to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (need_star) os << "*";
      os << ring_->names()[i];
      if (t.monomial[i] > 1) os << "^" << t.monomial[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

WeightedDegreeInfo weighted_degree_info(const Polynomial& p) {
  if (p.is_zero()) throw ValidationError("weighted degree of the zero polynomial is undefined");
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    long d = p.ring()->weighted_degree(t.monomial);
    if (first) {
      lo = hi = d;
      first = false;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return {lo, hi, lo == hi};
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return p + q;
    case ArithKind::Sub: return p - q;
    case ArithKind::Mul: return p * q;
  }
  throw StructuralError("unknown arithmetic kind");
}

}  // namespace bsw::poly

namespace bsw::poly {

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->num_vars()) throw StructuralError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    ExponentVector m = t.monomial;
    m[var] = e - 1;
    terms.push_back({std::move(m), t.coeff * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

}  // namespace bsw::poly
