#include "bsw/poly/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bsw/error.hpp"

namespace bsw::poly {

ExponentVector::ExponentVector(std::initializer_list<int> init) : e_(init) {
  for (int v : e_)
    if (v < 0) throw StructuralError("negative exponent");
}

ExponentVector::ExponentVector(std::vector<int> e) : e_(std::move(e)) {
  for (int v : e_)
    if (v < 0) throw StructuralError("negative exponent");
}

long ExponentVector::total_degree() const {
  long d = 0;
  for (int v : e_) d += v;
  return d;
}

bool ExponentVector::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool ExponentVector::coprime(const ExponentVector& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && other.e_[i] > 0) return false;
  return true;
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
  if (other.size() != size()) throw StructuralError("exponent vector length mismatch");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

ExponentVector ExponentVector::operator/(const ExponentVector& divisor) const {
  if (divisor.size() != size()) throw StructuralError("exponent vector length mismatch");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= divisor.e_[i];
    if (r.e_[i] < 0) throw StructuralError("monomial quotient is not exact");
  }
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  if (other.size() != size()) throw StructuralError("exponent vector length mismatch");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

std::string_view order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::WeightedDegRevLex: return "wdegrevlex";
    case MonomialOrder::Schreyer: return "schreyer";
  }
  return "?";
}

std::optional<MonomialOrder> order_from_name(std::string_view name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "degrevlex") return MonomialOrder::DegRevLex;
  if (name == "wdegrevlex" || name == "weighted-degrevlex") return MonomialOrder::WeightedDegRevLex;
  if (name == "schreyer" || name == "module-schreyer") return MonomialOrder::Schreyer;
  return std::nullopt;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring RingContext::make(std::vector<std::string> names, std::vector<int> weights,
                       MonomialOrder order, std::size_t elimination_block) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size())
    throw ValidationError("weight count does not match variable count");
  for (int w : weights)
    if (w < 1) throw ValidationError("variable weights must be positive");
  if (elimination_block > names.size())
    throw ValidationError("elimination block larger than the variable count");

  auto ctx = std::shared_ptr<RingContext>(new RingContext());
  ctx->names_ = std::move(names);
  ctx->weights_ = std::move(weights);
  ctx->order_ = order;
  ctx->elimination_block_ = elimination_block;
  return ctx;
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

long RingContext::weighted_degree(const ExponentVector& m) const {
  if (m.size() != names_.size()) throw StructuralError("exponent vector length does not match ring");
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
  return d;
}

std::strong_ordering RingContext::compare_range(const ExponentVector& a, const ExponentVector& b,
                                                std::size_t lo, std::size_t hi,
                                                MonomialOrder order) const {
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case MonomialOrder::DegRevLex:
    case MonomialOrder::WeightedDegRevLex:
    case MonomialOrder::Schreyer: {
      const bool weighted = order != MonomialOrder::DegRevLex;
      long da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        const long w = weighted ? weights_[i] : 1;
        da += w * a[i];
        db += w * b[i];
      }
      if (da != db) return da <=> db;
      // reverse lexicographic tie break: smaller exponent in the last
      // differing variable wins
      for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering RingContext::compare(const ExponentVector& a, const ExponentVector& b) const {
  if (a.size() != names_.size() || b.size() != names_.size())
    throw StructuralError("exponent vector length does not match ring");
  const std::size_t n = names_.size();
  if (elimination_block_ > 0) {
    auto c = compare_range(a, b, 0, elimination_block_, MonomialOrder::WeightedDegRevLex);
    if (c != 0) return c;
    return compare_range(a, b, elimination_block_, n, order_);
  }
  return compare_range(a, b, 0, n, order_);
}

bool RingContext::same_as(const RingContext& other) const {
  return this == &other || (names_ == other.names_ && weights_ == other.weights_ &&
                            order_ == other.order_ &&
                            elimination_block_ == other.elimination_block_);
}

Ring RingContext::with_eliminated_variable(const std::string& name) const {
  std::vector<std::string> names{name};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<int> weights{1};
  weights.insert(weights.end(), weights_.begin(), weights_.end());
  return make(std::move(names), std::move(weights), order_, elimination_block_ + 1);
}

bool same_ring(const Ring& a, const Ring& b) {
  if (!a || !b) return a == b;
  return a->same_as(*b);
}

std::strong_ordering cmp_monomials(const ExponentVector& a, const ExponentVector& b,
                                   const RingContext& ctx) {
  return ctx.compare(a, b);
}

}  // namespace bsw::poly
