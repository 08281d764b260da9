#include "bsw/closure/monomial.hpp"

#include <algorithm>
#include <set>

#include "bsw/error.hpp"

namespace bsw::closure {

namespace {

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
              return a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class det(std::vector<std::vector<mpz_class>> m) {
  // Bareiss fraction-free elimination
  const std::size_t k = m.size();
  if (k == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (m[c][c] == 0) {
      std::size_t p = c + 1;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) return 0;
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i)
      for (std::size_t j = c + 1; j < k; ++j) {
        m[i][j] = m[i][j] * m[c][c] - m[i][c] * m[c][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

// Normal vector of the hyperplane spanned by n-1 vectors in Z^n.
std::vector<mpz_class> cross(const std::vector<const std::vector<mpz_class>*>& dirs, std::size_t n) {
  std::vector<mpz_class> out(n);
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<std::vector<mpz_class>> sub;
    for (const auto* d : dirs) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != skip) row.push_back((*d)[j]);
      sub.push_back(std::move(row));
    }
    out[skip] = (skip % 2 == 0 ? 1 : -1) * det(std::move(sub));
  }
  return out;
}

mpz_class dot(const std::vector<mpz_class>& a, const ExponentVector& v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
  return s;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<ExponentVector> generators) : n_(num_vars) {
  if (generators.empty()) throw ValidationError("monomial ideal needs at least one generator");
  for (const auto& g : generators)
    if (g.size() != n_) throw StructuralError("exponent vector length does not match variable count");
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::from_ideal(const groebner::Ideal& ideal) {
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    if (g.size() != 1) throw ValidationError("not a monomial ideal: " + g.to_string());
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(ideal.ring()->num_vars(), std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  if (n_ != other.n_) throw StructuralError("monomial ideals in different variable counts");
  std::vector<ExponentVector> prods;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) prods.push_back(a * b);
  return MonomialIdeal(n_, std::move(prods));
}

MonomialIdeal MonomialIdeal::power(unsigned ell, std::size_t cap) const {
  MonomialIdeal acc(n_, {ExponentVector(n_)});
  for (unsigned i = 0; i < ell; ++i) {
    if (acc.size() * size() > cap) throw BudgetError("monomial ideal power exceeds the generator cap");
    acc = acc * *this;
  }
  return acc;
}

groebner::Ideal MonomialIdeal::to_ideal(const poly::Ring& ring) const {
  if (ring->num_vars() != n_) throw StructuralError("ring does not match the variable count");
  std::vector<poly::Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(poly::Polynomial::monomial(ring, g));
  return groebner::Ideal(ring, std::move(gens));
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal) : n_(ideal.num_vars()) {
  const auto& gens = ideal.generators();
  const std::size_t n = n_;
  box_.assign(n, 0);
  for (const auto& g : gens)
    for (std::size_t j = 0; j < n; ++j) box_[j] = std::max<long>(box_[j], g[j]);

  std::set<std::vector<mpz_class>> seen;
  auto consider = [&](std::vector<mpz_class> a, const ExponentVector& base) {
    bool pos = false, neg = false;
    for (const auto& x : a) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    if (pos == neg) return;  // zero or mixed signs
    if (neg)
      for (auto& x : a) x = -x;
    mpz_class g = 0;
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : a) x /= g;
    const mpz_class b = dot(a, base);
    for (const auto& h : gens)
      if (dot(a, h) < b) return;
    if (!seen.insert(a).second) return;
    halfspaces_.push_back({std::move(a), b});
  };

  if (n == 1) {
    consider({mpz_class(1)}, gens.front());
    for (const auto& g : gens) consider({mpz_class(1)}, g);
    return;
  }
  std::size_t work = 0;
  for (std::size_t b = 0; b < gens.size(); ++b) {
    std::vector<std::vector<mpz_class>> dirs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == b) continue;
      std::vector<mpz_class> d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = gens[i][j] - gens[b][j];
      dirs.push_back(std::move(d));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpz_class> e(n, 0);
      e[j] = 1;
      dirs.push_back(std::move(e));
    }
    // every (n-1)-subset of the directions
    std::vector<std::size_t> idx(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) idx[i] = i;
    if (dirs.size() < n - 1) continue;
    const std::size_t k = n - 1, total = dirs.size();
    auto next = [&] {
      for (std::size_t i = k; i-- > 0;)
        if (idx[i] < total - k + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          return true;
        }
      return false;
    };
    do {
      if (++work > 20'000'000) throw BudgetError("Newton polyhedron facet enumeration too large");
      std::vector<const std::vector<mpz_class>*> pick;
      for (std::size_t i : idx) pick.push_back(&dirs[i]);
      consider(cross(pick, n), gens[b]);
    } while (next());
  }
  std::sort(halfspaces_.begin(), halfspaces_.end(),
            [](const Halfspace& x, const Halfspace& y) { return x.a < y.a; });
}

bool NewtonPolyhedron::contains(const ExponentVector& v) const {
  if (v.size() != n_) throw StructuralError("exponent vector length does not match");
  for (const auto& h : halfspaces_)
    if (dot(h.a, v) < h.b) return false;
  return true;
}

NewtonPolyhedron NewtonPolyhedron::scaled(unsigned factor) const {
  if (factor == 0) throw ValidationError("scale factor must be positive");
  NewtonPolyhedron out;
  out.n_ = n_;
  out.halfspaces_ = halfspaces_;
  for (auto& h : out.halfspaces_) h.b *= factor;
  out.box_ = box_;
  for (auto& b : out.box_) b *= factor;
  return out;
}

MonomialIdeal lattice_ideal(const NewtonPolyhedron& p, std::size_t cap) {
  const std::size_t n = p.num_vars();
  double total = 1;
  for (long b : p.box()) total *= static_cast<double>(b + 1);
  if (total > static_cast<double>(cap)) throw BudgetError("closure search box exceeds the cap");

  std::vector<ExponentVector> gens;
  ExponentVector v(n);
  while (true) {
    if (p.contains(v)) {
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (v[j] == 0) continue;
        --v[j];
        if (p.contains(v)) minimal = false;
        ++v[j];
      }
      if (minimal) gens.push_back(v);
    }
    std::size_t j = 0;
    while (j < n && v[j] == p.box()[j]) v[j++] = 0;
    if (j == n) break;
    ++v[j];
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal newton_closure(const MonomialIdeal& ideal, std::size_t cap) {
  return lattice_ideal(NewtonPolyhedron(ideal), cap);
}

ContainmentCheck closure_power_in_power(const MonomialIdeal& ideal, unsigned N, unsigned ell, std::size_t cap) {
  if (N == 0 || ell == 0) throw ValidationError("exponents must be positive");
  ContainmentCheck out;
  out.exponent = N;
  out.ell = ell;
  const auto closure = lattice_ideal(NewtonPolyhedron(ideal).scaled(N), cap);
  const auto target = ideal.power(ell, cap);
  for (const auto& g : closure.generators())
    if (!target.contains(g)) {
      out.holds = false;
      out.counterexample = g;
      break;
    }
  return out;
}

ContainmentCheck bs_verify_monomial(const MonomialIdeal& ideal, unsigned ell, unsigned d, std::size_t cap) {
  if (ell == 0) throw ValidationError("ell must be at least 1");
  const std::size_t dim = d == 0 ? ideal.num_vars() : d;
  const std::size_t m = ideal.size();
  const auto N = static_cast<unsigned>(std::min(m, dim) + ell - 1);
  return closure_power_in_power(ideal, N, ell, cap);
}

}  // namespace bsw::closure
