#include "bsw/resolution/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bsw/error.hpp"
#include "bsw/groebner/module.hpp"

namespace bsw::resolution {

using groebner::ModuleGbOptions;
using groebner::ModuleOrder;
using groebner::ModuleOrderPtr;
using groebner::ModuleVector;

void FreeComplex::validate() const {
  if (!ring) throw StructuralError("complex needs a ring");
  if (ranks.size() != maps.size() + 1) throw StructuralError("complex needs one more module than maps");
  for (std::size_t k = 1; k <= maps.size(); ++k) {
    const auto& f = maps[k - 1];
    if (f.rows() != ranks[k - 1] || f.cols() != ranks[k])
      throw StructuralError("map f_" + std::to_string(k) + " has the wrong shape");
    if (!poly::same_ring(f.ring(), ring)) throw StructuralError("map over a different ring");
  }
  if (graded) {
    if (shifts.size() != ranks.size()) throw StructuralError("graded complex needs shifts for every module");
    for (std::size_t k = 0; k < ranks.size(); ++k)
      if (shifts[k].size() != ranks[k]) throw StructuralError("shift list length differs from rank");
  }
}

bool FreeComplex::is_complex() const {
  for (std::size_t k = 1; k < maps.size(); ++k)
    if (!(maps[k - 1] * maps[k]).is_zero()) return false;
  return true;
}

bool FreeComplex::is_minimal() const {
  if (!graded) return false;
  for (const auto& f : maps)
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j)
        if (!f.at(i, j).is_zero() && f.at(i, j).is_constant()) return false;
  return true;
}

PolyMatrix syzygies(const PolyMatrix& m, const std::vector<long>& row_shifts, const Budget& budget) {
  const Ring& ring = m.ring();
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<long> shifts = row_shifts.empty() ? std::vector<long>(r, 0) : row_shifts;
  if (shifts.size() != r) throw StructuralError("one shift per row expected");

  auto unit_column = [&](std::size_t j) {
    std::vector<Polynomial> col(c, Polynomial(ring));
    col[j] = Polynomial::constant(ring, 1);
    return col;
  };

  std::vector<std::vector<Polynomial>> out;
  if (r == 0) {
    for (std::size_t j = 0; j < c; ++j) out.push_back(unit_column(j));
    return PolyMatrix::from_columns(ring, c, out);
  }

  auto upper = ModuleOrder::graded(ring, shifts);
  std::vector<std::size_t> live, dead;
  std::vector<std::pair<poly::ExponentVector, std::size_t>> leads;
  for (std::size_t j = 0; j < c; ++j) {
    auto v = ModuleVector::from_components(upper, m.column(j));
    if (v.is_zero()) {
      dead.push_back(j);
      continue;
    }
    live.push_back(j);
    leads.emplace_back(v.leading_term().monomial, v.leading_term().component);
  }

  if (!live.empty()) {
    auto elim = ModuleOrder::elimination(ring, shifts, leads);
    std::vector<ModuleVector> gens;
    for (std::size_t t = 0; t < live.size(); ++t) {
      auto comps = m.column(live[t]);
      comps.resize(r + live.size(), Polynomial(ring));
      comps[r + t] = Polynomial::constant(ring, 1);
      gens.push_back(ModuleVector::from_components(elim, comps));
    }
    ModuleGbOptions opts;
    opts.max_steps = budget.max_steps;
    auto gb = groebner::module_groebner_basis(gens, opts);
    for (const auto& b : gb.basis) {
      if (b.leading_term().component < r) continue;
      auto comps = b.components();
      std::vector<Polynomial> col(c, Polynomial(ring));
      for (std::size_t t = 0; t < live.size(); ++t) col[live[t]] = comps[r + t];
      out.push_back(std::move(col));
    }
  }
  for (std::size_t j : dead) out.push_back(unit_column(j));
  return PolyMatrix::from_columns(ring, c, out);
}

namespace {

// Weighted degree of a homogeneous column with respect to row shifts.
long column_degree(const std::vector<Polynomial>& col, const std::vector<long>& shifts) {
  for (std::size_t i = 0; i < col.size(); ++i)
    if (!col[i].is_zero()) return poly::weighted_degree_info(col[i]).max_degree + shifts[i];
  return 0;
}

bool column_homogeneous(const std::vector<Polynomial>& col, const std::vector<long>& shifts) {
  std::optional<long> deg;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    auto info = poly::weighted_degree_info(col[i]);
    if (!info.is_quasi_homogeneous) return false;
    const long d = info.max_degree + shifts[i];
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

// Greedy minimal generating subset: a column is kept unless it lies in the
// submodule generated by the columns kept before it.
std::vector<std::size_t> prune_columns(const PolyMatrix& s, const std::vector<std::size_t>& order,
                                       const ModuleOrderPtr& module_order, const Budget& budget) {
  std::vector<std::size_t> kept;
  std::vector<ModuleVector> basis;
  ModuleGbOptions opts;
  opts.max_steps = budget.max_steps;
  for (std::size_t j : order) {
    auto v = ModuleVector::from_components(module_order, s.column(j));
    if (v.is_zero()) continue;
    if (!basis.empty() && groebner::module_normal_form(v, basis).is_zero()) continue;
    kept.push_back(j);
    basis.push_back(v);
    basis = groebner::module_groebner_basis(basis, opts).basis;
  }
  return kept;
}

}  // namespace

FreeComplex free_resolution(const Ideal& ideal, const ResolutionOptions& options) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->num_vars();
  if (!ideal.is_zero() && groebner::groebner_basis(ideal, options.budget).is_unit())
    throw ValidationError("cannot resolve R/I for the unit ideal");

  bool quasi = true;
  for (const auto& g : ideal.generators())
    if (!poly::weighted_degree_info(g).is_quasi_homogeneous) quasi = false;
  if (options.grading == GradingMode::Graded && !quasi)
    throw ValidationError("graded resolution needs quasi-homogeneous generators");
  const bool graded = options.grading == GradingMode::Ungraded ? false : quasi;

  FreeComplex C;
  C.ring = ring;
  C.graded = graded;
  C.ranks = {1};
  if (graded) C.shifts = {{0}};
  if (ideal.is_zero()) return C;

  // f_1 is the generator row as given; a redundant generator list can add
  // one trivial step beyond the global dimension.
  const std::size_t max_len = options.max_len < 0 ? n + 1 : static_cast<std::size_t>(options.max_len);
  C.maps.push_back(PolyMatrix::row(ring, ideal.generators()));
  C.ranks.push_back(ideal.size());
  if (graded) {
    std::vector<long> degs;
    for (const auto& g : ideal.generators()) degs.push_back(poly::weighted_degree_info(g).max_degree);
    C.shifts.push_back(std::move(degs));
  }

  for (std::size_t k = 1;; ++k) {
    const PolyMatrix& f = C.maps.back();
    const std::vector<long> row_shifts = graded ? C.shifts[k - 1] : std::vector<long>(f.rows(), 0);
    PolyMatrix s = syzygies(f, row_shifts, options.budget);
    if (s.cols() == 0) break;
    if (k >= max_len)
      throw BudgetError("resolution did not terminate within " + std::to_string(max_len) + " steps");

    const std::vector<long> col_shifts = graded ? C.shifts[k] : std::vector<long>(f.cols(), 0);
    std::vector<long> degs(s.cols(), 0);
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const auto col = s.column(j);
      if (graded && !column_homogeneous(col, col_shifts))
        throw StructuralError("syzygy of a graded map is not homogeneous");
      degs[j] = column_degree(col, col_shifts);
    }
    std::vector<std::size_t> order(s.cols());
    std::iota(order.begin(), order.end(), 0);
    if (graded)
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });
    if (options.prune) order = prune_columns(s, order, ModuleOrder::graded(ring, col_shifts), options.budget);

    std::vector<std::vector<Polynomial>> cols;
    std::vector<long> new_shifts;
    for (std::size_t j : order) {
      cols.push_back(s.column(j));
      new_shifts.push_back(degs[j]);
    }
    C.maps.push_back(PolyMatrix::from_columns(ring, s.rows(), cols));
    C.ranks.push_back(cols.size());
    if (graded) C.shifts.push_back(std::move(new_shifts));
  }
  C.validate();
  return C;
}

FreeComplex minimalize(const FreeComplex& complex) {
  if (!complex.graded) throw ValidationError("minimalization needs a graded complex");
  complex.validate();
  FreeComplex C = complex;

  auto find_unit = [&](std::size_t& k, std::size_t& i, std::size_t& j) {
    for (k = 1; k <= C.maps.size(); ++k) {
      const auto& f = C.maps[k - 1];
      for (i = 0; i < f.rows(); ++i)
        for (j = 0; j < f.cols(); ++j)
          if (!f.at(i, j).is_zero() && f.at(i, j).is_constant()) return true;
    }
    return false;
  };

  std::size_t k = 0, i = 0, j = 0;
  while (find_unit(k, i, j)) {
    const PolyMatrix& f = C.maps[k - 1];
    const poly::Rational u = f.at(i, j).leading_coeff();
    PolyMatrix g(C.ring, f.rows() - 1, f.cols() - 1);
    for (std::size_t a = 0, ga = 0; a < f.rows(); ++a) {
      if (a == i) continue;
      for (std::size_t b = 0, gb = 0; b < f.cols(); ++b) {
        if (b == j) continue;
        Polynomial e = f.at(a, b);
        if (!f.at(a, j).is_zero() && !f.at(i, b).is_zero()) e -= (f.at(a, j) * f.at(i, b)).scaled(1 / u);
        g.set(ga, gb++, std::move(e));
      }
      ++ga;
    }
    if (k >= 2) C.maps[k - 2] = C.maps[k - 2].without_column(i);
    if (k < C.maps.size()) C.maps[k] = C.maps[k].without_row(j);
    C.maps[k - 1] = std::move(g);
    --C.ranks[k - 1];
    --C.ranks[k];
    C.shifts[k - 1].erase(C.shifts[k - 1].begin() + static_cast<long>(i));
    C.shifts[k].erase(C.shifts[k].begin() + static_cast<long>(j));
  }
  while (!C.maps.empty() && C.ranks.back() == 0) {
    C.maps.pop_back();
    C.ranks.pop_back();
    C.shifts.pop_back();
  }
  C.validate();
  return C;
}

FreeComplex koszul_complex(const std::vector<Polynomial>& a) {
  if (a.empty()) throw ValidationError("Koszul complex needs at least one element");
  const Ring ring = a.front().ring();
  if (!ring) throw StructuralError("Koszul complex needs a ring");
  for (const auto& x : a)
    if (x.ring() && !poly::same_ring(x.ring(), ring)) throw StructuralError("Koszul elements from different rings");
  const std::size_t m = a.size();

  bool graded = true;
  std::vector<long> deg(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    if (a[s].is_zero()) {
      graded = false;
      continue;
    }
    auto info = poly::weighted_degree_info(a[s]);
    graded = graded && info.is_quasi_homogeneous;
    deg[s] = info.max_degree;
  }

  // k-subsets in lexicographic order, for k = 0..m
  std::vector<std::vector<std::vector<std::size_t>>> subsets(m + 1);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t t = 0; t < m; ++t)
      if (mask >> t & 1u) s.push_back(t);
    subsets[s.size()].push_back(std::move(s));
  }
  for (auto& level : subsets) std::sort(level.begin(), level.end());

  FreeComplex C;
  C.ring = ring;
  C.graded = graded;
  for (std::size_t k = 0; k <= m; ++k) {
    C.ranks.push_back(subsets[k].size());
    if (graded) {
      std::vector<long> sh;
      for (const auto& s : subsets[k]) {
        long d = 0;
        for (std::size_t t : s) d += deg[t];
        sh.push_back(d);
      }
      C.shifts.push_back(std::move(sh));
    }
  }
  for (std::size_t k = 1; k <= m; ++k) {
    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < subsets[k - 1].size(); ++r) row_of[subsets[k - 1][r]] = r;
    PolyMatrix f(ring, subsets[k - 1].size(), subsets[k].size());
    for (std::size_t col = 0; col < subsets[k].size(); ++col) {
      const auto& S = subsets[k][col];
      for (std::size_t t = 0; t < S.size(); ++t) {
        auto T = S;
        T.erase(T.begin() + static_cast<long>(t));
        Polynomial e = a[S[t]].ring() ? a[S[t]] : Polynomial(ring);
        f.set(row_of.at(T), col, t % 2 == 0 ? e : -e);
      }
    }
    C.maps.push_back(std::move(f));
  }
  C.validate();
  return C;
}

std::vector<long> expected_ranks(const FreeComplex& complex) {
  const std::size_t N = complex.length();
  std::vector<long> rho(N + 1, 0);
  for (std::size_t k = 0; k <= N; ++k) {
    long acc = 0;
    for (std::size_t i = k; i <= N; ++i)
      acc += ((i - k) % 2 == 0 ? 1 : -1) * static_cast<long>(complex.ranks[i]);
    rho[k] = acc;
  }
  return rho;
}

RankLocus rank_locus_ideal(const FreeComplex& complex, std::size_t k, const Ideal& ambient,
                           const Budget& budget) {
  (void)budget;
  if (k < 1 || k > complex.length()) throw ValidationError("rank locus index out of range");
  if (!poly::same_ring(ambient.ring(), complex.ring)) throw StructuralError("ambient ideal from another ring");
  RankLocus out;
  out.rho = expected_ranks(complex)[k];
  const PolyMatrix& f = complex.map(k);
  if (out.rho <= 0) {
    out.ideal = Ideal::unit(complex.ring);
    return out;
  }
  const auto rho = static_cast<std::size_t>(out.rho);
  if (rho > std::min(f.rows(), f.cols())) {
    out.everything = true;
    out.ideal = ambient;
    return out;
  }
  auto gens = minors(f, rho);
  out.everything = gens.empty();
  out.ideal = groebner::ideal_combine(Ideal(complex.ring, std::move(gens)), ambient, groebner::CombineKind::Sum);
  return out;
}

int ambient_codim(const Ideal& ideal, const Budget& budget) {
  const int dim = groebner::krull_dimension(ideal, budget);
  if (dim < 0) return kInfiniteCodim;
  return static_cast<int>(ideal.ring()->num_vars()) - dim;
}

AcyclicityReport check_acyclicity(const FreeComplex& complex, const Budget& budget) {
  complex.validate();
  AcyclicityReport rep;
  const Ideal zero = Ideal::zero(complex.ring);
  for (std::size_t k = 1; k <= complex.length(); ++k) {
    const int codim = ambient_codim(rank_locus_ideal(complex, k, zero, budget).ideal, budget);
    rep.codims.push_back(codim);
    if (codim < static_cast<int>(k) && rep.acyclic) {
      rep.acyclic = false;
      rep.failing_k = k;
    }
  }
  return rep;
}

nlohmann::ordered_json complex_to_json(const FreeComplex& complex) {
  nlohmann::ordered_json j;
  j["variables"] = complex.ring->names();
  j["weights"] = complex.ring->weights();
  j["ranks"] = complex.ranks;
  j["graded"] = complex.graded;
  j["shifts"] = complex.graded ? nlohmann::ordered_json(complex.shifts) : nlohmann::ordered_json(nullptr);
  auto maps = nlohmann::ordered_json::array();
  for (const auto& f : complex.maps) maps.push_back(f.to_strings());
  j["maps"] = std::move(maps);
  return j;
}

}  // namespace bsw::resolution
