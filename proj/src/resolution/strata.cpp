#include "bsw/resolution/strata.hpp"

#include "bsw/error.hpp"

namespace bsw::resolution {

using groebner::CombineKind;
using groebner::ideal_combine;
using groebner::krull_dimension;

int StrataReport::codim_of(int r) const {
  if (r < 0 || static_cast<std::size_t>(r) >= zr.size()) return kInfiniteCodim;
  return zr[static_cast<std::size_t>(r)].codim_in_z;
}

namespace {

Stratum make_stratum(int r, Ideal ideal, int d, const Budget& budget) {
  Stratum s;
  s.r = r;
  s.dim = krull_dimension(ideal, budget);
  s.codim_in_z = s.dim < 0 ? kInfiniteCodim : d - s.dim;
  s.ideal = std::move(ideal);
  return s;
}

}  // namespace

StrataReport strata(const FreeComplex& complex, const Ideal& ideal, const Budget& budget) {
  complex.validate();
  if (complex.ranks.empty() || complex.ranks[0] != 1)
    throw ValidationError("strata need a resolution of a cyclic module (rank E_0 = 1)");
  if (!poly::same_ring(complex.ring, ideal.ring())) throw StructuralError("complex and ideal over different rings");

  StrataReport rep;
  rep.ring = ideal.ring();
  rep.ideal = ideal;
  rep.n = static_cast<int>(rep.ring->num_vars());
  rep.d = krull_dimension(ideal, budget);
  if (rep.d < 0) throw ValidationError("Z is empty: the ideal is the unit ideal");
  rep.p = rep.n - rep.d;
  rep.length = complex.length();
  rep.minimal = complex.is_minimal();
  rep.expected_ranks = expected_ranks(complex);

  for (std::size_t k = 1; k <= complex.length(); ++k) {
    auto locus = rank_locus_ideal(complex, k, ideal, budget);
    if (locus.everything && static_cast<int>(k) > rep.p)
      rep.warnings.push_back("rank locus Z_" + std::to_string(k) + " is everything: expected rank exceeds f_" +
                             std::to_string(k));
    rep.zk_ideals.emplace(k, std::move(locus.ideal));
  }

  const auto p = static_cast<std::size_t>(rep.p);
  const auto& gens = ideal.generators();
  std::vector<Polynomial> jm;
  if (p <= std::min(gens.size(), rep.ring->num_vars())) jm = minors(jacobian(rep.ring, gens), p);
  rep.zsing_ideal = ideal_combine(Ideal(rep.ring, std::move(jm)), ideal, CombineKind::Sum);
  rep.zr.push_back(make_stratum(0, rep.zsing_ideal, rep.d, budget));

  for (std::size_t k = p + 1; k <= complex.length(); ++k)
    rep.zr.push_back(make_stratum(static_cast<int>(k - p), rep.zk_ideals.at(k), rep.d, budget));

  for (const auto& s : rep.zr)
    if (s.r > 0 && s.codim_in_z != kInfiniteCodim && s.codim_in_z < s.r + 1) rep.pure = false;
  if (!rep.pure) rep.warnings.push_back("purity bound codim Z^r >= r+1 fails; Z may not be equidimensional");
  return rep;
}

CmDepth check_cm_depth(const StrataReport& report) {
  CmDepth out;
  auto empty_beyond = [&](int bound) {
    for (const auto& s : report.zr)
      if (s.r > bound && !s.empty()) return false;
    return true;
  };
  out.is_cm = empty_beyond(0);
  for (int nu = report.d; nu >= 0; --nu)
    if (empty_beyond(report.d - nu)) {
      out.depth_lower = nu;
      break;
    }
  if (report.minimal) out.depth_exact = report.n - static_cast<int>(report.length);
  return out;
}

BsCondition check_bs_condition(const StrataReport& report, const Ideal& a, int m, const Budget& budget) {
  if (!poly::same_ring(a.ring(), report.ring)) throw StructuralError("ideal a from another ring");
  if (m < 1) throw ValidationError("m must be at least 1");
  BsCondition out;
  for (const auto& s : report.zr) {
    if (s.empty()) continue;
    Ideal cut = ideal_combine(ideal_combine(s.ideal, a, CombineKind::Sum), report.ideal, CombineKind::Sum);
    const int dim = krull_dimension(cut, budget);
    const int codim = dim < 0 ? kInfiniteCodim : report.d - dim;
    out.checked.emplace_back(s.r, codim);
    if (codim != kInfiniteCodim && codim < m + 1 + s.r && out.holds) {
      out.holds = false;
      out.witness = {s.r, codim};
    }
  }
  return out;
}

bool check_normality_condition(const StrataReport& report) {
  for (const auto& s : report.zr)
    if (!s.empty() && s.codim_in_z < 2 + s.r) return false;
  return true;
}

nlohmann::ordered_json codim_to_json(int codim) {
  if (codim == kInfiniteCodim) return "inf";
  return codim;
}

nlohmann::ordered_json strata_to_json(const StrataReport& report) {
  using J = nlohmann::ordered_json;
  J j;
  j["n"] = report.n;
  j["dim"] = report.d;
  j["codim"] = report.p;
  j["resolution_length"] = report.length;
  j["minimal_resolution"] = report.minimal;
  j["expected_ranks"] = report.expected_ranks;
  auto zk = J::object();
  for (const auto& [k, I] : report.zk_ideals) {
    auto gens = J::array();
    for (const auto& g : I.generators()) gens.push_back(g.to_string());
    zk[std::to_string(k)] = std::move(gens);
  }
  j["Zk_ideals"] = std::move(zk);
  auto zsing = J::array();
  for (const auto& g : report.zsing_ideal.generators()) zsing.push_back(g.to_string());
  j["Zsing_ideal"] = std::move(zsing);
  auto zr = J::array();
  for (const auto& s : report.zr) {
    J e;
    e["r"] = s.r;
    e["empty"] = s.empty();
    e["dim"] = s.dim;
    e["codim_in_Z"] = codim_to_json(s.codim_in_z);
    zr.push_back(std::move(e));
  }
  j["Zr"] = std::move(zr);
  j["pure"] = report.pure;
  j["warnings"] = report.warnings;
  return j;
}

}  // namespace bsw::resolution
