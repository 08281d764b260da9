// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bsw/closure/monomial.hpp"
#include "bsw/closure/semigroup.hpp"
#include "bsw/loja/loja.hpp"
#include "bsw/resolution/strata.hpp"
#include "oracles.hpp"

using namespace bsw;
using groebner::Ideal;
using poly::parse_polynomial;
using poly::Polynomial;
using poly::RingContext;
using resolution::FreeComplex;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  bool report(double seconds, double limit) {
    if (limit > 0 && seconds >= limit) check(false, "runtime " + std::to_string(seconds) + " s over the limit");
    const bool ok = failed_ == 0;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", number_, title_.c_str(), checks_,
                seconds);
    for (const auto& f : failures_) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    return ok;
  }

 private:
  int number_;
  std::string title_;
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

double timed(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs the body; an exception becomes a failed check instead of aborting the suite.
void guarded(Criterion& c, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
}

Ideal make_ideal(const poly::Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, r));
  return Ideal(r, std::move(g));
}

struct Variety {
  std::string name;
  Ideal ideal;
};

std::vector<Variety> suite() {
  auto r3 = RingContext::make({"x", "y", "z"});
  auto r4 = RingContext::make({"x", "y", "z", "w"});
  std::vector<Variety> out;
  for (int p : {3, 5, 7}) {
    auto r = RingContext::make({"z", "w"}, {2, p});
    out.push_back({"cusp p=" + std::to_string(p), make_ideal(r, {(("z^" + std::to_string(p)) + " - w^2").c_str()})});
  }
  out.push_back({"smooth curve", make_ideal(RingContext::make({"z", "w"}), {"w - z^2"})});
  out.push_back({"smooth surface", make_ideal(r3, {"z - x*y"})});
  out.push_back({"cone", make_ideal(r3, {"x*z - y^2"})});
  out.push_back({"two planes", make_ideal(r4, {"x*z", "x*w", "y*z", "y*w"})});
  out.push_back({"twisted cubic", make_ideal(r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"})});
  out.push_back({"three axes", make_ideal(r3, {"x*y", "y*z", "x*z"})});
  return out;
}

// Every complex built during the run, for the soundness criterion.
std::vector<std::pair<std::string, FreeComplex>> produced;

FreeComplex keep(std::string name, FreeComplex c) {
  produced.emplace_back(std::move(name), c);
  return c;
}

// ---- independent numeric oracles for complexes ----

mpq_class eval_at(const Polynomial& p, const std::vector<mpq_class>& pt) {
  mpq_class acc = 0;
  for (const auto& t : p.terms()) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v *= pt[i];
    acc += v;
  }
  return acc;
}

std::vector<std::vector<mpq_class>> eval_matrix(const resolution::PolyMatrix& m, const std::vector<mpq_class>& pt) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = eval_at(m.at(i, j), pt);
  return out;
}

std::vector<std::vector<mpq_class>> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::uniform_int_distribution<int> d(-97, 97);
  std::vector<std::vector<mpq_class>> out(count, std::vector<mpq_class>(n));
  for (auto& p : out)
    for (auto& x : p) x = mpq_class(d(rng), 1 + (d(rng) + 97) % 13);
  return out;
}

// ---- criteria ----

bool criterion_1() {
  Criterion c(1, "cusp suite z^p - w^2, p = 3, 5, 7");
  const double s = timed([&] {
    guarded(c, [&] {
      for (long p : {3L, 5L, 7L}) {
        closure::NumericalSemigroup S({2, p});
        closure::SemigroupIdeal z(S, {2});
        const std::string tag = "p=" + std::to_string(p) + ": ";
        c.check(!closure::germ_ideal_member(p, z, S), tag + "w should not lie in (z)");
        const auto zpow = z.power(static_cast<unsigned>(p / 2));
        c.check(closure::germ_closure_member(p, zpow, S), tag + "w should lie in the closure of (z)^[p/2]");
        const auto e = closure::germ_bs_exponent(z, 1, S);
        c.check(e.exponent == static_cast<unsigned>((p + 1) / 2),
                tag + "exponent " + std::to_string(e.exponent) + ", expected " + std::to_string((p + 1) / 2));
      }
    });
  });
  return c.report(s, 1.0);
}

bool criterion_2() {
  Criterion c(2, "classical BS on 50 random monomial ideals, l = 1, 2, 3; sharpness on (x^2, y^2)");
  const double s = timed([&] {
    guarded(c, [&] {
      std::mt19937_64 rng(314159);
      for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::uniform_int_distribution<int> ngen(1, 4), deg(1, 5);
        std::vector<poly::ExponentVector> gens;
        const int k = ngen(rng);
        for (int i = 0; i < k; ++i) {
          auto all = testing::monomials_of_degree(n, deg(rng));
          gens.emplace_back(all[rng() % all.size()]);
        }
        closure::MonomialIdeal M(n, gens);
        for (unsigned ell = 1; ell <= 3; ++ell) {
          const auto r = closure::bs_verify_monomial(M, ell);
          c.check(r.holds, "ideal #" + std::to_string(trial) + " fails for l=" + std::to_string(ell));
        }
      }
      closure::MonomialIdeal sq(2, {poly::ExponentVector{2, 0}, poly::ExponentVector{0, 2}});
      const auto sharp = closure::closure_power_in_power(sq, 1, 1);
      c.check(!sharp.holds, "closure((x^2, y^2)) should not lie in (x^2, y^2)");
      c.check(sharp.counterexample && *sharp.counterexample == poly::ExponentVector{1, 1},
              "sharpness witness should be x*y");
      c.check(closure::bs_verify_monomial(sq, 1).holds, "BS should hold for (x^2, y^2), l=1");
    });
  });
  return c.report(s, 60.0);
}

bool criterion_3() {
  Criterion c(3, "strata, depth and codim_Z Z^r >= r + 1");
  const double s = timed([&] {
    guarded(c, [&] {
      for (const auto& v : suite()) {
        const auto C = keep(v.name, resolution::free_resolution(v.ideal));
        const auto S = resolution::strata(C, v.ideal);
        for (const auto& z : S.zr)
          if (z.r > 0 && !z.empty())
            c.check(z.codim_in_z >= z.r + 1, v.name + ": codim_Z Z^" + std::to_string(z.r) + " too small");
        c.check(S.pure, v.name + ": pure flag should be set");

        const auto depth = resolution::check_cm_depth(S);
        if (v.name.rfind("cusp", 0) == 0 || v.name == "cone") {
          c.check(depth.is_cm, v.name + " should be Cohen-Macaulay");
          for (const auto& z : S.zr)
            if (z.r > 0) c.check(z.empty(), v.name + ": Z^" + std::to_string(z.r) + " should be empty");
        }
        if (v.name == "two planes") {
          c.check(C.ranks == std::vector<std::size_t>{1, 4, 4, 1}, "two planes: ranks should be [1,4,4,1]");
          c.check(C.is_minimal(), "two planes: resolution should be minimal");
          c.check(S.zr.size() >= 2 && S.zr[1].dim == 0, "two planes: Z^1 should be the origin");
          c.check(S.codim_of(1) == 2, "two planes: codim_Z Z^1 should be 2");
          c.check(!depth.is_cm, "two planes should not be Cohen-Macaulay");
          c.check(depth.depth_lower == 1, "two planes: depth bound should be 1");
          c.check(depth.depth_exact && *depth.depth_exact == 1, "two planes: depth should be 1");
        }
      }
    });
  });
  return c.report(s, 30.0);
}

bool criterion_4() {
  Criterion c(4, "normality: cusp fails, cone and smooth hypersurfaces pass");
  const double s = timed([&] {
    guarded(c, [&] {
      auto check = [&](const std::string& name, const Ideal& I, bool expected) {
        const auto C = keep(name, resolution::free_resolution(I));
        const bool got = resolution::check_normality_condition(resolution::strata(C, I));
        c.check(got == expected, name + (expected ? " should be normal" : " should not be normal"));
      };
      check("cusp", make_ideal(RingContext::make({"z", "w"}, {2, 5}), {"z^5 - w^2"}), false);
      check("cone", make_ideal(RingContext::make({"x", "y", "z"}), {"x*z - y^2"}), true);
      check("smooth curve", make_ideal(RingContext::make({"z", "w"}), {"w - z^2"}), true);
      check("smooth surface", make_ideal(RingContext::make({"x", "y", "z"}), {"z - x*y - x^3"}), true);
      check("plane", make_ideal(RingContext::make({"x", "y", "z"}), {"x + y + z"}), true);
      check("smooth threefold", make_ideal(RingContext::make({"x", "y", "z", "w"}), {"w - x^2 - y*z"}), true);
    });
  });
  return c.report(s, 0);
}

// A^ell membership by brute force over sums of ell shifts.
bool in_power(long s, const std::vector<long>& shifts, unsigned ell, const std::vector<bool>& in_s) {
  std::set<long> sums{0};
  for (unsigned i = 0; i < ell; ++i) {
    std::set<long> next;
    for (long a : sums)
      for (long b : shifts) next.insert(a + b);
    sums = std::move(next);
  }
  for (long t : sums)
    if (t <= s && in_s[static_cast<std::size_t>(s - t)]) return true;
  return false;
}

bool criterion_5() {
  Criterion c(5, "empirical mu on <2,5> and <2,3>, re-verified by direct containment");
  const double s = timed([&] {
    guarded(c, [&] {
      struct Case {
        std::vector<long> gens;
        unsigned mu;
      };
      for (const auto& cs : {Case{{2, 5}, 3}, Case{{2, 3}, 2}}) {
        closure::NumericalSemigroup S(cs.gens);
        const auto r = closure::huneke_mu(S, 12, 4);
        const std::string tag = "<" + std::to_string(cs.gens[0]) + "," + std::to_string(cs.gens[1]) + ">: ";
        c.check(r.mu == cs.mu, tag + "mu " + std::to_string(r.mu) + ", expected " + std::to_string(cs.mu));
        if (cs.gens[1] == 5)
          c.check(r.witness_ideal && r.witness_ideal->shifts() == std::vector<long>{2} && r.witness_ell == 1,
                  tag + "witness should be (t^2) with l=1");

        const long limit = 400;
        std::vector<bool> in_s(limit + 1, false);
        in_s[0] = true;
        for (long x = 1; x <= limit; ++x)
          for (long g : cs.gens)
            if (x >= g && in_s[static_cast<std::size_t>(x - g)]) in_s[static_cast<std::size_t>(x)] = true;
        const long conductor = [&] {
          long last_gap = 0;
          for (long x = 0; x <= limit; ++x)
            if (!in_s[static_cast<std::size_t>(x)]) last_gap = x;
          return last_gap + 1;
        }();

        std::size_t verified = 0;
        for (const auto& A : closure::enumerate_ideals(S, 12)) {
          const long v = A.order();
          for (unsigned ell = 1; ell <= 4; ++ell) {
            const long k = static_cast<long>(r.mu + ell - 1);
            // closure(A^k) = {s in S : s >= k v}; A^ell contains every s >= ell v + conductor
            bool ok = true;
            for (long x = k * v; x < ell * v + conductor && ok; ++x)
              if (in_s[static_cast<std::size_t>(x)] && !in_power(x, A.shifts(), ell, in_s)) ok = false;
            c.check(ok, tag + "closure(A^" + std::to_string(k) + ") not in A^" + std::to_string(ell));
            ++verified;
          }
        }
        c.check(verified == 4 * r.ideals_checked, tag + "every enumerated ideal should be re-verified");
        // the witness shows mu cannot be lowered
        if (r.witness_ideal && r.mu > 1) {
          const auto& A = *r.witness_ideal;
          const long k = static_cast<long>(r.mu + r.witness_ell - 2);
          bool fails = false;
          for (long x = k * A.order(); x < static_cast<long>(r.witness_ell) * A.order() + conductor; ++x)
            if (in_s[static_cast<std::size_t>(x)] && !in_power(x, A.shifts(), r.witness_ell, in_s)) fails = true;
          c.check(fails, tag + "witness should fail at exponent mu + l - 2");
        }
      }
    });
  });
  return c.report(s, 60.0);
}

bool criterion_6() {
  Criterion c(6, "ideal membership agrees with the dense oracle on 100 random ideals");
  const double s = timed([&] {
    guarded(c, [&] {
      std::mt19937_64 rng(6);
      std::size_t ideals = 0, total = 0, members = 0;
      while (ideals < 100) {
        const std::size_t n = 1 + ideals % 3;
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(n);
        auto r = RingContext::make(names, {}, poly::MonomialOrder::DegRevLex);
        std::uniform_int_distribution<int> ngen(1, 3), gdeg(1, 4), pdeg(0, 6);
        std::vector<Polynomial> gens;
        const int k = ngen(rng);
        for (int i = 0; i < k; ++i) gens.push_back(testing::random_homogeneous(rng, r, gdeg(rng), 3));
        Ideal I(r, gens);
        if (I.is_zero()) continue;
        ++ideals;
        std::vector<Polynomial> candidates;
        Polynomial built(r);
        for (const auto& g : I.generators()) {
          const int gd = static_cast<int>(poly::weighted_degree_info(g).max_degree);
          if (gd <= 6) built = built + testing::random_homogeneous(rng, r, 6 - gd, 2) * g;
        }
        candidates.push_back(built);
        candidates.push_back(testing::random_homogeneous(rng, r, pdeg(rng), 3));
        candidates.push_back(testing::random_homogeneous(rng, r, 6, 2));
        for (const auto& p : candidates) {
          const bool expected = testing::dense_membership(p, I.generators(), 6);
          const auto got = groebner::ideal_member(p, I);
          ++total;
          if (expected) ++members;
          c.check(got.member == expected, "disagreement on " + p.to_string());
        }
        if (ideals % 10 == 0) keep("random ideal", resolution::free_resolution(I));
      }
      c.check(members > 0 && members < total, "candidates should include members and non-members");
    });
  });
  return c.report(s, 0);
}

bool criterion_7() {
  Criterion c(7, "complex soundness; Koszul (x,y,z) acyclic, (x,xy) not");
  const double s = timed([&] {
    guarded(c, [&] {
      auto r3 = RingContext::make({"x", "y", "z"});
      const auto kxyz = keep("koszul x,y,z", resolution::koszul_complex(make_ideal(r3, {"x", "y", "z"}).generators()));
      const auto kxxy = keep("koszul x,xy", resolution::koszul_complex(make_ideal(r3, {"x", "x*y"}).generators()));
      c.check(resolution::check_acyclicity(kxyz).acyclic, "Koszul complex of (x,y,z) should be acyclic");
      const auto bad = resolution::check_acyclicity(kxxy);
      c.check(!bad.acyclic, "Koszul complex of (x,xy) should not be acyclic");

      std::mt19937_64 rng(7);
      for (const auto& [name, C] : produced) {
        C.validate();
        c.check(C.is_complex(), name + ": f_k f_{k+1} should vanish");
        const auto rho = resolution::expected_ranks(C);
        const auto pts = random_points(rng, C.ring->num_vars(), 3);
        // generic ranks at random rational points, and the composition there
        std::vector<std::size_t> generic(C.length() + 2, 0);
        for (std::size_t k = 1; k <= C.length(); ++k)
          for (const auto& pt : pts) generic[k] = std::max(generic[k], testing::rational_rank(eval_matrix(C.map(k), pt)));
        for (std::size_t k = 1; k < C.length(); ++k)
          for (const auto& pt : pts) {
            const auto a = eval_matrix(C.map(k), pt), b = eval_matrix(C.map(k + 1), pt);
            bool zero = true;
            for (std::size_t i = 0; i < a.size(); ++i)
              for (std::size_t j = 0; j < b[0].size(); ++j) {
                mpq_class acc = 0;
                for (std::size_t l = 0; l < b.size(); ++l) acc += a[i][l] * b[l][j];
                zero = zero && acc == 0;
              }
            c.check(zero, name + ": composition nonzero at a point");
          }
        for (std::size_t k = 0; k <= C.length(); ++k) {
          c.check(generic[k] + generic[k + 1] == C.ranks[k],
                  name + ": rho_" + std::to_string(k) + " + rho_" + std::to_string(k + 1) + " != rank E_" +
                      std::to_string(k));
          if (k < rho.size()) c.check(static_cast<std::size_t>(rho[k]) == generic[k], name + ": expected rank mismatch");
        }
      }
      c.check(produced.size() >= 20, "soundness should cover every produced complex");
    });
  });
  return c.report(s, 0);
}

bool criterion_8() {
  Criterion c(8, "Lojasiewicz slopes on the p = 5 cusp, radii 1e-1 .. 1e-3, 60 points");
  const double s = timed([&] {
    guarded(c, [&] {
      auto r = RingContext::make({"z", "w"}, {2, 5});
      loja::VarietySampler smp;
      smp.kind = loja::SamplerKind::Hypersurface;
      smp.equation = parse_polynomial("z^5 - w^2", r);
      smp.solve_for = 1;
      smp.radii = loja::geometric_radii(1e-1, 1e-3, 5);
      smp.samples_per_radius = 12;
      smp.seed = 8;
      const auto pts = loja::sample_variety(smp);
      c.check(pts.size() >= 60, "need at least 60 points");
      const auto e1 = loja::loja_exponent_estimate(parse_polynomial("w", r), {parse_polynomial("z", r)}, pts);
      c.check(std::abs(e1.slope - 2.5) <= 0.1, "slope for phi=w, a=(z) is " + std::to_string(e1.slope));
      const auto e2 = loja::loja_exponent_estimate(parse_polynomial("z^3", r),
                                                   {parse_polynomial("z", r), parse_polynomial("w", r)}, pts);
      c.check(std::abs(e2.slope - 3.0) <= 0.1, "slope for phi=z^3, a=(z,w) is " + std::to_string(e2.slope));
    });
  });
  return c.report(s, 5.0);
}

std::string without_timestamp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string out, line;
  while (std::getline(in, line))
    if (line.find("\"timestamp\":") == std::string::npos) out += line + "\n";
  return out;
}

bool criterion_9() {
  Criterion c(9, "bsw run on the acceptance session is reproducible");
  const double s = timed([&] {
    guarded(c, [&] {
      const std::string exe = BSW_EXE, session = BSW_SESSION, dir = BSW_OUT_DIR;
      std::string reports[2];
      for (int i = 0; i < 2; ++i) {
        const std::string out = dir + "/acceptance_report_" + std::to_string(i) + ".json";
        const std::string cmd = "\"" + exe + "\" run \"" + session + "\" --seed 5 --out \"" + out + "\" > /dev/null";
        const int status = std::system(cmd.c_str());
        c.check(status == 0, "bsw run exited with status " + std::to_string(status));
        reports[i] = without_timestamp(out);
        c.check(!reports[i].empty(), "empty report");
      }
      c.check(reports[0] == reports[1], "reports differ beyond the timestamp");
    });
  });
  return c.report(s, 0);
}

}  // namespace

int main() {
  bool ok = true;
  for (auto* f : {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
                  criterion_8, criterion_9})
    ok = f() && ok;
  return ok ? 0 : 1;
}
