#include <random>

#include "bsw/error.hpp"
#include "bsw/resolution/complex.hpp"
#include "complex_oracles.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bsw;
using namespace bsw::resolution;
using poly::MonomialOrder;
using poly::parse_polynomial;
using poly::RingContext;

namespace {

Ideal make_ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, r));
  return Ideal(r, std::move(g));
}

std::vector<Polynomial> polys(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, r));
  return g;
}

bool proportional(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  // a == c * b for a nonzero rational c
  std::optional<poly::Rational> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    poly::Rational q = a[i].leading_coeff() / b[i].leading_coeff();
    if (c && *c != q) return false;
    c = q;
    if (!(a[i] == b[i].scaled(q))) return false;
  }
  return c.has_value();
}

Ring two_planes_ring() { return RingContext::make({"x", "y", "z", "w"}); }
Ideal two_planes(const Ring& r) { return make_ideal(r, {"x*z", "x*w", "y*z", "y*w"}); }

}  // namespace

TEST_CASE("PolyMatrix: product, minors, determinant") {
  auto r = RingContext::make({"x", "y"});
  auto a = PolyMatrix::from_rows(r, {polys(r, {"x", "y"}), polys(r, {"1", "x + y"})});
  CHECK(determinant(a) == parse_polynomial("x^2 + x*y - y", r));
  auto m = minors(a, 1);
  CHECK(m.size() == 4);
  CHECK(minors(a, 0).size() == 1);
  CHECK(minors(a, 3).empty());
  auto id = PolyMatrix::from_rows(r, {polys(r, {"1", "0"}), polys(r, {"0", "1"})});
  CHECK(a * id == a);
  CHECK_THROWS_AS(a * PolyMatrix(r, 3, 1), StructuralError);

  // 3x3 determinant against cofactor expansion by hand
  auto b = PolyMatrix::from_rows(r, {polys(r, {"x", "1", "0"}), polys(r, {"0", "y", "1"}), polys(r, {"1", "0", "x"})});
  CHECK(determinant(b) == parse_polynomial("x^2*y + 1", r));
}

TEST_CASE("syzygies examples") {
  auto r = RingContext::make({"x", "y"});
  auto s = syzygies(PolyMatrix::row(r, polys(r, {"x", "y"})));
  REQUIRE(s.cols() == 1);
  CHECK(proportional(s.column(0), polys(r, {"-y", "x"})));

  auto m = PolyMatrix::row(r, polys(r, {"x^2", "x"}));
  auto s2 = syzygies(m);
  CHECK((m * s2).is_zero());
  bool found = false;
  for (std::size_t j = 0; j < s2.cols(); ++j) found = found || proportional(s2.column(j), polys(r, {"-1", "x"}));
  CHECK(found);

  auto s3 = syzygies(PolyMatrix::row(r, polys(r, {"1"})));
  CHECK(s3.cols() == 0);
  CHECK(s3.rows() == 1);

  auto s4 = syzygies(PolyMatrix::row(r, polys(r, {"x", "0"})));
  REQUIRE(s4.cols() == 1);
  CHECK(proportional(s4.column(0), polys(r, {"0", "1"})));
}

TEST_CASE("property: syzygies generate the kernel degree by degree") {
  std::mt19937_64 rng(41);
  auto r = RingContext::make({"x", "y", "z"}, {}, MonomialOrder::DegRevLex);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t rows = 1 + trial % 2, cols = 2 + trial % 3;
    // homogeneous map with row shifts 0 and column shifts = column degree
    PolyMatrix m(r, rows, cols);
    std::vector<long> row_shifts(rows, 0), col_shifts;
    std::uniform_int_distribution<int> dd(1, 2);
    for (std::size_t j = 0; j < cols; ++j) {
      const int d = dd(rng);
      col_shifts.push_back(d);
      for (std::size_t i = 0; i < rows; ++i) m.set(i, j, testing::random_homogeneous(rng, r, d, 2));
    }
    auto s = syzygies(m, row_shifts);
    CHECK((m * s).is_zero());
    // compare dim ker(m)_t with dim (image of s)_t
    std::vector<long> s_shifts;
    for (std::size_t j = 0; j < s.cols(); ++j) {
      long deg = 0;
      for (std::size_t i = 0; i < cols; ++i)
        if (!s.at(i, j).is_zero()) {
          deg = poly::weighted_degree_info(s.at(i, j)).max_degree + col_shifts[i];
          break;
        }
      s_shifts.push_back(deg);
    }
    for (long t = 0; t <= 5; ++t) {
      const long dim = static_cast<long>(testing::graded_basis(r->weights(), col_shifts, t).size());
      const long ker = dim - static_cast<long>(testing::graded_rank(m, row_shifts, col_shifts, t));
      const long img = static_cast<long>(testing::graded_rank(s, col_shifts, s_shifts, t));
      CHECK(ker == img);
    }
  }
}

TEST_CASE("free_resolution examples") {
  auto zw = RingContext::make({"z", "w"}, {2, 5});
  auto cusp = free_resolution(make_ideal(zw, {"z^5 - w^2"}));
  CHECK(cusp.ranks == std::vector<std::size_t>{1, 1});
  CHECK(cusp.graded);
  CHECK(cusp.shifts == std::vector<std::vector<long>>{{0}, {10}});

  auto r4 = two_planes_ring();
  auto planes = free_resolution(two_planes(r4));
  CHECK(planes.ranks == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(planes.is_complex());
  CHECK(planes.is_minimal());
  CHECK(testing::graded_exact(planes, 6));
  CHECK(planes.shifts[2] == std::vector<long>{3, 3, 3, 3});
  CHECK(planes.shifts[3] == std::vector<long>{4});

  auto xy = RingContext::make({"x", "y"});
  auto reg = free_resolution(make_ideal(xy, {"x", "y"}));
  CHECK(reg.ranks == std::vector<std::size_t>{1, 2, 1});
  auto kos = koszul_complex(polys(xy, {"x", "y"}));
  CHECK(reg.map(1) == kos.map(1));
  CHECK(proportional(reg.map(2).column(0), kos.map(2).column(0)));
}

TEST_CASE("free_resolution: ungraded input and errors") {
  auto r = RingContext::make({"z", "w"});
  auto smooth = free_resolution(make_ideal(r, {"w - z^2"}));
  CHECK_FALSE(smooth.graded);
  CHECK(smooth.ranks == std::vector<std::size_t>{1, 1});

  auto r2 = RingContext::make({"x", "y"});
  auto c = free_resolution(make_ideal(r2, {"x", "y + x^2"}));
  CHECK(c.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK(c.is_complex());

  ResolutionOptions graded;
  graded.grading = GradingMode::Graded;
  CHECK_THROWS_AS(free_resolution(make_ideal(r, {"w - z^2"}), graded), ValidationError);
  CHECK_THROWS_AS(free_resolution(make_ideal(r, {"z", "1 + z"})), ValidationError);

  ResolutionOptions short_len;
  short_len.max_len = 1;
  CHECK_THROWS_AS(free_resolution(make_ideal(r2, {"x", "y"}), short_len), BudgetError);

  auto zero = free_resolution(Ideal::zero(r2));
  CHECK(zero.ranks == std::vector<std::size_t>{1});
}

TEST_CASE("minimalize examples") {
  auto r4 = two_planes_ring();
  auto planes = free_resolution(two_planes(r4));
  CHECK(minimalize(planes).ranks == planes.ranks);
  CHECK(minimalize(planes).maps == planes.maps);

  // resolution of (x, x): the syzygy (1, -1) is a unit entry
  auto r = RingContext::make({"x", "y"});
  auto dup = free_resolution(make_ideal(r, {"x", "x"}));
  CHECK(dup.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK_FALSE(dup.is_minimal());
  auto small = minimalize(dup);
  CHECK(small.ranks == std::vector<std::size_t>{1, 1});
  CHECK(small.is_minimal());
  CHECK(small.map(1).column(0).front() == parse_polynomial("x", r));
  // homology is unchanged: both resolve R/(x)
  for (long t = 0; t <= 5; ++t) CHECK(testing::graded_cokernel_dim(small, t) == testing::graded_cokernel_dim(dup, t));
  CHECK(testing::graded_exact(small, 5));
  CHECK(testing::graded_exact(dup, 5));

  // the Koszul complex of (x, x) has no unit entry and is left alone
  auto kxx = koszul_complex(polys(r, {"x", "x"}));
  CHECK(minimalize(kxx).ranks == std::vector<std::size_t>{1, 2, 1});

  auto ungraded = free_resolution(make_ideal(r, {"x", "y + x^2"}));
  CHECK_THROWS_AS(minimalize(ungraded), ValidationError);
}

TEST_CASE("minimalize: unpruned Schreyer resolutions reduce to the pruned Betti numbers") {
  ResolutionOptions raw;
  raw.prune = false;
  auto r4 = two_planes_ring();
  auto c = free_resolution(two_planes(r4), raw);
  CHECK(c.is_complex());
  CHECK(testing::graded_exact(c, 6));
  auto m = minimalize(c);
  CHECK(m.ranks == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(m.is_complex());
  CHECK(m.is_minimal());
  CHECK(testing::graded_exact(m, 6));
}

TEST_CASE("property: minimalize keeps homology on random graded ideals") {
  std::mt19937_64 rng(8);
  auto r = RingContext::make({"x", "y", "z"}, {}, MonomialOrder::DegRevLex);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> g;
    std::uniform_int_distribution<int> dd(1, 2);
    for (int i = 0; i < 3; ++i) g.push_back(testing::random_homogeneous(rng, r, dd(rng), 2));
    // a redundant generator forces unit entries
    g.push_back(g[0] * parse_polynomial("x + y", r));
    Ideal I(r, g);
    if (groebner::groebner_basis(I).is_unit() || I.is_zero()) continue;
    ResolutionOptions raw;
    raw.prune = false;
    FreeComplex c = free_resolution(I, raw);
    auto m = minimalize(c);
    CHECK(c.is_complex());
    CHECK(m.is_complex());
    CHECK(m.is_minimal());
    CHECK(testing::graded_exact(m, 5));
    for (long t = 0; t <= 5; ++t) CHECK(testing::graded_cokernel_dim(m, t) == testing::graded_cokernel_dim(c, t));
    // Betti numbers do not depend on pruning
    CHECK(m.ranks == minimalize(free_resolution(I)).ranks);
  }
}

TEST_CASE("koszul_complex examples") {
  auto r = RingContext::make({"x", "y", "z"});
  auto k1 = koszul_complex(polys(r, {"x"}));
  CHECK(k1.ranks == std::vector<std::size_t>{1, 1});
  CHECK(k1.map(1).at(0, 0) == parse_polynomial("x", r));

  auto k2 = koszul_complex(polys(r, {"x", "y"}));
  CHECK(k2.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK(k2.map(2).column(0) == polys(r, {"-y", "x"}));

  auto k3 = koszul_complex(polys(r, {"x", "y", "z"}));
  CHECK(k3.ranks == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(k3.is_complex());
  CHECK(testing::graded_exact(k3, 5));
  CHECK_THROWS_AS(koszul_complex({}), ValidationError);
}

TEST_CASE("property: Koszul maps compose to zero") {
  std::mt19937_64 rng(12);
  auto r = RingContext::make({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> a;
    for (int i = 0; i < 1 + trial % 4; ++i) a.push_back(testing::random_poly(rng, r, 3, 3));
    CHECK(koszul_complex(a).is_complex());
  }
}

TEST_CASE("expected_ranks examples and consistency") {
  auto r = RingContext::make({"x", "y", "z"});
  FreeComplex c;
  c.ring = r;
  c.ranks = {1, 1};
  c.maps = {PolyMatrix::row(r, polys(r, {"x"}))};
  CHECK(expected_ranks(c)[1] == 1);

  auto planes = free_resolution(two_planes(two_planes_ring()));
  auto rho = expected_ranks(planes);
  CHECK(rho[1] == 1);
  CHECK(rho[2] == 3);
  CHECK(rho[3] == 1);

  auto k3 = koszul_complex(polys(r, {"x", "y", "z"}));
  auto rk = expected_ranks(k3);
  CHECK(std::vector<long>(rk.begin() + 1, rk.end()) == std::vector<long>{1, 2, 1});

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    FreeComplex f;
    f.ring = r;
    std::uniform_int_distribution<std::size_t> rk_dist(0, 6);
    f.ranks.push_back(1);
    for (int k = 0; k < 1 + trial % 5; ++k) {
      f.ranks.push_back(rk_dist(rng));
      f.maps.emplace_back(r, f.ranks[f.ranks.size() - 2], f.ranks.back());
    }
    auto e = expected_ranks(f);
    for (std::size_t k = 0; k + 1 < e.size(); ++k) CHECK(e[k] + e[k + 1] == static_cast<long>(f.ranks[k]));
    CHECK(e.back() == static_cast<long>(f.ranks.back()));
  }
}

TEST_CASE("rank_locus_ideal examples") {
  auto zw = RingContext::make({"z", "w"}, {2, 5});
  auto I = make_ideal(zw, {"z^5 - w^2"});
  auto cusp = free_resolution(I);
  auto z1 = rank_locus_ideal(cusp, 1, I);
  CHECK(groebner::ideal_contains(z1.ideal, I));
  CHECK(groebner::ideal_contains(I, z1.ideal));
  CHECK_FALSE(z1.everything);

  auto r4 = two_planes_ring();
  auto P = two_planes(r4);
  auto planes = free_resolution(P);
  auto z3 = rank_locus_ideal(planes, 3, P);
  CHECK(z3.rho == 1);
  CHECK(groebner::krull_dimension(z3.ideal) == 0);
  CHECK(groebner::ideal_contains(z3.ideal, make_ideal(r4, {"x", "y", "z", "w"})));

  auto xy = RingContext::make({"x", "y"});
  auto k2 = koszul_complex(polys(xy, {"x", "y"}));
  auto l = rank_locus_ideal(k2, 2, Ideal::zero(xy));
  CHECK(groebner::ideal_contains(l.ideal, make_ideal(xy, {"x", "y"})));
  CHECK(groebner::ideal_contains(make_ideal(xy, {"x", "y"}), l.ideal));

  // rho larger than the matrix: locus is everything, flagged
  FreeComplex odd;
  odd.ring = xy;
  odd.ranks = {1, 1, 3};
  odd.maps = {PolyMatrix::row(xy, polys(xy, {"x"})), PolyMatrix::row(xy, polys(xy, {"0", "0", "0"}))};
  auto big = rank_locus_ideal(odd, 2, Ideal::zero(xy));
  CHECK(big.rho == 3);
  CHECK(big.everything);
  CHECK(big.ideal.is_zero());
  CHECK_THROWS_AS(rank_locus_ideal(odd, 3, Ideal::zero(xy)), ValidationError);
}

TEST_CASE("check_acyclicity: regular sequences versus (x, xy)") {
  auto r = RingContext::make({"x", "y", "z"});
  for (auto gens : {polys(r, {"x", "y"}), polys(r, {"x", "y", "z"}), polys(r, {"x^2", "y^3 - x*z"})}) {
    auto rep = check_acyclicity(koszul_complex(gens));
    CHECK(rep.acyclic);
    for (std::size_t k = 1; k <= rep.codims.size(); ++k) CHECK(rep.codims[k - 1] >= static_cast<int>(k));
  }
  auto bad = check_acyclicity(koszul_complex(polys(r, {"x", "x*y"})));
  CHECK_FALSE(bad.acyclic);
  REQUIRE(bad.failing_k);
  CHECK(*bad.failing_k == 2);
  CHECK(bad.codims[1] == 1);

  CHECK(check_acyclicity(free_resolution(two_planes(two_planes_ring()))).acyclic);
}

TEST_CASE("complex_to_json layout") {
  auto r = RingContext::make({"x", "y"});
  auto j = complex_to_json(koszul_complex(polys(r, {"x", "y"})));
  CHECK(j["ranks"] == nlohmann::ordered_json({1, 2, 1}));
  CHECK(j["graded"] == true);
  CHECK(j["maps"][1][0][0] == "-y");
  CHECK(j["maps"][1][1][0] == "x");
  CHECK(j["shifts"][2][0] == 2);
}
