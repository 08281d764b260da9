#include "bsw/loja/loja.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "bsw/error.hpp"

namespace bsw::loja {

namespace {

using cd = std::complex<double>;

double random_angle(std::mt19937_64& rng) {
  // 53 random bits, uniform in [0, 2 pi)
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * std::numbers::pi * u;
}

cd monomial_value(const poly::ExponentVector& m, const Point& z) {
  cd v = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int e = 0; e < m[i]; ++e) v *= z[i];
  return v;
}

void check_point(const Polynomial& p, const Point& z) {
  if (z.size() != p.ring()->num_vars()) throw StructuralError("point dimension does not match the ring");
}

// Roots of sum_k c[k] x^k, highest nonzero coefficient first trimmed.
std::vector<cd> roots(std::vector<cd> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) return {};
  const std::size_t d = c.size() - 1;
  if (d == 1) return {-c[0] / c[1]};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<long>(d), static_cast<long>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i) comp(static_cast<long>(i), static_cast<long>(d - 1)) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) return {};
  std::vector<cd> out;
  for (long i = 0; i < static_cast<long>(d); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

cd horner(const std::vector<cd>& c, cd x) {
  cd v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

cd horner_derivative(const std::vector<cd>& c, cd x) {
  cd v = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * x + c[k] * static_cast<double>(k);
  return v;
}

}  // namespace

std::vector<double> geometric_radii(double first, double last, std::size_t count) {
  if (count == 0) throw ValidationError("need at least one radius");
  if (!(first > 0) || !(last > 0)) throw ValidationError("radii must be positive");
  std::vector<double> out;
  if (count == 1) return {first};
  const double ratio = std::pow(last / first, 1.0 / static_cast<double>(count - 1));
  for (std::size_t i = 0; i < count; ++i) out.push_back(first * std::pow(ratio, static_cast<double>(i)));
  return out;
}

std::complex<double> evaluate(const Polynomial& p, const Point& z) {
  check_point(p, z);
  cd acc = 0.0;
  for (const auto& t : p.terms()) acc += t.coeff.get_d() * monomial_value(t.monomial, z);
  return acc;
}

double term_magnitude(const Polynomial& p, const Point& z) {
  check_point(p, z);
  double acc = 0;
  for (const auto& t : p.terms()) acc += std::abs(t.coeff.get_d() * monomial_value(t.monomial, z));
  return acc;
}

double relative_residual(const Polynomial& p, const Point& z) {
  const double scale = term_magnitude(p, z);
  if (scale == 0) return 0;
  return std::abs(evaluate(p, z)) / scale;
}

std::vector<SamplePoint> sample_variety(const VarietySampler& s) {
  if (s.radii.empty()) throw ValidationError("sampler needs radii");
  for (std::size_t i = 0; i < s.radii.size(); ++i) {
    if (!(s.radii[i] > 0 && s.radii[i] <= 1)) throw ValidationError("radii must lie in (0, 1]");
    if (i > 0 && !(s.radii[i] < s.radii[i - 1])) throw ValidationError("radii must be strictly decreasing");
  }
  if (s.samples_per_radius == 0) throw ValidationError("samples_per_radius must be positive");

  std::mt19937_64 rng(s.seed);
  std::vector<SamplePoint> out;

  if (s.kind == SamplerKind::Parametrized) {
    if (s.exponents.empty()) throw ValidationError("parametrization needs exponents");
    int wmin = 0;
    for (int c : s.exponents) {
      if (c < 0) throw ValidationError("parametrization exponents must be nonnegative");
      if (c > 0 && (wmin == 0 || c < wmin)) wmin = c;
    }
    if (wmin == 0) throw ValidationError("parametrization is constant");
    for (double rho : s.radii) {
      const double mod = std::pow(rho, 1.0 / wmin);
      for (std::size_t k = 0; k < s.samples_per_radius; ++k) {
        const cd t = std::polar(mod, random_angle(rng));
        SamplePoint p{rho, k, {}, 0};
        for (int c : s.exponents) p.z.push_back(std::pow(t, c));
        for (const auto& eq : s.check_equations) p.residual = std::max(p.residual, relative_residual(eq, p.z));
        if (p.residual > s.residual_tolerance) throw SamplingError("sampled point misses the variety");
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  if (!s.equation) throw ValidationError("hypersurface sampler needs an equation");
  const Polynomial& f = *s.equation;
  const auto& ring = f.ring();
  const std::size_t n = ring->num_vars();
  if (s.solve_for >= n) throw ValidationError("solved coordinate out of range");
  int wmin = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != s.solve_for && (wmin == 0 || ring->weights()[i] < wmin)) wmin = ring->weights()[i];

  int degree = 0;
  for (const auto& t : f.terms()) degree = std::max(degree, t.monomial[s.solve_for]);
  if (degree == 0) throw SamplingError("equation does not involve the solved coordinate");

  for (double rho : s.radii) {
    for (std::size_t k = 0; k < s.samples_per_radius; ++k) {
      Point z(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == s.solve_for) continue;
        const double mod = std::pow(rho, static_cast<double>(ring->weights()[i]) / wmin);
        z[i] = std::polar(mod, random_angle(rng));
      }
      std::vector<cd> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
      for (const auto& t : f.terms()) {
        cd v = t.coeff.get_d();
        for (std::size_t i = 0; i < n; ++i)
          if (i != s.solve_for)
            for (int e = 0; e < t.monomial[i]; ++e) v *= z[i];
        coeffs[static_cast<std::size_t>(t.monomial[s.solve_for])] += v;
      }
      auto rs = roots(coeffs);
      if (rs.empty()) throw SamplingError("no branch of the equation through this point");
      for (auto& r : rs)
        for (int it = 0; it < 3; ++it) {
          const cd d = horner_derivative(coeffs, r);
          if (std::abs(d) == 0.0) break;
          r -= horner(coeffs, r) / d;
        }
      cd best = rs.front();
      for (const auto& r : rs)
        if (std::abs(r) < std::abs(best)) best = r;
      z[s.solve_for] = best;
      SamplePoint p{rho, k, std::move(z), 0};
      p.residual = relative_residual(f, p.z);
      if (!std::isfinite(p.residual) || p.residual > s.residual_tolerance)
        throw SamplingError("root of the solved equation misses the residual tolerance");
      out.push_back(std::move(p));
    }
  }
  return out;
}

LojaEstimate loja_exponent_estimate(const Polynomial& phi, const std::vector<Polynomial>& a,
                                    const std::vector<SamplePoint>& points) {
  if (a.empty()) throw ValidationError("need at least one a_j");
  if (points.size() < 20) throw ValidationError("need at least 20 sample points");
  std::set<double> radii;
  for (const auto& p : points) radii.insert(p.radius);
  if (radii.size() < 3) throw ValidationError("sample points must span at least 3 radii");

  LojaEstimate est;
  double rmin = 0, rmax = 0;
  for (const auto& p : points) {
    const double fv = std::abs(evaluate(phi, p.z));
    double av = 0;
    for (const auto& aj : a) av += std::abs(evaluate(aj, p.z));
    if (!(fv > kUnderflowFloor) || !(av > kUnderflowFloor) || !std::isfinite(fv) || !std::isfinite(av)) continue;
    est.log_pairs.emplace_back(std::log(av), std::log(fv));
    if (est.log_pairs.size() == 1 || p.radius < rmin) rmin = p.radius;
    if (est.log_pairs.size() == 1 || p.radius > rmax) rmax = p.radius;
  }
  est.n_points = est.log_pairs.size();
  if (2 * est.n_points < points.size()) throw EstimationError("phi or a vanishes on more than half the points");

  const double n = static_cast<double>(est.n_points);
  double mx = 0, my = 0;
  for (const auto& [x, y] : est.log_pairs) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : est.log_pairs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 1e-20 * n * std::max(1.0, mx * mx))) throw EstimationError("degenerate regression: |a| is constant");
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  double ss = 0;
  for (const auto& [x, y] : est.log_pairs) {
    const double r = y - (est.slope * x + est.intercept);
    ss += r * r;
  }
  est.residual = std::sqrt(ss / n);
  est.radii_range = {rmin, rmax};
  est.reliable = est.residual <= kReliabilityThreshold;
  return est;
}

}  // namespace bsw::loja
