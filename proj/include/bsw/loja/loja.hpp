#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bsw/poly/polynomial.hpp"

// Numerical sampling of germs near the origin and log-log regression of
// |phi| against |a| = sum_j |a_j|.

namespace bsw::loja {

using poly::Polynomial;
using Point = std::vector<std::complex<double>>;

enum class SamplerKind { Parametrized, Hypersurface };

struct VarietySampler {
  SamplerKind kind = SamplerKind::Parametrized;
  /// Parametrized: z_i = t^{exponents[i]}, |t| = rho^{1/min exponent}.
  std::vector<int> exponents;
  /// Hypersurface: one equation, solved for `solve_for`; the other
  /// coordinates get |z_i| = rho^{w_i / w_min} with random arguments.
  std::optional<Polynomial> equation;
  std::size_t solve_for = 0;
  /// Optional equations checked on every parametrized point.
  std::vector<Polynomial> check_equations;

  std::vector<double> radii;  // in (0, 1], strictly decreasing
  std::size_t samples_per_radius = 8;
  std::uint64_t seed = 0;
  double residual_tolerance = 1e-9;
};

struct SamplePoint {
  double radius = 0;
  std::size_t index = 0;
  Point z;
  /// |equations| relative to the sum of absolute term values.
  double residual = 0;
};

/// `count` radii from `first` down to `last`, geometrically spaced.
std::vector<double> geometric_radii(double first, double last, std::size_t count);

/// ValidationError on bad radii or configuration; SamplingError when no root
/// of the solved equation is found or a point misses the tolerance.
std::vector<SamplePoint> sample_variety(const VarietySampler& sampler);

std::complex<double> evaluate(const Polynomial& p, const Point& z);
/// Sum of |c * z^alpha| over the terms of p.
double term_magnitude(const Polynomial& p, const Point& z);
/// |p(z)| / sum |terms|, or 0 when every term vanishes.
double relative_residual(const Polynomial& p, const Point& z);

struct LojaEstimate {
  double slope = 0;
  double intercept = 0;  // log C
  double residual = 0;   // RMS deviation from the fitted line
  std::size_t n_points = 0;
  std::pair<double, double> radii_range{0, 0};
  bool reliable = true;
  /// (log |a|, log |phi|) of the points used.
  std::vector<std::pair<double, double>> log_pairs;
};

inline constexpr double kUnderflowFloor = 1e-300;
inline constexpr double kReliabilityThreshold = 0.1;

/// OLS slope of log|phi| against log sum_j |a_j| over the points where both
/// exceed the underflow floor.  ValidationError with fewer than 20 points or
/// 3 radii; EstimationError when more than half the points vanish or the
/// regression is degenerate.
LojaEstimate loja_exponent_estimate(const Polynomial& phi, const std::vector<Polynomial>& a,
                                    const std::vector<SamplePoint>& points);

}  // namespace bsw::loja
