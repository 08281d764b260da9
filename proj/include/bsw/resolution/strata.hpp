#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsw/resolution/complex.hpp"

namespace bsw::resolution {

struct Stratum {
  int r = 0;
  Ideal ideal;
  int dim = -1;  // -1 for the empty variety
  int codim_in_z = kInfiniteCodim;

  bool empty() const noexcept { return dim < 0; }
};

/// Singularity strata of Z = V(I) read off a resolution of R/I:
/// Z^0 = Z_sing, Z^r = Z_{p+r} for r >= 1.  Codimensions are taken inside Z.
struct StrataReport {
  Ring ring;
  Ideal ideal;
  int n = 0;
  int d = 0;  // dim Z
  int p = 0;  // codim of Z in affine space
  std::size_t length = 0;  // N, the length of the resolution used
  bool minimal = false;    // the resolution was graded and minimal
  std::vector<long> expected_ranks;
  std::map<std::size_t, Ideal> zk_ideals;  // k = 1..N
  Ideal zsing_ideal;
  /// Z^r for r = 0..max(0, N - p); every later stratum is empty.
  std::vector<Stratum> zr;
  /// codim_Z Z^r >= r + 1 for all r > 0.
  bool pure = true;
  std::vector<std::string> warnings;

  int codim_of(int r) const;
  bool stratum_empty(int r) const { return codim_of(r) == kInfiniteCodim; }
};

/// ValidationError when the complex does not start at a rank-one module or I
/// is the unit ideal.
StrataReport strata(const FreeComplex& complex, const Ideal& ideal, const Budget& budget = {});

struct CmDepth {
  bool is_cm = false;
  int depth_lower = 0;
  /// n - N from a minimal graded resolution; empty otherwise.
  std::optional<int> depth_exact;
};

CmDepth check_cm_depth(const StrataReport& report);

struct BsCondition {
  bool holds = true;
  /// First failing (r, codim_Z).
  std::optional<std::pair<int, int>> witness;
  /// codim_Z of Z^r cap V(a), per nonempty stratum r.
  std::vector<std::pair<int, int>> checked;
};

/// codim_Z V(Z^r-ideal + a + I) >= m + 1 + r for every nonempty stratum.
BsCondition check_bs_condition(const StrataReport& report, const Ideal& a, int m, const Budget& budget = {});

/// codim_Z Z^r >= 2 + r for every r >= 0.
bool check_normality_condition(const StrataReport& report);

nlohmann::ordered_json codim_to_json(int codim);
nlohmann::ordered_json strata_to_json(const StrataReport& report);

}  // namespace bsw::resolution
