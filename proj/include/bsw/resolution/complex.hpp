#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "json.hpp"

#include "bsw/groebner/ideal.hpp"
#include "bsw/resolution/poly_matrix.hpp"

namespace bsw::resolution {

using groebner::Budget;
using groebner::Ideal;

/// Codimension of the empty variety.
inline constexpr int kInfiniteCodim = std::numeric_limits<int>::max();

/// 0 <- E_0 <-f_1- E_1 <- ... <-f_N- E_N <- 0 with E_k = R^{ranks[k]}.
struct FreeComplex {
  Ring ring;
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> maps;  // maps[k-1] = f_k, shape ranks[k-1] x ranks[k]
  bool graded = false;
  /// Degree shifts of the basis of each E_k; empty unless graded.
  std::vector<std::vector<long>> shifts;

  std::size_t length() const noexcept { return maps.size(); }
  const PolyMatrix& map(std::size_t k) const { return maps.at(k - 1); }

  /// Throws StructuralError when shapes or rings are inconsistent.
  void validate() const;
  /// f_k * f_{k+1} == 0 for every k.
  bool is_complex() const;
  /// Graded and no map has a nonzero constant entry.
  bool is_minimal() const;
};

/// Kernel generators of M: a Gröbner basis of the syzygy module under the
/// Schreyer order induced by the leading terms of the columns of M (columns
/// ordered by position over degree with `row_shifts`, default zero).
PolyMatrix syzygies(const PolyMatrix& m, const std::vector<long>& row_shifts = {},
                    const Budget& budget = {});

enum class GradingMode { Auto, Graded, Ungraded };

struct ResolutionOptions {
  /// Maximal length; negative means the number of variables plus one.
  int max_len = -1;
  GradingMode grading = GradingMode::Auto;
  /// Reduce every syzygy matrix to a minimal generating set.
  bool prune = true;
  Budget budget{};
};

/// Resolution of R/I by iterated syzygies, with f_1 the row of generators.
/// Graded mode needs quasi-homogeneous generators (ValidationError).  The unit
/// ideal is rejected with ValidationError; failing to terminate within
/// max_len raises BudgetError.
FreeComplex free_resolution(const Ideal& ideal, const ResolutionOptions& options = {});

/// Cancels unit entries until none is left (row-major first unit pivot).
/// ValidationError on an ungraded complex.
FreeComplex minimalize(const FreeComplex& complex);

/// Koszul complex of a_1..a_m: E_k = exterior power, f_k interior
/// multiplication, basis of E_k the k-subsets in lexicographic order.
FreeComplex koszul_complex(const std::vector<Polynomial>& a);

/// rho_k = sum_{i >= k} (-1)^{i-k} rank E_i, for k = 0..N.
std::vector<long> expected_ranks(const FreeComplex& complex);

struct RankLocus {
  Ideal ideal;
  long rho = 0;
  /// rho exceeds the matrix size: the locus is everything.
  bool everything = false;
};

/// Ideal of the rho_k-minors of f_k plus `ambient`.
RankLocus rank_locus_ideal(const FreeComplex& complex, std::size_t k, const Ideal& ambient,
                           const Budget& budget = {});

struct AcyclicityReport {
  bool acyclic = true;
  /// codim in affine space of the k-th rank locus, k = 1..N (index k-1).
  std::vector<int> codims;
  std::optional<std::size_t> failing_k;
};

/// Exactness criterion: codim V(I_{rho_k}(f_k)) >= k for every k.
AcyclicityReport check_acyclicity(const FreeComplex& complex, const Budget& budget = {});

/// codim of V(ideal) in affine space; kInfiniteCodim when empty.
int ambient_codim(const Ideal& ideal, const Budget& budget = {});

nlohmann::ordered_json complex_to_json(const FreeComplex& complex);

}  // namespace bsw::resolution
