#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weil/classical.hpp"
#include "weil/quantum.hpp"

namespace weil {

// Truncated-degree linear algebra on the horizontal part S(g*) (x) End V
// (classical) or U(g) (x) End V (quantum). "Degree k" is the symmetric degree
// k (classical, homogeneous blocks) or the PBW filtration <= k (quantum).

/// A basis per degree block; per_degree[k] spans the block for degree k.
template <class P>
struct SubspaceResult {
  std::string kind;
  std::vector<std::vector<P>> per_degree;
  std::size_t dim(unsigned k) const { return per_degree.at(k).size(); }
};

/// Dimension of the horizontal block of degree k.
std::size_t horizontal_dimension(const ClassicalAlgebra& alg, unsigned k);
std::size_t horizontal_dimension(const QuantumAlgebra& alg, unsigned k);

/// Horizontal x with L_a x = 0 for every a.
SubspaceResult<ClassicalPoly> basic_subspace(const ClassicalAlgebra& alg, unsigned N);
SubspaceResult<QuantumPoly> basic_subspace(const QuantumAlgebra& alg, unsigned N);
/// Horizontal x with [curvature, x] = 0.
SubspaceResult<ClassicalPoly> flat_subspace(const ClassicalAlgebra& alg, unsigned N);
SubspaceResult<QuantumPoly> flat_subspace(const QuantumAlgebra& alg, unsigned N);
/// x with [curvature, x] = 0 on the whole algebra (exterior or Clifford factor
/// included), same degree blocks.
SubspaceResult<ClassicalPoly> full_flat_subspace(const ClassicalAlgebra& alg, unsigned N);
SubspaceResult<QuantumPoly> full_flat_subspace(const QuantumAlgebra& alg, unsigned N);

struct FlatRow {
  unsigned deg = 0;
  std::size_t dim_hor = 0;
  std::size_t dim_basic = 0;
  std::size_t dim_flat = 0;
  /// dim of S(g*).basic (classical) or U(g).basic (quantum) in this block.
  std::size_t dim_s_basic = 0;
  bool basic_subset_flat = false;
  bool s_basic_equals_flat = false;
};

std::vector<FlatRow> inclusion_report(const ClassicalAlgebra& alg, unsigned N);
std::vector<FlatRow> inclusion_report(const QuantumAlgebra& alg, unsigned N);

struct DecompositionRow {
  unsigned deg = 0;
  std::size_t dim_hor_flat = 0;
  std::size_t dim_full_flat = 0;
  /// 2^n, the dimension of the exterior or Clifford factor.
  std::size_t factor = 0;
  bool dims_match = false;
  /// span{odd monomial * hor flat} equals the full flat block.
  bool span_match = false;
  bool ok() const { return dims_match && span_match; }
};

std::vector<DecompositionRow> decomposition_check(const ClassicalAlgebra& alg, unsigned N);
std::vector<DecompositionRow> decomposition_check(const QuantumAlgebra& alg, unsigned N);

struct ClosureReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  bool ok = true;
  std::string failure;
};

/// Random pairs from the full flat basis: products, L_a, iota_a images and
/// (for inputs of degree <= N-1) d images must commute with the curvature.
ClosureReport closure_check(const ClassicalAlgebra& alg, unsigned N, std::size_t samples,
                            std::uint64_t seed);
ClosureReport closure_check(const QuantumAlgebra& alg, unsigned N, std::size_t samples,
                            std::uint64_t seed);

struct FlatReport {
  std::string algebra;  // "classical" | "quantum"
  std::string lie;
  std::string rep;
  unsigned N = 0;
  std::uint64_t seed = 0;
  std::vector<FlatRow> per_degree;
  /// "theorem" (classical) or "observed" (quantum: reported, not asserted).
  std::string basic_subset_flat_status;
  std::vector<DecompositionRow> decomposition;
  ClosureReport closure;
  /// Asserted parts only: classical basic <= flat, decomposition, closure.
  bool ok() const;
};

FlatReport flat_report(const ClassicalAlgebra& alg, const std::string& lie_name,
                       const std::string& rep_name, unsigned N, std::uint64_t seed,
                       std::size_t closure_samples = 20);
FlatReport flat_report(const QuantumAlgebra& alg, const std::string& lie_name,
                       const std::string& rep_name, unsigned N, std::uint64_t seed,
                       std::size_t closure_samples = 20);

/// Schema-1 JSON, keys in fixed order, two-space indent.
std::string to_json(const FlatReport& r);
/// Aligned plain-text table.
std::string to_text(const FlatReport& r);

}  // namespace weil
