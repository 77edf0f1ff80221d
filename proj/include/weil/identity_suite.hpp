#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weil/classical.hpp"
#include "weil/quantum.hpp"

namespace weil {

struct IdentityResult {
  std::string name;
  bool pass = false;
  /// Number of cases checked, or the first counterexample on failure.
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random elements for the operator identities.
  unsigned samples = 200;
  /// Random identity-part elements for the restriction checks.
  unsigned restriction_samples = 100;
  /// Random symmetric polynomials for sum_a v^a L_a f = 0.
  unsigned lemma_samples = 100;
  unsigned max_degree = 4;
};

std::vector<IdentityResult> classical_suite(const ClassicalAlgebra& alg,
                                            const SuiteOptions& opts = {});
std::vector<IdentityResult> quantum_suite(const QuantumAlgebra& alg,
                                          const SuiteOptions& opts = {});

/// Reduces `count` random generator words of length <= max_length with both
/// rewrite strategies and with the PBW kernel; all three must agree.
IdentityResult pbw_confluence(const LieData& lie, std::uint64_t seed, unsigned count = 500,
                              unsigned max_length = 5);

bool all_pass(const std::vector<IdentityResult>& results);

}  // namespace weil
