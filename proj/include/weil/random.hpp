#pragma once

#include <cstdint>
#include <random>

#include "weil/classical.hpp"
#include "weil/quantum.hpp"

namespace weil {

/// Seeded source of small random algebra elements. Everything derives from
/// one mt19937_64 stream, so a seed fixes the whole sample sequence.
class RandomElements {
 public:
  explicit RandomElements(std::uint64_t seed) : rng_(seed) {}

  /// p/q with |p| <= 3, 1 <= q <= 3; zero allowed.
  Scalar rational();
  Scalar nonzero_rational();
  /// Entries are zero about half the time.
  Matrix matrix(std::size_t n);
  std::size_t index(std::size_t n);

  /// Up to `terms` random terms of Weil degree <= max_degree.
  ClassicalPoly classical(const ClassicalAlgebra& alg, unsigned max_degree = 4,
                          unsigned terms = 3);
  /// Terms of filtration degree <= max_degree.
  QuantumPoly quantum(const QuantumAlgebra& alg, unsigned max_degree = 4,
                      unsigned terms = 3);
  /// Scalar-coefficient Weil algebra element of degree <= max_degree.
  WeilPoly weil(std::size_t dim, unsigned max_degree = 4, unsigned terms = 3);
  /// Polynomial in the v^a only, of symmetric degree <= max_degree.
  WeilPoly symmetric(std::size_t dim, unsigned max_degree = 4, unsigned terms = 3);
  /// A word of length <= max_length in the generators 0..dim-1.
  std::vector<std::size_t> word(std::size_t dim, unsigned max_length);

 private:
  std::vector<unsigned> exponents(std::size_t dim, unsigned degree);
  std::uint32_t subset(std::size_t dim, unsigned size);

  std::mt19937_64 rng_;
};

}  // namespace weil
