#include "weil/random.hpp"

namespace weil {

namespace {
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  // Plain modulo keeps the sequence identical across standard libraries.
  return rng() % n;
}
}  // namespace

Scalar RandomElements::rational() {
  long p = static_cast<long>(below(rng_, 7)) - 3;
  long q = static_cast<long>(below(rng_, 3)) + 1;
  return Scalar(p, q);
}

Scalar RandomElements::nonzero_rational() {
  for (;;) {
    Scalar s = rational();
    if (!s.is_zero()) return s;
  }
}

Matrix RandomElements::matrix(std::size_t n) {
  Matrix m = Matrix::zero(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (below(rng_, 2)) m(r, c) = rational();
  if (m.is_zero()) m(below(rng_, n), below(rng_, n)) = nonzero_rational();
  return m;
}

std::size_t RandomElements::index(std::size_t n) { return below(rng_, n); }

std::vector<unsigned> RandomElements::exponents(std::size_t dim, unsigned degree) {
  std::vector<unsigned> e(dim, 0);
  for (unsigned i = 0; i < degree; ++i) ++e[below(rng_, dim)];
  return e;
}

std::uint32_t RandomElements::subset(std::size_t dim, unsigned size) {
  std::uint32_t bits = 0;
  if (size > dim) size = static_cast<unsigned>(dim);
  while (static_cast<unsigned>(std::popcount(bits)) < size)
    bits |= std::uint32_t{1} << below(rng_, dim);
  return bits;
}

ClassicalPoly RandomElements::classical(const ClassicalAlgebra& alg, unsigned max_degree,
                                        unsigned terms) {
  ClassicalPoly out;
  const std::size_t n = alg.dim();
  for (unsigned t = 0; t < terms; ++t) {
    unsigned deg = static_cast<unsigned>(below(rng_, max_degree + 1));
    unsigned s = static_cast<unsigned>(below(rng_, deg / 2 + 1));
    unsigned e = deg - 2 * s;
    if (e > n) e = static_cast<unsigned>(n);
    out.add(ClassicalKey{SymMonomial(exponents(n, s)), ExtMonomial(subset(n, e))},
            matrix(alg.dim_v()));
  }
  return out;
}

QuantumPoly RandomElements::quantum(const QuantumAlgebra& alg, unsigned max_degree,
                                    unsigned terms) {
  QuantumPoly out;
  const std::size_t n = alg.dim();
  for (unsigned t = 0; t < terms; ++t) {
    unsigned deg = static_cast<unsigned>(below(rng_, max_degree + 1));
    unsigned s = static_cast<unsigned>(below(rng_, deg / 2 + 1));
    unsigned e = deg - 2 * s;
    if (e > n) e = static_cast<unsigned>(n);
    out.add(QuantumKey{PbwMonomial(exponents(n, s)), CliffMonomial(subset(n, e))},
            matrix(alg.dim_v()));
  }
  return out;
}

WeilPoly RandomElements::weil(std::size_t dim, unsigned max_degree, unsigned terms) {
  WeilPoly out;
  for (unsigned t = 0; t < terms; ++t) {
    unsigned deg = static_cast<unsigned>(below(rng_, max_degree + 1));
    unsigned s = static_cast<unsigned>(below(rng_, deg / 2 + 1));
    unsigned e = deg - 2 * s;
    if (e > dim) e = static_cast<unsigned>(dim);
    out.add(ClassicalKey{SymMonomial(exponents(dim, s)), ExtMonomial(subset(dim, e))},
            nonzero_rational());
  }
  return out;
}

WeilPoly RandomElements::symmetric(std::size_t dim, unsigned max_degree, unsigned terms) {
  WeilPoly out;
  for (unsigned t = 0; t < terms; ++t) {
    unsigned s = static_cast<unsigned>(below(rng_, max_degree + 1));
    out.add(ClassicalKey{SymMonomial(exponents(dim, s)), ExtMonomial()}, nonzero_rational());
  }
  return out;
}

std::vector<std::size_t> RandomElements::word(std::size_t dim, unsigned max_length) {
  std::vector<std::size_t> w(below(rng_, max_length + 1));
  for (auto& i : w) i = below(rng_, dim);
  return w;
}

}  // namespace weil
