#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "weil/lie.hpp"
#include "weil/monomial.hpp"
#include "weil/poly.hpp"

namespace weil {

// ---------------------------------------------------------------------------
// Monomial-level products. Each returns the normal form of m1 * m2 with
// scalar coefficients.

SymMonomial mul_sym(const SymMonomial& a, const SymMonomial& b);

/// Sign and product of two exterior monomials; nullopt when they share an
/// index (y^a y^a = 0).
std::optional<std::pair<int, ExtMonomial>> mul_ext(const ExtMonomial& a,
                                                   const ExtMonomial& b);

/// Number of transpositions needed to sort the concatenation of two disjoint
/// index sets, mod 2.
int koszul_sign(std::uint32_t left, std::uint32_t right);

/// Clifford algebra with relation x_a x_b + x_b x_a = B_ab, so x_a^2 = B_aa/2.
/// Monomial products are memoised; the cache is internally synchronised.
class CliffordKernel {
 public:
  explicit CliffordKernel(Matrix B);

  std::size_t dim() const { return B_.rows(); }
  const Matrix& form() const { return B_; }

  const Poly<CliffMonomial>& mul(const CliffMonomial& a, const CliffMonomial& b) const;

 private:
  Poly<CliffMonomial> right_mul(const CliffMonomial& a, std::size_t j) const;

  Matrix B_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, Poly<CliffMonomial>> cache_;
};

/// Universal enveloping algebra in the PBW basis u_1^{k1} ... u_n^{kn}, with
/// u_b u_a = u_a u_b - f^c_{ab} u_c straightening.
class PbwKernel {
 public:
  explicit PbwKernel(LieData lie) : lie_(std::move(lie)) {}

  std::size_t dim() const { return lie_.dim(); }
  const Poly<PbwMonomial>& mul(const PbwMonomial& a, const PbwMonomial& b) const;
  /// Normal form of a * u_j.
  Poly<PbwMonomial> right_mul(const PbwMonomial& a, std::size_t j) const;

 private:
  LieData lie_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<PbwMonomial, std::size_t>, Poly<PbwMonomial>> cache_;
  mutable std::map<std::pair<PbwMonomial, PbwMonomial>, Poly<PbwMonomial>> product_cache_;
};

// ---------------------------------------------------------------------------
// Word rewriting in U(g): an independent reduction of arbitrary generator
// words to PBW normal form by repeatedly straightening one adjacent
// out-of-order pair. Used to check confluence of the PBW rewrite system.

using Word = std::vector<std::size_t>;

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

Poly<PbwMonomial> reduce_word(const LieData& lie, const Word& word,
                              RewriteStrategy strategy);

// ---------------------------------------------------------------------------
// Polynomial-level products, generic over the coefficient ring. Coefficients
// multiply as ca * cb (Scalar or Matrix); monomials are even relative to
// matrix coefficients.

template <class C>
Poly<SymMonomial, C> mul_sym(const Poly<SymMonomial, C>& a,
                             const Poly<SymMonomial, C>& b) {
  Poly<SymMonomial, C> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add(mul_sym(ma, mb), ca * cb);
  return out;
}

template <class C>
Poly<ExtMonomial, C> mul_ext(const Poly<ExtMonomial, C>& a,
                             const Poly<ExtMonomial, C>& b) {
  Poly<ExtMonomial, C> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto p = mul_ext(ma, mb)) {
        C c = ca * cb;
        if (p->first < 0) c = -c;
        out.add(p->second, c);
      }
  return out;
}

template <class C>
Poly<CliffMonomial, C> mul_clifford(const Poly<CliffMonomial, C>& a,
                                    const Poly<CliffMonomial, C>& b,
                                    const CliffordKernel& kernel) {
  Poly<CliffMonomial, C> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      C c = ca * cb;
      for (const auto& [m, s] : kernel.mul(ma, mb).terms()) out.add(m, c * s);
    }
  return out;
}

template <class C>
Poly<PbwMonomial, C> mul_pbw(const Poly<PbwMonomial, C>& a,
                             const Poly<PbwMonomial, C>& b,
                             const PbwKernel& kernel) {
  Poly<PbwMonomial, C> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      C c = ca * cb;
      for (const auto& [m, s] : kernel.mul(ma, mb).terms()) out.add(m, c * s);
    }
  return out;
}

}  // namespace weil
