#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weil/kernels.hpp"
#include "weil/lie.hpp"

namespace weil {

/// Basis key of W_tau(g*) = S(g*) (x) Λ(g*) (x) End V: a symmetric monomial in
/// the v^a and an exterior monomial in the y^a.
struct ClassicalKey {
  SymMonomial sym;
  ExtMonomial ext;

  /// Weil grading: v^a has degree 2, y^a degree 1.
  unsigned degree() const { return 2 * sym.degree() + ext.degree(); }
  unsigned parity() const { return ext.parity(); }

  friend bool operator==(const ClassicalKey&, const ClassicalKey&) = default;
  friend std::strong_ordering operator<=>(const ClassicalKey& a,
                                          const ClassicalKey& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Within a degree, terms with more even generators come first.
    if (auto c = b.sym.degree() <=> a.sym.degree(); c != 0) return c;
    if (auto c = a.sym <=> b.sym; c != 0) return c;
    return a.ext <=> b.ext;
  }
};

using ClassicalPoly = Poly<ClassicalKey, Matrix>;

class ClassicalElement;

/// One classical covariant Weil algebra: a Lie algebra, a representation and
/// the generator tables of L_a, iota_a and d. Create through make(); elements
/// keep the algebra alive and are only combinable with elements of the same
/// instance.
class ClassicalAlgebra : public std::enable_shared_from_this<ClassicalAlgebra> {
 public:
  /// Validates the Lie algebra and the representation; throws Error with the
  /// validation report on failure.
  static std::shared_ptr<const ClassicalAlgebra> make(LieData lie, RepData rep);

  const LieData& lie() const { return lie_; }
  const RepData& rep() const { return rep_; }
  std::size_t dim() const { return lie_.dim(); }
  std::size_t dim_v() const { return rep_.dim_v(); }

  ClassicalElement zero() const;
  ClassicalElement scalar(const Scalar& c) const;
  ClassicalElement matrix(const Matrix& m) const;
  ClassicalElement v(std::size_t a) const;
  ClassicalElement y(std::size_t a) const;
  ClassicalElement tau(std::size_t a) const;
  ClassicalElement monomial(const SymMonomial& s, const ExtMonomial& e,
                            const Matrix& m) const;
  ClassicalElement from_poly(ClassicalPoly p) const;

  // Poly-level arithmetic used by the element API and the solvers.
  ClassicalPoly mul(const ClassicalPoly& a, const ClassicalPoly& b) const;
  ClassicalPoly lie_derivative(std::size_t a, const ClassicalPoly& x) const;
  ClassicalPoly contraction(std::size_t a, const ClassicalPoly& x) const;
  ClassicalPoly differential(const ClassicalPoly& x) const;
  ClassicalPoly supercommutator(const ClassicalPoly& a, const ClassicalPoly& b) const;
  const ClassicalPoly& curvature_poly() const { return curvature_; }

 private:
  ClassicalAlgebra(LieData lie, RepData rep);

  /// Generator table of an (odd or even) derivation.
  struct Derivation {
    unsigned parity;
    std::vector<ClassicalPoly> on_v;
    std::vector<ClassicalPoly> on_y;
    // Image of 1 (x) 1 (x) A, as a list of (ext generator, matrix map) pieces:
    // sum_k y^{ext_k} (x) (left_k A - A right_k). ext_k < 0 means no y factor.
    struct MatrixPiece {
      int ext;
      Matrix left;
      Matrix right;
    };
    std::vector<MatrixPiece> on_matrix;
  };

  ClassicalPoly apply(const Derivation& D, const ClassicalPoly& x) const;
  ClassicalPoly apply_to_matrix(const Derivation& D, const Matrix& m) const;
  ClassicalPoly poly_of(const SymMonomial& s, const ExtMonomial& e, Matrix m) const;

  LieData lie_;
  RepData rep_;
  std::vector<Derivation> lie_derivatives_;
  std::vector<Derivation> contractions_;
  Derivation differential_;
  ClassicalPoly curvature_;
};

/// Element of a classical covariant Weil algebra.
class ClassicalElement {
 public:
  ClassicalElement(std::shared_ptr<const ClassicalAlgebra> alg, ClassicalPoly p)
      : alg_(std::move(alg)), poly_(std::move(p)) {}

  const ClassicalAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const ClassicalAlgebra>& algebra_ptr() const { return alg_; }
  const ClassicalPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  /// Common Weil degree of all terms, or nullopt when inhomogeneous (0 is
  /// homogeneous of every degree and reports nullopt).
  std::optional<unsigned> homogeneous_degree() const;
  ClassicalElement even_part() const;
  ClassicalElement odd_part() const;

  ClassicalElement& operator+=(const ClassicalElement& o);
  ClassicalElement& operator-=(const ClassicalElement& o);
  friend ClassicalElement operator+(ClassicalElement a, const ClassicalElement& b) {
    return a += b;
  }
  friend ClassicalElement operator-(ClassicalElement a, const ClassicalElement& b) {
    return a -= b;
  }
  ClassicalElement operator-() const { return {alg_, -poly_}; }
  friend ClassicalElement operator*(const ClassicalElement& a, const ClassicalElement& b);
  friend ClassicalElement operator*(const Scalar& c, ClassicalElement a) {
    a.poly_ *= c;
    return a;
  }

  /// Equality requires the same algebra instance.
  friend bool operator==(const ClassicalElement& a, const ClassicalElement& b);

  std::string to_string() const;

 private:
  void check_same(const ClassicalElement& o) const;

  std::shared_ptr<const ClassicalAlgebra> alg_;
  ClassicalPoly poly_;
};

ClassicalElement cw_mul(const ClassicalElement& a, const ClassicalElement& b);
ClassicalElement cw_lie_derivative(std::size_t a, const ClassicalElement& x);
ClassicalElement cw_contraction(std::size_t a, const ClassicalElement& x);
ClassicalElement cw_differential(const ClassicalElement& x);
/// C = sum_a v^a (x) tau_a.
ClassicalElement cw_curvature(const ClassicalAlgebra& alg);
/// ab - (-1)^{|a||b|} ba, summed over the parity components.
ClassicalElement cw_supercommutator(const ClassicalElement& a, const ClassicalElement& b);

// ---------------------------------------------------------------------------
// The scalar Weil algebra W(g*) = S(g*) (x) Λ(g*), with its differential
// computed through the operator decomposition
//   d = sum_a v^a iota_a + sum_a y^a L^S_a + 1/2 sum_a y^a L^Λ_a,
// where L^S and L^Λ act only on the symmetric or exterior factor. This route
// shares no code with the generator-table derivations above and serves as the
// reference for the restriction identities.

using WeilPoly = Poly<ClassicalKey, Scalar>;

WeilPoly weil_mul(const WeilPoly& a, const WeilPoly& b);
WeilPoly weil_differential(const LieData& lie, const WeilPoly& x);
/// Embeds x as x (x) I.
ClassicalElement embed(const ClassicalAlgebra& alg, const WeilPoly& x);

}  // namespace weil
