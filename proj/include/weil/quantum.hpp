#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weil/kernels.hpp"
#include "weil/lie.hpp"

namespace weil {

/// Basis key of W_tau(g) = U(g) (x) Cl(g) (x) End V.
struct QuantumKey {
  PbwMonomial u;
  CliffMonomial x;

  /// Filtration degree: u_a counts 2, x_a counts 1.
  unsigned degree() const { return 2 * u.degree() + x.degree(); }
  unsigned parity() const { return x.parity(); }

  friend bool operator==(const QuantumKey&, const QuantumKey&) = default;
  friend std::strong_ordering operator<=>(const QuantumKey& a, const QuantumKey& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Within a degree, terms with more even generators come first.
    if (auto c = b.u.degree() <=> a.u.degree(); c != 0) return c;
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.x <=> b.x;
  }
};

using QuantumPoly = Poly<QuantumKey, Matrix>;

class QuantumElement;

/// Raised when two independent derivations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The quantum covariant Weil algebra of a quadratic Lie algebra with an
/// orthonormal invariant form (B = identity), so f_{abc} = f^a_{bc}.
///
/// All three operators are inner: L_a = ad(u_a + g_a + tau_a),
/// iota_a = ad(x_a), d = ad(D + x_a tau_a), with ad the super-commutator
/// graded by Clifford parity. Distinguished elements are built once in make().
class QuantumAlgebra : public std::enable_shared_from_this<QuantumAlgebra> {
 public:
  /// Throws Error when the inputs fail validation or the form is not the
  /// identity matrix; throws ConsistencyError if the two constructions of the
  /// curvature, or of gamma, disagree.
  static std::shared_ptr<const QuantumAlgebra> make(LieData lie,
                                                    std::optional<BilinearForm> form,
                                                    RepData rep);

  const LieData& lie() const { return lie_; }
  const RepData& rep() const { return rep_; }
  std::size_t dim() const { return lie_.dim(); }
  std::size_t dim_v() const { return rep_.dim_v(); }

  QuantumElement zero() const;
  QuantumElement scalar(const Scalar& c) const;
  QuantumElement matrix(const Matrix& m) const;
  QuantumElement u(std::size_t a) const;
  QuantumElement x(std::size_t a) const;
  QuantumElement tau(std::size_t a) const;
  QuantumElement from_poly(QuantumPoly p) const;

  // Distinguished elements.
  QuantumElement g(std::size_t a) const;
  QuantumElement gamma() const;
  QuantumElement dirac() const;
  QuantumElement dirac_tau() const;
  QuantumElement curvature() const;
  /// gamma^2 as a scalar.
  const Scalar& gamma_squared() const { return gamma_squared_; }

  QuantumPoly mul(const QuantumPoly& a, const QuantumPoly& b) const;
  QuantumPoly supercommutator(const QuantumPoly& a, const QuantumPoly& b) const;

  QuantumPoly lie_derivative(std::size_t a, const QuantumPoly& x) const;
  QuantumPoly contraction(std::size_t a, const QuantumPoly& x) const;
  QuantumPoly differential(const QuantumPoly& x) const;
  /// The untwisted operators of U(g) (x) Cl(g): ad(u_a + g_a) and ad(D).
  QuantumPoly plain_lie_derivative(std::size_t a, const QuantumPoly& x) const;
  QuantumPoly plain_differential(const QuantumPoly& x) const;

  const QuantumPoly& curvature_poly() const { return curvature_; }
  const QuantumPoly& g_poly(std::size_t a) const { return g_[a]; }

  const PbwKernel& pbw() const { return pbw_; }
  const CliffordKernel& clifford() const { return clifford_; }

 private:
  QuantumAlgebra(LieData lie, RepData rep);
  void build();

  QuantumPoly poly_of(const PbwMonomial& u, const CliffMonomial& x, Matrix m) const;

  LieData lie_;
  RepData rep_;
  PbwKernel pbw_;
  CliffordKernel clifford_;

  std::vector<QuantumPoly> x_;
  std::vector<QuantumPoly> g_;
  std::vector<QuantumPoly> lie_elements_;    // u_a + g_a + tau_a
  std::vector<QuantumPoly> plain_lie_elements_;  // u_a + g_a
  QuantumPoly gamma_;
  QuantumPoly dirac_;
  QuantumPoly dirac_tau_;
  QuantumPoly curvature_;
  Scalar gamma_squared_;
};

class QuantumElement {
 public:
  QuantumElement(std::shared_ptr<const QuantumAlgebra> alg, QuantumPoly p)
      : alg_(std::move(alg)), poly_(std::move(p)) {}

  const QuantumAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const QuantumAlgebra>& algebra_ptr() const { return alg_; }
  const QuantumPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  /// Largest filtration degree of a term (0 for the zero element).
  unsigned filtration_degree() const;
  /// Scalar c when the element is c (x) 1 (x) I.
  std::optional<Scalar> as_scalar() const;

  QuantumElement& operator+=(const QuantumElement& o);
  QuantumElement& operator-=(const QuantumElement& o);
  friend QuantumElement operator+(QuantumElement a, const QuantumElement& b) {
    return a += b;
  }
  friend QuantumElement operator-(QuantumElement a, const QuantumElement& b) {
    return a -= b;
  }
  QuantumElement operator-() const { return {alg_, -poly_}; }
  friend QuantumElement operator*(const QuantumElement& a, const QuantumElement& b);
  friend QuantumElement operator*(const Scalar& c, QuantumElement a) {
    a.poly_ *= c;
    return a;
  }
  friend bool operator==(const QuantumElement& a, const QuantumElement& b);

  std::string to_string() const;

 private:
  void check_same(const QuantumElement& o) const;

  std::shared_ptr<const QuantumAlgebra> alg_;
  QuantumPoly poly_;
};

enum class QuantumOperator { Lie, Contraction, Differential };

QuantumElement qw_mul(const QuantumElement& a, const QuantumElement& b);
QuantumElement qw_supercommutator(const QuantumElement& a, const QuantumElement& b);
/// L_a, iota_a or d applied to x; the index is ignored for d.
QuantumElement qw_operator(QuantumOperator kind, std::size_t a, const QuantumElement& x);
QuantumElement qw_curvature(const QuantumAlgebra& alg);

struct DistinguishedElements {
  std::vector<QuantumElement> g;
  QuantumElement gamma;
  QuantumElement dirac;
  QuantumElement dirac_tau;
};
DistinguishedElements qw_distinguished(const QuantumAlgebra& alg);

/// Computes gamma * gamma with the algebra product, requires it to be a
/// scalar and to equal -1/48 sum f_abc^2; returns it.
Scalar qw_gamma_squared(const QuantumAlgebra& alg);
/// -1/48 sum_abc f_abc^2.
Scalar gamma_squared_formula(const LieData& lie);

struct CasimirReport {
  /// [sum u_a u_a, u_b] == 0 for every b.
  bool commutes_with_u = false;
  /// [sum u_a u_a, x_b] == 0 for every b.
  bool commutes_with_x = false;
  /// D^2 == 1/2 sum u_a u_a + gamma^2.
  bool dirac_square_matches = false;
  std::string dirac_square;
  bool ok() const { return commutes_with_u && commutes_with_x && dirac_square_matches; }
};
CasimirReport qw_casimir_check(const QuantumAlgebra& alg);

}  // namespace weil
