#include "weil/quantum.hpp"

#include "weil/render.hpp"

namespace weil {

std::shared_ptr<const QuantumAlgebra> QuantumAlgebra::make(LieData lie,
                                                           std::optional<BilinearForm> form,
                                                           RepData rep) {
  if (lie.dim() > CliffMonomial::max_generators)
    throw Error("at most 32 generators are supported");
  std::string failures;
  auto note = [&](const ValidationReport& r) {
    if (!r.ok()) failures += (failures.empty() ? "" : "\n") + r.to_string();
  };
  note(validate_lie(lie));
  note(validate_rep(lie, rep));
  if (!failures.empty()) throw Error("invalid input:\n" + failures);
  if (!form)
    throw Error("the quantum Weil algebra needs an invariant bilinear form B = identity; "
                "none is given");
  ValidationReport fr = validate_form(lie, *form);
  if (!fr.ok()) throw Error("invalid input:\n" + fr.to_string());
  if (!fr.orthonormal)
    throw Error("the quantum Weil algebra needs an orthonormal basis (B = identity)");

  auto alg = std::shared_ptr<QuantumAlgebra>(new QuantumAlgebra(std::move(lie), std::move(rep)));
  alg->build();
  return alg;
}

QuantumAlgebra::QuantumAlgebra(LieData lie, RepData rep)
    : lie_(std::move(lie)),
      rep_(std::move(rep)),
      pbw_(lie_),
      clifford_(Matrix::identity(lie_.dim())) {}

QuantumPoly QuantumAlgebra::poly_of(const PbwMonomial& u, const CliffMonomial& x,
                                    Matrix m) const {
  QuantumPoly p;
  p.add(QuantumKey{u, x}, m);
  return p;
}

void QuantumAlgebra::build() {
  const std::size_t n = dim();
  const Matrix I = Matrix::identity(dim_v());
  const PbwMonomial one_u(n);
  auto u_poly = [&](std::size_t a) { return poly_of(PbwMonomial::generator(n, a), CliffMonomial(), I); };
  auto tau_poly = [&](std::size_t a) { return poly_of(one_u, CliffMonomial(), rep_.tau[a]); };

  for (std::size_t a = 0; a < n; ++a)
    x_.push_back(poly_of(one_u, CliffMonomial::generator(a), I));

  // g_a = -1/2 f_{ars} x_r x_s
  for (std::size_t a = 0; a < n; ++a) {
    QuantumPoly g;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        const Scalar& f = lie_.f(r, s, a);
        if (!f.is_zero()) g += mul(x_[r], x_[s]) * (-f / Scalar(2));
      }
    g_.push_back(std::move(g));
  }

  // gamma = -1/6 f_{abc} x_a x_b x_c, checked against 1/3 x_a g_a.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& f = lie_.f(b, c, a);
        if (!f.is_zero()) gamma_ += mul(mul(x_[a], x_[b]), x_[c]) * (-f / Scalar(6));
      }
  {
    QuantumPoly alt;
    for (std::size_t a = 0; a < n; ++a) alt += mul(x_[a], g_[a]);
    alt *= Scalar(1, 3);
    if (!(alt == gamma_)) throw ConsistencyError("gamma != 1/3 x_a g_a");
  }

  for (std::size_t a = 0; a < n; ++a) dirac_ += mul(x_[a], u_poly(a));
  dirac_ += gamma_;
  dirac_tau_ = dirac_;
  for (std::size_t a = 0; a < n; ++a) dirac_tau_ += mul(x_[a], tau_poly(a));

  for (std::size_t a = 0; a < n; ++a) {
    plain_lie_elements_.push_back(u_poly(a) + g_[a]);
    lie_elements_.push_back(u_poly(a) + g_[a] + tau_poly(a));
  }

  QuantumPoly gamma_sq = mul(gamma_, gamma_);
  {
    gamma_squared_ = Scalar(0);
    for (const auto& [k, m] : gamma_sq.terms()) {
      Scalar c;
      if (!k.u.is_one() || !k.x.is_one() || !m.is_scalar_multiple(&c))
        throw ConsistencyError("gamma^2 is not a scalar");
      gamma_squared_ = c;
    }
  }

  // C = 1/2 (u_a u_a + 2 u_a tau_a + tau_a tau_a + 2 gamma^2)
  QuantumPoly four_term;
  for (std::size_t a = 0; a < n; ++a) {
    four_term += mul(u_poly(a), u_poly(a));
    four_term += mul(u_poly(a), tau_poly(a)) * Scalar(2);
    four_term += mul(tau_poly(a), tau_poly(a));
  }
  four_term += poly_of(one_u, CliffMonomial(), I * (Scalar(2) * gamma_squared_));
  four_term *= Scalar(1, 2);
  curvature_ = std::move(four_term);

  QuantumPoly half_bracket = supercommutator(dirac_tau_, dirac_tau_) * Scalar(1, 2);
  if (!(half_bracket == curvature_))
    throw ConsistencyError("quantum curvature: closed form differs from 1/2 [D_tau, D_tau]");
}

QuantumPoly QuantumAlgebra::mul(const QuantumPoly& a, const QuantumPoly& b) const {
  QuantumPoly out;
  for (const auto& [ka, ma] : a.terms())
    for (const auto& [kb, mb] : b.terms()) {
      Matrix m = ma * mb;
      if (m.is_zero()) continue;
      const auto& us = pbw_.mul(ka.u, kb.u);
      const auto& xs = clifford_.mul(ka.x, kb.x);
      for (const auto& [um, uc] : us.terms())
        for (const auto& [xm, xc] : xs.terms()) out.add(QuantumKey{um, xm}, m * (uc * xc));
    }
  return out;
}

QuantumPoly QuantumAlgebra::supercommutator(const QuantumPoly& a, const QuantumPoly& b) const {
  QuantumPoly a0, a1, b0, b1;
  for (const auto& [k, m] : a.terms()) (k.parity() ? a1 : a0).add(k, m);
  for (const auto& [k, m] : b.terms()) (k.parity() ? b1 : b0).add(k, m);
  QuantumPoly out = mul(a, b);
  out -= mul(b0, a);
  out -= mul(b1, a0);
  out += mul(b1, a1);
  return out;
}

QuantumPoly QuantumAlgebra::lie_derivative(std::size_t a, const QuantumPoly& x) const {
  if (a >= dim()) throw Error("L: basis index out of range");
  return supercommutator(lie_elements_[a], x);
}

QuantumPoly QuantumAlgebra::contraction(std::size_t a, const QuantumPoly& x) const {
  if (a >= dim()) throw Error("iota: basis index out of range");
  return supercommutator(x_[a], x);
}

QuantumPoly QuantumAlgebra::differential(const QuantumPoly& x) const {
  return supercommutator(dirac_tau_, x);
}

QuantumPoly QuantumAlgebra::plain_lie_derivative(std::size_t a, const QuantumPoly& x) const {
  if (a >= dim()) throw Error("L: basis index out of range");
  return supercommutator(plain_lie_elements_[a], x);
}

QuantumPoly QuantumAlgebra::plain_differential(const QuantumPoly& x) const {
  return supercommutator(dirac_, x);
}

QuantumElement QuantumAlgebra::from_poly(QuantumPoly p) const {
  return QuantumElement(shared_from_this(), std::move(p));
}
QuantumElement QuantumAlgebra::zero() const { return from_poly({}); }
QuantumElement QuantumAlgebra::scalar(const Scalar& c) const {
  return matrix(Matrix::scalar(dim_v(), c));
}
QuantumElement QuantumAlgebra::matrix(const Matrix& m) const {
  if (m.rows() != dim_v() || m.cols() != dim_v())
    throw ShapeError("matrix literal must be " + std::to_string(dim_v()) + "x" +
                     std::to_string(dim_v()));
  return from_poly(poly_of(PbwMonomial(dim()), CliffMonomial(), m));
}
QuantumElement QuantumAlgebra::u(std::size_t a) const {
  if (a >= dim()) throw Error("u: basis index out of range");
  return from_poly(
      poly_of(PbwMonomial::generator(dim(), a), CliffMonomial(), Matrix::identity(dim_v())));
}
QuantumElement QuantumAlgebra::x(std::size_t a) const {
  if (a >= dim()) throw Error("x: basis index out of range");
  return from_poly(x_[a]);
}
QuantumElement QuantumAlgebra::tau(std::size_t a) const {
  if (a >= dim()) throw Error("tau: basis index out of range");
  return matrix(rep_.tau[a]);
}
QuantumElement QuantumAlgebra::g(std::size_t a) const {
  if (a >= dim()) throw Error("g: basis index out of range");
  return from_poly(g_[a]);
}
QuantumElement QuantumAlgebra::gamma() const { return from_poly(gamma_); }
QuantumElement QuantumAlgebra::dirac() const { return from_poly(dirac_); }
QuantumElement QuantumAlgebra::dirac_tau() const { return from_poly(dirac_tau_); }
QuantumElement QuantumAlgebra::curvature() const { return from_poly(curvature_); }

// ---------------------------------------------------------------------------

unsigned QuantumElement::filtration_degree() const {
  unsigned d = 0;
  for (const auto& [k, m] : poly_.terms()) d = std::max(d, k.degree());
  return d;
}

std::optional<Scalar> QuantumElement::as_scalar() const {
  if (poly_.is_zero()) return Scalar(0);
  if (poly_.size() != 1) return std::nullopt;
  const auto& [k, m] = *poly_.terms().begin();
  Scalar c;
  if (!k.u.is_one() || !k.x.is_one() || !m.is_scalar_multiple(&c)) return std::nullopt;
  return c;
}

void QuantumElement::check_same(const QuantumElement& o) const {
  if (alg_ != o.alg_) throw Error("elements belong to different algebras");
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& o) {
  check_same(o);
  poly_ += o.poly_;
  return *this;
}

QuantumElement& QuantumElement::operator-=(const QuantumElement& o) {
  check_same(o);
  poly_ -= o.poly_;
  return *this;
}

QuantumElement operator*(const QuantumElement& a, const QuantumElement& b) {
  a.check_same(b);
  return {a.alg_, a.alg_->mul(a.poly_, b.poly_)};
}

bool operator==(const QuantumElement& a, const QuantumElement& b) {
  a.check_same(b);
  return a.poly_ == b.poly_;
}

std::string QuantumElement::to_string() const {
  std::vector<std::pair<std::string, Matrix>> terms;
  for (const auto& [k, m] : poly_.terms()) {
    std::string mono = render(k.u, 'u');
    std::string cl = render(k.x, 'x');
    if (!cl.empty()) mono += (mono.empty() ? "" : "*") + cl;
    terms.emplace_back(std::move(mono), m);
  }
  return render_terms(terms);
}

QuantumElement qw_mul(const QuantumElement& a, const QuantumElement& b) { return a * b; }

QuantumElement qw_supercommutator(const QuantumElement& a, const QuantumElement& b) {
  if (a.algebra_ptr() != b.algebra_ptr())
    throw Error("elements belong to different algebras");
  return a.algebra().from_poly(a.algebra().supercommutator(a.poly(), b.poly()));
}

QuantumElement qw_operator(QuantumOperator kind, std::size_t a, const QuantumElement& x) {
  const QuantumAlgebra& alg = x.algebra();
  switch (kind) {
    case QuantumOperator::Lie:
      return alg.from_poly(alg.lie_derivative(a, x.poly()));
    case QuantumOperator::Contraction:
      return alg.from_poly(alg.contraction(a, x.poly()));
    case QuantumOperator::Differential:
      return alg.from_poly(alg.differential(x.poly()));
  }
  throw Error("unknown operator");
}

QuantumElement qw_curvature(const QuantumAlgebra& alg) { return alg.curvature(); }

DistinguishedElements qw_distinguished(const QuantumAlgebra& alg) {
  DistinguishedElements out{{}, alg.gamma(), alg.dirac(), alg.dirac_tau()};
  for (std::size_t a = 0; a < alg.dim(); ++a) out.g.push_back(alg.g(a));
  return out;
}

Scalar gamma_squared_formula(const LieData& lie) {
  Scalar sum;
  const std::size_t n = lie.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& f = lie.f(b, c, a);
        if (!f.is_zero()) sum += f * f;
      }
  return -sum / Scalar(48);
}

Scalar qw_gamma_squared(const QuantumAlgebra& alg) {
  QuantumElement g = alg.gamma();
  auto s = (g * g).as_scalar();
  if (!s) throw ConsistencyError("gamma^2 is not a scalar");
  if (*s != gamma_squared_formula(alg.lie()))
    throw ConsistencyError("gamma^2 = " + s->to_string() + " but -1/48 sum f^2 = " +
                           gamma_squared_formula(alg.lie()).to_string());
  return *s;
}

CasimirReport qw_casimir_check(const QuantumAlgebra& alg) {
  CasimirReport report;
  const std::size_t n = alg.dim();
  QuantumElement casimir = alg.zero();
  for (std::size_t a = 0; a < n; ++a) casimir += alg.u(a) * alg.u(a);
  report.commutes_with_u = true;
  report.commutes_with_x = true;
  for (std::size_t b = 0; b < n; ++b) {
    if (!qw_supercommutator(casimir, alg.u(b)).is_zero()) report.commutes_with_u = false;
    if (!qw_supercommutator(casimir, alg.x(b)).is_zero()) report.commutes_with_x = false;
  }
  QuantumElement d2 = alg.dirac() * alg.dirac();
  QuantumElement expected = Scalar(1, 2) * casimir + alg.scalar(alg.gamma_squared());
  report.dirac_square_matches = d2 == expected;
  report.dirac_square = d2.to_string();
  return report;
}

}  // namespace weil
