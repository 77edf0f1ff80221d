#include "weil/classical.hpp"

#include "weil/render.hpp"

namespace weil {

namespace {

std::string check_failures(const std::vector<ValidationReport>& reports) {
  std::string msg;
  for (const auto& r : reports)
    if (!r.ok()) msg += (msg.empty() ? "" : "\n") + r.to_string();
  return msg;
}

}  // namespace

std::shared_ptr<const ClassicalAlgebra> ClassicalAlgebra::make(LieData lie, RepData rep) {
  if (lie.dim() > ExtMonomial::max_generators)
    throw Error("at most 32 generators are supported");
  std::string failures = check_failures({validate_lie(lie), validate_rep(lie, rep)});
  if (!failures.empty()) throw Error("invalid input:\n" + failures);
  return std::shared_ptr<const ClassicalAlgebra>(
      new ClassicalAlgebra(std::move(lie), std::move(rep)));
}

ClassicalPoly ClassicalAlgebra::poly_of(const SymMonomial& s, const ExtMonomial& e,
                                        Matrix m) const {
  ClassicalPoly p;
  p.add(ClassicalKey{s, e}, m);
  return p;
}

ClassicalAlgebra::ClassicalAlgebra(LieData lie, RepData rep)
    : lie_(std::move(lie)), rep_(std::move(rep)) {
  const std::size_t n = lie_.dim();
  const std::size_t d = rep_.dim_v();
  const Matrix I = Matrix::identity(d);
  const SymMonomial one_s(n);
  const ExtMonomial one_e;
  auto v_poly = [&](std::size_t b) { return poly_of(SymMonomial::generator(n, b), one_e, I); };
  auto y_poly = [&](std::size_t b) { return poly_of(one_s, ExtMonomial::generator(b), I); };

  // L_a y^c = -f^c_{ab} y^b, L_a v^c = -f^c_{ab} v^b, L_a A = [tau_a, A].
  for (std::size_t a = 0; a < n; ++a) {
    Derivation L{0, std::vector<ClassicalPoly>(n), std::vector<ClassicalPoly>(n), {}};
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [c, f] : lie_.bracket(a, b)) {
        L.on_v[c] += v_poly(b) * (-f);
        L.on_y[c] += y_poly(b) * (-f);
      }
    L.on_matrix.push_back({-1, rep_.tau[a], rep_.tau[a]});
    lie_derivatives_.push_back(std::move(L));
  }

  // iota_a y^b = delta_ab, zero on v and End V.
  for (std::size_t a = 0; a < n; ++a) {
    Derivation iota{1, std::vector<ClassicalPoly>(n), std::vector<ClassicalPoly>(n), {}};
    iota.on_y[a] = poly_of(one_s, one_e, I);
    contractions_.push_back(std::move(iota));
  }

  // d y^a = v^a - 1/2 f^a_{jk} y^j y^k, d v^a = -f^a_{jk} y^j v^k,
  // d A = y^a [tau_a, A].
  differential_ = Derivation{1, std::vector<ClassicalPoly>(n),
                             std::vector<ClassicalPoly>(n), {}};
  for (std::size_t a = 0; a < n; ++a) differential_.on_y[a] = v_poly(a);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [a, f] : lie_.bracket(j, k)) {
        differential_.on_y[a] += mul(y_poly(j), y_poly(k)) * (-f / Scalar(2));
        differential_.on_v[a] += mul(y_poly(j), v_poly(k)) * (-f);
      }
  for (std::size_t a = 0; a < n; ++a)
    differential_.on_matrix.push_back({static_cast<int>(a), rep_.tau[a], rep_.tau[a]});

  for (std::size_t a = 0; a < n; ++a)
    curvature_.add(ClassicalKey{SymMonomial::generator(n, a), one_e}, rep_.tau[a]);
}

ClassicalPoly ClassicalAlgebra::mul(const ClassicalPoly& a, const ClassicalPoly& b) const {
  ClassicalPoly out;
  for (const auto& [ka, ma] : a.terms())
    for (const auto& [kb, mb] : b.terms()) {
      auto ext = mul_ext(ka.ext, kb.ext);
      if (!ext) continue;
      Matrix m = ma * mb;
      if (m.is_zero()) continue;
      if (ext->first < 0) m = -m;
      out.add(ClassicalKey{mul_sym(ka.sym, kb.sym), ext->second}, m);
    }
  return out;
}

ClassicalPoly ClassicalAlgebra::apply_to_matrix(const Derivation& D, const Matrix& m) const {
  ClassicalPoly out;
  const SymMonomial one_s(dim());
  for (const auto& piece : D.on_matrix) {
    Matrix image = piece.left * m - m * piece.right;
    ExtMonomial e = piece.ext < 0 ? ExtMonomial()
                                  : ExtMonomial::generator(static_cast<std::size_t>(piece.ext));
    out.add(ClassicalKey{one_s, e}, image);
  }
  return out;
}

// D(v^s y^{j1}...y^{jm} A) by the graded Leibniz rule. The v^a are central,
// so the symmetric factor differentiates without signs.
ClassicalPoly ClassicalAlgebra::apply(const Derivation& D, const ClassicalPoly& x) const {
  const std::size_t n = dim();
  const Matrix I = Matrix::identity(dim_v());
  const ExtMonomial one_e;
  ClassicalPoly out;
  for (const auto& [key, m] : x.terms()) {
    const ClassicalPoly tail_all = poly_of(SymMonomial(n), key.ext, m);
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned k = key.sym.exponent(i);
      if (!k || D.on_v[i].is_zero()) continue;
      ClassicalPoly left = poly_of(key.sym.without_generator(i), one_e, I);
      out += mul(mul(left, D.on_v[i]), tail_all) * Scalar(static_cast<long>(k));
    }

    const auto idx = key.ext.indices();
    std::uint32_t prefix_bits = 0;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const std::size_t j = idx[r];
      const std::uint32_t suffix_bits =
          key.ext.bits() & ~prefix_bits & ~(std::uint32_t{1} << j);
      if (!D.on_y[j].is_zero()) {
        ClassicalPoly left = poly_of(key.sym, ExtMonomial(prefix_bits), I);
        ClassicalPoly right = poly_of(SymMonomial(n), ExtMonomial(suffix_bits), m);
        ClassicalPoly piece = mul(mul(left, D.on_y[j]), right);
        if (D.parity && (r & 1u)) piece = -piece;
        out += piece;
      }
      prefix_bits |= std::uint32_t{1} << j;
    }

    if (!D.on_matrix.empty()) {
      ClassicalPoly left = poly_of(key.sym, key.ext, I);
      ClassicalPoly piece = mul(left, apply_to_matrix(D, m));
      if (D.parity && (idx.size() & 1u)) piece = -piece;
      out += piece;
    }
  }
  return out;
}

ClassicalPoly ClassicalAlgebra::lie_derivative(std::size_t a, const ClassicalPoly& x) const {
  if (a >= dim()) throw Error("L: basis index out of range");
  return apply(lie_derivatives_[a], x);
}

ClassicalPoly ClassicalAlgebra::contraction(std::size_t a, const ClassicalPoly& x) const {
  if (a >= dim()) throw Error("iota: basis index out of range");
  return apply(contractions_[a], x);
}

ClassicalPoly ClassicalAlgebra::differential(const ClassicalPoly& x) const {
  return apply(differential_, x);
}

namespace {

std::pair<ClassicalPoly, ClassicalPoly> split_parity(const ClassicalPoly& p) {
  ClassicalPoly even, odd;
  for (const auto& [k, m] : p.terms()) (k.parity() ? odd : even).add(k, m);
  return {even, odd};
}

}  // namespace

ClassicalPoly ClassicalAlgebra::supercommutator(const ClassicalPoly& a,
                                                const ClassicalPoly& b) const {
  auto [a0, a1] = split_parity(a);
  auto [b0, b1] = split_parity(b);
  ClassicalPoly out = mul(a, b);
  out -= mul(b0, a);
  out -= mul(b1, a0);
  out += mul(b1, a1);
  return out;
}

ClassicalElement ClassicalAlgebra::from_poly(ClassicalPoly p) const {
  return ClassicalElement(shared_from_this(), std::move(p));
}
ClassicalElement ClassicalAlgebra::zero() const { return from_poly({}); }
ClassicalElement ClassicalAlgebra::scalar(const Scalar& c) const {
  return matrix(Matrix::scalar(dim_v(), c));
}
ClassicalElement ClassicalAlgebra::matrix(const Matrix& m) const {
  if (m.rows() != dim_v() || m.cols() != dim_v())
    throw ShapeError("matrix literal must be " + std::to_string(dim_v()) + "x" +
                     std::to_string(dim_v()));
  return from_poly(poly_of(SymMonomial(dim()), ExtMonomial(), m));
}
ClassicalElement ClassicalAlgebra::v(std::size_t a) const {
  if (a >= dim()) throw Error("v: basis index out of range");
  return from_poly(
      poly_of(SymMonomial::generator(dim(), a), ExtMonomial(), Matrix::identity(dim_v())));
}
ClassicalElement ClassicalAlgebra::y(std::size_t a) const {
  if (a >= dim()) throw Error("y: basis index out of range");
  return from_poly(
      poly_of(SymMonomial(dim()), ExtMonomial::generator(a), Matrix::identity(dim_v())));
}
ClassicalElement ClassicalAlgebra::tau(std::size_t a) const {
  if (a >= dim()) throw Error("tau: basis index out of range");
  return matrix(rep_.tau[a]);
}
ClassicalElement ClassicalAlgebra::monomial(const SymMonomial& s, const ExtMonomial& e,
                                            const Matrix& m) const {
  return from_poly(poly_of(s, e, m));
}

// ---------------------------------------------------------------------------

std::optional<unsigned> ClassicalElement::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [k, m] : poly_.terms()) {
    if (deg && *deg != k.degree()) return std::nullopt;
    deg = k.degree();
  }
  return deg;
}

ClassicalElement ClassicalElement::even_part() const {
  ClassicalPoly p;
  for (const auto& [k, m] : poly_.terms())
    if (!k.parity()) p.add(k, m);
  return {alg_, std::move(p)};
}

ClassicalElement ClassicalElement::odd_part() const {
  ClassicalPoly p;
  for (const auto& [k, m] : poly_.terms())
    if (k.parity()) p.add(k, m);
  return {alg_, std::move(p)};
}

void ClassicalElement::check_same(const ClassicalElement& o) const {
  if (alg_ != o.alg_) throw Error("elements belong to different algebras");
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o) {
  check_same(o);
  poly_ += o.poly_;
  return *this;
}

ClassicalElement& ClassicalElement::operator-=(const ClassicalElement& o) {
  check_same(o);
  poly_ -= o.poly_;
  return *this;
}

ClassicalElement operator*(const ClassicalElement& a, const ClassicalElement& b) {
  a.check_same(b);
  return {a.alg_, a.alg_->mul(a.poly_, b.poly_)};
}

bool operator==(const ClassicalElement& a, const ClassicalElement& b) {
  a.check_same(b);
  return a.poly_ == b.poly_;
}

std::string ClassicalElement::to_string() const {
  std::vector<std::pair<std::string, Matrix>> terms;
  for (const auto& [k, m] : poly_.terms()) {
    std::string mono = render(k.sym, 'v');
    std::string ext = render(k.ext, 'y');
    if (!ext.empty()) mono += (mono.empty() ? "" : "*") + ext;
    terms.emplace_back(std::move(mono), m);
  }
  return render_terms(terms);
}

ClassicalElement cw_mul(const ClassicalElement& a, const ClassicalElement& b) { return a * b; }

ClassicalElement cw_lie_derivative(std::size_t a, const ClassicalElement& x) {
  return x.algebra().from_poly(x.algebra().lie_derivative(a, x.poly()));
}

ClassicalElement cw_contraction(std::size_t a, const ClassicalElement& x) {
  return x.algebra().from_poly(x.algebra().contraction(a, x.poly()));
}

ClassicalElement cw_differential(const ClassicalElement& x) {
  return x.algebra().from_poly(x.algebra().differential(x.poly()));
}

ClassicalElement cw_curvature(const ClassicalAlgebra& alg) {
  return alg.from_poly(alg.curvature_poly());
}

ClassicalElement cw_supercommutator(const ClassicalElement& a, const ClassicalElement& b) {
  if (a.algebra_ptr() != b.algebra_ptr())
    throw Error("elements belong to different algebras");
  return a.algebra().from_poly(a.algebra().supercommutator(a.poly(), b.poly()));
}

// ---------------------------------------------------------------------------

WeilPoly weil_mul(const WeilPoly& a, const WeilPoly& b) {
  WeilPoly out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.ext.bits() & kb.ext.bits()) continue;
      Scalar c = ca * cb;
      if (koszul_sign(ka.ext.bits(), kb.ext.bits()) < 0) c = -c;
      out.add(ClassicalKey{ka.sym * kb.sym, ExtMonomial(ka.ext.bits() | kb.ext.bits())}, c);
    }
  return out;
}

namespace {

WeilPoly weil_generator(std::size_t n, std::size_t a, bool odd) {
  WeilPoly p;
  if (odd)
    p.add(ClassicalKey{SymMonomial(n), ExtMonomial::generator(a)}, Scalar(1));
  else
    p.add(ClassicalKey{SymMonomial::generator(n, a), ExtMonomial()}, Scalar(1));
  return p;
}

// iota_a: remove y^a, with sign (-1)^{number of exterior indices before a}.
WeilPoly weil_iota(std::size_t a, const WeilPoly& x) {
  WeilPoly out;
  for (const auto& [k, c] : x.terms()) {
    if (!k.ext.contains(a)) continue;
    const std::uint32_t below = k.ext.bits() & ((std::uint32_t{1} << a) - 1);
    Scalar s = (std::popcount(below) & 1) ? -c : c;
    out.add(ClassicalKey{k.sym, ExtMonomial(k.ext.bits() & ~(std::uint32_t{1} << a))}, s);
  }
  return out;
}

// Lie derivative acting on the symmetric factor only.
WeilPoly weil_lie_sym(const LieData& lie, std::size_t a, const WeilPoly& x) {
  WeilPoly out;
  const std::size_t n = lie.dim();
  for (const auto& [k, c] : x.terms())
    for (std::size_t cc = 0; cc < n; ++cc) {
      const unsigned e = k.sym.exponent(cc);
      if (!e) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& f = lie.f(a, b, cc);
        if (f.is_zero()) continue;
        SymMonomial s = k.sym.without_generator(cc).times_generator(b);
        out.add(ClassicalKey{s, k.ext}, -f * c * Scalar(static_cast<long>(e)));
      }
    }
  return out;
}

// Lie derivative acting on the exterior factor only: replace one y^c by
// -f^c_{ab} y^b in place.
WeilPoly weil_lie_ext(const LieData& lie, std::size_t a, const WeilPoly& x) {
  WeilPoly out;
  const std::size_t n = lie.dim();
  for (const auto& [k, c] : x.terms()) {
    std::uint32_t prefix = 0;
    for (auto cc : k.ext.indices()) {
      const std::uint32_t suffix = k.ext.bits() & ~prefix & ~(std::uint32_t{1} << cc);
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& f = lie.f(a, b, cc);
        if (f.is_zero()) continue;
        WeilPoly left, mid, right;
        left.add(ClassicalKey{k.sym, ExtMonomial(prefix)}, Scalar(1));
        mid.add(ClassicalKey{SymMonomial(n), ExtMonomial::generator(b)}, -f * c);
        right.add(ClassicalKey{SymMonomial(n), ExtMonomial(suffix)}, Scalar(1));
        out += weil_mul(weil_mul(left, mid), right);
      }
      prefix |= std::uint32_t{1} << cc;
    }
  }
  return out;
}

}  // namespace

WeilPoly weil_differential(const LieData& lie, const WeilPoly& x) {
  const std::size_t n = lie.dim();
  WeilPoly out;
  for (std::size_t a = 0; a < n; ++a) {
    out += weil_mul(weil_generator(n, a, false), weil_iota(a, x));
    out += weil_mul(weil_generator(n, a, true), weil_lie_sym(lie, a, x));
    out += weil_mul(weil_generator(n, a, true), weil_lie_ext(lie, a, x)) * Scalar(1, 2);
  }
  return out;
}

ClassicalElement embed(const ClassicalAlgebra& alg, const WeilPoly& x) {
  ClassicalPoly p;
  const Matrix I = Matrix::identity(alg.dim_v());
  for (const auto& [k, c] : x.terms()) p.add(k, I * c);
  return alg.from_poly(std::move(p));
}

}  // namespace weil
