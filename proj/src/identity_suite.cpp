#include "weil/identity_suite.hpp"

#include <functional>

#include "weil/random.hpp"

namespace weil {

namespace {

std::string idx(std::size_t a) { return std::to_string(a + 1); }

// Accumulates one identity over many cases; remembers the first failure.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  IdentityResult result() const {
    if (!failure_.empty()) return {name_, false, "fails: " + failure_};
    return {name_, true, std::to_string(cases_) + " cases"};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::string failure_;
};

template <class P>
std::pair<unsigned, unsigned> degree_range(const P& p) {
  unsigned lo = ~0u, hi = 0;
  for (const auto& [k, c] : p.terms()) {
    lo = std::min(lo, k.degree());
    hi = std::max(hi, k.degree());
  }
  return {lo, hi};
}

// The operator identities shared by both algebras:
//   [iota_a, d] = L_a, [L_a, d] = 0, [L_a, iota_b] = f^c_ab iota_c,
//   [iota_a, iota_b] = 0, [L_a, L_b] = f^c_ab L_c, d d x = [curvature, x].
template <class Alg, class P>
void operator_identities(const Alg& alg, const std::vector<P>& xs,
                         std::vector<IdentityResult>& out, const std::string& curv) {
  const std::size_t n = alg.dim();
  const LieData& lie = alg.lie();
  Check cartan("[iota_a, d] = L_a");
  Check ld("[L_a, d] = 0");
  Check li("[L_a, iota_b] = f^c_ab iota_c");
  Check ii("[iota_a, iota_b] = 0");
  Check ll("[L_a, L_b] = f^c_ab L_c");
  Check dd("d d x = [" + curv + ", x]");

  for (const P& x : xs) {
    auto show = [&] { return alg.from_poly(x).to_string(); };
    const P dx = alg.differential(x);
    std::vector<P> Lx, Ix;
    for (std::size_t a = 0; a < n; ++a) {
      Lx.push_back(alg.lie_derivative(a, x));
      Ix.push_back(alg.contraction(a, x));
    }
    for (std::size_t a = 0; a < n; ++a) {
      cartan.expect(alg.contraction(a, dx) + alg.differential(Ix[a]) == Lx[a],
                    [&] { return "a=" + idx(a) + ", x = " + show(); });
      ld.expect((alg.lie_derivative(a, dx) - alg.differential(Lx[a])).is_zero(),
                [&] { return "a=" + idx(a) + ", x = " + show(); });
      for (std::size_t b = 0; b < n; ++b) {
        P rhs_i, rhs_l;
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& f = lie.f(a, b, c);
          if (f.is_zero()) continue;
          rhs_i += Ix[c] * f;
          rhs_l += Lx[c] * f;
        }
        auto where = [&] { return "a=" + idx(a) + ", b=" + idx(b) + ", x = " + show(); };
        li.expect(alg.lie_derivative(a, Ix[b]) - alg.contraction(b, Lx[a]) == rhs_i, where);
        ii.expect((alg.contraction(a, Ix[b]) + alg.contraction(b, Ix[a])).is_zero(), where);
        ll.expect(alg.lie_derivative(a, Lx[b]) - alg.lie_derivative(b, Lx[a]) == rhs_l, where);
      }
    }
    dd.expect(alg.differential(dx) == alg.supercommutator(alg.curvature_poly(), x),
              [&] { return "x = " + show(); });
  }
  for (const Check* c : {&cartan, &ld, &li, &ii, &ll, &dd}) out.push_back(c->result());
}

template <class P>
std::vector<P> split_terms(const std::vector<P>& xs) {
  std::vector<P> out;
  for (const P& x : xs)
    for (const auto& [k, c] : x.terms()) out.push_back(P(k, c));
  return out;
}

}  // namespace

bool all_pass(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<IdentityResult> classical_suite(const ClassicalAlgebra& alg,
                                            const SuiteOptions& opts) {
  std::vector<IdentityResult> out;
  const std::size_t n = alg.dim(), dv = alg.dim_v();
  RandomElements rnd(opts.seed);

  std::vector<ClassicalPoly> xs;
  for (std::size_t a = 0; a < n; ++a) {
    xs.push_back(alg.v(a).poly());
    xs.push_back(alg.y(a).poly());
  }
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dv; ++j) xs.push_back(alg.matrix(Matrix::unit(dv, i, j)).poly());
  const std::size_t generators = xs.size();
  for (unsigned s = 0; s < opts.samples; ++s) xs.push_back(rnd.classical(alg, opts.max_degree));

  operator_identities(alg, xs, out, "C");

  {
    Check bianchi("d C = 0");
    bianchi.expect(alg.differential(alg.curvature_poly()).is_zero(),
                   [&] { return "d C = " + alg.from_poly(alg.differential(alg.curvature_poly())).to_string(); });
    out.push_back(bianchi.result());
  }

  {
    Check agree("identity part: d = d^W");
    Check square("identity part: d d = 0");
    for (unsigned s = 0; s < opts.restriction_samples; ++s) {
      WeilPoly w = rnd.weil(n, opts.max_degree);
      ClassicalElement e = embed(alg, w);
      ClassicalElement de = cw_differential(e);
      WeilPoly dw = weil_differential(alg.lie(), w);
      agree.expect(de == embed(alg, dw), [&] { return "x = " + e.to_string(); });
      square.expect(cw_differential(de).is_zero() && weil_differential(alg.lie(), dw).is_zero(),
                    [&] { return "x = " + e.to_string(); });
    }
    out.push_back(agree.result());
    out.push_back(square.result());
  }

  {
    Check lemma("sum_a v^a L_a f = 0 on S(g*)");
    for (unsigned s = 0; s < opts.lemma_samples; ++s) {
      ClassicalElement f = embed(alg, rnd.symmetric(n, opts.max_degree));
      ClassicalElement acc = alg.zero();
      for (std::size_t a = 0; a < n; ++a) acc += alg.v(a) * cw_lie_derivative(a, f);
      lemma.expect(acc.is_zero(), [&] { return "f = " + f.to_string(); });
    }
    out.push_back(lemma.result());
  }

  {
    // Homogeneous inputs: every term of every sample, plus the generators.
    Check deg("degrees: L_a 0, iota_a -1, d +1");
    std::vector<ClassicalPoly> hs(xs.begin(), xs.begin() + static_cast<long>(generators));
    for (auto& t : split_terms(std::vector<ClassicalPoly>(xs.begin() + static_cast<long>(generators), xs.end())))
      hs.push_back(std::move(t));
    for (const auto& h : hs) {
      const unsigned k = degree_range(h).first;
      auto exact = [](const ClassicalPoly& p, int want) {
        if (p.is_zero()) return true;
        auto [lo, hi] = degree_range(p);
        return want >= 0 && lo == static_cast<unsigned>(want) && hi == lo;
      };
      bool ok = exact(alg.differential(h), static_cast<int>(k) + 1);
      for (std::size_t a = 0; a < n && ok; ++a)
        ok = exact(alg.lie_derivative(a, h), static_cast<int>(k)) &&
             exact(alg.contraction(a, h), static_cast<int>(k) - 1);
      deg.expect(ok, [&] { return "x = " + alg.from_poly(h).to_string(); });
    }
    out.push_back(deg.result());
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<IdentityResult> quantum_suite(const QuantumAlgebra& alg, const SuiteOptions& opts) {
  std::vector<IdentityResult> out;
  const std::size_t n = alg.dim(), dv = alg.dim_v();
  const LieData& lie = alg.lie();
  RandomElements rnd(opts.seed);
  auto P = [](const QuantumElement& e) { return e.poly(); };
  auto show = [&](const QuantumPoly& p) { return alg.from_poly(p).to_string(); };

  // Lemma table in U(g) (x) Cl(g).
  {
    Check xg("[x_a, g_b] = -f_bac x_c");
    Check xgamma("[x_a, gamma] = g_a");
    Check xd("[x_a, Dirac] = u_a + g_a");
    Check ud("[u_a + g_a, Dirac] = 0");
    const QuantumPoly D = P(alg.dirac());
    for (std::size_t a = 0; a < n; ++a) {
      const QuantumPoly xa = P(alg.x(a));
      for (std::size_t b = 0; b < n; ++b) {
        QuantumPoly rhs;
        for (std::size_t c = 0; c < n; ++c)
          if (!lie.f(b, a, c).is_zero()) rhs += P(alg.x(c)) * (-lie.f(b, a, c));
        xg.expect(alg.supercommutator(xa, alg.g_poly(b)) == rhs,
                  [&] { return "a=" + idx(a) + ", b=" + idx(b); });
      }
      xgamma.expect(alg.supercommutator(xa, P(alg.gamma())) == alg.g_poly(a),
                    [&] { return "a=" + idx(a); });
      const QuantumPoly ug = P(alg.u(a)) + alg.g_poly(a);
      xd.expect(alg.supercommutator(xa, D) == ug, [&] { return "a=" + idx(a); });
      ud.expect(alg.supercommutator(ug, D).is_zero(), [&] { return "a=" + idx(a); });
    }
    for (const Check* c : {&xg, &xgamma, &xd, &ud}) out.push_back(c->result());
  }
  {
    Check g2("gamma^2 = -1/48 sum f_abc^2");
    QuantumElement sq = alg.gamma() * alg.gamma();
    auto s = sq.as_scalar();
    g2.expect(s && *s == gamma_squared_formula(lie), [&] {
      return "gamma^2 = " + sq.to_string() + ", formula " + gamma_squared_formula(lie).to_string();
    });
    IdentityResult r = g2.result();
    if (r.pass) r.detail = "gamma^2 = " + s->to_string();
    out.push_back(r);

    Check d2("Dirac^2 = 1/2 sum u_a u_a + gamma^2");
    Check central("sum u_a u_a is central");
    CasimirReport cr = qw_casimir_check(alg);
    d2.expect(cr.dirac_square_matches, [&] { return "Dirac^2 = " + cr.dirac_square; });
    central.expect(cr.commutes_with_u && cr.commutes_with_x, [] { return std::string("bracket nonzero"); });
    out.push_back(d2.result());
    out.push_back(central.result());
  }

  // Generator table of the twisted operators.
  {
    Check table("generator table of L_a, iota_a, d");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto where = [&] { return "a=" + idx(a) + ", b=" + idx(b); };
        QuantumPoly fu, fx;
        for (std::size_t c = 0; c < n; ++c) {
          fu += P(alg.u(c)) * lie.f(a, b, c);
          fx += P(alg.x(c)) * lie.f(a, b, c);
        }
        table.expect(alg.contraction(a, P(alg.x(b))) == P(alg.scalar(Scalar(a == b ? 1 : 0))), where);
        table.expect(alg.contraction(a, P(alg.u(b))).is_zero(), where);
        table.expect(alg.lie_derivative(a, P(alg.u(b))) == fu, where);
        table.expect(alg.lie_derivative(a, P(alg.x(b))) == fx, where);
      }
    for (std::size_t a = 0; a < n; ++a) {
      auto where = [&] { return "a=" + idx(a); };
      table.expect(alg.differential(P(alg.x(a))) == P(alg.u(a)) + alg.g_poly(a) + P(alg.tau(a)), where);
      QuantumPoly du;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!lie.f(b, c, a).is_zero())
            du += alg.mul(P(alg.x(b)), P(alg.u(c))) * (-lie.f(b, c, a));
      table.expect(alg.differential(P(alg.u(a))) == du, where);
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j) {
          const Matrix E = Matrix::unit(dv, i, j);
          QuantumPoly dE;
          for (std::size_t b = 0; b < n; ++b)
            dE += P(alg.x(b) * alg.matrix(mat_commutator(alg.rep().tau[b], E)));
          table.expect(alg.lie_derivative(a, P(alg.matrix(E))) ==
                           P(alg.matrix(mat_commutator(alg.rep().tau[a], E))),
                       where);
          table.expect(alg.contraction(a, P(alg.matrix(E))).is_zero(), where);
          if (a == 0) table.expect(alg.differential(P(alg.matrix(E))) == dE, where);
        }
    }
    out.push_back(table.result());
  }

  std::vector<QuantumPoly> xs;
  for (std::size_t a = 0; a < n; ++a) {
    xs.push_back(P(alg.u(a)));
    xs.push_back(P(alg.x(a)));
  }
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dv; ++j) xs.push_back(P(alg.matrix(Matrix::unit(dv, i, j))));
  for (unsigned s = 0; s < opts.samples; ++s) xs.push_back(rnd.quantum(alg, opts.max_degree));

  operator_identities(alg, xs, out, "QC");

  {
    Check bianchi("d QC = 0");
    bianchi.expect(alg.differential(alg.curvature_poly()).is_zero(),
                   [&] { return "d QC = " + show(alg.differential(alg.curvature_poly())); });
    out.push_back(bianchi.result());

    Check self("QC = 1/2 [Dirac + x_a tau_a, Dirac + x_a tau_a]");
    QuantumPoly half = alg.supercommutator(P(alg.dirac_tau()), P(alg.dirac_tau())) * Scalar(1, 2);
    self.expect(half == alg.curvature_poly(), [&] { return show(half); });
    out.push_back(self.result());
  }

  {
    Check lie_same("identity part: L_a = ad(u_a + g_a), iota_a unchanged");
    Check restr("identity part: d = d^W + iota_a tau_a");
    const Matrix I = Matrix::identity(dv);
    for (unsigned s = 0; s < opts.restriction_samples; ++s) {
      QuantumPoly raw = rnd.quantum(alg, opts.max_degree), x;
      for (const auto& [k, m] : raw.terms()) x.add(k, I * rnd.nonzero_rational());
      auto where = [&] { return "x = " + show(x); };
      QuantumPoly rhs = alg.plain_differential(x);
      for (std::size_t a = 0; a < n; ++a) {
        rhs += alg.mul(alg.contraction(a, x), P(alg.tau(a)));
        lie_same.expect(alg.lie_derivative(a, x) == alg.plain_lie_derivative(a, x), where);
      }
      restr.expect(alg.differential(x) == rhs, where);
    }
    out.push_back(lie_same.result());
    out.push_back(restr.result());

    bool twisted = false;
    for (const auto& t : alg.rep().tau) twisted = twisted || !t.is_zero();
    const QuantumPoly x1 = P(alg.x(0));
    const QuantumPoly d1 = alg.differential(x1), w1 = alg.plain_differential(x1);
    if (twisted) {
      Check witness("d x1 != d^W x1");
      witness.expect(!(d1 == w1), [&] { return "both equal " + show(d1); });
      IdentityResult r = witness.result();
      if (r.pass) r.detail = "d x1 - d^W x1 = " + show(d1 - w1);
      out.push_back(r);
    } else {
      Check same("d x1 = d^W x1 (trivial rep)");
      same.expect(d1 == w1, [&] { return show(d1 - w1); });
      out.push_back(same.result());
    }
  }

  {
    Check filt("filtration: L_a 0, iota_a -1, d +1");
    for (const auto& x : xs) {
      if (x.is_zero()) continue;
      const unsigned k = degree_range(x).second;
      auto within = [](const QuantumPoly& p, long bound) {
        return p.is_zero() || static_cast<long>(degree_range(p).second) <= bound;
      };
      bool ok = within(alg.differential(x), static_cast<long>(k) + 1);
      for (std::size_t a = 0; a < n && ok; ++a)
        ok = within(alg.lie_derivative(a, x), k) &&
             within(alg.contraction(a, x), static_cast<long>(k) - 1);
      filt.expect(ok, [&] { return "x = " + show(x); });
    }
    out.push_back(filt.result());
  }
  return out;
}

// ---------------------------------------------------------------------------

IdentityResult pbw_confluence(const LieData& lie, std::uint64_t seed, unsigned count,
                              unsigned max_length) {
  RandomElements rnd(seed);
  const std::size_t n = lie.dim();
  PbwKernel kernel(lie);
  Check check("PBW confluence (leftmost-first = rightmost-first = kernel)");
  for (unsigned i = 0; i < count; ++i) {
    Word w = rnd.word(n, max_length);
    auto left = reduce_word(lie, w, RewriteStrategy::LeftmostFirst);
    auto right = reduce_word(lie, w, RewriteStrategy::RightmostFirst);
    Poly<PbwMonomial> prod(PbwMonomial(n), Scalar(1));
    for (auto j : w) prod = mul_pbw(prod, Poly<PbwMonomial>(PbwMonomial::generator(n, j), Scalar(1)), kernel);
    check.expect(left == right && left == prod, [&] {
      std::string s;
      for (auto j : w) s += (s.empty() ? "u" : "*u") + idx(j);
      return "word " + s;
    });
  }
  return check.result();
}

}  // namespace weil
