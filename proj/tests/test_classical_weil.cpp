#include <doctest.h>

#include "weil/classical.hpp"
#include "weil/identity_suite.hpp"
#include "weil/random.hpp"

using namespace weil;

namespace {

std::shared_ptr<const ClassicalAlgebra> make_alg(const std::string& lie, const std::string& rep) {
  auto b = builtin(lie);
  return ClassicalAlgebra::make(b.lie, b.reps.at(rep));
}

}  // namespace

TEST_SUITE("classical_weil") {
  TEST_CASE("generator formulas in so3") {
    auto alg = make_alg("so3", "trivial");
    const auto& A = *alg;
    CHECK(cw_differential(A.y(0)).to_string() == "v1 - y2*y3");
    // d v^1 = -f^1_jk y^j v^k = -y2 v3 + y3 v2
    CHECK(cw_differential(A.v(0)) == A.y(2) * A.v(1) - A.y(1) * A.v(2));
    // L_1 v^3 = -f^3_12 v^2
    CHECK(cw_lie_derivative(0, A.v(2)) == -A.v(1));
    CHECK(cw_lie_derivative(0, A.y(2)) == -A.y(1));
    CHECK(cw_lie_derivative(0, A.y(1)) == A.y(2));
    CHECK(cw_contraction(1, A.y(0) * A.y(1)) == -A.y(0));
    CHECK(cw_contraction(0, A.y(0) * A.y(1)) == A.y(1));
    CHECK(cw_contraction(0, A.v(0)).is_zero());
  }

  TEST_CASE("exterior products anticommute, symmetric ones commute") {
    auto alg = make_alg("sl2", "standard");
    const auto& A = *alg;
    CHECK(A.y(1) * A.y(0) == -(A.y(0) * A.y(1)));
    CHECK((A.y(2) * A.y(2)).is_zero());
    CHECK(A.v(1) * A.v(0) == A.v(0) * A.v(1));
    CHECK(A.v(0) * A.y(1) == A.y(1) * A.v(0));
  }

  TEST_CASE("d on End V is y^a [tau_a, -]") {
    auto alg = make_alg("so3", "adjoint");
    const auto& A = *alg;
    Matrix m{{1, 2, 0}, {0, 0, Scalar(1, 2)}, {3, 0, -1}};
    ClassicalElement expected = A.zero();
    for (std::size_t a = 0; a < 3; ++a)
      expected += A.y(a) * A.matrix(mat_commutator(A.rep().tau[a], m));
    CHECK(cw_differential(A.matrix(m)) == expected);
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(cw_lie_derivative(a, A.matrix(m)) == A.matrix(mat_commutator(A.rep().tau[a], m)));
      CHECK(cw_contraction(a, A.matrix(m)).is_zero());
    }
  }

  TEST_CASE("curvature and [C, A]") {
    auto alg = make_alg("so3", "adjoint");
    const auto& A = *alg;
    ClassicalElement C = cw_curvature(A);
    ClassicalElement expected = A.zero();
    for (std::size_t a = 0; a < 3; ++a) expected += A.v(a) * A.tau(a);
    CHECK(C == expected);
    Matrix m = Matrix::unit(3, 0, 1);
    ClassicalElement comm = A.zero();
    for (std::size_t a = 0; a < 3; ++a)
      comm += A.v(a) * A.matrix(mat_commutator(A.rep().tau[a], m));
    CHECK(cw_supercommutator(C, A.matrix(m)) == comm);
    CHECK(cw_differential(C).is_zero());
    // d d A = [C, A]
    CHECK(cw_differential(cw_differential(A.matrix(m))) == comm);
    // Trivial rep: C = 0 and d^2 = 0 on generators.
    auto triv = make_alg("so3", "trivial");
    CHECK(cw_curvature(*triv).is_zero());
    CHECK(cw_differential(cw_differential(triv->y(0))).is_zero());
  }

  TEST_CASE("abelian: d d y1 = 0 and d y1 = v1") {
    auto alg = make_alg("abelian(2)", "standard");
    CHECK(cw_differential(alg->y(0)) == alg->v(0));
    CHECK(cw_differential(cw_differential(alg->y(0))).is_zero());
  }

  TEST_CASE("Leibniz rule for d on random products") {
    auto alg = make_alg("sl2", "standard");
    RandomElements rnd(4);
    for (int t = 0; t < 40; ++t) {
      ClassicalElement a = alg->from_poly(rnd.classical(*alg, 3));
      ClassicalElement b = alg->from_poly(rnd.classical(*alg, 3));
      // Split a by parity; d(ab) = (da) b + (-1)^{|a|} a (db).
      ClassicalElement lhs = cw_differential(a * b);
      ClassicalElement rhs = cw_differential(a) * b + a.even_part() * cw_differential(b) -
                             a.odd_part() * cw_differential(b);
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("restriction to the identity part agrees with the scalar Weil differential") {
    auto alg = make_alg("so3", "adjoint");
    RandomElements rnd(8);
    for (int t = 0; t < 30; ++t) {
      WeilPoly w = rnd.weil(3, 4);
      CHECK(cw_differential(embed(*alg, w)) == embed(*alg, weil_differential(alg->lie(), w)));
      CHECK(weil_differential(alg->lie(), weil_differential(alg->lie(), w)).is_zero());
    }
  }

  TEST_CASE("degrees and parts") {
    auto alg = make_alg("so3", "trivial");
    ClassicalElement x = alg->v(0) * alg->y(1) + alg->y(0);
    CHECK(x.odd_part() == x);
    CHECK(x.even_part().is_zero());
    CHECK_FALSE(x.homogeneous_degree());
    CHECK(cw_differential(alg->y(0)).homogeneous_degree() == 2u);
  }

  TEST_CASE("elements of different algebras do not mix") {
    auto a = make_alg("so3", "trivial");
    auto b = make_alg("so3", "trivial");
    CHECK_THROWS_AS(a->y(0) + b->y(0), Error);
  }

  TEST_CASE("make rejects an invalid representation") {
    auto b = builtin("so3");
    RepData bad = b.reps.at("adjoint");
    bad.tau[2] = Scalar(2) * bad.tau[2];
    CHECK_THROWS_AS(ClassicalAlgebra::make(b.lie, bad), Error);
  }

  TEST_CASE("identity suite passes on every builtin and representation (reduced samples)") {
    SuiteOptions opts;
    opts.samples = 30;
    opts.restriction_samples = 20;
    opts.lemma_samples = 20;
    for (const auto& name : builtin_names())
      for (const char* rep : {"trivial", "standard", "adjoint"}) {
        auto alg = make_alg(name, rep);
        for (const auto& r : classical_suite(*alg, opts)) {
          CAPTURE(name);
          CAPTURE(rep);
          CAPTURE(r.name);
          CAPTURE(r.detail);
          CHECK(r.pass);
        }
      }
  }
}
