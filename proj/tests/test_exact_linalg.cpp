#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weil/lie.hpp"
#include "weil/nullspace.hpp"

using namespace weil;

TEST_SUITE("exact_linalg") {
  TEST_CASE("scalar arithmetic in lowest terms") {
    CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
    CHECK(Scalar(-1, 6) * Scalar(6) == Scalar(-1));
    CHECK(Scalar(1, 48) * Scalar(6) == Scalar(1, 8));
    CHECK(Scalar(2, 4).to_string() == "1/2");
    CHECK(Scalar(3, -6).to_string() == "-1/2");
    CHECK(Scalar(0, 5).to_string() == "0");
    CHECK(Scalar(0, 5).denominator() == 1);
    CHECK(Scalar(7).to_string() == "7");
    CHECK(Scalar(4, -2).denominator() > 0);
  }

  TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(1, 0), DivisionByZero);
  }

  TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse("3/9") == Scalar(1, 3));
    CHECK(Scalar::parse("-4") == Scalar(-4));
    CHECK(Scalar::parse("\xE2\x88\x92" "1/8") == Scalar(-1, 8));
    CHECK(Scalar::parse(Scalar(-5, 7).to_string()) == Scalar(-5, 7));
    CHECK_THROWS(Scalar::parse("1/"));
    CHECK_THROWS(Scalar::parse("a"));
    CHECK_THROWS(Scalar::parse("1/0"));
  }

  TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(7);
    auto r = [&] {
      return Scalar(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    };
    for (int i = 0; i < 300; ++i) {
      Scalar a = r(), b = r(), c = r();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("matrix products") {
    Matrix M{{1, 2}, {Scalar(3, 4), -5}};
    CHECK(Matrix::identity(2) * M == M);
    CHECK((Matrix::zero(2, 2) * M).is_zero());
    CHECK_THROWS_AS(Matrix::zero(2, 3) * Matrix::zero(2, 2), ShapeError);
    CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), ShapeError);
    CHECK(M.to_string() == "[[1,2],[3/4,-5]]");
  }

  TEST_CASE("so3 adjoint matrices multiply to the bracket") {
    // ad(e_a)_{cb} = eps_{abc}, read off directly.
    auto eps = [](int a, int b, int c) {
      if (a == b || b == c || a == c) return 0;
      return ((b - a + 3) % 3 == 1) ? 1 : -1;
    };
    std::vector<Matrix> ad;
    for (int a = 0; a < 3; ++a) {
      Matrix m = Matrix::zero(3, 3);
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) m(c, b) = eps(a, b, c);
      ad.push_back(m);
    }
    CHECK(ad[0] * ad[1] - ad[1] * ad[0] == ad[2]);
    CHECK(mat_commutator(ad[0], ad[1]) == ad[2]);
    CHECK(ad[0] == Matrix({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
  }

  TEST_CASE("commutator identities") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
      Matrix a = Matrix::zero(3, 3), b = Matrix::zero(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
          a(r, c) = Scalar(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
          b(r, c) = Scalar(static_cast<long>(rng() % 7) - 3);
        }
      CHECK(mat_commutator(a, a).is_zero());
      CHECK(mat_commutator(Matrix::identity(3), a).is_zero());
      CHECK(mat_commutator(a, b) == -mat_commutator(b, a));
    }
    CHECK_THROWS_AS(mat_commutator(Matrix::zero(2, 2), Matrix::zero(3, 3)), ShapeError);
    CHECK_THROWS_AS(mat_commutator(Matrix::zero(2, 3), Matrix::zero(2, 3)), ShapeError);
  }

  TEST_CASE("nullspace basics") {
    CHECK(nullspace(Matrix::identity(4)).empty());
    CHECK(nullspace(Matrix::zero(2, 2)).size() == 2);
    Matrix m{{1, 2, 3}, {2, 4, 6}};
    auto k = nullspace(m);
    REQUIRE(k.size() == 2);
    // Free columns 2 and 3 in order: (-2,1,0) and (-3,0,1).
    CHECK(k[0] == Matrix({{-2}, {1}, {0}}));
    CHECK(k[1] == Matrix({{-3}, {0}, {1}}));
  }

  TEST_CASE("nullspace vectors are exact kernel vectors; count = cols - rank") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
      std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
      Matrix m = Matrix::zero(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (rng() % 3)
            m(r, c) = Scalar(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
      // Force some dependence.
      if (rows > 2)
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Scalar(2, 3) - m(1, c);
      auto k = nullspace(m);
      CHECK(k.size() == oracle::nullity(m));
      CHECK(rank(m) == oracle::dense_rank(m));
      for (const auto& v : k) CHECK((m * v).is_zero());
    }
  }

  TEST_CASE("degree-0 [C,-] for so3 adjoint: kernel is the scalars") {
    // A -> ([tau_a, A])_a stacked, as a 27 x 9 matrix built entrywise.
    RepData ad = adjoint_rep(builtin("so3").lie);
    Matrix m = Matrix::zero(27, 9);
    for (std::size_t j = 0; j < 9; ++j) {
      Matrix E = Matrix::unit(3, j / 3, j % 3);
      for (std::size_t a = 0; a < 3; ++a) {
        Matrix c = ad.tau[a] * E - E * ad.tau[a];
        for (std::size_t i = 0; i < 9; ++i) m(9 * a + i, j) = c(i / 3, i % 3);
      }
    }
    auto k = nullspace(m);
    CHECK(k.size() == oracle::nullity(m));
    CHECK(k.size() == 1);
  }

  TEST_CASE("sparse span helpers") {
    std::vector<SparseRow> a{{{0, Scalar(1)}, {2, Scalar(1)}}, {{1, Scalar(1)}}};
    std::vector<SparseRow> b{{{0, Scalar(2)}, {1, Scalar(3)}, {2, Scalar(2)}}};
    CHECK(rank_of(a, 3) == 2);
    CHECK(span_contains(a, b, 3));
    CHECK_FALSE(span_contains(b, a, 3));
    CHECK_FALSE(span_equal(a, b, 3));
    Echelon e(a, 3);
    auto k = e.sparse_kernel();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == SparseRow{{0, Scalar(-1)}, {2, Scalar(1)}});
  }
}
