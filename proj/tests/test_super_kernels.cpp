#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weil/kernels.hpp"

using namespace weil;

namespace {

using CliffPoly = Poly<CliffMonomial>;
using PbwPoly = Poly<PbwMonomial>;

CliffPoly clifford_word(const CliffordKernel& k, const std::vector<std::size_t>& w) {
  CliffPoly p(CliffMonomial{}, Scalar(1));
  for (auto i : w) p = mul_clifford(p, CliffPoly(CliffMonomial::generator(i), Scalar(1)), k);
  return p;
}

CliffPoly from_oracle(const std::map<oracle::CliffordWord, Scalar>& m) {
  CliffPoly p;
  for (const auto& [w, c] : m) p.add(CliffMonomial::from_indices(w), c);
  return p;
}

PbwPoly u(std::size_t n, std::size_t a) { return PbwPoly(PbwMonomial::generator(n, a), 1); }

// Image of a PBW polynomial under a representation: u_a -> tau_a.
Matrix represent(const RepData& rep, const PbwPoly& p) {
  const std::size_t d = rep.dim_v();
  Matrix out(d, d);
  for (const auto& [m, c] : p.terms()) {
    Matrix t = Matrix::identity(d);
    for (auto i : m.indices()) t = t * rep.tau[i];
    out += c * t;
  }
  return out;
}

PbwPoly random_pbw(std::mt19937_64& rng, std::size_t n) {
  PbwPoly p;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::size_t> idx(rng() % 4);
    for (auto& i : idx) i = rng() % n;
    p.add(PbwMonomial::from_indices(n, idx), Scalar(static_cast<long>(rng() % 5) - 2));
  }
  return p;
}

}  // namespace

TEST_SUITE("super_kernels") {
  TEST_CASE("exterior signs") {
    auto y1 = ExtMonomial::generator(0), y2 = ExtMonomial::generator(1);
    auto p = mul_ext(y2, y1);
    REQUIRE(p);
    CHECK(p->first == -1);
    CHECK(p->second == ExtMonomial::from_indices({0, 1}));
    CHECK(mul_ext(y1, y2)->first == 1);
    CHECK_FALSE(mul_ext(y1, y1));
    CHECK_FALSE(mul_ext(ExtMonomial::from_indices({0, 2}), ExtMonomial::from_indices({1, 2})));
  }

  TEST_CASE("exterior sign agrees with the permutation sign") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
      std::uint32_t a = static_cast<std::uint32_t>(rng() & 0x3f);
      std::uint32_t b = static_cast<std::uint32_t>(rng() & 0x3f) & ~a;
      std::vector<std::size_t> concat = ExtMonomial(a).indices();
      for (auto i : ExtMonomial(b).indices()) concat.push_back(i);
      auto p = mul_ext(ExtMonomial(a), ExtMonomial(b));
      REQUIRE(p);
      CHECK(p->first == oracle::permutation_sign(concat));
      CHECK(koszul_sign(a, b) == oracle::permutation_sign(concat));
    }
  }

  TEST_CASE("symmetric products commute") {
    auto a = SymMonomial::from_indices(3, {0, 0, 2});
    auto b = SymMonomial::from_indices(3, {1, 2});
    CHECK(mul_sym(a, b) == mul_sym(b, a));
    CHECK(mul_sym(a, b) == SymMonomial(std::vector<unsigned>{2, 1, 2}));
    CHECK(render(mul_sym(a, b), 'v') == "v1^2*v2*v3^2");
  }

  TEST_CASE("Clifford with B = identity") {
    CliffordKernel k(Matrix::identity(3));
    CHECK(clifford_word(k, {0, 0}) == CliffPoly(CliffMonomial{}, Scalar(1, 2)));
    CHECK(clifford_word(k, {1, 0}) == CliffPoly(CliffMonomial::from_indices({0, 1}), -1));
    auto cube = clifford_word(k, {0, 1, 2, 0, 1, 2});
    CHECK(cube == CliffPoly(CliffMonomial{}, Scalar(-1, 8)));
    CHECK(cube == from_oracle(oracle::clifford_reduce(Matrix::identity(3), {0, 1, 2, 0, 1, 2})));
  }

  TEST_CASE("Clifford words agree with the rewriting oracle, several forms") {
    std::vector<Matrix> forms{Matrix::identity(4), Matrix{{2, 1, 0, 0}, {1, 0, 0, 0},
                                                           {0, 0, 1, -1}, {0, 0, -1, 3}},
                              Matrix::scalar(4, Scalar(2, 3))};
    std::mt19937_64 rng(9);
    for (const auto& B : forms) {
      CliffordKernel k(B);
      for (int t = 0; t < 150; ++t) {
        std::vector<std::size_t> w(rng() % 7);
        for (auto& i : w) i = rng() % 4;
        CAPTURE(t);
        CHECK(clifford_word(k, w) == from_oracle(oracle::clifford_reduce(B, w)));
      }
    }
  }

  TEST_CASE("Clifford anticommutator equals B") {
    Matrix B{{1, 2, 0}, {2, 0, 1}, {0, 1, 5}};
    CliffordKernel k(B);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        CliffPoly s = clifford_word(k, {a, b}) + clifford_word(k, {b, a});
        CHECK(s == CliffPoly(CliffMonomial{}, B(a, b)));
      }
  }

  TEST_CASE("Clifford associativity on random triples") {
    CliffordKernel k(Matrix{{1, 0, 1}, {0, 2, 0}, {1, 0, 0}});
    std::mt19937_64 rng(13);
    auto rnd = [&] {
      CliffPoly p;
      for (int t = 0; t < 3; ++t)
        p.add(CliffMonomial(static_cast<std::uint32_t>(rng() & 7)),
              Scalar(static_cast<long>(rng() % 5) - 2));
      return p;
    };
    for (int t = 0; t < 100; ++t) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK(mul_clifford(mul_clifford(a, b, k), c, k) == mul_clifford(a, mul_clifford(b, c, k), k));
    }
  }

  TEST_CASE("PBW straightening in U(so3)") {
    PbwKernel k(builtin("so3").lie);
    auto u1 = u(3, 0), u2 = u(3, 1), u3 = u(3, 2);
    CHECK(mul_pbw(u2, u1, k) == mul_pbw(u1, u2, k) - u3);
    CHECK(mul_pbw(u1, u2, k) == PbwPoly(PbwMonomial::from_indices(3, {0, 1}), 1));
    CHECK(mul_pbw(u3, u1, k) == mul_pbw(u1, u3, k) + u2);
  }

  TEST_CASE("PBW products are compatible with representations") {
    // rho(a b) = rho(a) rho(b) for an algebra map rho: U(g) -> End V.
    std::mt19937_64 rng(21);
    for (const char* name : {"so3", "sl2", "heisenberg3"}) {
      auto b = builtin(name);
      PbwKernel k(b.lie);
      for (const auto& [rn, rep] : b.reps) {
        for (int t = 0; t < 40; ++t) {
          auto x = random_pbw(rng, 3), y = random_pbw(rng, 3);
          CAPTURE(name);
          CAPTURE(rn);
          CHECK(represent(rep, mul_pbw(x, y, k)) == represent(rep, x) * represent(rep, y));
        }
      }
    }
  }

  TEST_CASE("PBW associativity on random triples") {
    PbwKernel k(builtin("sl2").lie);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
      auto a = random_pbw(rng, 3), b = random_pbw(rng, 3), c = random_pbw(rng, 3);
      CHECK(mul_pbw(mul_pbw(a, b, k), c, k) == mul_pbw(a, mul_pbw(b, c, k), k));
    }
  }

  TEST_CASE("word rewriting: both strategies reach the kernel's normal form") {
    auto lie = builtin("so3").lie;
    PbwKernel k(lie);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
      Word w(rng() % 6);
      for (auto& i : w) i = rng() % 3;
      PbwPoly direct(PbwMonomial(3), 1);
      for (auto i : w) direct = mul_pbw(direct, u(3, i), k);
      CHECK(reduce_word(lie, w, RewriteStrategy::LeftmostFirst) == direct);
      CHECK(reduce_word(lie, w, RewriteStrategy::RightmostFirst) == direct);
    }
    CHECK_THROWS(reduce_word(lie, {0, 5}, RewriteStrategy::LeftmostFirst));
  }
}
