#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "weil/flat.hpp"

using namespace weil;

namespace {

using Exps = std::vector<unsigned>;

std::vector<Exps> monomials(std::size_t n, unsigned k) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, k);
  return out;
}

// Dense matrix of a linear map on S^k (x) End V whose images are collected
// as (exponent vector, matrix) pairs; the codomain is indexed on the fly.
struct DenseBuilder {
  std::size_t d;
  std::map<Exps, std::size_t> row_block;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;

  void begin_column() { cols.emplace_back(); }
  void add(const Exps& e, const Matrix& m) {
    auto [it, fresh] = row_block.emplace(e, row_block.size());
    (void)fresh;
    for (std::size_t i = 0; i < d * d; ++i)
      if (!m(i / d, i % d).is_zero())
        cols.back().emplace_back(it->second * d * d + i, m(i / d, i % d));
  }
  Matrix build() const {
    Matrix out = Matrix::zero(std::max<std::size_t>(1, row_block.size() * d * d), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : cols[c]) out(r, c) += v;
    return out;
  }
};

// x -> [C, x] = sum_a v^a (x) [tau_a, A] on S^k (x) End V.
std::size_t dense_flat_dim(const LieData&, const RepData& rep, unsigned k) {
  const std::size_t n = rep.tau.size(), d = rep.dim_v();
  DenseBuilder b{d, {}, {}};
  for (const auto& e : monomials(n, k))
    for (std::size_t j = 0; j < d * d; ++j) {
      b.begin_column();
      Matrix A = Matrix::unit(d, j / d, j % d);
      for (std::size_t a = 0; a < n; ++a) {
        Exps e2 = e;
        ++e2[a];
        b.add(e2, mat_commutator(rep.tau[a], A));
      }
    }
  return oracle::nullity(b.build());
}

// x -> (L_a x)_a, with L_a v^c = -f^c_ab v^b and L_a A = [tau_a, A].
std::size_t dense_basic_dim(const LieData& lie, const RepData& rep, unsigned k) {
  const std::size_t n = lie.dim(), d = rep.dim_v();
  std::vector<Matrix> blocks;
  const auto monos = monomials(n, k);
  std::size_t rows = 0;
  std::vector<Matrix> per_a;
  for (std::size_t a = 0; a < n; ++a) {
    DenseBuilder b{d, {}, {}};
    for (const auto& m : monos) b.row_block.emplace(m, b.row_block.size());
    for (const auto& e : monos)
      for (std::size_t j = 0; j < d * d; ++j) {
        b.begin_column();
        Matrix A = Matrix::unit(d, j / d, j % d);
        b.add(e, mat_commutator(rep.tau[a], A));
        for (std::size_t c = 0; c < n; ++c) {
          if (!e[c]) continue;
          for (std::size_t bb = 0; bb < n; ++bb) {
            const Scalar& f = lie.f(a, bb, c);
            if (f.is_zero()) continue;
            Exps e2 = e;
            --e2[c];
            ++e2[bb];
            b.add(e2, Scalar(-static_cast<long>(e[c])) * f * A);
          }
        }
      }
    per_a.push_back(b.build());
    rows += per_a.back().rows();
  }
  Matrix all = Matrix::zero(rows, per_a[0].cols());
  std::size_t r0 = 0;
  for (const auto& m : per_a) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) all(r0 + r, c) = m(r, c);
    r0 += m.rows();
  }
  return oracle::nullity(all);
}

// Commutant {A : [tau_a, A] = 0 for all a}.
std::size_t commutant_dim(const RepData& rep) {
  const std::size_t n = rep.tau.size(), d = rep.dim_v();
  Matrix m = Matrix::zero(n * d * d, d * d);
  for (std::size_t j = 0; j < d * d; ++j) {
    Matrix A = Matrix::unit(d, j / d, j % d);
    for (std::size_t a = 0; a < n; ++a) {
      Matrix c = mat_commutator(rep.tau[a], A);
      for (std::size_t i = 0; i < d * d; ++i) m(a * d * d + i, j) = c(i / d, i % d);
    }
  }
  return oracle::nullity(m);
}

}  // namespace

TEST_SUITE("flat_solver") {
  TEST_CASE("classical flat and basic dimensions match dense oracles") {
    for (const char* name : {"so3", "sl2", "heisenberg3"})
      for (const char* rep : {"adjoint", "standard", "trivial"}) {
        auto b = builtin(name);
        auto alg = ClassicalAlgebra::make(b.lie, b.reps.at(rep));
        auto flat = flat_subspace(*alg, 2);
        auto basic = basic_subspace(*alg, 2);
        for (unsigned k = 0; k <= 2; ++k) {
          CAPTURE(name);
          CAPTURE(rep);
          CAPTURE(k);
          CHECK(flat.dim(k) == dense_flat_dim(b.lie, b.reps.at(rep), k));
          CHECK(basic.dim(k) == dense_basic_dim(b.lie, b.reps.at(rep), k));
          CHECK(horizontal_dimension(*alg, k) ==
                monomials(3, k).size() * b.reps.at(rep).dim_v() * b.reps.at(rep).dim_v());
        }
        CHECK(flat.dim(0) == commutant_dim(b.reps.at(rep)));
      }
  }

  TEST_CASE("solver vectors really are flat and basic") {
    auto b = builtin("so3");
    auto alg = ClassicalAlgebra::make(b.lie, b.reps.at("adjoint"));
    const auto& C = alg->curvature_poly();
    for (const auto& block : flat_subspace(*alg, 2).per_degree)
      for (const auto& x : block) CHECK(alg->supercommutator(C, x).is_zero());
    for (const auto& block : basic_subspace(*alg, 2).per_degree)
      for (const auto& x : block)
        for (std::size_t a = 0; a < 3; ++a) CHECK(alg->lie_derivative(a, x).is_zero());
  }

  TEST_CASE("classical basic is contained in flat") {
    for (const char* name : {"so3", "sl2"})
      for (const char* rep : {"adjoint", "standard"}) {
        auto b = builtin(name);
        auto alg = ClassicalAlgebra::make(b.lie, b.reps.at(rep));
        for (const auto& row : inclusion_report(*alg, 2)) {
          CAPTURE(name);
          CAPTURE(rep);
          CAPTURE(row.deg);
          CHECK(row.basic_subset_flat);
          CHECK(row.dim_basic <= row.dim_flat);
        }
      }
  }

  TEST_CASE("full flat = exterior factor times horizontal flat") {
    auto b = builtin("so3");
    auto alg = ClassicalAlgebra::make(b.lie, b.reps.at("adjoint"));
    for (const auto& row : decomposition_check(*alg, 1)) {
      CHECK(row.factor == 8);
      CHECK(row.dim_full_flat == 8 * row.dim_hor_flat);
      CHECK(row.ok());
    }
    auto q = QuantumAlgebra::make(b.lie, b.form, b.reps.at("adjoint"));
    for (const auto& row : decomposition_check(*q, 1)) {
      CHECK(row.dim_full_flat == 8 * row.dim_hor_flat);
      CHECK(row.ok());
    }
  }

  TEST_CASE("quantum degree-0 flat = commutant") {
    auto b = builtin("so3");
    for (const char* rep : {"adjoint", "trivial"}) {
      auto q = QuantumAlgebra::make(b.lie, b.form, b.reps.at(rep));
      CHECK(flat_subspace(*q, 0).dim(0) == commutant_dim(b.reps.at(rep)));
      CHECK(basic_subspace(*q, 0).dim(0) == commutant_dim(b.reps.at(rep)));
    }
    auto ab = builtin("abelian(2)");
    auto q = QuantumAlgebra::make(ab.lie, ab.form, ab.reps.at("standard"));
    CHECK(flat_subspace(*q, 0).dim(0) == commutant_dim(ab.reps.at("standard")));
  }

  TEST_CASE("quantum flat vectors commute with the curvature") {
    auto b = builtin("so3");
    auto q = QuantumAlgebra::make(b.lie, b.form, b.reps.at("adjoint"));
    auto flat = flat_subspace(*q, 1);
    for (const auto& block : flat.per_degree)
      for (const auto& x : block) CHECK(q->supercommutator(q->curvature_poly(), x).is_zero());
    CHECK(horizontal_dimension(*q, 1) == 4 * 9);
  }

  TEST_CASE("closure of the flat subalgebra, 50 samples") {
    auto b = builtin("so3");
    auto alg = ClassicalAlgebra::make(b.lie, b.reps.at("adjoint"));
    auto r = closure_check(*alg, 2, 50, 7);
    CHECK(r.ok);
    CHECK(r.checks > 0);
    auto q = QuantumAlgebra::make(b.lie, b.form, b.reps.at("adjoint"));
    auto rq = closure_check(*q, 1, 50, 7);
    CHECK(rq.ok);
  }

  TEST_CASE("report JSON is deterministic and has schema 1") {
    auto b = builtin("so3");
    auto alg = ClassicalAlgebra::make(b.lie, b.reps.at("adjoint"));
    auto r1 = to_json(flat_report(*alg, "so3", "adjoint", 1, 5));
    auto r2 = to_json(flat_report(*alg, "so3", "adjoint", 1, 5));
    CHECK(r1 == r2);
    CHECK(r1.find("\"schema\": 1") != std::string::npos);
    CHECK(flat_report(*alg, "so3", "adjoint", 1, 5).ok());
    CHECK(to_text(flat_report(*alg, "so3", "adjoint", 1, 5)).find("deg") != std::string::npos);
  }
}
