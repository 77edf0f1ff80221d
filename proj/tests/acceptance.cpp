// Acceptance run: one PASS/FAIL line per criterion, with wall time and the
// time budget. Exit status is the number of failed criteria (capped at 1).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "oracles.hpp"
#include "weil/flat.hpp"
#include "weil/identity_suite.hpp"
#include "weil/random.hpp"

using namespace weil;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(WEIL_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

const std::vector<std::string> kLies{"abelian(2)", "heisenberg3", "so3", "sl2"};
const std::vector<std::string> kReps{"trivial", "standard", "adjoint"};

std::shared_ptr<const ClassicalAlgebra> classical(const std::string& lie, const std::string& rep) {
  auto b = builtin(lie);
  return ClassicalAlgebra::make(b.lie, b.reps.at(rep));
}

std::shared_ptr<const QuantumAlgebra> quantum(const std::string& lie, const std::string& rep) {
  auto b = builtin(lie);
  return QuantumAlgebra::make(b.lie, b.form, b.reps.at(rep));
}

void suite_into(Outcome& o, const std::vector<IdentityResult>& rs, const std::string& where) {
  for (const auto& r : rs)
    if (!r.pass) o.fail(where + ": " + r.name + " (" + r.detail + ")");
}

bool has_pass(const std::vector<IdentityResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r.pass;
  return false;
}

// 1. Operator identities, curvature, Bianchi on every builtin x rep.
Outcome criterion1() {
  Outcome o;
  SuiteOptions opts;  // 200 samples, degree <= 4
  for (const auto& lie : kLies)
    for (const auto& rep : kReps)
      suite_into(o, classical_suite(*classical(lie, rep), opts), lie + "/" + rep);
  return o;
}

// 2. On the identity part, d = d^W and d d = 0, 100 samples per algebra.
Outcome criterion2() {
  Outcome o;
  for (const auto& lie : kLies) {
    auto alg = classical(lie, "adjoint");
    RandomElements rnd(2);
    for (int t = 0; t < 100; ++t) {
      WeilPoly w = rnd.weil(alg->dim(), 4);
      WeilPoly dw = weil_differential(alg->lie(), w);
      if (cw_differential(embed(*alg, w)) != embed(*alg, dw)) o.fail(lie + ": d != d^W");
      if (!weil_differential(alg->lie(), dw).is_zero()) o.fail(lie + ": d^W d^W != 0");
    }
  }
  return o;
}

// 3. sum_a v^a L_a f = 0 for symmetric f.
Outcome criterion3() {
  Outcome o;
  for (const auto& lie : kLies) {
    auto alg = classical(lie, "trivial");
    RandomElements rnd(3);
    for (int t = 0; t < 100; ++t) {
      ClassicalElement f = embed(*alg, rnd.symmetric(alg->dim(), 4));
      ClassicalElement s = alg->zero();
      for (std::size_t a = 0; a < alg->dim(); ++a) s += alg->v(a) * cw_lie_derivative(a, f);
      if (!s.is_zero()) o.fail(lie + ": " + s.to_string());
    }
  }
  return o;
}

// 4. The quantum lemma table, Dirac^2 and gamma^2.
Outcome criterion4() {
  Outcome o;
  for (const std::string lie : {"so3", "abelian(2)"}) {
    auto alg = quantum(lie, "trivial");
    const auto& Q = *alg;
    const std::size_t n = Q.dim();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        QuantumElement expected = Q.zero();
        for (std::size_t c = 0; c < n; ++c) expected -= Q.lie().f(b, a, c) * Q.x(c);
        if (qw_supercommutator(Q.x(a), Q.g(b)) != expected) o.fail(lie + ": [x_a, g_b]");
      }
      if (qw_supercommutator(Q.x(a), Q.gamma()) != Q.g(a)) o.fail(lie + ": [x_a, gamma]");
      if (qw_supercommutator(Q.x(a), Q.dirac()) != Q.u(a) + Q.g(a)) o.fail(lie + ": [x_a, D]");
      if (!qw_supercommutator(Q.u(a) + Q.g(a), Q.dirac()).is_zero())
        o.fail(lie + ": [u_a + g_a, D]");
    }
    // gamma^2 from an independent sum of squares.
    Scalar sum;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) sum += Q.lie().f(a, b, c) * Q.lie().f(a, b, c);
    Scalar g2 = Scalar(-1, 48) * sum;
    if (Q.gamma() * Q.gamma() != Q.scalar(g2)) o.fail(lie + ": gamma^2");
    if (lie == "so3" && g2 != Scalar(-1, 8)) o.fail("so3: gamma^2 != -1/8");
    QuantumElement cas = Q.zero();
    for (std::size_t a = 0; a < n; ++a) cas += Q.u(a) * Q.u(a);
    if (Q.dirac() * Q.dirac() != Scalar(1, 2) * cas + Q.scalar(g2)) o.fail(lie + ": Dirac^2");
  }
  return o;
}

// 5. Quantum operator suite on so3 trivial/adjoint, 200 samples.
Outcome criterion5() {
  Outcome o;
  for (const std::string rep : {"trivial", "adjoint"}) {
    auto alg = quantum("so3", rep);
    auto rs = quantum_suite(*alg, SuiteOptions{});
    suite_into(o, rs, "so3/" + rep);
    if (!has_pass(rs, "QC = 1/2 [Dirac + x_a tau_a, Dirac + x_a tau_a]"))
      o.fail(rep + ": four-term curvature");
    if (!has_pass(rs, "identity part: d = d^W + iota_a tau_a")) o.fail(rep + ": restriction");
    if (rep == "adjoint" && !has_pass(rs, "d x1 != d^W x1")) o.fail("adjoint: witness");
  }
  return o;
}

// 6. PBW confluence on 500 words of length <= 5.
Outcome criterion6() {
  Outcome o;
  auto r = pbw_confluence(builtin("so3").lie, 6, 500, 5);
  if (!r.pass) o.fail(r.detail);
  return o;
}

std::size_t dense_commutant(const RepData& rep) {
  const std::size_t n = rep.tau.size(), d = rep.dim_v();
  Matrix m = Matrix::zero(n * d * d, d * d);
  for (std::size_t j = 0; j < d * d; ++j) {
    Matrix A = Matrix::unit(d, j / d, j % d);
    for (std::size_t a = 0; a < n; ++a) {
      Matrix c = rep.tau[a] * A - A * rep.tau[a];
      for (std::size_t i = 0; i < d * d; ++i) m(a * d * d + i, j) = c(i / d, i % d);
    }
  }
  return oracle::nullity(m);
}

// 7. Flat solver.
Outcome criterion7() {
  Outcome o;
  for (const std::string lie : {"so3", "sl2"})
    for (const std::string rep : {"adjoint", "standard"})
      for (const auto& row : inclusion_report(*classical(lie, rep), 2))
        if (!row.basic_subset_flat)
          o.fail(lie + "/" + rep + ": basic not in flat at degree " + std::to_string(row.deg));
  for (const auto& row : decomposition_check(*classical("so3", "adjoint"), 1))
    if (!row.ok() || row.dim_full_flat != 8 * row.dim_hor_flat)
      o.fail("classical decomposition at degree " + std::to_string(row.deg));
  for (const auto& row : decomposition_check(*quantum("so3", "adjoint"), 1))
    if (!row.ok() || row.dim_full_flat != 8 * row.dim_hor_flat)
      o.fail("quantum decomposition at degree " + std::to_string(row.deg));
  for (const auto& lie : kLies)
    for (const auto& rep : kReps) {
      auto b = builtin(lie);
      std::size_t expect = dense_commutant(b.reps.at(rep));
      if (flat_subspace(*classical(lie, rep), 0).dim(0) != expect)
        o.fail(lie + "/" + rep + ": degree-0 flat != commutant");
      if (b.form && flat_subspace(*quantum(lie, rep), 0).dim(0) != expect)
        o.fail(lie + "/" + rep + ": quantum degree-0 flat != commutant");
    }
  return o;
}

// 8. Schema-1 quantum flat report, byte-identical across runs.
Outcome criterion8() {
  Outcome o;
  const std::string args = "flat --quantum --builtin so3 --rep adjoint --max-degree 2 --json --seed 1";
  Run a = run(args), b = run(args);
  if (a.status != 0) o.fail("exit " + std::to_string(a.status) + ": " + a.out);
  if (a.out != b.out) o.fail("outputs differ between runs");
  try {
    auto j = nlohmann::json::parse(a.out);
    if (j.at("schema") != 1) o.fail("schema is not 1");
    if (j.at("per_degree").size() != 3) o.fail("expected degrees 0..2");
  } catch (const std::exception& e) {
    o.fail(std::string("bad JSON: ") + e.what());
  }
  return o;
}

// 9. CLI exit-code contract.
Outcome criterion9() {
  Outcome o;
  for (const char* ctx : {"--classical", "--quantum"}) {
    Run r = run(std::string("check --builtin so3 --rep adjoint ") + ctx);
    if (r.status != 0) o.fail(std::string(ctx) + " exit " + std::to_string(r.status));
  }
  const std::string good = std::string(WEIL_TEST_DATA_DIR) + "/so3.json";
  const std::string bad = std::string(WEIL_TEST_DATA_DIR) + "/so3_corrupted.json";
  Run g = run("validate " + good);
  if (g.status != 0) o.fail("valid file: exit " + std::to_string(g.status));
  Run v = run("validate " + bad);
  if (v.status != 1) o.fail("corrupted file: exit " + std::to_string(v.status));
  if (v.out.find("(1,2,3)") == std::string::npos) o.fail("triple (1,2,3) not named");
  Run c = run("check --file " + bad + " --classical");
  if (c.status != 1) o.fail("check on corrupted file: exit " + std::to_string(c.status));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> all{
      {1, "classical identity suite", 30, criterion1},
      {2, "classical restriction d = d^W, d^2 = 0", 5, criterion2},
      {3, "sum_a v^a L_a f = 0", 5, criterion3},
      {4, "quantum lemmas, Dirac^2, gamma^2", 10, criterion4},
      {5, "quantum operator suite", 60, criterion5},
      {6, "PBW confluence", 10, criterion6},
      {7, "flat solver", 120, criterion7},
      {8, "reproducible quantum flat JSON", 180, criterion8},
      {9, "CLI contract", 30, criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget) o.fail("over time budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
         << secs << " s < " << c.budget << " s)";
    if (!o.pass) line << " -- " << o.note;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
