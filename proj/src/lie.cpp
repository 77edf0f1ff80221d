#include "weil/lie.hpp"

#include "weil/nullspace.hpp"

#include <set>
#include <sstream>
#include <tuple>

namespace weil {

LieData::LieData(std::size_t dim, const std::vector<BracketEntry>& upper,
                 std::vector<std::string> basis_names)
    : dim_(dim),
      names_(std::move(basis_names)),
      table_(dim),
      brackets_(dim * dim) {
  if (dim == 0) throw Error("Lie algebra dimension must be positive");
  if (names_.empty())
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != dim) throw Error("basis_names length differs from dim");

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& e : upper) {
    if (e.a >= dim || e.b >= dim || e.c >= dim)
      throw Error("structure constant index out of range");
    if (e.a >= e.b)
      throw Error("structure constants must be listed with a < b; got (" +
                  std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) +
                  "," + std::to_string(e.c + 1) + ")");
    if (!seen.emplace(e.a, e.b, e.c).second)
      throw Error("duplicate structure constant (" + std::to_string(e.a + 1) +
                  "," + std::to_string(e.b + 1) + "," +
                  std::to_string(e.c + 1) + ")");
    if (e.value.is_zero()) continue;
    entries_.push_back(e);
    table_.at(e.a, e.b, e.c) = e.value;
    table_.at(e.b, e.a, e.c) = -e.value;
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c)
        if (!table_.at(a, b, c).is_zero())
          brackets_[a * dim + b].emplace_back(c, table_.at(a, b, c));
}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
         std::to_string(c + 1) + ")";
}

}  // namespace

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  os << subject << ": ";
  if (ok()) {
    os << "ok";
  } else {
    os << violations.size() << " violation(s)";
    for (const auto& v : violations) os << "\n  " << v.kind << ": " << v.message;
  }
  return os.str();
}

ValidationReport validate_lie(const StructureTable& f) {
  ValidationReport report{"lie algebra", {}, false};
  const std::size_t n = f.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (f.at(a, b, c) + f.at(b, a, c) != Scalar(0))
          report.violations.push_back(
              {"antisymmetry",
               {a + 1, b + 1, c + 1},
               "f^c_ab != -f^c_ba at (a,b,c) = " + triple(a, b, c) +
                   ": f^c_ab = " + f.at(a, b, c).to_string() +
                   ", f^c_ba = " + f.at(b, a, c).to_string()});
      }
  // sum_m f^m_ab f^d_mc + f^m_bc f^d_ma + f^m_ca f^d_mb = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Scalar s;
          for (std::size_t m = 0; m < n; ++m) {
            s += f.at(a, b, m) * f.at(m, c, d);
            s += f.at(b, c, m) * f.at(m, a, d);
            s += f.at(c, a, m) * f.at(m, b, d);
          }
          if (!s.is_zero())
            report.violations.push_back(
                {"jacobi",
                 {a + 1, b + 1, c + 1, d + 1},
                 "Jacobi identity fails at (a,b,c) = " + triple(a, b, c) +
                     ", component e" + std::to_string(d + 1) + ": " +
                     s.to_string()});
        }
  return report;
}

ValidationReport validate_lie(const LieData& lie) {
  return validate_lie(lie.table());
}

ValidationReport validate_form(const LieData& lie, const BilinearForm& form) {
  ValidationReport report{"bilinear form", {}, false};
  const std::size_t n = lie.dim();
  const Matrix& B = form.B;
  if (B.rows() != n || B.cols() != n) {
    report.violations.push_back(
        {"shape", {}, "B must be " + std::to_string(n) + "x" + std::to_string(n)});
    return report;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (B(a, b) != B(b, a))
        report.violations.push_back(
            {"symmetry",
             {a + 1, b + 1},
             "B_ab != B_ba at (" + std::to_string(a + 1) + "," +
                 std::to_string(b + 1) + ")"});
  if (rank(B) != n)
    report.violations.push_back({"degenerate", {}, "B is not invertible"});
  // f^c_ab B_cd + f^c_ad B_bc = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        Scalar s;
        for (std::size_t c = 0; c < n; ++c) {
          s += lie.f(a, b, c) * B(c, d);
          s += lie.f(a, d, c) * B(b, c);
        }
        if (!s.is_zero())
          report.violations.push_back(
              {"invariance",
               {a + 1, b + 1, d + 1},
               "f^c_ab B_cd + f^c_ad B_bc != 0 at (a,b,d) = " +
                   triple(a, b, d) + ": " + s.to_string()});
      }
  report.orthonormal = B.is_identity();
  return report;
}

ValidationReport validate_rep(const LieData& lie, const RepData& rep) {
  ValidationReport report{"representation '" + rep.name + "'", {}, false};
  const std::size_t n = lie.dim();
  if (rep.tau.size() != n) {
    report.violations.push_back(
        {"shape", {}, "expected " + std::to_string(n) + " matrices"});
    return report;
  }
  const std::size_t d = rep.dim_v();
  for (std::size_t a = 0; a < n; ++a)
    if (rep.tau[a].rows() != d || rep.tau[a].cols() != d) {
      report.violations.push_back(
          {"shape", {a + 1}, "tau_" + std::to_string(a + 1) + " is not " +
                                 std::to_string(d) + "x" + std::to_string(d)});
      return report;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix expected(d, d);
      for (const auto& [c, v] : lie.bracket(a, b)) expected += v * rep.tau[c];
      if (mat_commutator(rep.tau[a], rep.tau[b]) != expected)
        report.violations.push_back(
            {"homomorphism",
             {a + 1, b + 1},
             "[tau_a, tau_b] != f^c_ab tau_c at (a,b) = (" +
                 std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"});
    }
  return report;
}

RepData adjoint_rep(const LieData& lie) {
  const std::size_t n = lie.dim();
  RepData rep{"adjoint", {}};
  for (std::size_t a = 0; a < n; ++a) {
    Matrix m(n, n);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [c, v] : lie.bracket(a, b)) m(c, b) = v;
    rep.tau.push_back(std::move(m));
  }
  return rep;
}

RepData trivial_rep(const LieData& lie, std::size_t dim_v) {
  return RepData{"trivial", std::vector<Matrix>(lie.dim(), Matrix(dim_v, dim_v))};
}

namespace {

AlgebraBundle make_bundle(std::string name, LieData lie,
                          std::optional<BilinearForm> form,
                          std::optional<RepData> standard) {
  AlgebraBundle bundle{std::move(name), std::move(lie), std::move(form), {}};
  bundle.reps.emplace("trivial", trivial_rep(bundle.lie));
  bundle.reps.emplace("adjoint", adjoint_rep(bundle.lie));
  if (standard) {
    standard->name = "standard";
    bundle.reps.emplace("standard", std::move(*standard));
  }
  return bundle;
}

AlgebraBundle abelian(std::size_t n) {
  LieData lie(n, {});
  RepData standard{"standard", {}};
  for (std::size_t a = 0; a < n; ++a) standard.tau.push_back(Matrix::unit(n, a, a));
  return make_bundle("abelian(" + std::to_string(n) + ")", std::move(lie),
                     BilinearForm{Matrix::identity(n)}, std::move(standard));
}

AlgebraBundle heisenberg3() {
  // [e1, e2] = e3, e3 central.
  LieData lie(3, {{0, 1, 2, Scalar(1)}}, {"p", "q", "z"});
  RepData standard{"standard",
                   {Matrix::unit(3, 0, 1), Matrix::unit(3, 1, 2),
                    Matrix::unit(3, 0, 2)}};
  return make_bundle("heisenberg3", std::move(lie), std::nullopt,
                     std::move(standard));
}

AlgebraBundle so3() {
  // f^c_ab = epsilon_abc
  LieData lie(3,
              {{0, 1, 2, Scalar(1)}, {0, 2, 1, Scalar(-1)}, {1, 2, 0, Scalar(1)}});
  RepData standard = adjoint_rep(lie);
  return make_bundle("so3", std::move(lie), BilinearForm{Matrix::identity(3)},
                     std::move(standard));
}

AlgebraBundle sl2() {
  // basis {e, f, h}: [e,f] = h, [h,e] = 2e, [h,f] = -2f
  LieData lie(3,
              {{0, 1, 2, Scalar(1)}, {0, 2, 0, Scalar(-2)}, {1, 2, 1, Scalar(2)}},
              {"e", "f", "h"});
  RepData standard{"standard",
                   {Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}},
                    Matrix{{1, 0}, {0, -1}}}};
  return make_bundle("sl2", std::move(lie), std::nullopt, std::move(standard));
}

}  // namespace

AlgebraBundle builtin(const std::string& name) {
  if (name == "so3") return so3();
  if (name == "sl2") return sl2();
  if (name == "heisenberg3") return heisenberg3();
  if (name.starts_with("abelian(") && name.ends_with(")")) {
    std::string digits = name.substr(8, name.size() - 9);
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(digits, &used);
      if (used != digits.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n == 0 || n > 16) throw Error("abelian(n) needs 1 <= n <= 16");
    return abelian(n);
  }
  throw Error("unknown builtin Lie algebra '" + name +
              "' (known: abelian(n), heisenberg3, so3, sl2)");
}

std::vector<std::string> builtin_names() {
  return {"abelian(2)", "heisenberg3", "so3", "sl2"};
}

}  // namespace weil
