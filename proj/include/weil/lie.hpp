#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weil/matrix.hpp"

namespace weil {

/// A raw structure-constant table f^c_{ab}, stored densely (0-based indices)
/// exactly as supplied. Only used for validation of possibly-broken input;
/// LieData is always antisymmetric by construction.
class StructureTable {
 public:
  explicit StructureTable(std::size_t dim) : dim_(dim), f_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Scalar& at(std::size_t a, std::size_t b, std::size_t c) {
    return f_[(a * dim_ + b) * dim_ + c];
  }
  const Scalar& at(std::size_t a, std::size_t b, std::size_t c) const {
    return f_[(a * dim_ + b) * dim_ + c];
  }

 private:
  std::size_t dim_;
  std::vector<Scalar> f_;
};

/// One nonzero structure constant f^c_{ab} with a < b (0-based).
struct BracketEntry {
  std::size_t a;
  std::size_t b;
  std::size_t c;
  Scalar value;
};

/// Lie algebra given by structure constants [e_a, e_b] = f^c_{ab} e_c.
///
/// Only entries with a < b are stored; f(b, a, c) is synthesised as
/// -f(a, b, c), and f(a, a, c) = 0.
class LieData {
 public:
  /// Throws Error on a >= b, out-of-range indices or duplicated (a, b, c).
  LieData(std::size_t dim, const std::vector<BracketEntry>& upper,
          std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<BracketEntry>& entries() const { return entries_; }

  const Scalar& f(std::size_t a, std::size_t b, std::size_t c) const {
    return table_.at(a, b, c);
  }
  /// Nonzero (c, f^c_{ab}) pairs of [e_a, e_b].
  const std::vector<std::pair<std::size_t, Scalar>>& bracket(
      std::size_t a, std::size_t b) const {
    return brackets_[a * dim_ + b];
  }
  bool is_abelian() const { return entries_.empty(); }

  const StructureTable& table() const { return table_; }

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<BracketEntry> entries_;
  StructureTable table_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> brackets_;
};

struct BilinearForm {
  Matrix B;
};

/// Representation a -> tau_a on V_tau.
struct RepData {
  std::string name;
  std::vector<Matrix> tau;

  std::size_t dim_v() const { return tau.empty() ? 0 : tau.front().rows(); }
};

struct Violation {
  std::string kind;  // "antisymmetry", "jacobi", "symmetry", ...
  std::vector<std::size_t> indices;  // 1-based
  std::string message;
};

struct ValidationReport {
  std::string subject;
  std::vector<Violation> violations;
  /// Set by validate_form: B equals the identity matrix.
  bool orthonormal = false;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Thrown when loaded data fails validation; carries the full report.
class ValidationFailure : public Error {
 public:
  explicit ValidationFailure(ValidationReport r) : Error(r.to_string()), report(std::move(r)) {}
  ValidationReport report;
};

ValidationReport validate_lie(const StructureTable& f);
ValidationReport validate_lie(const LieData& lie);
ValidationReport validate_form(const LieData& lie, const BilinearForm& form);
ValidationReport validate_rep(const LieData& lie, const RepData& rep);

/// (tau_a)_{cb} = f^c_{ab}.
RepData adjoint_rep(const LieData& lie);
RepData trivial_rep(const LieData& lie, std::size_t dim_v = 1);

struct AlgebraBundle {
  std::string name;
  LieData lie;
  std::optional<BilinearForm> form;
  std::map<std::string, RepData> reps;
};

/// Catalog: "abelian(n)", "heisenberg3", "so3", "sl2".
AlgebraBundle builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Parses the JSON definition format. Missing "trivial" and "adjoint" reps
/// are synthesised.
AlgebraBundle load_algebra_json(const std::string& text,
                                const std::string& name = "file");
AlgebraBundle load_algebra_file(const std::string& path);

}  // namespace weil
