// Loader for the JSON Lie-algebra definition format:
//
//   {"dim": n,
//    "basis": ["e", "f", "h"],                          (optional)
//    "f": [[a, b, c, "p/q"], ...],                      (1-based, [e_a,e_b] ∋ f^c_ab e_c)
//    "B": [[...], ...],                                  (optional)
//    "reps": {"name": {"dim_v": d, "matrices": [[[...]]]}}}

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "weil/lie.hpp"

namespace weil {

namespace {

using nlohmann::json;

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw Error(where + ": expected an integer or a \"p/q\" string");
}

std::size_t index_from_json(const json& j, std::size_t dim,
                            const std::string& where) {
  if (!j.is_number_integer()) throw Error(where + ": index must be an integer");
  long v = j.get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw Error(where + ": index " + std::to_string(v) + " out of range 1.." +
                std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected a matrix (array of rows)");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(where + ": matrix rows must be arrays");
    std::vector<Scalar> r;
    for (const auto& e : row) r.push_back(scalar_from_json(e, where));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

}  // namespace

AlgebraBundle load_algebra_json(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(name + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw Error(name + ": top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<long>() < 1)
    throw Error(name + ": \"dim\" must be a positive integer");
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long>());

  std::vector<std::string> basis;
  if (doc.contains("basis")) basis = doc["basis"].get<std::vector<std::string>>();

  // Entries may be given for either order of (a, b); the raw table is
  // validated before anything assumes antisymmetry.
  StructureTable table(dim);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> given;
  if (doc.contains("f")) {
    for (const auto& e : doc["f"]) {
      if (!e.is_array() || e.size() != 4)
        throw Error(name + ": each \"f\" entry must be [a, b, c, value]");
      std::size_t a = index_from_json(e[0], dim, name + ": f");
      std::size_t b = index_from_json(e[1], dim, name + ": f");
      std::size_t c = index_from_json(e[2], dim, name + ": f");
      if (!given.insert({a, b, c}).second)
        throw Error(name + ": duplicate f entry (" + std::to_string(a + 1) + "," +
                    std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
      table.at(a, b, c) = scalar_from_json(e[3], name + ": f");
    }
    // A one-sided entry implies its antisymmetric partner.
    for (const auto& [a, b, c] : given)
      if (!given.contains({b, a, c})) table.at(b, a, c) = -table.at(a, b, c);
  }
  ValidationReport report = validate_lie(table);
  report.subject = name;
  if (!report.ok()) throw ValidationFailure(report);

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c)
        if (!table.at(a, b, c).is_zero()) entries.push_back({a, b, c, table.at(a, b, c)});
  LieData lie(dim, entries, basis);

  std::optional<BilinearForm> form;
  if (doc.contains("B")) form = BilinearForm{matrix_from_json(doc["B"], name + ": B")};

  AlgebraBundle bundle{doc.value("name", name), std::move(lie), std::move(form), {}};
  if (doc.contains("reps")) {
    for (const auto& [rep_name, def] : doc["reps"].items()) {
      const std::string where = name + ": rep '" + rep_name + "'";
      if (!def.contains("matrices"))
        throw Error(where + ": missing \"matrices\"");
      RepData rep{rep_name, {}};
      for (const auto& m : def["matrices"])
        rep.tau.push_back(matrix_from_json(m, where));
      if (def.contains("dim_v")) {
        auto d = def["dim_v"].get<std::size_t>();
        for (const auto& m : rep.tau)
          if (m.rows() != d || m.cols() != d)
            throw Error(where + ": matrices must be dim_v x dim_v");
      }
      bundle.reps.emplace(rep_name, std::move(rep));
    }
  }
  if (!bundle.reps.contains("trivial"))
    bundle.reps.emplace("trivial", trivial_rep(bundle.lie));
  if (!bundle.reps.contains("adjoint"))
    bundle.reps.emplace("adjoint", adjoint_rep(bundle.lie));
  return bundle;
}

AlgebraBundle load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra_json(ss.str(), path);
}

}  // namespace weil
