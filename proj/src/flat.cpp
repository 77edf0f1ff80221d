#include "weil/flat.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "weil/nullspace.hpp"
#include "weil/random.hpp"

namespace weil {

namespace {

// All exponent vectors of total degree d in n variables.
void exponent_vectors(std::size_t n, unsigned d, std::vector<unsigned>& cur, std::size_t i,
                      std::vector<std::vector<unsigned>>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    cur[i] = e;
    exponent_vectors(n, d - e, cur, i + 1, out);
  }
}

template <class M>
std::vector<M> monomials(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> cur(n, 0);
  exponent_vectors(n, d, cur, 0, exps);
  std::vector<M> out;
  for (auto& e : exps) out.emplace_back(std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

struct ClassicalSide {
  using Alg = ClassicalAlgebra;
  using Key = ClassicalKey;
  using P = ClassicalPoly;
  using Even = SymMonomial;
  using Odd = ExtMonomial;
  static constexpr const char* name = "classical";
  static constexpr bool cumulative = false;

  static Key key(const Even& e, const Odd& o) { return {e, o}; }
  static const Even& even(const Key& k) { return k.sym; }
  static const Odd& odd(const Key& k) { return k.ext; }
};

struct QuantumSide {
  using Alg = QuantumAlgebra;
  using Key = QuantumKey;
  using P = QuantumPoly;
  using Even = PbwMonomial;
  using Odd = CliffMonomial;
  static constexpr const char* name = "quantum";
  static constexpr bool cumulative = true;

  static Key key(const Even& e, const Odd& o) { return {e, o}; }
  static const Even& even(const Key& k) { return k.u; }
  static const Odd& odd(const Key& k) { return k.x; }
};

// Even monomials of block k: degree exactly k, or <= k for the filtration.
template <class S>
std::vector<typename S::Even> block_monomials(std::size_t n, unsigned k) {
  if (!S::cumulative) return monomials<typename S::Even>(n, k);
  std::vector<typename S::Even> out;
  for (unsigned d = 0; d <= k; ++d) {
    auto m = monomials<typename S::Even>(n, d);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

// Coordinates of a block: (key, row, col) of a matrix unit.
template <class S>
class Block {
 public:
  using Key = typename S::Key;
  using Coord = std::tuple<Key, std::size_t, std::size_t>;

  Block(const typename S::Alg& alg, unsigned k, bool full) : dv_(alg.dim_v()) {
    const std::size_t n = alg.dim();
    std::vector<typename S::Odd> odds{typename S::Odd()};
    if (full) {
      odds.clear();
      for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
        odds.emplace_back(bits);
      std::sort(odds.begin(), odds.end());
    }
    std::vector<Key> keys;
    for (const auto& e : block_monomials<S>(n, k))
      for (const auto& o : odds) keys.push_back(S::key(e, o));
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys)
      for (std::size_t r = 0; r < dv_; ++r)
        for (std::size_t c = 0; c < dv_; ++c) {
          index_.emplace(Coord{key, r, c}, coords_.size());
          coords_.emplace_back(key, r, c);
        }
  }

  std::size_t size() const { return coords_.size(); }

  typename S::P element(std::size_t i) const {
    const auto& [key, r, c] = coords_[i];
    return typename S::P(key, Matrix::unit(dv_, r, c));
  }

  typename S::P element(const SparseRow& v) const {
    std::map<Key, Matrix> acc;
    for (const auto& [i, s] : v) {
      const auto& [key, r, c] = coords_[i];
      auto it = acc.try_emplace(key, Matrix::zero(dv_, dv_)).first;
      it->second(r, c) += s;
    }
    typename S::P p;
    for (auto& [key, m] : acc) p.add(key, m);
    return p;
  }

  SparseRow vector(const typename S::P& p) const {
    SparseRow out;
    for (const auto& [key, m] : p.terms())
      for (std::size_t r = 0; r < dv_; ++r)
        for (std::size_t c = 0; c < dv_; ++c) {
          if (m(r, c).is_zero()) continue;
          auto it = index_.find(Coord{key, r, c});
          if (it == index_.end()) throw Error("element leaves its degree block");
          out.emplace_back(it->second, m(r, c));
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  std::size_t dv_;
  std::vector<Coord> coords_;
  std::map<Coord, std::size_t> index_;
};

template <class S>
using LinearMap = std::function<typename S::P(const typename S::P&)>;

// Common kernel of the maps on the block, as sparse coordinate vectors. The
// codomain coordinates are numbered in order of first appearance.
template <class S>
std::vector<SparseRow> common_kernel(const Block<S>& block, const std::vector<LinearMap<S>>& maps) {
  using Key = typename S::Key;
  std::map<std::tuple<std::size_t, Key, std::size_t, std::size_t>, std::size_t> codomain;
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const auto e = block.element(i);
    for (std::size_t m = 0; m < maps.size(); ++m) {
      const auto image = maps[m](e);
      for (const auto& [key, mat] : image.terms())
        for (std::size_t r = 0; r < mat.rows(); ++r)
          for (std::size_t c = 0; c < mat.cols(); ++c) {
            if (mat(r, c).is_zero()) continue;
            auto [it, fresh] = codomain.try_emplace({m, key, r, c}, rows.size());
            if (fresh) rows.emplace_back();
            rows[it->second].emplace_back(i, mat(r, c));
          }
    }
  }
  return Echelon(rows, block.size()).sparse_kernel();
}

template <class S>
std::vector<LinearMap<S>> lie_maps(const typename S::Alg& alg) {
  std::vector<LinearMap<S>> maps;
  for (std::size_t a = 0; a < alg.dim(); ++a)
    maps.push_back([&alg, a](const typename S::P& x) { return alg.lie_derivative(a, x); });
  return maps;
}

template <class S>
std::vector<LinearMap<S>> curvature_map(const typename S::Alg& alg) {
  return {[&alg](const typename S::P& x) {
    return alg.supercommutator(alg.curvature_poly(), x);
  }};
}

template <class S>
typename S::P identity_times(const typename S::Alg& alg, const typename S::Key& k) {
  return typename S::P(k, Matrix::identity(alg.dim_v()));
}

template <class S>
SubspaceResult<typename S::P> solve_blocks(const typename S::Alg& alg, unsigned N, bool full,
                                           const std::vector<LinearMap<S>>& maps,
                                           std::string kind) {
  SubspaceResult<typename S::P> out{std::move(kind), {}};
  for (unsigned k = 0; k <= N; ++k) {
    Block<S> block(alg, k, full);
    std::vector<typename S::P> basis;
    for (const auto& v : common_kernel<S>(block, maps)) basis.push_back(block.element(v));
    out.per_degree.push_back(std::move(basis));
  }
  return out;
}

template <class S>
std::vector<SparseRow> vectors(const Block<S>& block, const std::vector<typename S::P>& ps) {
  std::vector<SparseRow> out;
  for (const auto& p : ps) out.push_back(block.vector(p));
  return out;
}

template <class S>
std::vector<FlatRow> inclusion(const typename S::Alg& alg, unsigned N) {
  auto basic = solve_blocks<S>(alg, N, false, lie_maps<S>(alg), "basic");
  auto flat = solve_blocks<S>(alg, N, false, curvature_map<S>(alg), "flat");
  std::vector<FlatRow> rows;
  for (unsigned k = 0; k <= N; ++k) {
    Block<S> block(alg, k, false);
    FlatRow row;
    row.deg = k;
    row.dim_hor = block.size();
    row.dim_basic = basic.dim(k);
    row.dim_flat = flat.dim(k);
    const auto B = vectors(block, basic.per_degree[k]);
    const auto F = vectors(block, flat.per_degree[k]);
    row.basic_subset_flat = span_contains(F, B, block.size());

    // Even monomials of degree m times basic elements of block j, m + j = k
    // (classical) or m <= k - j (quantum).
    std::vector<SparseRow> sb;
    for (unsigned j = 0; j <= k; ++j) {
      for (const auto& m : block_monomials<S>(alg.dim(), k - j)) {
        const auto left = identity_times<S>(alg, S::key(m, typename S::Odd()));
        for (const auto& b : basic.per_degree[j]) sb.push_back(block.vector(alg.mul(left, b)));
      }
    }
    row.dim_s_basic = rank_of(sb, block.size());
    row.s_basic_equals_flat = span_equal(sb, F, block.size());
    rows.push_back(row);
  }
  return rows;
}

template <class S>
std::vector<DecompositionRow> decomposition(const typename S::Alg& alg, unsigned N) {
  auto hor = solve_blocks<S>(alg, N, false, curvature_map<S>(alg), "flat");
  auto full = solve_blocks<S>(alg, N, true, curvature_map<S>(alg), "full flat");
  const std::size_t n = alg.dim();
  std::vector<DecompositionRow> rows;
  for (unsigned k = 0; k <= N; ++k) {
    Block<S> block(alg, k, true);
    DecompositionRow row;
    row.deg = k;
    row.dim_hor_flat = hor.dim(k);
    row.dim_full_flat = full.dim(k);
    row.factor = std::size_t{1} << n;
    row.dims_match = row.dim_full_flat == row.factor * row.dim_hor_flat;
    std::vector<SparseRow> tensor;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
      const auto left = identity_times<S>(alg, S::key(typename S::Even(n), typename S::Odd(bits)));
      for (const auto& b : hor.per_degree[k]) tensor.push_back(block.vector(alg.mul(left, b)));
    }
    row.span_match = span_equal(tensor, vectors(block, full.per_degree[k]), block.size());
    rows.push_back(row);
  }
  return rows;
}

template <class S>
unsigned even_degree(const typename S::P& p) {
  unsigned d = 0;
  for (const auto& [k, m] : p.terms()) d = std::max(d, S::even(k).degree());
  return d;
}

template <class S>
ClosureReport closure(const typename S::Alg& alg, unsigned N, std::size_t samples,
                      std::uint64_t seed) {
  ClosureReport rep;
  rep.seed = seed;
  rep.samples = samples;
  auto full = solve_blocks<S>(alg, N, true, curvature_map<S>(alg), "full flat");
  std::vector<typename S::P> pool;
  for (const auto& block : full.per_degree) pool.insert(pool.end(), block.begin(), block.end());
  if (pool.empty()) return rep;

  RandomElements rnd(seed);
  auto flat = [&](const typename S::P& x) {
    return alg.supercommutator(alg.curvature_poly(), x).is_zero();
  };
  auto pick = [&] {
    auto p = pool[rnd.index(pool.size())] * rnd.nonzero_rational();
    p += pool[rnd.index(pool.size())] * rnd.nonzero_rational();
    return p;
  };
  auto fail = [&](const std::string& what, const typename S::P& x) {
    ++rep.checks;
    if (rep.ok) {
      rep.ok = false;
      rep.failure = what + " of " + alg.from_poly(x).to_string();
    }
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = pick(), q = pick();
    if (!flat(alg.mul(p, q))) fail("product", p);
    else ++rep.checks;
    for (std::size_t a = 0; a < alg.dim(); ++a) {
      if (!flat(alg.lie_derivative(a, p))) fail("L_" + std::to_string(a + 1), p);
      else ++rep.checks;
      if (!flat(alg.contraction(a, p))) fail("iota_" + std::to_string(a + 1), p);
      else ++rep.checks;
    }
    if (N >= 1 && even_degree<S>(p) <= N - 1) {
      if (!flat(alg.differential(p))) fail("d", p);
      else ++rep.checks;
    }
  }
  return rep;
}

template <class S>
FlatReport report(const typename S::Alg& alg, const std::string& lie_name,
                  const std::string& rep_name, unsigned N, std::uint64_t seed,
                  std::size_t closure_samples) {
  FlatReport r;
  r.algebra = S::name;
  r.lie = lie_name;
  r.rep = rep_name;
  r.N = N;
  r.seed = seed;
  r.per_degree = inclusion<S>(alg, N);
  r.basic_subset_flat_status = S::cumulative ? "observed" : "theorem";
  r.decomposition = decomposition<S>(alg, N);
  r.closure = closure<S>(alg, N, closure_samples, seed);
  return r;
}

}  // namespace

std::size_t horizontal_dimension(const ClassicalAlgebra& alg, unsigned k) {
  return Block<ClassicalSide>(alg, k, false).size();
}
std::size_t horizontal_dimension(const QuantumAlgebra& alg, unsigned k) {
  return Block<QuantumSide>(alg, k, false).size();
}

SubspaceResult<ClassicalPoly> basic_subspace(const ClassicalAlgebra& alg, unsigned N) {
  return solve_blocks<ClassicalSide>(alg, N, false, lie_maps<ClassicalSide>(alg), "basic");
}
SubspaceResult<QuantumPoly> basic_subspace(const QuantumAlgebra& alg, unsigned N) {
  return solve_blocks<QuantumSide>(alg, N, false, lie_maps<QuantumSide>(alg), "basic");
}
SubspaceResult<ClassicalPoly> flat_subspace(const ClassicalAlgebra& alg, unsigned N) {
  return solve_blocks<ClassicalSide>(alg, N, false, curvature_map<ClassicalSide>(alg), "flat");
}
SubspaceResult<QuantumPoly> flat_subspace(const QuantumAlgebra& alg, unsigned N) {
  return solve_blocks<QuantumSide>(alg, N, false, curvature_map<QuantumSide>(alg), "flat");
}
SubspaceResult<ClassicalPoly> full_flat_subspace(const ClassicalAlgebra& alg, unsigned N) {
  return solve_blocks<ClassicalSide>(alg, N, true, curvature_map<ClassicalSide>(alg), "full flat");
}
SubspaceResult<QuantumPoly> full_flat_subspace(const QuantumAlgebra& alg, unsigned N) {
  return solve_blocks<QuantumSide>(alg, N, true, curvature_map<QuantumSide>(alg), "full flat");
}

std::vector<FlatRow> inclusion_report(const ClassicalAlgebra& alg, unsigned N) {
  return inclusion<ClassicalSide>(alg, N);
}
std::vector<FlatRow> inclusion_report(const QuantumAlgebra& alg, unsigned N) {
  return inclusion<QuantumSide>(alg, N);
}

std::vector<DecompositionRow> decomposition_check(const ClassicalAlgebra& alg, unsigned N) {
  return decomposition<ClassicalSide>(alg, N);
}
std::vector<DecompositionRow> decomposition_check(const QuantumAlgebra& alg, unsigned N) {
  return decomposition<QuantumSide>(alg, N);
}

ClosureReport closure_check(const ClassicalAlgebra& alg, unsigned N, std::size_t samples,
                            std::uint64_t seed) {
  return closure<ClassicalSide>(alg, N, samples, seed);
}
ClosureReport closure_check(const QuantumAlgebra& alg, unsigned N, std::size_t samples,
                            std::uint64_t seed) {
  return closure<QuantumSide>(alg, N, samples, seed);
}

FlatReport flat_report(const ClassicalAlgebra& alg, const std::string& lie_name,
                       const std::string& rep_name, unsigned N, std::uint64_t seed,
                       std::size_t closure_samples) {
  return report<ClassicalSide>(alg, lie_name, rep_name, N, seed, closure_samples);
}
FlatReport flat_report(const QuantumAlgebra& alg, const std::string& lie_name,
                       const std::string& rep_name, unsigned N, std::uint64_t seed,
                       std::size_t closure_samples) {
  return report<QuantumSide>(alg, lie_name, rep_name, N, seed, closure_samples);
}

bool FlatReport::ok() const {
  if (basic_subset_flat_status == "theorem")
    for (const auto& row : per_degree)
      if (!row.basic_subset_flat) return false;
  for (const auto& row : decomposition)
    if (!row.ok()) return false;
  return closure.ok;
}

std::string to_json(const FlatReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["algebra"] = r.algebra;
  j["lie"] = r.lie;
  j["rep"] = r.rep;
  j["N"] = r.N;
  j["truncation"] = r.algebra == "quantum" ? "pbw_filtration_le_deg" : "sym_degree_eq_deg";
  j["per_degree"] = nlohmann::ordered_json::array();
  for (const auto& row : r.per_degree) {
    nlohmann::ordered_json e;
    e["deg"] = row.deg;
    e["dim_hor"] = row.dim_hor;
    e["dim_basic"] = row.dim_basic;
    e["dim_flat"] = row.dim_flat;
    e["dim_s_basic"] = row.dim_s_basic;
    e["basic_subset_flat"] = row.basic_subset_flat;
    e["s_basic_equals_flat"] = row.s_basic_equals_flat;
    j["per_degree"].push_back(e);
  }
  j["basic_subset_flat_status"] = r.basic_subset_flat_status;
  j["decomposition"] = nlohmann::ordered_json::array();
  for (const auto& row : r.decomposition) {
    nlohmann::ordered_json e;
    e["deg"] = row.deg;
    e["dim_hor_flat"] = row.dim_hor_flat;
    e["dim_full_flat"] = row.dim_full_flat;
    e["factor"] = row.factor;
    e["holds"] = row.ok();
    j["decomposition"].push_back(e);
  }
  nlohmann::ordered_json c;
  c["samples"] = r.closure.samples;
  c["checks"] = r.closure.checks;
  c["closed"] = r.closure.ok;
  if (!r.closure.ok) c["failure"] = r.closure.failure;
  j["closure"] = c;
  j["seed"] = r.seed;
  return j.dump(2) + "\n";
}

std::string to_text(const FlatReport& r) {
  std::ostringstream os;
  os << r.algebra << " " << r.lie << " / " << r.rep << ", N = " << r.N << " ("
     << (r.algebra == "quantum" ? "PBW filtration <= deg" : "symmetric degree = deg") << ")\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << std::setw(4) << "deg" << std::setw(9) << "dim_hor" << std::setw(11) << "dim_basic"
     << std::setw(10) << "dim_flat" << std::setw(13) << "dim_S_basic" << std::setw(14)
     << "basic<=flat" << std::setw(15) << "S.basic=flat" << "\n";
  for (const auto& row : r.per_degree)
    os << std::setw(4) << row.deg << std::setw(9) << row.dim_hor << std::setw(11)
       << row.dim_basic << std::setw(10) << row.dim_flat << std::setw(13) << row.dim_s_basic
       << std::setw(14) << yn(row.basic_subset_flat) << std::setw(15)
       << yn(row.s_basic_equals_flat) << "\n";
  os << "basic<=flat: " << r.basic_subset_flat_status << "\n";
  os << "decomposition (full flat = " << (r.algebra == "quantum" ? "Cl" : "Lambda")
     << " x hor flat):\n";
  for (const auto& row : r.decomposition)
    os << std::setw(4) << row.deg << "  " << row.dim_full_flat << " = " << row.factor << " x "
       << row.dim_hor_flat << "  " << (row.ok() ? "holds" : "FAILS") << "\n";
  os << "closure: " << r.closure.checks << " checks on " << r.closure.samples
     << " samples, seed " << r.seed << ": " << (r.closure.ok ? "closed" : r.closure.failure)
     << "\n";
  return os.str();
}

}  // namespace weil
