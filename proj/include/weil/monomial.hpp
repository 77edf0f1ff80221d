#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace weil {

/// Monomial given by a length-n exponent vector. Tag distinguishes the
/// commutative S(g*) generators v^a from the ordered PBW products of u_a.
template <class Tag>
class ExponentMonomial {
 public:
  ExponentMonomial() = default;
  explicit ExponentMonomial(std::size_t n) : exps_(n, 0) {}
  explicit ExponentMonomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static ExponentMonomial generator(std::size_t n, std::size_t a) {
    ExponentMonomial m(n);
    m.exps_[a] = 1;
    return m;
  }
  /// From a multiset of 0-based indices.
  static ExponentMonomial from_indices(std::size_t n,
                                       const std::vector<std::size_t>& idx) {
    ExponentMonomial m(n);
    for (auto i : idx) ++m.exps_[i];
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  unsigned exponent(std::size_t a) const { return exps_[a]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  /// Index of the last generator with nonzero exponent, or size() if none.
  std::size_t max_index() const {
    for (std::size_t i = exps_.size(); i-- > 0;)
      if (exps_[i]) return i;
    return exps_.size();
  }
  /// Sorted multiset of indices (u_1^2 u_3 -> {0, 0, 2}).
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      out.insert(out.end(), exps_[i], i);
    return out;
  }

  ExponentMonomial times_generator(std::size_t a) const {
    ExponentMonomial m = *this;
    ++m.exps_[a];
    return m;
  }
  ExponentMonomial without_generator(std::size_t a) const {
    ExponentMonomial m = *this;
    --m.exps_[a];
    return m;
  }
  ExponentMonomial operator*(const ExponentMonomial& o) const {
    ExponentMonomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
    return m;
  }

  friend bool operator==(const ExponentMonomial&, const ExponentMonomial&) = default;
  /// Degree first, then larger exponents of earlier generators first.
  friend std::strong_ordering operator<=>(const ExponentMonomial& a,
                                          const ExponentMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.exps_.size() && i < b.exps_.size(); ++i)
      if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
    return a.exps_.size() <=> b.exps_.size();
  }

 private:
  std::vector<unsigned> exps_;
};

/// Strictly increasing index set stored as a bit mask (n <= 32). Used for
/// exterior monomials y^{a1}...y^{ak} and Clifford monomials x_{a1}...x_{ak}.
template <class Tag>
class SubsetMonomial {
 public:
  static constexpr std::size_t max_generators = 32;

  SubsetMonomial() = default;
  explicit SubsetMonomial(std::uint32_t bits) : bits_(bits) {}
  static SubsetMonomial generator(std::size_t a) {
    return SubsetMonomial(std::uint32_t{1} << a);
  }
  /// Indices must be strictly increasing.
  static SubsetMonomial from_indices(const std::vector<std::size_t>& idx) {
    std::uint32_t bits = 0;
    for (auto i : idx) bits |= std::uint32_t{1} << i;
    return SubsetMonomial(bits);
  }

  std::uint32_t bits() const { return bits_; }
  unsigned degree() const { return static_cast<unsigned>(std::popcount(bits_)); }
  bool is_one() const { return bits_ == 0; }
  bool contains(std::size_t a) const { return (bits_ >> a) & 1u; }
  unsigned parity() const { return degree() & 1u; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend bool operator==(const SubsetMonomial&, const SubsetMonomial&) = default;
  /// Degree first, then index lists lexicographically.
  friend std::strong_ordering operator<=>(const SubsetMonomial& a,
                                          const SubsetMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    std::uint32_t x = a.bits_, y = b.bits_;
    while (x && y) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i <=> j;
      x &= x - 1;
      y &= y - 1;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::uint32_t bits_ = 0;
};

struct SymTag {};
struct PbwTag {};
struct ExtTag {};
struct CliffTag {};

using SymMonomial = ExponentMonomial<SymTag>;
using PbwMonomial = ExponentMonomial<PbwTag>;
using ExtMonomial = SubsetMonomial<ExtTag>;
using CliffMonomial = SubsetMonomial<CliffTag>;

/// "v1^2*v3" style rendering; empty string for the unit monomial.
template <class Tag>
std::string render(const ExponentMonomial<Tag>& m, char letter) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned e = m.exponent(i);
    if (!e) continue;
    if (!out.empty()) out += '*';
    out += letter + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

template <class Tag>
std::string render(const SubsetMonomial<Tag>& m, char letter) {
  std::string out;
  for (auto i : m.indices()) {
    if (!out.empty()) out += '*';
    out += letter + std::to_string(i + 1);
  }
  return out;
}

}  // namespace weil
