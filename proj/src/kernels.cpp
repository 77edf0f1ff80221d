#include "weil/kernels.hpp"

namespace weil {

SymMonomial mul_sym(const SymMonomial& a, const SymMonomial& b) { return a * b; }

int koszul_sign(std::uint32_t left, std::uint32_t right) {
  // Each index j of `right` must move past every index of `left` above it.
  unsigned swaps = 0;
  for (std::uint32_t r = right; r; r &= r - 1) {
    int j = std::countr_zero(r);
    std::uint32_t above = j >= 31 ? 0u : (left >> (j + 1));
    swaps += static_cast<unsigned>(std::popcount(above));
  }
  return (swaps & 1u) ? -1 : 1;
}

std::optional<std::pair<int, ExtMonomial>> mul_ext(const ExtMonomial& a,
                                                   const ExtMonomial& b) {
  if (a.bits() & b.bits()) return std::nullopt;
  return std::make_pair(koszul_sign(a.bits(), b.bits()),
                        ExtMonomial(a.bits() | b.bits()));
}

// ---------------------------------------------------------------------------

CliffordKernel::CliffordKernel(Matrix B) : B_(std::move(B)) {
  if (!B_.is_square()) throw ShapeError("Clifford form must be square");
  if (B_.rows() > CliffMonomial::max_generators)
    throw Error("Clifford kernel supports at most 32 generators");
}

// a * x_j for a strictly increasing monomial a. With m the last index of a:
//   m <  j : append
//   m == j : x_j x_j = B_jj / 2
//   m >  j : x_m x_j = -x_j x_m + B_mj; recurse on the prefix, whose indices
//            are all below m, so re-appending x_m needs no further rewriting.
Poly<CliffMonomial> CliffordKernel::right_mul(const CliffMonomial& a,
                                              std::size_t j) const {
  Poly<CliffMonomial> out;
  if (a.is_one()) {
    out.add(CliffMonomial::generator(j), Scalar(1));
    return out;
  }
  const std::size_t m = 31 - static_cast<std::size_t>(std::countl_zero(a.bits()));
  const CliffMonomial prefix(a.bits() & ~(std::uint32_t{1} << m));
  if (m < j) {
    out.add(CliffMonomial(a.bits() | (std::uint32_t{1} << j)), Scalar(1));
  } else if (m == j) {
    out.add(prefix, B_(j, j) / Scalar(2));
  } else {
    for (const auto& [t, c] : right_mul(prefix, j).terms())
      out.add(CliffMonomial(t.bits() | (std::uint32_t{1} << m)), -c);
    out.add(prefix, B_(m, j));
  }
  return out;
}

const Poly<CliffMonomial>& CliffordKernel::mul(const CliffMonomial& a,
                                               const CliffMonomial& b) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a.bits(), b.bits());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Poly<CliffMonomial> acc(a, Scalar(1));
  for (auto j : b.indices()) {
    Poly<CliffMonomial> next;
    for (const auto& [m, c] : acc.terms())
      for (const auto& [t, s] : right_mul(m, j).terms()) next.add(t, c * s);
    acc = std::move(next);
  }
  return cache_.emplace(key, std::move(acc)).first->second;
}

// ---------------------------------------------------------------------------

// a * u_j. With t the largest index present in a and a = a' u_t:
//   t <= j : raise the exponent of u_j
//   t >  j : a' u_t u_j = (a' u_j) u_t + f^c_{tj} a' u_c
Poly<PbwMonomial> PbwKernel::right_mul(const PbwMonomial& a, std::size_t j) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a, j);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Poly<PbwMonomial> out;
  const std::size_t t = a.max_index();
  if (t == a.size() || t <= j) {
    out.add(a.times_generator(j), Scalar(1));
  } else {
    const PbwMonomial prefix = a.without_generator(t);
    for (const auto& [m, c] : right_mul(prefix, j).terms())
      for (const auto& [m2, c2] : right_mul(m, t).terms()) out.add(m2, c * c2);
    for (const auto& [c, f] : lie_.bracket(t, j))
      for (const auto& [m, s] : right_mul(prefix, c).terms()) out.add(m, f * s);
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

const Poly<PbwMonomial>& PbwKernel::mul(const PbwMonomial& a,
                                        const PbwMonomial& b) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a, b);
  if (auto it = product_cache_.find(key); it != product_cache_.end())
    return it->second;

  Poly<PbwMonomial> acc(a, Scalar(1));
  for (auto j : b.indices()) {
    Poly<PbwMonomial> next;
    for (const auto& [m, c] : acc.terms())
      for (const auto& [t, s] : right_mul(m, j).terms()) next.add(t, c * s);
    acc = std::move(next);
  }
  return product_cache_.emplace(key, std::move(acc)).first->second;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::size_t> find_disorder(const Word& w, RewriteStrategy s) {
  if (w.size() < 2) return std::nullopt;
  if (s == RewriteStrategy::LeftmostFirst) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) return i;
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (w[i] > w[i + 1]) return i;
  }
  return std::nullopt;
}

}  // namespace

Poly<PbwMonomial> reduce_word(const LieData& lie, const Word& word,
                              RewriteStrategy strategy) {
  const std::size_t n = lie.dim();
  for (auto g : word)
    if (g >= n) throw Error("generator index out of range in word");

  // Words still containing an out-of-order pair.
  std::map<Word, Scalar> pending;
  pending.emplace(word, Scalar(1));
  Poly<PbwMonomial> result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    if (c.is_zero()) continue;
    auto pos = find_disorder(w, strategy);
    if (!pos) {
      result.add(PbwMonomial::from_indices(n, w), c);
      continue;
    }
    const std::size_t i = *pos;
    // w[i] w[i+1] = w[i+1] w[i] + [w[i], w[i+1]]
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending[swapped] += c;
    for (const auto& [k, f] : lie.bracket(w[i], w[i + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      pending[shorter] += c * f;
    }
  }
  return result;
}

}  // namespace weil
