#pragma once

#include <map>
#include <utility>

#include "weil/matrix.hpp"

namespace weil {

inline bool is_zero_coeff(const Scalar& s) { return s.is_zero(); }
inline bool is_zero_coeff(const Matrix& m) { return m.is_zero(); }

/// Finite linear combination of monomials M with coefficients C (Scalar, or
/// Matrix for End V-valued terms). Zero coefficients are never stored.
template <class M, class C = Scalar>
class Poly {
 public:
  using Terms = std::map<M, C>;

  Poly() = default;
  Poly(const M& m, C c) { add(m, std::move(c)); }

  const Terms& terms() const& { return terms_; }
  // Keeps `for (auto& t : f().terms())` safe on temporaries.
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const M& m, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  Poly operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

}  // namespace weil
