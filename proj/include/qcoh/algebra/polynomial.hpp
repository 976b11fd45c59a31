#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "qcoh/error.hpp"

namespace qcoh {

/// Dense univariate polynomial over an exact field F; coeffs()[i] is the
/// coefficient of x^i. The zero polynomial has no coefficients and degree -1.
template <typename F>
class Polynomial {
 public:
  using scalar_type = F;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const F& c) { return Polynomial(std::vector<F>{c}); }
  static Polynomial x() { return Polynomial(std::vector<F>{F(0), F(1)}); }
  static Polynomial monomial(const F& c, int power) {
    std::vector<F> v(static_cast<std::size_t>(power) + 1, F(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// (x - root)
  static Polynomial linear_factor(const F& root) { return Polynomial({-root, F(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == F(1); }

  /// Coefficient of x^i; zero beyond the degree.
  F coeff(int i) const {
    return (i < 0 || i > degree()) ? F(0) : coeffs_[static_cast<std::size_t>(i)];
  }
  F leading() const { return is_zero() ? F(0) : coeffs_.back(); }
  std::span<const F> coeffs() const { return coeffs_; }

  F operator()(const F& at) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const F inv = F(1) / leading();
    return *this * inv;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const F& s) {
    if (s == F(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const F& s) { return lhs *= s; }
  friend Polynomial operator*(const F& s, Polynomial rhs) { return rhs *= s; }
  Polynomial operator-() const { return *this * F(-1); }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<F> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == F(0)) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? ", " : "") << p.coeffs_[i];
    return os << ']';
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == F(0)) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };

template <typename F>
Polynomial<F> poly_arith(const Polynomial<F>& lhs, const Polynomial<F>& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return lhs + rhs;
    case PolyOp::Sub: return lhs - rhs;
    case PolyOp::Mul: return lhs * rhs;
  }
  return {};
}

template <typename F>
struct DivMod {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

/// Euclidean division over the field F.
template <typename F>
DivMod<F> divmod(const Polynomial<F>& num, const Polynomial<F>& den) {
  if (den.is_zero()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
  if (num.degree() < den.degree()) return {{}, num};
  std::vector<F> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<F> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1), F(0));
  const F lead_inv = F(1) / den.leading();
  const int dd = den.degree();
  for (int i = num.degree() - dd; i >= 0; --i) {
    const F factor = rem[static_cast<std::size_t>(i + dd)] * lead_inv;
    quot[static_cast<std::size_t>(i)] = factor;
    if (factor == F(0)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= factor * den.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Quotient of an exact division; a non-zero remainder is an invariant breach.
template <typename F>
Polynomial<F> exact_quotient(const Polynomial<F>& num, const Polynomial<F>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "polynomial division left a remainder");
  return q;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <typename F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    Polynomial<F> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p(s*x + t).
template <typename F>
Polynomial<F> affine_substitute(const Polynomial<F>& p, const F& s, const F& t) {
  const Polynomial<F> inner({t, s});
  Polynomial<F> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * inner + Polynomial<F>::constant(p.coeff(i));
  return acc;
}

/// Applies a field homomorphism coefficientwise, e.g. F = Q(t) -> Q via t -> 0.
template <typename G, typename F, typename Fn>
Polynomial<G> map_coeffs(const Polynomial<F>& p, Fn&& fn) {
  std::vector<G> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(fn(c));
  return Polynomial<G>(std::move(out));
}

}  // namespace qcoh
