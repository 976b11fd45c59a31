#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/error.hpp"
#include "qcoh/qcalc.hpp"

namespace qcoh {

/// Truncated moment functional: moments m_0..m_K with m_i = <u, x^i>.
/// Reading a moment beyond K is an error, never a silent zero.
template <typename F>
class MomentFunctional {
 public:
  explicit MomentFunctional(std::vector<F> moments) : moments_(std::move(moments)) {
    if (moments_.empty()) throw Error(ErrorKind::DomainError, "moment functional needs at least m_0");
  }

  static MomentFunctional zero(int order) {
    return MomentFunctional(std::vector<F>(static_cast<std::size_t>(order) + 1, F(0)));
  }

  int order() const { return static_cast<int>(moments_.size()) - 1; }
  const std::vector<F>& moments() const { return moments_; }

  const F& moment(int i) const {
    if (i < 0 || i > order()) {
      throw Error(ErrorKind::OrderExceeded,
                  "moment " + std::to_string(i) + " requested from functional of order " + std::to_string(order()));
    }
    return moments_[static_cast<std::size_t>(i)];
  }

  MomentFunctional truncated(int order) const {
    if (order > this->order()) {
      throw Error(ErrorKind::OrderExceeded, "cannot extend a functional of order " +
                                                std::to_string(this->order()) + " to " + std::to_string(order));
    }
    return MomentFunctional(std::vector<F>(moments_.begin(), moments_.begin() + order + 1));
  }

  bool is_zero() const {
    return std::all_of(moments_.begin(), moments_.end(), [](const F& m) { return m == F(0); });
  }

  /// Sums and differences keep the smaller order.
  friend MomentFunctional operator+(const MomentFunctional& a, const MomentFunctional& b) {
    return combine(a, b, F(1));
  }
  friend MomentFunctional operator-(const MomentFunctional& a, const MomentFunctional& b) {
    return combine(a, b, F(-1));
  }
  friend MomentFunctional operator*(const F& s, MomentFunctional u) {
    for (auto& m : u.moments_) m *= s;
    return u;
  }

  friend bool operator==(const MomentFunctional& a, const MomentFunctional& b) { return a.moments_ == b.moments_; }

 private:
  static MomentFunctional combine(const MomentFunctional& a, const MomentFunctional& b, const F& sign) {
    const int k = std::min(a.order(), b.order());
    std::vector<F> out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] = a.moment(i) + sign * b.moment(i);
    return MomentFunctional(std::move(out));
  }

  std::vector<F> moments_;
};

/// <u, f> = sum f_i m_i.
template <typename F>
F act(const MomentFunctional<F>& u, const Polynomial<F>& f) {
  if (f.degree() > u.order()) {
    throw Error(ErrorKind::OrderExceeded, "pairing a degree " + std::to_string(f.degree()) +
                                              " polynomial with a functional of order " + std::to_string(u.order()));
  }
  F acc(0);
  for (int i = 0; i <= f.degree(); ++i) acc += f.coeff(i) * u.moment(i);
  return acc;
}

/// f u, defined by <f u, x^n> = <u, f x^n>; order drops by deg f.
template <typename F>
MomentFunctional<F> left_mult(const Polynomial<F>& f, const MomentFunctional<F>& u) {
  if (f.is_zero()) return MomentFunctional<F>::zero(u.order());
  const int d = f.degree();
  if (d > u.order()) {
    throw Error(ErrorKind::OrderExceeded, "multiplier degree " + std::to_string(d) + " exceeds functional order " +
                                              std::to_string(u.order()));
  }
  std::vector<F> out(static_cast<std::size_t>(u.order() - d) + 1, F(0));
  for (std::size_t n = 0; n < out.size(); ++n) {
    for (int i = 0; i <= d; ++i) out[n] += f.coeff(i) * u.moment(static_cast<int>(n) + i);
  }
  return MomentFunctional<F>(std::move(out));
}

/// <D_{q,w} u, f> = -q^{-1} <u, D_{1/q,-w/q} f>. D_{1/q,-w/q} lowers degree
/// by one, so the output is valid to order K + 1.
template <typename F>
MomentFunctional<F> functional_diff(const MomentFunctional<F>& u, const QParams<F>& qp) {
  const QParams<F> inv = qp.inverse();
  const F scale = F(-1) / qp.q();
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(u.order()) + 2);
  for (int n = 0; n <= u.order() + 1; ++n) {
    out.push_back(scale * act(u, hahn_diff(Polynomial<F>::monomial(F(1), n), inv)));
  }
  return MomentFunctional<F>(std::move(out));
}

template <typename F>
MomentFunctional<F> functional_diff_n(MomentFunctional<F> u, int times, const QParams<F>& qp) {
  for (int i = 0; i < times; ++i) u = functional_diff(u, qp);
  return u;
}

/// <L_{q,w} u, f> = <u, L_{1/q,-w/q} f> = <u, f((x - w)/q)>.
template <typename F>
MomentFunctional<F> functional_shift(const MomentFunctional<F>& u, const QParams<F>& qp) {
  const QParams<F> inv = qp.inverse();
  std::vector<F> out;
  out.reserve(u.moments().size());
  for (int n = 0; n <= u.order(); ++n) out.push_back(act(u, shift(Polynomial<F>::monomial(F(1), n), inv)));
  return MomentFunctional<F>(std::move(out));
}

/// Outcome of comparing two functionals on their common order.
struct MomentComparison {
  bool equal = true;
  int order_checked = -1;
  std::optional<int> first_failure;
};

template <typename F>
MomentComparison compare_moments(const MomentFunctional<F>& a, const MomentFunctional<F>& b) {
  MomentComparison out;
  out.order_checked = std::min(a.order(), b.order());
  for (int i = 0; i <= out.order_checked; ++i) {
    if (!(a.moment(i) == b.moment(i))) {
      out.equal = false;
      out.first_failure = i;
      break;
    }
  }
  return out;
}

/// D^n (f u) evaluated three ways: directly, and by both displayed forms of
/// Leibniz's formula
///   sum_j [n j]_q L^{n-j}(D^j f) D^{n-j} u  and  sum_j [n j]_q L^j(D^{n-j} f) D^j u.
template <typename F>
struct LeibnizExpansion {
  MomentFunctional<F> direct;
  MomentFunctional<F> first_form;
  MomentFunctional<F> second_form;
};

template <typename F>
LeibnizExpansion<F> leibniz_expansion(const Polynomial<F>& f, const MomentFunctional<F>& u, int n,
                                      const QParams<F>& qp) {
  if (f.degree() > u.order()) {
    throw Error(ErrorKind::OrderExceeded, "Leibniz expansion needs deg f <= order of u");
  }
  MomentFunctional<F> direct = functional_diff_n(left_mult(f, u), n, qp);

  std::vector<MomentFunctional<F>> du{u};
  std::vector<Polynomial<F>> df{f};
  for (int j = 1; j <= n; ++j) {
    du.push_back(functional_diff(du.back(), qp));
    df.push_back(hahn_diff(df.back(), qp));
  }
  const int out_order = direct.order();
  MomentFunctional<F> first = MomentFunctional<F>::zero(out_order);
  MomentFunctional<F> second = MomentFunctional<F>::zero(out_order);
  for (int j = 0; j <= n; ++j) {
    const F binom = q_binomial(n, j, qp.q());
    first = first + binom * left_mult(shift_power(df[j], n - j, qp), du[n - j]);
    second = second + binom * left_mult(shift_power(df[n - j], j, qp), du[j]);
  }
  return {std::move(direct), std::move(first), std::move(second)};
}

/// D^n (f u) by direct differentiation, cross-checked against both Leibniz
/// sums; any disagreement is an InternalInconsistency.
template <typename F>
MomentFunctional<F> functional_diff_power(const Polynomial<F>& f, const MomentFunctional<F>& u, int n,
                                          const QParams<F>& qp) {
  LeibnizExpansion<F> e = leibniz_expansion(f, u, n, qp);
  const auto c1 = compare_moments(e.direct, e.first_form);
  const auto c2 = compare_moments(e.direct, e.second_form);
  if (!c1.equal || !c2.equal) {
    throw Error(ErrorKind::InternalInconsistency,
                "Leibniz expansion disagrees with direct differentiation at moment " +
                    std::to_string(c1.equal ? *c2.first_failure : *c1.first_failure));
  }
  return std::move(e.direct);
}

enum class LatticeDirection { Forward, Backward };

/// D(phi u) = psi u, taken over (q, w) when Forward and over (1/q, -w/q)
/// when Backward.
template <typename F>
struct SemiclassicalWitness {
  SemiclassicalWitness(Polynomial<F> phi_, Polynomial<F> psi_, LatticeDirection direction_)
      : phi(std::move(phi_)), psi(std::move(psi_)), direction(direction_) {
    if (psi.degree() < 1) throw Error(ErrorKind::DomainError, "Pearson pair needs deg psi >= 1");
  }

  /// max(deg phi - 2, deg psi - 1), clamped at 0.
  int class_bound() const { return std::max({phi.degree() - 2, psi.degree() - 1, 0}); }

  Polynomial<F> phi;
  Polynomial<F> psi;
  LatticeDirection direction;
};

struct PearsonResult {
  bool holds = false;
  int order_checked = -1;
  std::optional<int> fails_at;
};

template <typename F>
PearsonResult pearson_check(const SemiclassicalWitness<F>& w, const MomentFunctional<F>& u, const QParams<F>& qp) {
  if (w.phi.degree() > u.order() || w.psi.degree() > u.order()) {
    throw Error(ErrorKind::OrderExceeded, "Pearson pair degree exceeds functional order");
  }
  const QParams<F> dir = w.direction == LatticeDirection::Forward ? qp : qp.inverse();
  const auto lhs = functional_diff(left_mult(w.phi, u), dir);
  const auto rhs = left_mult(w.psi, u);
  const auto cmp = compare_moments(lhs, rhs);
  return {cmp.equal, cmp.order_checked, cmp.first_failure};
}

/// e_n of order K with <e_n, basis[j]> = delta_{n,j} for j <= K.
template <typename F>
MomentFunctional<F> dual_basis_functional(const std::vector<Polynomial<F>>& basis, int n, int order) {
  if (static_cast<int>(basis.size()) <= order) {
    throw Error(ErrorKind::NotSimpleSet, "dual basis of order " + std::to_string(order) + " needs " +
                                             std::to_string(order + 1) + " basis polynomials");
  }
  if (n < 0 || n > order) throw Error(ErrorKind::IndexOutOfRange, "dual basis index beyond order");
  std::vector<F> m(static_cast<std::size_t>(order) + 1, F(0));
  for (int j = 0; j <= order; ++j) {
    const auto& b = basis[static_cast<std::size_t>(j)];
    if (b.degree() != j) {
      throw Error(ErrorKind::NotSimpleSet, "basis[" + std::to_string(j) + "] has degree " + std::to_string(b.degree()));
    }
    F acc = (j == n) ? F(1) : F(0);
    for (int i = 0; i < j; ++i) acc -= b.coeff(i) * m[static_cast<std::size_t>(i)];
    m[static_cast<std::size_t>(j)] = acc / b.leading();
  }
  return MomentFunctional<F>(std::move(m));
}

/// det [m_{i+j}]_{i,j=0}^{n-1} by Gaussian elimination over F.
template <typename F>
F hankel_determinant(const MomentFunctional<F>& u, int n) {
  if (2 * (n - 1) > u.order()) throw Error(ErrorKind::OrderExceeded, "Hankel determinant needs more moments");
  std::vector<std::vector<F>> h(static_cast<std::size_t>(n), std::vector<F>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i][j] = u.moment(i + j);
  }
  F det(1);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && h[pivot][k] == F(0)) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != k) {
      std::swap(h[pivot], h[k]);
      det = -det;
    }
    det *= h[k][k];
    for (int i = k + 1; i < n; ++i) {
      const F factor = h[i][k] / h[k][k];
      for (int j = k; j < n; ++j) h[i][j] -= factor * h[k][j];
    }
  }
  return det;
}

/// Finite regularity certificate: leading Hankel determinants of sizes
/// 1..floor(K/2)+1 are non-zero.
template <typename F>
bool is_regular(const MomentFunctional<F>& u) {
  for (int n = 1; n <= u.order() / 2 + 1; ++n) {
    if (hankel_determinant(u, n) == F(0)) return false;
  }
  return true;
}

}  // namespace qcoh
