#pragma once

#include <string>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/error.hpp"

namespace qcoh {

/// Lattice parameters (q, omega) of the Hahn operator. q must avoid 0 and 1;
/// for rational q we also exclude -1 so that q^n != 1 for every n >= 1.
template <typename F>
class QParams {
 public:
  QParams(F q, F omega) : q_(std::move(q)), omega_(std::move(omega)) {
    if (q_ == F(0) || q_ == F(1) || q_ == F(-1)) {
      throw Error(ErrorKind::DomainError, "q must not be 0, 1 or -1");
    }
  }

  const F& q() const { return q_; }
  const F& omega() const { return omega_; }
  /// Fixed point of x -> qx + omega.
  F omega0() const { return omega_ / (F(1) - q_); }

  /// (1/q, -omega/q): the parameters of the inverse shift.
  QParams inverse() const { return QParams(F(1) / q_, -omega_ / q_); }

 private:
  F q_;
  F omega_;
};

template <typename F>
F q_power(const F& base, int n) {
  F out(1);
  if (n >= 0) {
    for (int i = 0; i < n; ++i) out *= base;
  } else {
    for (int i = 0; i < -n; ++i) out /= base;
  }
  return out;
}

/// [n] = (base^n - 1)/(base - 1), evaluated as 1 + base + ... + base^(n-1).
template <typename F>
F q_bracket(int n, const F& base) {
  if (n < 0) return (q_power(base, n) - F(1)) / (base - F(1));
  F out(0), p(1);
  for (int i = 0; i < n; ++i) {
    out += p;
    p *= base;
  }
  return out;
}

template <typename F>
F q_factorial(int n, const F& base) {
  if (n < 0) throw Error(ErrorKind::DomainError, "q-factorial of a negative integer");
  F out(1);
  for (int j = 1; j <= n; ++j) out *= q_bracket(j, base);
  return out;
}

template <typename F>
F q_binomial(int n, int k, const F& base) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::DomainError,
                "q-binomial [" + std::to_string(n) + " choose " + std::to_string(k) + "] out of range");
  }
  return q_factorial(n, base) / (q_factorial(k, base) * q_factorial(n - k, base));
}

template <typename F>
struct QSymbols {
  F bracket;
  F factorial;
  F binomial;
};

template <typename F>
QSymbols<F> q_symbols(int n, int k, const F& base) {
  return {q_bracket(n, base), q_factorial(n, base), q_binomial(n, k, base)};
}

/// Brackets, factorials and binomials for one base, tabulated up to n_max.
template <typename F>
class QSymbolCache {
 public:
  QSymbolCache(F base, int n_max) : base_(std::move(base)), n_max_(n_max) {
    brackets_.reserve(static_cast<std::size_t>(n_max) + 1);
    factorials_.reserve(static_cast<std::size_t>(n_max) + 1);
    F fact(1);
    for (int n = 0; n <= n_max; ++n) {
      brackets_.push_back(q_bracket(n, base_));
      if (n > 0) fact *= brackets_.back();
      factorials_.push_back(fact);
    }
  }

  const F& base() const { return base_; }
  int n_max() const { return n_max_; }

  const F& bracket(int n) const { return brackets_.at(checked(n)); }
  const F& factorial(int n) const { return factorials_.at(checked(n)); }
  F binomial(int n, int k) const {
    if (k < 0 || k > n) {
      throw Error(ErrorKind::DomainError,
                  "q-binomial [" + std::to_string(n) + " choose " + std::to_string(k) + "] out of range");
    }
    return factorial(n) / (factorial(k) * factorial(n - k));
  }

 private:
  std::size_t checked(int n) const {
    if (n < 0 || n > n_max_) {
      throw Error(ErrorKind::IndexOutOfRange, "q-symbol index " + std::to_string(n) + " beyond cache");
    }
    return static_cast<std::size_t>(n);
  }

  F base_;
  int n_max_;
  std::vector<F> brackets_;
  std::vector<F> factorials_;
};

/// L_{q,omega} f (x) = f(qx + omega).
template <typename F>
Polynomial<F> shift(const Polynomial<F>& f, const QParams<F>& qp) {
  return affine_substitute(f, qp.q(), qp.omega());
}

template <typename F>
Polynomial<F> shift_power(Polynomial<F> f, int times, const QParams<F>& qp) {
  for (int i = 0; i < times; ++i) f = shift(f, qp);
  return f;
}

/// D_{q,omega} f = (f(qx+omega) - f(x)) / ((q-1)x + omega). The numerator
/// vanishes at omega/(1-q), so the division must be exact.
template <typename F>
Polynomial<F> hahn_diff(const Polynomial<F>& f, const QParams<F>& qp) {
  if (f.degree() <= 0) return {};
  const Polynomial<F> divisor({qp.omega(), qp.q() - F(1)});
  return exact_quotient(shift(f, qp) - f, divisor);
}

template <typename F>
Polynomial<F> hahn_power(Polynomial<F> f, int m, const QParams<F>& qp) {
  if (m < 0) throw Error(ErrorKind::DomainError, "negative derivative order");
  for (int i = 0; i < m && !f.is_zero(); ++i) f = hahn_diff(f, qp);
  return f;
}

/// S_n^{[m]} = ([n]_q! / [n+m]_q!) D^m S_{n+m}; requires deg P = n + m.
template <typename F>
Polynomial<F> normalized_derivative(const Polynomial<F>& p, int n, int m, const QParams<F>& qp) {
  if (p.degree() != n + m) {
    throw Error(ErrorKind::DegreeMismatch, "normalized derivative expects degree " + std::to_string(n + m) +
                                               ", got " + std::to_string(p.degree()));
  }
  if (m == 0) return p;
  const F scale = q_factorial(n, qp.q()) / q_factorial(n + m, qp.q());
  return hahn_power(p, m, qp) * scale;
}

/// q^{-1} [phi + ((q-1)x + omega) psi]: the Pearson partner of phi for the
/// reversed lattice direction.
template <typename F>
Polynomial<F> phi_hat(const Polynomial<F>& phi, const Polynomial<F>& psi, const QParams<F>& qp) {
  const Polynomial<F> lin({qp.omega(), qp.q() - F(1)});
  return (phi + lin * psi) * (F(1) / qp.q());
}

}  // namespace qcoh
