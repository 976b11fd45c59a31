#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's operator implementations: functionals are finite point masses
// evaluated directly, moments come from walks on the Jacobi matrix, and
// difference quotients are taken pointwise.

#include <cstddef>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"
#include "qcoh/families.hpp"
#include "qcoh/functionals.hpp"
#include "qcoh/qcalc.hpp"

namespace oracle {

using qcoh::Rational;
using Poly = qcoh::Polynomial<Rational>;
using QP = qcoh::QParams<Rational>;

inline Rational power(const Rational& x, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

/// (f(qx+w) - f(x)) / ((q-1)x + w) at one point x off the fixed point.
inline Rational diff_at(const Poly& f, const QP& qp, const Rational& x) {
  return (f(qp.q() * x + qp.omega()) - f(x)) / ((qp.q() - Rational(1)) * x + qp.omega());
}

/// sum_i w_i delta_{x_i}. Its moments are exact and every operator can be
/// evaluated by plugging the points into the test polynomial.
struct DiscreteMeasure {
  std::vector<Rational> points;
  std::vector<Rational> weights;

  Rational pair(const Poly& f) const {
    Rational acc(0);
    for (std::size_t i = 0; i < points.size(); ++i) acc += weights[i] * f(points[i]);
    return acc;
  }

  std::vector<Rational> moments(int order) const {
    std::vector<Rational> out;
    for (int n = 0; n <= order; ++n) out.push_back(pair(Poly::monomial(Rational(1), n)));
    return out;
  }

  /// <D_{q,w} u, x^n> = -q^{-1} sum_i w_i (D_{1/q,-w/q} x^n)(x_i), pointwise.
  std::vector<Rational> diff_moments(const QP& qp, int order) const {
    const Rational iq = Rational(1) / qp.q(), iw = -qp.omega() / qp.q();
    std::vector<Rational> out;
    for (int n = 0; n <= order; ++n) {
      Rational acc(0);
      for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational x = points[i];
        const Rational y = iq * x + iw;
        acc += weights[i] * (power(y, n) - power(x, n)) / (y - x);
      }
      out.push_back(-acc / qp.q());
    }
    return out;
  }

  /// <L_{q,w} u, x^n> = sum_i w_i ((x_i - w)/q)^n.
  std::vector<Rational> shift_moments(const QP& qp, int order) const {
    std::vector<Rational> out;
    for (int n = 0; n <= order; ++n) {
      Rational acc(0);
      for (std::size_t i = 0; i < points.size(); ++i) acc += weights[i] * power((points[i] - qp.omega()) / qp.q(), n);
      out.push_back(acc);
    }
    return out;
  }

  /// f u is again a point measure.
  DiscreteMeasure times(const Poly& f) const {
    DiscreteMeasure out = *this;
    for (std::size_t i = 0; i < points.size(); ++i) out.weights[i] *= f(points[i]);
    return out;
  }
};

/// Point masses avoiding the fixed point of the inverse lattice.
inline DiscreteMeasure sample_measure(const QP& qp, int count, long salt) {
  DiscreteMeasure m;
  const Rational w0 = qp.omega0();
  for (long i = 0; static_cast<int>(m.points.size()) < count; ++i) {
    const Rational x(3 * i - 5 + salt, 7 + (i % 3));
    if (x == w0) continue;
    m.points.push_back(x);
    m.weights.emplace_back(2 * i + 1 + salt % 5, 5 + i);
  }
  return m;
}

/// m_n = (J^n)_{00} for the tridiagonal J with diagonal beta, superdiagonal 1
/// and subdiagonal gamma: a weighted count of Motzkin paths. Only needs
/// coefficients up to index n/2.
inline std::vector<Rational> jacobi_moments(const qcoh::TTRRCoeffs<Rational>& c, int order) {
  const int depth = order / 2;  // higher levels cannot return to 0 in time
  std::vector<Rational> state(static_cast<std::size_t>(depth) + 1, Rational(0));
  state[0] = Rational(1);
  std::vector<Rational> out{Rational(1)};
  for (int n = 1; n <= order; ++n) {
    std::vector<Rational> next(state.size(), Rational(0));
    for (int i = 0; i <= depth; ++i) {
      const Rational& s = state[static_cast<std::size_t>(i)];
      if (s.is_zero()) continue;
      // row vector times J: level i -> i (beta_i), i -> i+1 (1), i -> i-1 (gamma_i)
      next[static_cast<std::size_t>(i)] += s * c.beta_at(i);
      if (i + 1 <= depth) next[static_cast<std::size_t>(i + 1)] += s;
      if (i >= 1) next[static_cast<std::size_t>(i - 1)] += s * c.gamma_at(i);
    }
    state = std::move(next);
    out.push_back(state[0]);
  }
  return out;
}

}  // namespace oracle
