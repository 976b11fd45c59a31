#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"
#include "qcoh/error.hpp"
#include "qcoh/functionals.hpp"
#include "qcoh/qcalc.hpp"

namespace qcoh {

/// Recurrence x P_n = P_{n+1} + beta_n P_n + gamma_n P_{n-1}.
/// beta[n] holds beta_n; gamma[n] holds gamma_n for n >= 1 (gamma[0] is unused).
template <typename F>
struct TTRRCoeffs {
  std::vector<F> beta;
  std::vector<F> gamma;

  TTRRCoeffs() = default;
  TTRRCoeffs(std::vector<F> beta_, std::vector<F> gamma_) : beta(std::move(beta_)), gamma(std::move(gamma_)) {
    if (gamma.empty()) gamma.push_back(F(0));
    for (std::size_t n = 1; n < gamma.size(); ++n) {
      if (gamma[n] == F(0)) {
        throw Error(ErrorKind::RegularityViolation, "gamma_" + std::to_string(n) + " = 0");
      }
    }
  }

  const F& beta_at(int n) const {
    if (n < 0 || n >= static_cast<int>(beta.size())) {
      throw Error(ErrorKind::MissingCoefficient, "beta_" + std::to_string(n) + " not available");
    }
    return beta[static_cast<std::size_t>(n)];
  }
  const F& gamma_at(int n) const {
    if (n < 1 || n >= static_cast<int>(gamma.size())) {
      throw Error(ErrorKind::MissingCoefficient, "gamma_" + std::to_string(n) + " not available");
    }
    return gamma[static_cast<std::size_t>(n)];
  }

  friend bool operator==(const TTRRCoeffs&, const TTRRCoeffs&) = default;
};

/// P_0 .. P_{n_max}, all monic with deg P_n = n.
template <typename F>
std::vector<Polynomial<F>> ttrr_generate(const TTRRCoeffs<F>& coeffs, int n_max) {
  std::vector<Polynomial<F>> p;
  p.reserve(static_cast<std::size_t>(n_max) + 1);
  p.push_back(Polynomial<F>::constant(F(1)));
  if (n_max == 0) return p;
  p.push_back(Polynomial<F>::linear_factor(coeffs.beta_at(0)));
  for (int n = 1; n < n_max; ++n) {
    p.push_back(Polynomial<F>::linear_factor(coeffs.beta_at(n)) * p[n] - p[n - 1] * coeffs.gamma_at(n));
  }
  return p;
}

/// beta_n = (a + b - c(q^{n+1} + q^n - 1)) q^n,
/// gamma_{n+1} = -(a - c q^{n+1})(b - c q^{n+1})(1 - q^{n+1}) q^n, for n <= n_max.
template <typename F>
TTRRCoeffs<F> l_coeffs(const F& a, const F& b, const F& c, const F& base, int n_max) {
  for (int n = 1; n <= n_max + 1; ++n) {
    const F cq = c * q_power(base, n);
    if (a == cq) throw Error(ErrorKind::RegularityViolation, "a != c*q^n fails at n = " + std::to_string(n));
    if (b == cq) throw Error(ErrorKind::RegularityViolation, "b != c*q^n fails at n = " + std::to_string(n));
  }
  std::vector<F> beta, gamma{F(0)};
  for (int n = 0; n <= n_max; ++n) {
    const F qn = q_power(base, n);
    const F qn1 = qn * base;
    beta.push_back((a + b - c * (qn1 + qn - F(1))) * qn);
    gamma.push_back(-(a - c * qn1) * (b - c * qn1) * (F(1) - qn1) * qn);
  }
  return TTRRCoeffs<F>(std::move(beta), std::move(gamma));
}

template <typename F>
TTRRCoeffs<F> j_coeffs(const F& a, const F& b, const F& c, const F& d, const F& base, int n_max) {
  for (int n = 1; n <= n_max + 1; ++n) {
    const F qn = q_power(base, n);
    const std::string at = " fails at n = " + std::to_string(n);
    if (b * qn == F(1)) throw Error(ErrorKind::RegularityViolation, "b != q^-n" + at);
    if (d * qn == F(1)) throw Error(ErrorKind::RegularityViolation, "d != q^-n" + at);
    if (a == c * qn) throw Error(ErrorKind::RegularityViolation, "a != c*q^n" + at);
    if (b == d * qn) throw Error(ErrorKind::RegularityViolation, "b != d*q^n" + at);
    if (c == a * d * qn) throw Error(ErrorKind::RegularityViolation, "c != a*d*q^n" + at);
  }
  auto den = [&](int e) {
    const F v = F(1) - d * q_power(base, e);
    if (v == F(0)) throw Error(ErrorKind::DenominatorZero, "1 - d*q^" + std::to_string(e) + " = 0");
    return v;
  };
  std::vector<F> beta, gamma{F(0)};
  for (int n = 0; n <= n_max; ++n) {
    const F qn = q_power(base, n);
    const F qn1 = qn * base;
    const F d0 = den(2 * n), d1 = den(2 * n + 1), d2 = den(2 * n + 2), d3 = den(2 * n + 3);
    const F first = (a * (b + d) + c * (b + F(1))) * (F(1) + d * q_power(base, 2 * n + 1));
    const F second = (c * (b + d) + a * d * (b + F(1))) * (F(1) + base) * qn;
    beta.push_back(qn * (first - second) / (d0 * d2));
    const F num = qn * (F(1) - qn1) * (F(1) - b * qn1) * (F(1) - d * qn1) * (a - c * qn1) * (b - d * qn1) *
                  (c - a * d * qn1);
    gamma.push_back(-num / (d1 * d2 * d2 * d3));
  }
  return TTRRCoeffs<F>(std::move(beta), std::move(gamma));
}

enum class ClassicalLabel {
  AlSalamCarlitz,
  BigQLaguerre,
  LittleQLaguerre,
  SmallL,  // l_n(.;a|q)
  BigQJacobi,
  LittleQJacobi,
  QBessel,
  SmallJ,  // j_n(.;a,b|q)
};

std::string label_name(ClassicalLabel label);
std::optional<ClassicalLabel> parse_label(const std::string& text);

template <typename F>
struct LFamily {
  F a, b, c;
};
template <typename F>
struct JFamily {
  F a, b, c, d;
};

/// A master family with base q (or 1/q) under the affine map
/// P_n(x) = scale^n F_n((x - offset)/scale).
template <typename F>
struct FamilySpec {
  std::variant<LFamily<F>, JFamily<F>> kind;
  F base;
  F scale = F(1);
  F offset = F(0);
  std::optional<ClassicalLabel> label;

  bool is_l() const { return std::holds_alternative<LFamily<F>>(kind); }
  std::vector<F> params() const {
    if (const auto* l = std::get_if<LFamily<F>>(&kind)) return {l->a, l->b, l->c};
    const auto& j = std::get<JFamily<F>>(kind);
    return {j.a, j.b, j.c, j.d};
  }
};

template <typename F>
FamilySpec<F> make_l_family(F a, F b, F c, F base, F scale = F(1), F offset = F(0)) {
  if (scale == F(0)) throw Error(ErrorKind::DomainError, "family scale must be non-zero");
  return {LFamily<F>{std::move(a), std::move(b), std::move(c)}, std::move(base), std::move(scale), std::move(offset),
          std::nullopt};
}

template <typename F>
FamilySpec<F> make_j_family(F a, F b, F c, F d, F base, F scale = F(1), F offset = F(0)) {
  if (scale == F(0)) throw Error(ErrorKind::DomainError, "family scale must be non-zero");
  return {JFamily<F>{std::move(a), std::move(b), std::move(c), std::move(d)}, std::move(base), std::move(scale),
          std::move(offset), std::nullopt};
}

/// Recurrence coefficients of the unshifted master family.
template <typename F>
TTRRCoeffs<F> base_coeffs(const FamilySpec<F>& spec, int n_max) {
  if (const auto* l = std::get_if<LFamily<F>>(&spec.kind)) return l_coeffs(l->a, l->b, l->c, spec.base, n_max);
  const auto& j = std::get<JFamily<F>>(spec.kind);
  return j_coeffs(j.a, j.b, j.c, j.d, spec.base, n_max);
}

/// Coefficients after the affine map: beta -> s beta + t, gamma -> s^2 gamma.
template <typename F>
TTRRCoeffs<F> family_coeffs(const FamilySpec<F>& spec, int n_max) {
  TTRRCoeffs<F> c = base_coeffs(spec, n_max);
  for (auto& b : c.beta) b = spec.scale * b + spec.offset;
  for (std::size_t n = 1; n < c.gamma.size(); ++n) c.gamma[n] = spec.scale * spec.scale * c.gamma[n];
  return c;
}

/// P_n(x) = s^n F_n((x - t)/s) for n <= n_max, F_n from the base recurrence.
template <typename F>
std::vector<Polynomial<F>> family_polynomials(const FamilySpec<F>& spec, int n_max) {
  const int depth = n_max > 0 ? n_max - 1 : 0;
  auto base = ttrr_generate(base_coeffs(spec, depth), n_max);
  if (spec.scale == F(1) && spec.offset == F(0)) return base;
  const F inv = F(1) / spec.scale;
  F sn(1);
  for (auto& p : base) {
    p = affine_substitute(p, inv, -spec.offset * inv) * sn;
    sn *= spec.scale;
  }
  return base;
}

/// Coordinates of f in a simple set (deg basis[j] = j), by descending elimination.
/// The result has one entry per basis element.
template <typename F>
std::vector<F> expand_in_basis(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  if (f.degree() >= static_cast<int>(basis.size())) {
    throw Error(ErrorKind::NotSimpleSet, "basis does not reach degree " + std::to_string(f.degree()));
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].degree() != static_cast<int>(j)) {
      throw Error(ErrorKind::NotSimpleSet, "basis[" + std::to_string(j) + "] has degree " +
                                               std::to_string(basis[j].degree()));
    }
  }
  std::vector<F> out(basis.size(), F(0));
  Polynomial<F> rest = f;
  for (int j = f.degree(); j >= 0; --j) {
    const F c = rest.coeff(j) / basis[static_cast<std::size_t>(j)].leading();
    out[static_cast<std::size_t>(j)] = c;
    if (!(c == F(0))) rest -= basis[static_cast<std::size_t>(j)] * c;
  }
  if (!rest.is_zero()) throw Error(ErrorKind::InternalInconsistency, "basis expansion left a remainder");
  return out;
}

/// (M, N, m, k, pi_N) of a structure relation
///   pi_N P_n^{[m]} = sum_{j=n-M}^{n+N} c_{n,j} Q_j^{[k]}.
template <typename F>
struct CoherenceConfig {
  int M = 0;
  int N = 0;
  int m = 1;
  int k = 0;
  Polynomial<F> pi = Polynomial<F>::constant(F(1));

  void validate() const {
    if (M < 0 || N < 0 || m < 0 || k < 0) throw Error(ErrorKind::DomainError, "negative coherence index");
    if (pi.degree() != N || !pi.is_monic()) {
      throw Error(ErrorKind::DomainError, "pi_N must be monic of degree N = " + std::to_string(N));
    }
  }
};

/// Coefficients c_{n,j} (j = 0..n+N) of pi_N P_n^{[m]} in the basis (Q_j^{[k]}).
template <typename F>
struct StructureTable {
  CoherenceConfig<F> config;
  std::vector<std::vector<F>> rows;

  int n_max() const { return static_cast<int>(rows.size()) - 1; }

  /// c_{n,j}; zero for j outside 0..n+N, MissingData for rows not computed.
  F c(int n, int j) const {
    if (n < 0 || n > n_max()) throw Error(ErrorKind::MissingData, "structure row " + std::to_string(n) + " missing");
    const auto& row = rows[static_cast<std::size_t>(n)];
    if (j < 0 || j >= static_cast<int>(row.size())) return F(0);
    return row[static_cast<std::size_t>(j)];
  }

  /// c_{n,n+N} = 1 for every row.
  bool leading_ones() const {
    for (int n = 0; n <= n_max(); ++n) {
      if (!(c(n, n + config.N) == F(1))) return false;
    }
    return true;
  }
  /// First row with a non-zero coefficient below j = n - M, if any.
  std::optional<int> first_row_below_band() const {
    for (int n = 0; n <= n_max(); ++n) {
      for (int j = 0; j < n - config.M; ++j) {
        if (!(c(n, j) == F(0))) return n;
      }
    }
    return std::nullopt;
  }
  /// c_{n,n-M} != 0 for n >= M.
  bool lower_band_nonzero() const {
    for (int n = config.M; n <= n_max(); ++n) {
      if (c(n, n - config.M) == F(0)) return false;
    }
    return true;
  }
  bool coherent() const { return leading_ones() && !first_row_below_band() && lower_band_nonzero(); }
};

/// P must reach degree n_max + m and Q degree n_max + N + k.
template <typename F>
StructureTable<F> structure_coeffs(const std::vector<Polynomial<F>>& P, const std::vector<Polynomial<F>>& Q,
                                   const CoherenceConfig<F>& config, int n_max, const QParams<F>& qp) {
  config.validate();
  if (static_cast<int>(P.size()) <= n_max + config.m || static_cast<int>(Q.size()) <= n_max + config.N + config.k) {
    throw Error(ErrorKind::MissingData, "not enough polynomials for the requested structure table");
  }
  std::vector<Polynomial<F>> q_basis;
  for (int j = 0; j <= n_max + config.N; ++j) {
    q_basis.push_back(normalized_derivative(Q[static_cast<std::size_t>(j + config.k)], j, config.k, qp));
  }
  StructureTable<F> table{config, {}};
  for (int n = 0; n <= n_max; ++n) {
    const auto lhs = config.pi * normalized_derivative(P[static_cast<std::size_t>(n + config.m)], n, config.m, qp);
    std::vector<Polynomial<F>> basis(q_basis.begin(), q_basis.begin() + n + config.N + 1);
    table.rows.push_back(expand_in_basis(lhs, basis));
  }
  return table;
}

template <typename F>
StructureTable<F> structure_coeffs(const FamilySpec<F>& p_spec, const FamilySpec<F>& q_spec,
                                   const CoherenceConfig<F>& config, int n_max, const QParams<F>& qp) {
  return structure_coeffs(family_polynomials(p_spec, n_max + config.m),
                          family_polynomials(q_spec, n_max + config.N + config.k), config, n_max, qp);
}

/// Moments of the orthogonality functional (m_0 = 1) from <u, P_n> = 0,
/// 1 <= n <= K. Needs beta, gamma up to index K - 1.
template <typename F>
MomentFunctional<F> moments_from_ttrr(const TTRRCoeffs<F>& coeffs, int order) {
  const auto P = ttrr_generate(coeffs, order);
  std::vector<F> m{F(1)};
  for (int n = 1; n <= order; ++n) {
    F acc(0);
    for (int i = 0; i < n; ++i) acc -= P[static_cast<std::size_t>(n)].coeff(i) * m[static_cast<std::size_t>(i)];
    m.push_back(acc);
  }
  return MomentFunctional<F>(std::move(m));
}

/// <u, P_n^2> = gamma_1 ... gamma_n (with m_0 = 1), n = 0..n_max.
template <typename F>
std::vector<F> norms_from_ttrr(const TTRRCoeffs<F>& coeffs, int n_max) {
  std::vector<F> h{F(1)};
  for (int n = 1; n <= n_max; ++n) h.push_back(h.back() * coeffs.gamma_at(n));
  return h;
}

}  // namespace qcoh
