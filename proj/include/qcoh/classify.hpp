#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"
#include "qcoh/families.hpp"
#include "qcoh/qcalc.hpp"

namespace qcoh {

using Poly = Polynomial<Rational>;

/// Recurrence data of the monic OPS whose functional solves
/// D_{1/q,-w/q}(phi u) = psi u with deg phi <= 2 and deg psi = 1.
struct PearsonTTRR {
  Rational a0, a1, a2;  // phi = a0 + a1 x + a2 x^2
  Rational b0, b1;      // psi = b0 + b1 x
  std::vector<Rational> d;  // d_0 .. d_{2 n_max + 1}
  std::vector<Rational> e;  // e_0 .. e_{n_max}
  TTRRCoeffs<Rational> result;
};

PearsonTTRR nossa_ttrr(const Poly& phi, const Poly& psi, const QParams<Rational>& qp, int n_max);

enum class CaseLabel { I, II, IIIa, IIIb, IIIbBessel };
std::string case_name(CaseLabel c);

/// Everything the constructive classification derives from (pi, beta_0, gamma_1).
/// mu = q(q + alpha(1 - q)); named mu to keep u for the functional.
struct ClassificationTrace {
  CaseLabel case_label = CaseLabel::I;
  Rational omega0;
  Rational alpha, beta;
  std::optional<Rational> c;  // Case II: pi = x - omega0 + c; Case III.a: the third L parameter
  std::optional<Rational> lambda, mu, delta;
  std::optional<Rational> r_plus_s, r_times_s;
  std::optional<Rational> r, s;
  std::optional<Rational> root_a, root_b;
  /// Pearson pair D_{1/q,-w/q}(phi u) = psi u found along the way.
  Poly phi, psi;
  /// Absent when a needed square root is irrational.
  std::optional<FamilySpec<Rational>> family;
  bool implicit = false;
  TTRRCoeffs<Rational> predicted;
};

/// Identifies the self-coherent OPS with structure relation
///   pi_N D_{q,w} P_{n+1} = [n+1]_q sum_{j=n}^{n+N} c_{n,j} P_j,  N = deg pi <= 2,
/// from its first recurrence coefficients. predicted holds beta, gamma up to n_max.
ClassificationTrace classify_self_coherent(const Poly& pi, const Rational& beta0, const Rational& gamma1,
                                           const QParams<Rational>& qp, int n_max = 10);

/// Recurrence predicted by the symmetric forms of Case III.b:
/// depends only on (lambda, mu, r + s, rs), no root extraction.
TTRRCoeffs<Rational> symmetric_form_ttrr(const Rational& lambda, const Rational& mu, const Rational& r_plus_s,
                                         const Rational& r_times_s, const QParams<Rational>& qp, int n_max);

/// Roots of z^2 - sum z + prod, smaller first, when the discriminant is a rational square.
std::optional<std::pair<Rational, Rational>> rational_roots(const Rational& sum, const Rational& prod);

}  // namespace qcoh
