#include "qcoh/classify.hpp"

namespace qcoh {

namespace {

Rational p_bracket(int n, const Rational& p) { return q_bracket(n, p); }

}  // namespace

std::string case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::I: return "I";
    case CaseLabel::II: return "II";
    case CaseLabel::IIIa: return "III.a";
    case CaseLabel::IIIb: return "III.b";
    case CaseLabel::IIIbBessel: return "III.b-bessel";
  }
  return "?";
}

PearsonTTRR nossa_ttrr(const Poly& phi, const Poly& psi, const QParams<Rational>& qp, int n_max) {
  if (phi.is_zero() || phi.degree() > 2) throw Error(ErrorKind::DomainError, "phi must be non-zero with deg <= 2");
  if (psi.degree() != 1) throw Error(ErrorKind::DomainError, "psi must have degree 1");
  PearsonTTRR out;
  out.a0 = phi.coeff(0);
  out.a1 = phi.coeff(1);
  out.a2 = phi.coeff(2);
  out.b0 = psi.coeff(0);
  out.b1 = psi.coeff(1);
  const Rational& q = qp.q();
  const Rational p = q.inverse();
  const Rational w = qp.omega();

  for (int n = 0; n <= 2 * n_max + 1; ++n) {
    const Rational dn = out.b1 * p.pow(n) + out.a2 * p_bracket(n, p);
    if (dn.is_zero()) throw Error(ErrorKind::RegularityViolation, "d_" + std::to_string(n) + " = 0");
    out.d.push_back(dn);
  }
  for (int n = 0; n <= n_max; ++n) {
    const Rational dn = out.d[static_cast<std::size_t>(n)];
    out.e.push_back(out.b0 * p.pow(n) + (out.a1 - p * w * dn) * p_bracket(n, p));
  }
  auto d = [&](int i) { return out.d.at(static_cast<std::size_t>(i)); };
  auto e = [&](int i) { return out.e.at(static_cast<std::size_t>(i)); };

  std::vector<Rational> beta, gamma{Rational(0)};
  for (int n = 0; n <= n_max; ++n) {
    Rational b = -(p * w * p_bracket(n, p)) - p_bracket(n + 1, p) * e(n) / d(2 * n);
    if (n > 0) b += p_bracket(n, p) * e(n - 1) / d(2 * n - 2);
    beta.push_back(b);

    const Rational phi_at = phi(-e(n) / d(2 * n));
    if (phi_at.is_zero()) {
      throw Error(ErrorKind::RegularityViolation, "phi(-e_" + std::to_string(n) + "/d_" + std::to_string(2 * n) + ") = 0");
    }
    // d_{n-1}/d_{2n-1} cancels to 1 at n = 0.
    const Rational ratio = n == 0 ? Rational(1) : d(n - 1) / d(2 * n - 1);
    gamma.push_back(-(p.pow(n) * p_bracket(n + 1, p) * ratio / d(2 * n + 1)) * phi_at);
  }
  out.result = TTRRCoeffs<Rational>(std::move(beta), std::move(gamma));
  return out;
}

std::optional<std::pair<Rational, Rational>> rational_roots(const Rational& sum, const Rational& prod) {
  const auto root = (sum * sum - Rational(4) * prod).sqrt_exact();
  if (!root) return std::nullopt;
  return std::make_pair((sum - *root) / Rational(2), (sum + *root) / Rational(2));
}

TTRRCoeffs<Rational> symmetric_form_ttrr(const Rational& lambda, const Rational& mu, const Rational& r_plus_s,
                                         const Rational& r_times_s, const QParams<Rational>& qp, int n_max) {
  const Rational p = qp.q().inverse();
  const Rational w0 = qp.omega0();
  const Rational one(1);
  // varphi(z; r, s) varphi(z; s, r) with varphi(z; x, y) = x mu z^2 - lambda z + y.
  auto product = [&](const Rational& z) {
    const Rational z2 = z * z;
    return r_times_s * mu * mu * z2 * z2 - lambda * mu * r_plus_s * z2 * z +
           (mu * (r_plus_s * r_plus_s - Rational(2) * r_times_s) + lambda * lambda) * z2 - lambda * r_plus_s * z +
           r_times_s;
  };
  auto den = [&](int e) {
    const Rational v = one - mu * p.pow(e);
    if (v.is_zero()) throw Error(ErrorKind::DegenerateInput, "1 - mu q^-" + std::to_string(e) + " = 0");
    return v;
  };
  std::vector<Rational> beta, gamma{Rational(0)};
  for (int n = 0; n <= n_max; ++n) {
    const Rational pn = p.pow(n);
    const Rational num = (lambda + r_plus_s) * (one + mu * p.pow(2 * n + 1)) -
                         (one + p) * (lambda + mu * r_plus_s) * pn;
    beta.push_back(w0 + pn * num / (den(2 * n) * den(2 * n + 2)));
    const Rational z = p.pow(n + 1);
    const Rational g = pn * (one - z) * (one - mu * z) * product(z);
    gamma.push_back(-g / (den(2 * n + 1) * den(2 * n + 2) * den(2 * n + 2) * den(2 * n + 3)));
  }
  return TTRRCoeffs<Rational>(std::move(beta), std::move(gamma));
}

ClassificationTrace classify_self_coherent(const Poly& pi, const Rational& beta0, const Rational& gamma1,
                                           const QParams<Rational>& qp, int n_max) {
  if (gamma1.is_zero()) throw Error(ErrorKind::DegenerateInput, "gamma_1 must be non-zero");
  if (!pi.is_monic() || pi.degree() > 2) throw Error(ErrorKind::DomainError, "pi must be monic of degree <= 2");

  const Rational& q = qp.q();
  const Rational one(1);
  ClassificationTrace t;
  t.omega0 = qp.omega0();
  const Rational& w0 = t.omega0;
  const Poly shifted_x = Poly({-w0, one});  // x - omega0

  switch (pi.degree()) {
    case 0: {
      t.case_label = CaseLabel::I;
      t.alpha = -q / gamma1;
      t.beta = t.alpha * (w0 - beta0);
      t.phi = Poly::constant(one);
      t.psi = Poly({-beta0, one}) * t.alpha;
      // z^2 + (w0 - beta0) z + gamma1/(q-1) = 0
      if (auto roots = rational_roots(beta0 - w0, gamma1 / (q - one))) {
        t.root_a = roots->first;
        t.root_b = roots->second;
        t.family = make_l_family(roots->first, roots->second, Rational(0), q, one, w0);
      }
      break;
    }
    case 1: {
      t.case_label = CaseLabel::II;
      const Rational c = pi.coeff(0) + w0;  // pi = x - w0 + c
      t.c = c;
      t.alpha = -q * (beta0 - w0 + c) / gamma1;
      if (t.alpha.is_zero()) {
        throw Error(ErrorKind::DegenerateInput, "c + beta_0 = omega_0: c_{0,0} vanishes");
      }
      t.beta = t.alpha * (w0 - beta0);
      t.phi = pi;
      t.psi = shifted_x * t.alpha + Poly::constant(t.beta);
      // theta_2 has a + b = q + beta(1 - q), ab = c alpha q (1 - q).
      const Rational r = one / (t.alpha * (q - one));
      t.r = r;
      if (auto roots = rational_roots(q + t.beta * (one - q), c * t.alpha * q * (one - q))) {
        t.root_a = roots->first;
        t.root_b = roots->second;
        t.family = make_l_family(roots->first * r, roots->second * r, r, q, one, w0);
      }
      break;
    }
    case 2: {
      const Poly centered = affine_substitute(pi, one, w0);  // pi(y + w0) = y^2 - (r+s) y + rs
      const Rational sum = -centered.coeff(1);
      const Rational prod = centered.coeff(0);
      t.r_plus_s = sum;
      t.r_times_s = prod;
      t.alpha = -q * (gamma1 + pi(beta0)) / gamma1;
      if (t.alpha.is_zero()) throw Error(ErrorKind::DegenerateInput, "alpha = 0 contradicts regularity");
      t.beta = -t.alpha * (beta0 - w0);
      t.phi = pi;
      t.psi = shifted_x * t.alpha + Poly::constant(t.beta);

      std::optional<std::pair<Rational, Rational>> rs;
      if (prod.is_zero()) {
        rs = std::make_pair(Rational(0), sum);
      } else {
        rs = rational_roots(sum, prod);
      }
      if (rs) {
        t.r = rs->first;
        t.s = rs->second;
      }

      if (t.alpha == q / (q - one)) {
        t.case_label = CaseLabel::IIIa;
        const Rational c = (q - one) * t.beta + q * sum;
        t.c = c;
        if (rs) t.family = make_l_family(*t.r, *t.s, c, q.inverse(), one, w0);
        break;
      }

      t.case_label = CaseLabel::IIIb;
      const Rational mu = q * (q + t.alpha * (one - q));
      const Rational lambda = sum * q - t.beta * (one - q);
      t.mu = mu;
      t.lambda = lambda;
      for (int n = 0; n <= 2 * n_max + 3; ++n) {
        if (mu == q.pow(n)) throw Error(ErrorKind::DegenerateInput, "mu = q^" + std::to_string(n));
      }
      t.predicted = symmetric_form_ttrr(lambda, mu, sum, prod, qp, n_max);
      if (!rs) {
        t.implicit = true;
        return t;
      }
      const Rational& r = *t.r;
      const Rational& s = *t.s;
      if (r.is_zero() && lambda.is_zero()) {
        if (s.is_zero()) throw Error(ErrorKind::DegenerateInput, "r = lambda = s = 0");
        t.case_label = CaseLabel::IIIbBessel;
        t.root_a = Rational(0);
        t.root_b = Rational(0);
        t.family = make_j_family(Rational(0), Rational(0), s, mu, q.inverse(), one, w0);
      } else if (r.is_zero()) {
        t.root_a = lambda / mu;
        t.root_b = mu * s / lambda;
        t.family = make_j_family(*t.root_a, *t.root_b, r, mu, q.inverse(), one, w0);
      } else {
        const Rational delta = lambda * lambda - Rational(4) * r * s * mu;
        t.delta = delta;
        const auto root = delta.sqrt_exact();
        if (!root) {
          t.implicit = true;
          return t;
        }
        t.root_a = (lambda + *root) / (Rational(2) * mu);
        t.root_b = (lambda - *root) / (Rational(2) * r);
        t.family = make_j_family(*t.root_a, *t.root_b, r, mu, q.inverse(), one, w0);
      }
      return t;
    }
    default:
      break;
  }

  if (t.family) {
    t.predicted = family_coeffs(*t.family, n_max);
  } else {
    t.implicit = true;
    t.predicted = nossa_ttrr(t.phi, t.psi, qp, n_max).result;
  }
  return t;
}

}  // namespace qcoh
