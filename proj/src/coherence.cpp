#include "qcoh/coherence.hpp"

#include <algorithm>

namespace qcoh {

namespace {

using Functional = MomentFunctional<Rational>;

// All constructions run over the inverse lattice (1/q, -w/q).
struct Backward {
  explicit Backward(const QParams<Rational>& qp) : fwd(qp), inv(qp.inverse()) {}

  Poly L(const Poly& f, int times = 1) const { return shift_power(f, times, inv); }
  Poly D(const Poly& f, int times = 1) const { return hahn_power(f, times, inv); }
  Functional Du(const Functional& u, int times = 1) const { return functional_diff_n(u, times, inv); }
  Rational binom(int n, int k) const { return q_binomial(n, k, inv.q()); }

  QParams<Rational> fwd, inv;
};

Functional sum_of(std::vector<Functional> parts) {
  Functional acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc + parts[i];
  return acc;
}

const Poly& at(const std::vector<Poly>& seq, int i, const char* what) {
  if (i < 0 || i >= static_cast<int>(seq.size())) {
    throw Error(ErrorKind::MissingData, std::string(what) + " index " + std::to_string(i) + " not available");
  }
  return seq[static_cast<std::size_t>(i)];
}

const Rational& at(const std::vector<Rational>& seq, int i, const char* what) {
  if (i < 0 || i >= static_cast<int>(seq.size())) {
    throw Error(ErrorKind::MissingData, std::string(what) + " index " + std::to_string(i) + " not available");
  }
  return seq[static_cast<std::size_t>(i)];
}

}  // namespace

std::string status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Holds: return "holds";
    case ReportStatus::Fails: return "fails";
    case ReportStatus::Degenerate: return "degenerate";
  }
  return "?";
}

IdentityReport moment_report(std::string identity, const Functional& lhs, const Functional& rhs) {
  const auto cmp = compare_moments(lhs, rhs);
  IdentityReport r;
  r.identity = std::move(identity);
  r.status = cmp.equal ? ReportStatus::Holds : ReportStatus::Fails;
  r.order_checked = cmp.order_checked;
  r.first_failure = cmp.first_failure;
  if (cmp.equal && lhs.is_zero() && rhs.is_zero()) {
    r.status = ReportStatus::Degenerate;
    r.note = "both sides vanish identically";
  }
  return r;
}

bool all_hold(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.ok(); });
}

CoherenceData make_coherence_data(const FamilySpec<Rational>& p_spec, const FamilySpec<Rational>& q_spec,
                                  const CoherenceConfig<Rational>& config, const QParams<Rational>& qp, int n_rows,
                                  int order) {
  config.validate();
  const int degree = n_rows + config.M + config.m + config.N + config.k + 1;
  const int depth = std::max(degree, order);
  const auto p_coeffs = family_coeffs(p_spec, depth);
  const auto q_coeffs = family_coeffs(q_spec, depth);
  CoherenceData d{config,
                  qp,
                  ttrr_generate(p_coeffs, degree),
                  ttrr_generate(q_coeffs, degree),
                  norms_from_ttrr(p_coeffs, degree),
                  norms_from_ttrr(q_coeffs, degree),
                  {},
                  moments_from_ttrr(p_coeffs, order),
                  moments_from_ttrr(q_coeffs, order)};
  d.table = structure_coeffs(d.P, d.Q, config, n_rows + config.M, qp);
  return d;
}

Poly build_psi(const CoherenceConfig<Rational>& config, const StructureTable<Rational>& table,
               const std::vector<Rational>& u_norms, const std::vector<Poly>& P, const QParams<Rational>& qp, int n) {
  const Rational& q = qp.q();
  const Rational sign = (-q).pow(config.m);
  Poly out;
  for (int j = std::max(0, n - config.N); j <= n + config.M; ++j) {
    const Rational c = table.c(j, n);
    if (c.is_zero()) continue;
    const Rational ratio = q_factorial(j + config.m, q) / q_factorial(j, q);
    out += at(P, config.m + j, "P") * (sign * ratio * c / at(u_norms, config.m + j, "u norm"));
  }
  return out;
}

Poly build_phi(const CoherenceConfig<Rational>& config, const std::vector<Poly>& Q,
               const std::vector<Rational>& v_norms, const QParams<Rational>& qp, int n, int j) {
  const int N = config.N;
  const int k = config.k;
  if (j < 0 || j > N) throw Error(ErrorKind::IndexOutOfRange, "phi column " + std::to_string(j) + " outside 0..N");
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "phi row must be non-negative");
  const Backward bw(qp);
  const Rational& q = qp.q();
  const Rational scale =
      (-q).pow(k) * q_factorial(n + k, q) / (q_factorial(n, q) * at(v_norms, n + k, "v norm"));
  const Poly& Qnk = at(Q, n + k, "Q");
  Poly sum;
  for (int l = 0; l <= N - j; ++l) {
    const Rational coef = bw.binom(k + N, l) * bw.binom(N - l, N - j - l);
    sum += bw.L(bw.D(config.pi, l), k + N - l) * bw.L(bw.D(Qnk, N - j - l), j) * coef;
  }
  return sum * scale;
}

CoherenceSystem build_system(const CoherenceData& data, int n_count) {
  CoherenceSystem s{data.config, {}, {}};
  for (int n = 0; n <= n_count; ++n) {
    s.psi.push_back(build_psi(data.config, data.table, data.u_norms, data.P, data.qp, n));
    std::vector<Poly> row;
    for (int j = 0; j <= data.config.N; ++j) row.push_back(build_phi(data.config, data.Q, data.v_norms, data.qp, n, j));
    s.phi.push_back(std::move(row));
  }
  return s;
}

IdentityReport degree_claims(const CoherenceSystem& system) {
  const auto& c = system.config;
  IdentityReport r{"degree-claims", ReportStatus::Holds, static_cast<int>(system.psi.size()) - 1, std::nullopt, ""};
  for (int n = 0; n < static_cast<int>(system.psi.size()); ++n) {
    if (system.psi[static_cast<std::size_t>(n)].degree() != c.m + n + c.M) {
      r.status = ReportStatus::Fails;
      r.first_failure = n;
      r.note = "deg psi(.;" + std::to_string(n) + ") = " + std::to_string(system.psi[static_cast<std::size_t>(n)].degree());
      return r;
    }
    for (int j = 0; j <= c.N; ++j) {
      const int deg = system.phi[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)].degree();
      if (deg != c.k + n + j) {
        r.status = ReportStatus::Fails;
        r.first_failure = n;
        r.note = "deg phi(.;" + std::to_string(n) + "," + std::to_string(j) + ") = " + std::to_string(deg);
        return r;
      }
    }
  }
  return r;
}

std::vector<IdentityReport> verify_psi_equations(const CoherenceConfig<Rational>& config, const Functional& u,
                                                 const Functional& v, const CoherenceSystem& system,
                                                 const QParams<Rational>& qp, int n_first, int n_last) {
  const Backward bw(qp);
  const int gap = config.m - config.k - config.N;
  std::vector<IdentityReport> out;
  for (int n = n_first; n <= n_last; ++n) {
    if (n >= static_cast<int>(system.psi.size())) throw Error(ErrorKind::MissingData, "psi row not built");
    const auto& phi = system.phi[static_cast<std::size_t>(n)];
    std::vector<Functional> parts;
    for (int j = 0; j <= config.N; ++j) parts.push_back(left_mult(phi[static_cast<std::size_t>(j)], bw.Du(v, j)));
    const Functional phi_side = sum_of(std::move(parts));
    const Functional psi_u = left_mult(system.psi[static_cast<std::size_t>(n)], u);
    if (gap >= 0) {
      out.push_back(moment_report("psi-u=D^(m-k-N)(phi-v) n=" + std::to_string(n), psi_u, bw.Du(phi_side, gap)));
    } else {
      out.push_back(moment_report("D^(k+N-m)(psi-u)=phi-v n=" + std::to_string(n), bw.Du(psi_u, -gap), phi_side));
    }
  }
  return out;
}

Poly checked_det(const PolyMatrix<Rational>& m) {
  Poly a = det_cofactor(m);
  if (!(a == det_bareiss(m))) throw Error(ErrorKind::InternalInconsistency, "cofactor and Bareiss determinants differ");
  return a;
}

ASystem build_varphi_and_A(const CoherenceConfig<Rational>& config, const CoherenceSystem& system,
                           const QParams<Rational>& qp) {
  const int m = config.m, k = config.k, N = config.N;
  if (m < k + N) throw Error(ErrorKind::DomainError, "square system needs m >= k+N");
  if (N == 0 && m <= k) throw Error(ErrorKind::DomainError, "square system needs m > k when N = 0");
  const int size = m - k + 1;
  if (static_cast<int>(system.psi.size()) < size) throw Error(ErrorKind::MissingData, "psi rows 0..m-k required");
  const Backward bw(qp);
  const int gap = m - k - N;

  ASystem out;
  for (int n = 0; n < size; ++n) {
    std::vector<Poly> row;
    for (int i = 0; i < size; ++i) {
      Poly cell;
      for (int l = 0; l <= std::min(i, N); ++l) {
        const int j = i - l;
        if (j > gap) continue;
        cell += bw.L(bw.D(system.phi[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)], gap - j), j) *
                bw.binom(gap, j);
      }
      row.push_back(std::move(cell));
    }
    out.varphi.push_back(row);
    out.matrix.push_back(std::move(row));
  }
  const std::vector<Poly> rhs(system.psi.begin(), system.psi.begin() + size);
  out.A = checked_det(out.matrix);
  out.A1 = checked_det(replace_column(out.matrix, 0, rhs));
  out.A2 = checked_det(replace_column(out.matrix, 1, rhs));
  out.degenerate = out.A.is_zero();
  return out;
}

std::vector<IdentityReport> verify_a_system(const Functional& u, const Functional& v, const Poly& A, const Poly& A1,
                                            const Poly& A2, const QParams<Rational>& qp) {
  if (A.is_zero()) {
    return {IdentityReport{"A-system", ReportStatus::Degenerate, -1, std::nullopt, "A vanishes identically"}};
  }
  const Backward bw(qp);
  const Rational& q = qp.q();
  std::vector<IdentityReport> out;
  out.push_back(moment_report("A.v=A1.u", left_mult(A, v), left_mult(A1, u)));
  out.push_back(moment_report("A.Dv=A2.u", left_mult(A, bw.Du(v)), left_mult(A2, u)));
  out.push_back(moment_report(
      "pearson-u-from-A", bw.Du(left_mult(A1 * shift(A, qp), u)),
      left_mult(A1 * hahn_diff(A, qp) * q + A1 * bw.D(A) + A2 * bw.L(A), u)));
  const Poly AA1 = A * A1;
  out.push_back(moment_report("pearson-v-from-A", bw.Du(left_mult(shift(AA1, qp), v)),
                              left_mult(hahn_diff(AA1, qp) * q + A * A2, v)));
  return out;
}

BSystem build_xi_and_B(const CoherenceConfig<Rational>& config, const CoherenceSystem& system,
                       const QParams<Rational>& qp) {
  const int m = config.m, k = config.k, N = config.N;
  if (m >= k + N) throw Error(ErrorKind::DomainError, "extended system needs m < k+N");
  const int p = k + N - m;
  const int size = k - m + 2 * N + 1;
  if (static_cast<int>(system.psi.size()) < size) throw Error(ErrorKind::MissingData, "psi rows 0..k-m+2N required");
  const Backward bw(qp);

  BSystem out;
  std::vector<Poly> rhs;
  for (int n = 0; n < size; ++n) {
    std::vector<Poly> xi_row;
    for (int j = 0; j <= p; ++j) {
      xi_row.push_back(bw.L(bw.D(system.psi[static_cast<std::size_t>(n)], p - j), j) * bw.binom(p, j));
    }
    std::vector<Poly> row(system.phi[static_cast<std::size_t>(n)].begin(), system.phi[static_cast<std::size_t>(n)].end());
    for (int j = N + 1; j < size; ++j) row.push_back(-xi_row[static_cast<std::size_t>(j - N)]);
    rhs.push_back(xi_row[0]);
    out.xi.push_back(std::move(xi_row));
    out.matrix.push_back(std::move(row));
  }
  out.B = checked_det(out.matrix);
  out.B1 = checked_det(replace_column(out.matrix, 0, rhs));
  out.B2 = checked_det(replace_column(out.matrix, 1, rhs));
  out.BN2 = checked_det(replace_column(out.matrix, static_cast<std::size_t>(N) + 1, rhs));
  out.degenerate = out.B.is_zero();
  return out;
}

std::vector<IdentityReport> verify_b_system(const Functional& u, const Functional& v, const Poly& B, const Poly& B1,
                                            const Poly& B2, const Poly& BN2, const QParams<Rational>& qp) {
  if (B.is_zero()) {
    return {IdentityReport{"B-system", ReportStatus::Degenerate, -1, std::nullopt, "B vanishes identically"}};
  }
  const Backward bw(qp);
  const Rational& q = qp.q();
  std::vector<IdentityReport> out;
  out.push_back(moment_report("B.v=B1.u", left_mult(B, v), left_mult(B1, u)));
  out.push_back(moment_report("B.Dv=B2.u", left_mult(B, bw.Du(v)), left_mult(B2, u)));
  out.push_back(moment_report("B.Du=BN2.u", left_mult(B, bw.Du(u)), left_mult(BN2, u)));
  const Poly BB1 = B * B1;
  out.push_back(moment_report("pearson-v-from-B", bw.Du(left_mult(shift(BB1, qp), v)),
                              left_mult(hahn_diff(BB1, qp) * q + B * B2, v)));
  out.push_back(moment_report("pearson-u-from-B", bw.Du(left_mult(shift(B, qp), u)),
                              left_mult(hahn_diff(B, qp) * q + BN2, u)));
  return out;
}

std::vector<Poly> build_phi_chain(const CoherenceConfig<Rational>& config, const std::vector<Poly>& Q,
                                  const std::vector<Rational>& v_norms, const CoherenceSystem& system,
                                  const QParams<Rational>& qp) {
  const int m = config.m;
  if (config.k != 0) throw Error(ErrorKind::DomainError, "the Phi chain needs k = 0");
  if (config.N == 0 && m < 1) throw Error(ErrorKind::DomainError, "the Phi chain needs m >= 1 when N = 0");
  if (static_cast<int>(system.psi.size()) <= m) throw Error(ErrorKind::MissingData, "psi rows 0..m required");
  const Backward bw(qp);
  const Rational p = bw.inv.q();
  std::vector<Poly> chain;
  for (int j = 0; j <= m; ++j) {
    Poly num = system.psi[static_cast<std::size_t>(j)] * at(v_norms, j, "v norm");
    const Poly& Qj = at(Q, j, "Q");
    for (int l = 0; l < j; ++l) {
      num -= bw.L(bw.D(Qj, l), m - l) * chain[static_cast<std::size_t>(l)] * bw.binom(m, l);
    }
    chain.push_back(num * (Rational(1) / (q_factorial(j, p) * bw.binom(m, j))));
    const int deg = chain.back().degree();
    const int cap = config.M + m + j;
    if ((j == 0 && deg != cap) || deg > cap) {
      throw Error(ErrorKind::DegreeClaimViolated,
                  "deg Phi(.;" + std::to_string(j) + ") = " + std::to_string(deg) + ", bound " + std::to_string(cap));
    }
  }
  return chain;
}

std::vector<IdentityReport> verify_phi_chain(const CoherenceConfig<Rational>& config, const Functional& u,
                                             const Functional& v, const std::vector<Poly>& big_phi,
                                             const QParams<Rational>& qp) {
  const int m = config.m;
  if (static_cast<int>(big_phi.size()) != m + 1 || m < 1) {
    throw Error(ErrorKind::MissingData, "Phi chain must hold Phi(.;0..m) with m >= 1");
  }
  const Backward bw(qp);
  const Rational& q = qp.q();
  const Poly& phi0 = big_phi[0];
  const Poly& phi1 = big_phi[1];
  const Poly& phim = big_phi[static_cast<std::size_t>(m)];
  const Poly& phim1 = big_phi[static_cast<std::size_t>(m - 1)];
  const Functional pi_v = left_mult(config.pi, v);

  std::vector<IdentityReport> out;
  out.push_back(moment_report("D(Phi1.u)=Phi0.u", bw.Du(left_mult(phi1, u)), left_mult(phi0, u)));
  out.push_back(moment_report("pi.v=Phim.u", pi_v, left_mult(phim, u)));
  out.push_back(moment_report("D(L(Phim).pi.v)=(qD(Phim)+Phim-1).pi.v", bw.Du(left_mult(shift(phim, qp), pi_v)),
                              left_mult(hahn_diff(phim, qp) * q + phim1, pi_v)));

  auto witness_report = [&](const std::string& name, const Poly& phi, const Poly& psi, const Functional& w,
                            int bound) {
    IdentityReport r{name, ReportStatus::Holds, -1, std::nullopt, ""};
    if (psi.degree() < 1) {
      r.status = ReportStatus::Degenerate;
      r.note = "deg psi < 1";
      return r;
    }
    const SemiclassicalWitness<Rational> wit(phi, psi, LatticeDirection::Backward);
    const auto check = pearson_check(wit, w, qp);
    r.order_checked = check.order_checked;
    r.first_failure = check.fails_at;
    r.note = "class bound " + std::to_string(wit.class_bound()) + " <= " + std::to_string(bound);
    if (!check.holds || wit.class_bound() > bound) r.status = ReportStatus::Fails;
    return r;
  };
  out.push_back(witness_report("class-bound-u", phi1, phi0, u, config.M + m - 1));
  out.push_back(witness_report("class-bound-v", shift(phim, qp) * config.pi,
                               (hahn_diff(phim, qp) * q + phim1) * config.pi, v,
                               config.N + config.M + 2 * (m - 1)));
  return out;
}

IdentityReport psi_oracle(const CoherenceData& data, const CoherenceSystem& system, int n) {
  if (data.config.k != 0) throw Error(ErrorKind::DomainError, "psi oracle needs k = 0");
  const Backward bw(data.qp);
  const Functional lhs = bw.Du(left_mult(at(data.Q, n, "Q") * data.config.pi, data.v), data.config.m);
  const Functional rhs = left_mult(at(system.psi, n, "psi") * at(data.v_norms, n, "v norm"), data.u);
  return moment_report("D^m(Q_n.pi.v)=h_n.psi_n.u n=" + std::to_string(n), lhs, rhs);
}

IdentityReport phi_oracle(const CoherenceData& data, const CoherenceSystem& system, int n) {
  const auto& c = data.config;
  const Backward bw(data.qp);
  Functional dual = Functional::zero(0);
  if (c.k == 0) {
    dual = Rational(1) / at(data.v_norms, n, "v norm") * left_mult(at(data.Q, n, "Q"), data.v);
  } else {
    // Dual basis of Q^{[k]}, truncated to what Q reaches.
    const int order = std::min(data.v.order(), static_cast<int>(data.Q.size()) - 1 - c.k);
    std::vector<Poly> basis;
    for (int j = 0; j <= order; ++j) {
      basis.push_back(normalized_derivative(data.Q[static_cast<std::size_t>(j + c.k)], j, c.k, data.qp));
    }
    dual = dual_basis_functional(basis, n, order);
  }
  const Functional lhs = bw.Du(left_mult(c.pi, dual), c.k + c.N);
  if (n >= static_cast<int>(system.phi.size())) throw Error(ErrorKind::MissingData, "phi row not built");
  std::vector<Functional> parts;
  for (int j = 0; j <= c.N; ++j) {
    parts.push_back(left_mult(system.phi[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)], bw.Du(data.v, j)));
  }
  return moment_report("D^(k+N)(pi.b_n)=phi-v n=" + std::to_string(n), lhs, sum_of(std::move(parts)));
}

}  // namespace qcoh
