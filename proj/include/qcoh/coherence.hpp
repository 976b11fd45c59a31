#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcoh/algebra/determinant.hpp"
#include "qcoh/algebra/rational.hpp"
#include "qcoh/families.hpp"
#include "qcoh/functionals.hpp"
#include "qcoh/qcalc.hpp"

namespace qcoh {

using Poly = Polynomial<Rational>;

enum class ReportStatus { Holds, Fails, Degenerate };
std::string status_name(ReportStatus s);

struct IdentityReport {
  std::string identity;
  ReportStatus status = ReportStatus::Holds;
  int order_checked = -1;
  std::optional<int> first_failure;
  std::string note;

  bool ok() const { return status == ReportStatus::Holds; }
};

IdentityReport moment_report(std::string identity, const MomentFunctional<Rational>& lhs,
                             const MomentFunctional<Rational>& rhs);
bool all_hold(const std::vector<IdentityReport>& reports);

/// Everything the constructions consume: both sequences, their norms,
/// the structure table and truncated moment sequences of u and v.
struct CoherenceData {
  CoherenceConfig<Rational> config;
  QParams<Rational> qp;
  std::vector<Poly> P, Q;
  std::vector<Rational> u_norms, v_norms;
  StructureTable<Rational> table;
  MomentFunctional<Rational> u, v;
};

/// Builds the data for n = 0..n_rows with moments of the given order.
/// The structure table is computed, not assumed; check table.coherent().
CoherenceData make_coherence_data(const FamilySpec<Rational>& p_spec, const FamilySpec<Rational>& q_spec,
                                  const CoherenceConfig<Rational>& config, const QParams<Rational>& qp, int n_rows,
                                  int order);

struct CoherenceSystem {
  CoherenceConfig<Rational> config;
  std::vector<Poly> psi;               // psi[n]
  std::vector<std::vector<Poly>> phi;  // phi[n][j], 0 <= j <= N
};

Poly build_psi(const CoherenceConfig<Rational>& config, const StructureTable<Rational>& table,
               const std::vector<Rational>& u_norms, const std::vector<Poly>& P, const QParams<Rational>& qp, int n);

Poly build_phi(const CoherenceConfig<Rational>& config, const std::vector<Poly>& Q,
               const std::vector<Rational>& v_norms, const QParams<Rational>& qp, int n, int j);

/// psi and phi tables for n = 0..n_count.
CoherenceSystem build_system(const CoherenceData& data, int n_count);

/// deg psi(.;n) = m+n+M and deg phi(.;n,j) = k+n+j on every cell.
IdentityReport degree_claims(const CoherenceSystem& system);

/// psi(.;n) u against the phi-side, in whichever form the indices select:
///   m >= k+N:  psi u = D^{m-k-N}( sum_j phi_j D^j v )
///   m <  k+N:  D^{k+N-m}(psi u) = sum_j phi_j D^j v
/// with D the functional operator over (1/q, -w/q).
std::vector<IdentityReport> verify_psi_equations(const CoherenceConfig<Rational>& config,
                                                 const MomentFunctional<Rational>& u,
                                                 const MomentFunctional<Rational>& v, const CoherenceSystem& system,
                                                 const QParams<Rational>& qp, int n_first, int n_last);

/// Exact determinant: cofactor expansion and Bareiss must agree.
Poly checked_det(const PolyMatrix<Rational>& m);

/// Case m >= k+N.
struct ASystem {
  std::vector<std::vector<Poly>> varphi;  // varphi[n][i], n, i = 0..m-k
  PolyMatrix<Rational> matrix;
  Poly A, A1, A2;
  bool degenerate = false;
};
ASystem build_varphi_and_A(const CoherenceConfig<Rational>& config, const CoherenceSystem& system,
                           const QParams<Rational>& qp);

std::vector<IdentityReport> verify_a_system(const MomentFunctional<Rational>& u, const MomentFunctional<Rational>& v,
                                            const Poly& A, const Poly& A1, const Poly& A2,
                                            const QParams<Rational>& qp);

/// Case m < k+N.
struct BSystem {
  std::vector<std::vector<Poly>> xi;  // xi[n][j], n = 0..k-m+2N, j = 0..k+N-m
  PolyMatrix<Rational> matrix;
  Poly B, B1, B2, BN2;
  bool degenerate = false;
};
BSystem build_xi_and_B(const CoherenceConfig<Rational>& config, const CoherenceSystem& system,
                       const QParams<Rational>& qp);

std::vector<IdentityReport> verify_b_system(const MomentFunctional<Rational>& u, const MomentFunctional<Rational>& v,
                                            const Poly& B, const Poly& B1, const Poly& B2, const Poly& BN2,
                                            const QParams<Rational>& qp);

/// Case k = 0: Phi(.;0..m). Throws DegreeClaimViolated if deg Phi(.;0) != M+m
/// or deg Phi(.;j) > M+m+j.
std::vector<Poly> build_phi_chain(const CoherenceConfig<Rational>& config, const std::vector<Poly>& Q,
                                  const std::vector<Rational>& v_norms, const CoherenceSystem& system,
                                  const QParams<Rational>& qp);

/// Pearson-type equations of the chain plus the class bounds of both witnesses.
std::vector<IdentityReport> verify_phi_chain(const CoherenceConfig<Rational>& config,
                                             const MomentFunctional<Rational>& u,
                                             const MomentFunctional<Rational>& v, const std::vector<Poly>& big_phi,
                                             const QParams<Rational>& qp);

/// D^m(Q_n pi v) computed directly against <v,Q_n^2> psi(.;n) u (k = 0 only).
IdentityReport psi_oracle(const CoherenceData& data, const CoherenceSystem& system, int n);

/// D^{k+N}(pi b_n^{[k]}) computed directly against sum_j phi(.;n,j) D^j v,
/// b_n^{[k]} the dual basis of (Q_n^{[k]}).
IdentityReport phi_oracle(const CoherenceData& data, const CoherenceSystem& system, int n);

}  // namespace qcoh
