#include "qcoh/reductions.hpp"

#include "qcoh/algebra/rational_function.hpp"
#include "qcoh/classical.hpp"
#include "qcoh/families.hpp"

namespace qcoh {

namespace {

using Polys = std::vector<Polynomial<Rational>>;
using Params = std::vector<Rational>;

Polys L(const Rational& a, const Rational& b, const Rational& c, const Rational& q, int n) {
  return family_polynomials(make_l_family(a, b, c, q), n);
}

Polys J(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& q, int n) {
  return family_polynomials(make_j_family(a, b, c, d, q), n);
}

Polys classical_polys(ClassicalLabel label, const Params& params, const Rational& q, int n) {
  return family_polynomials(classical(label, params, q), n);
}

/// Limit t -> 0 of J_n(x; a(t), b(t), c(t), 0 | q), evaluated in Q(t).
Polys j_limit(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c, const Rational& q,
              int n) {
  const auto spec = make_j_family<RationalFunction>(a, b, c, RationalFunction(0), RationalFunction(q));
  Polys out;
  for (const auto& p : family_polynomials(spec, n)) {
    out.push_back(map_coeffs<Rational>(p, [](const RationalFunction& f) { return rf_limit_at_zero(f); }));
  }
  return out;
}

bool nz(const Rational& x) { return !x.is_zero(); }

std::vector<ReductionIdentity> build_registry() {
  std::vector<ReductionIdentity> r;
  const auto always = [](const Params&) { return true; };

  r.push_back({"l-scale-c", "L_n(x;a,b,c|q) = c^n L_n(x/c;a/c,b/c,1|q), c != 0", 3,
               [](const Params& p) { return nz(p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 return ReductionSides{L(p[0], p[1], p[2], q, n),
                                       rescale(L(p[0] / p[2], p[1] / p[2], 1, q, n), p[2])};
               }});
  r.push_back({"l-scale-b", "L_n(x;a,b,0|q) = b^n L_n(x/b;a/b,1,0|q), ab != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 return ReductionSides{L(p[0], p[1], 0, q, n), rescale(L(p[0] / p[1], 1, 0, q, n), p[1])};
               }});
  r.push_back({"l-as-j-b", "L_n(x;a,b,c|q) = J_n(x;ab/c,c/b,b,0|q), bc != 0", 3,
               [](const Params& p) { return nz(p[1] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &b = p[1], &c = p[2];
                 return ReductionSides{L(a, b, c, q, n), J(a * b / c, c / b, b, 0, q, n)};
               }});
  r.push_back({"l-as-j-a", "L_n(x;a,b,c|q) = J_n(x;ab/c,c/a,a,0|q), ac != 0", 3,
               [](const Params& p) { return nz(p[0] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &b = p[1], &c = p[2];
                 return ReductionSides{L(a, b, c, q, n), J(a * b / c, c / a, a, 0, q, n)};
               }});
  r.push_back({"l-limit-00c", "L_n(x;0,0,c|q) = lim_{b->0} J_n(x;0,c/b,b,0|q), c != 0", 1,
               [](const Params& p) { return nz(p[0]); },
               [](const Params& p, const Rational& q, int n) {
                 const RationalFunction t = RationalFunction::t();
                 return ReductionSides{L(0, 0, p[0], q, n), j_limit(0, RationalFunction(p[0]) / t, t, q, n)};
               }});
  r.push_back({"l-limit-a10", "L_n(x;a,1,0|q) = lim_{b->0} J_n(x;a/b,b,1,0|q)", 1, always,
               [](const Params& p, const Rational& q, int n) {
                 const RationalFunction t = RationalFunction::t();
                 return ReductionSides{L(p[0], 1, 0, q, n), j_limit(RationalFunction(p[0]) / t, t, 1, q, n)};
               }});
  r.push_back({"asc-roundtrip", "L_n(x;a,b,0|q) = b^n U_n^{(a/b)}(x/b|q), ab != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 return ReductionSides{
                     L(p[0], p[1], 0, q, n),
                     rescale(classical_polys(ClassicalLabel::AlSalamCarlitz, {p[0] / p[1]}, q, n), p[1])};
               }});
  r.push_back({"bigqlaguerre-roundtrip", "L_n(x;a,b,c|q) = (ab/(cq))^n L_n(cqx/(ab);c/a,c/b|q), abc != 0", 3,
               [](const Params& p) { return nz(p[0] * p[1] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &b = p[1], &c = p[2];
                 return ReductionSides{
                     L(a, b, c, q, n),
                     rescale(classical_polys(ClassicalLabel::BigQLaguerre, {c / a, c / b}, q, n), a * b / (c * q))};
               }});
  r.push_back({"littleqlaguerre-roundtrip-a0", "L_n(x;0,b,c|q) = b^n L_n(x/b;c/b|q), bc != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &b = p[0], &c = p[1];
                 return ReductionSides{L(0, b, c, q, n),
                                       rescale(classical_polys(ClassicalLabel::LittleQLaguerre, {c / b}, q, n), b)};
               }});
  r.push_back({"littleqlaguerre-roundtrip-b0", "L_n(x;a,0,c|q) = a^n L_n(x/a;c/a|q), ac != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &c = p[1];
                 return ReductionSides{L(a, 0, c, q, n),
                                       rescale(classical_polys(ClassicalLabel::LittleQLaguerre, {c / a}, q, n), a)};
               }});
  r.push_back({"l_n-roundtrip", "L_n(x;0,0,c|q) = l_n(x;-c|q), c != 0", 1,
               [](const Params& p) { return nz(p[0]); },
               [](const Params& p, const Rational& q, int n) {
                 return ReductionSides{L(0, 0, p[0], q, n), classical_polys(ClassicalLabel::SmallL, {-p[0]}, q, n)};
               }});
  r.push_back({"j-d0", "J_n(x;a,b,c,0|q) = L_n(x;ab,c,bc|q), bc != 0", 3,
               [](const Params& p) { return nz(p[1] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &b = p[1], &c = p[2];
                 return ReductionSides{J(a, b, c, 0, q, n), L(a * b, c, b * c, q, n)};
               }});
  r.push_back({"bigqjacobi-roundtrip", "J_n(x;a,b,c,d|q) = (a/q)^n P_n(qx/a;b,d/b,c/a|q), abcd != 0", 4,
               [](const Params& p) { return nz(p[0] * p[1] * p[2] * p[3]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3];
                 return ReductionSides{
                     J(a, b, c, d, q, n),
                     rescale(classical_polys(ClassicalLabel::BigQJacobi, {b, d / b, c / a}, q, n), a / q)};
               }});
  r.push_back({"littleqjacobi-roundtrip-a0", "J_n(x;0,b,c,d|q) = c^n P_n(x/c;b,d/b|q), bcd != 0", 3,
               [](const Params& p) { return nz(p[0] * p[1] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &b = p[0], &c = p[1], &d = p[2];
                 return ReductionSides{
                     J(0, b, c, d, q, n),
                     rescale(classical_polys(ClassicalLabel::LittleQJacobi, {b, d / b}, q, n), c)};
               }});
  r.push_back({"littleqjacobi-roundtrip-b0", "J_n(x;a,0,c,d|q) = c^n P_n(x/c;ad/c,c/a|q), acd != 0", 3,
               [](const Params& p) { return nz(p[0] * p[1] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &c = p[1], &d = p[2];
                 return ReductionSides{
                     J(a, 0, c, d, q, n),
                     rescale(classical_polys(ClassicalLabel::LittleQJacobi, {a * d / c, c / a}, q, n), c)};
               }});
  r.push_back({"littleqjacobi-roundtrip-c0", "J_n(x;a,b,0,d|q) = (ab)^n P_n(x/(ab);d/b,b|q), abd != 0", 3,
               [](const Params& p) { return nz(p[0] * p[1] * p[2]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &b = p[1], &d = p[2];
                 return ReductionSides{
                     J(a, b, 0, d, q, n),
                     rescale(classical_polys(ClassicalLabel::LittleQJacobi, {d / b, b}, q, n), a * b)};
               }});
  r.push_back({"qbessel-roundtrip", "J_n(x;0,0,c,d|q) = c^n B_n(x/c;-dq|q), cd != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &c = p[0], &d = p[1];
                 return ReductionSides{J(0, 0, c, d, q, n),
                                       rescale(classical_polys(ClassicalLabel::QBessel, {-d * q}, q, n), c)};
               }});
  r.push_back({"j_n-roundtrip", "J_n(x;a,0,0,d|q) = q^-n j_n(qx;qd,a|q), ad != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &d = p[1];
                 return ReductionSides{J(a, 0, 0, d, q, n),
                                       rescale(classical_polys(ClassicalLabel::SmallJ, {q * d, a}, q, n), q.inverse())};
               }});
  r.push_back({"bigqjacobi-b0-branch", "P_n(x;a,0,c|q) = q^n J_n(x/q;1,a,c,0|q), ac != 0", 2,
               [](const Params& p) { return nz(p[0] * p[1]); },
               [](const Params& p, const Rational& q, int n) {
                 const Rational &a = p[0], &c = p[1];
                 return ReductionSides{classical_polys(ClassicalLabel::BigQJacobi, {a, 0, c}, q, n),
                                       rescale(J(1, a, c, 0, q, n), q)};
               }});
  r.push_back({"littleqjacobi-b0-branch", "P_n(x;a,0|q) = J_n(x;0,a,1,0|q), a != 0", 1,
               [](const Params& p) { return nz(p[0]); },
               [](const Params& p, const Rational& q, int n) {
                 return ReductionSides{classical_polys(ClassicalLabel::LittleQJacobi, {p[0], 0}, q, n),
                                       J(0, p[0], 1, 0, q, n)};
               }});
  return r;
}

}  // namespace

std::vector<Polynomial<Rational>> rescale(std::vector<Polynomial<Rational>> polys, const Rational& s) {
  const Rational inv = s.inverse();
  Rational sn(1);
  for (auto& p : polys) {
    p = affine_substitute(p, inv, Rational(0)) * sn;
    sn *= s;
  }
  return polys;
}

const std::vector<ReductionIdentity>& reduction_identities() {
  static const std::vector<ReductionIdentity> registry = build_registry();
  return registry;
}

const ReductionIdentity& find_reduction(const std::string& id) {
  for (const auto& r : reduction_identities()) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::DomainError, "unknown reduction identity '" + id + "'");
}

ReductionReport reduction_check(const ReductionIdentity& identity, const std::vector<Rational>& params,
                                const Rational& q, int n_max) {
  if (static_cast<int>(params.size()) != identity.arity) {
    throw Error(ErrorKind::DomainError, identity.id + " takes " + std::to_string(identity.arity) + " parameters");
  }
  if (!identity.admissible(params)) {
    throw Error(ErrorKind::DomainError, "side conditions of " + identity.id + " fail");
  }
  const ReductionSides s = identity.sides(params, q, n_max);
  ReductionReport report{identity.id, true, n_max, std::nullopt, params};
  for (int n = 0; n <= n_max; ++n) {
    const auto& a = s.lhs.at(static_cast<std::size_t>(n));
    const auto& b = s.rhs.at(static_cast<std::size_t>(n));
    if (a == b) continue;
    for (int p = 0; p <= std::max(a.degree(), b.degree()); ++p) {
      if (!(a.coeff(p) == b.coeff(p))) {
        report.holds = false;
        report.first_failure = std::make_pair(n, p);
        return report;
      }
    }
  }
  return report;
}

std::vector<Rational> sample_reduction_params(const ReductionIdentity& identity, RationalSampler& sampler,
                                              const Rational& q, int n_max) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Rational> p;
    for (int i = 0; i < identity.arity; ++i) p.push_back(sampler.nonzero());
    if (!identity.admissible(p)) continue;
    try {
      identity.sides(p, q, n_max);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::RegularityViolation || e.kind() == ErrorKind::DenominatorZero ||
          e.kind() == ErrorKind::RestrictionViolation) {
        continue;
      }
      throw;
    }
    return p;
  }
  throw Error(ErrorKind::DomainError, "could not sample admissible parameters for " + identity.id);
}

}  // namespace qcoh
