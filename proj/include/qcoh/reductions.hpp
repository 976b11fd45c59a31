#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"
#include "qcoh/algebra/sampling.hpp"

namespace qcoh {

/// Both sides of a family identity, generated independently, n = 0..n_max.
struct ReductionSides {
  std::vector<Polynomial<Rational>> lhs;
  std::vector<Polynomial<Rational>> rhs;
};

/// One displayed relation between the master families and the classical
/// families (special cases, affine rescalings, b -> 0 limits).
struct ReductionIdentity {
  std::string id;
  std::string display;
  int arity = 0;
  /// Side conditions attached to the display (e.g. bc != 0).
  std::function<bool(const std::vector<Rational>&)> admissible;
  std::function<ReductionSides(const std::vector<Rational>&, const Rational& q, int n_max)> sides;
};

const std::vector<ReductionIdentity>& reduction_identities();
const ReductionIdentity& find_reduction(const std::string& id);

struct ReductionReport {
  std::string identity;
  bool holds = false;
  int n_checked = -1;
  /// (n, power) of the first differing coefficient.
  std::optional<std::pair<int, int>> first_failure;
  std::vector<Rational> params;
};

/// Generates both sides and compares them coefficientwise for n <= n_max.
/// Throws DomainError when the side conditions of the display fail.
ReductionReport reduction_check(const ReductionIdentity& identity, const std::vector<Rational>& params,
                                const Rational& q, int n_max);

/// Draws parameters satisfying the side conditions and the regularity of
/// both sides (rejection sampling).
std::vector<Rational> sample_reduction_params(const ReductionIdentity& identity, RationalSampler& sampler,
                                              const Rational& q, int n_max);

/// P_n(x) -> s^n P_n(x/s).
std::vector<Polynomial<Rational>> rescale(std::vector<Polynomial<Rational>> polys, const Rational& s);

}  // namespace qcoh
