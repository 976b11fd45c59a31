#pragma once

#include <vector>

#include "qcoh/algebra/rational.hpp"
#include "qcoh/families.hpp"

namespace qcoh {

/// x in {q^-n : n >= 1}. Exact and terminating for rational q with |q| != 1.
bool in_lambda(const Rational& x, const Rational& q);

/// Number of parameters each classical family takes.
int classical_arity(ClassicalLabel label);

/// The q-classical family `label` realized as a shifted L- or J-family.
/// Throws RestrictionViolation naming the first failed parameter condition.
FamilySpec<Rational> classical(ClassicalLabel label, const std::vector<Rational>& params, const Rational& q);

}  // namespace qcoh
