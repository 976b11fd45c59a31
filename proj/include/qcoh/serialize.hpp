#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcoh/classify.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/families.hpp"
#include "qcoh/reductions.hpp"

namespace qcoh {

using json = nlohmann::ordered_json;

// Rationals are always "num/den"; polynomials are arrays indexed by power.
json to_json(const Rational& r);
json to_json(const Polynomial<Rational>& p);
json to_json(const std::vector<Rational>& values);
json to_json(const std::vector<Polynomial<Rational>>& polys);
json to_json(const MomentFunctional<Rational>& u);
/// {"beta": [beta_0..], "gamma": [gamma_1..]}
json to_json(const TTRRCoeffs<Rational>& c);
json to_json(const FamilySpec<Rational>& spec);
json to_json(const IdentityReport& r);
json to_json(const ReductionReport& r);
json to_json(const StructureTable<Rational>& t);
json to_json(const ClassificationTrace& t);

/// One row per n: n, beta_n, gamma_n (empty where undefined).
std::string ttrr_csv(const TTRRCoeffs<Rational>& c);

Rational rational_from_json(const json& j);
/// Accepts a JSON array of rationals or a comma-separated list, lowest power first.
Polynomial<Rational> parse_polynomial(std::string_view text);

}  // namespace qcoh
