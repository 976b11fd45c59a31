#include "qcoh/serialize.hpp"

#include <sstream>

namespace qcoh {

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Polynomial<Rational>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

json to_json(const std::vector<Polynomial<Rational>>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_json(p));
  return out;
}

json to_json(const MomentFunctional<Rational>& u) {
  return json{{"order", u.order()}, {"moments", to_json(u.moments())}};
}

json to_json(const TTRRCoeffs<Rational>& c) {
  return json{{"beta", to_json(c.beta)},
              {"gamma", to_json(std::vector<Rational>(c.gamma.begin() + (c.gamma.empty() ? 0 : 1), c.gamma.end()))}};
}

json to_json(const FamilySpec<Rational>& spec) {
  json out{{"kind", spec.is_l() ? "L" : "J"},
           {"params", to_json(spec.params())},
           {"base", to_json(spec.base)},
           {"scale", to_json(spec.scale)},
           {"offset", to_json(spec.offset)}};
  out["label"] = spec.label ? json(label_name(*spec.label)) : json(nullptr);
  return out;
}

json to_json(const IdentityReport& r) {
  json out{{"identity", r.identity}, {"status", status_name(r.status)}, {"order_checked", r.order_checked}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const ReductionReport& r) {
  json out{{"identity", r.identity},
           {"status", r.holds ? "holds" : "fails"},
           {"order_checked", r.n_checked},
           {"params", to_json(r.params)}};
  if (r.first_failure) out["first_failure"] = json{{"n", r.first_failure->first}, {"power", r.first_failure->second}};
  return out;
}

json to_json(const StructureTable<Rational>& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(to_json(row));
  return json{{"M", t.config.M}, {"N", t.config.N}, {"m", t.config.m}, {"k", t.config.k},
              {"pi", to_json(t.config.pi)}, {"rows", rows}, {"coherent", t.coherent()}};
}

json to_json(const ClassificationTrace& t) {
  json out{{"case", case_name(t.case_label)}};
  if (t.family) {
    out["family"] = t.family->is_l() ? "L" : "J";
    out["params"] = to_json(t.family->params());
    out["base"] = to_json(t.family->base);
  } else {
    out["family"] = nullptr;
    out["params"] = nullptr;
    out["base"] = nullptr;
  }
  out["shift"] = to_json(t.omega0);
  out["implicit"] = t.implicit;
  out["alpha"] = to_json(t.alpha);
  out["beta"] = to_json(t.beta);
  auto put = [&](const char* key, const std::optional<Rational>& v) {
    if (v) out[key] = to_json(*v);
  };
  put("c", t.c);
  put("lambda", t.lambda);
  put("mu", t.mu);
  put("delta", t.delta);
  put("r_plus_s", t.r_plus_s);
  put("r_times_s", t.r_times_s);
  put("r", t.r);
  put("s", t.s);
  if (t.root_a && t.root_b) out["roots"] = json::array({to_json(*t.root_a), to_json(*t.root_b)});
  out["pearson"] = json{{"phi", to_json(t.phi)}, {"psi", to_json(t.psi)}};
  out["predicted_ttrr"] = to_json(t.predicted);
  return out;
}

std::string ttrr_csv(const TTRRCoeffs<Rational>& c) {
  std::ostringstream out;
  out << "n,beta,gamma\n";
  const std::size_t rows = std::max(c.beta.size(), c.gamma.size());
  for (std::size_t n = 0; n < rows; ++n) {
    out << n << ',';
    if (n < c.beta.size()) out << c.beta[n].to_string();
    out << ',';
    if (n >= 1 && n < c.gamma.size()) out << c.gamma[n].to_string();
    out << '\n';
  }
  return out.str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

Polynomial<Rational> parse_polynomial(std::string_view text) {
  std::vector<Rational> coeffs;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[') {
    json parsed;
    try {
      parsed = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, std::string("polynomial: ") + e.what());
    }
    if (!parsed.is_array()) throw Error(ErrorKind::ParseError, "polynomial must be an array");
    for (const auto& c : parsed) coeffs.push_back(rational_from_json(c));
  } else {
    std::string_view rest = text;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      coeffs.push_back(Rational::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  if (coeffs.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  return Polynomial<Rational>(std::move(coeffs));
}

}  // namespace qcoh
