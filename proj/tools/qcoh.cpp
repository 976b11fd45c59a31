// Command-line front end: generate families, verify identities, classify.
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcoh/classical.hpp"
#include "qcoh/classify.hpp"
#include "qcoh/coherence.hpp"
#include "qcoh/functionals.hpp"
#include "qcoh/reductions.hpp"
#include "qcoh/serialize.hpp"

namespace {

using namespace qcoh;
using R = Rational;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitUsage = 2;

int default_n_max() {
  if (const char* env = std::getenv("QCOH_N_MAX")) {
    try {
      const int n = std::stoi(env);
      if (n >= 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 10;
}

struct FamilyArgs {
  std::string family;
  std::map<std::string, std::string> params;
  std::string base, scale = "1", offset = "0";
};

struct Common {
  std::string q, omega = "0";
  int n = default_n_max();
  int order = 20;
  std::uint64_t seed = 1;
  std::string output = "json";
};

void add_family_options(CLI::App* cmd, FamilyArgs& fam) {
  cmd->add_option("--family", fam.family, "L, J or a classical label (AlSalamCarlitz, BigQJacobi, ...)")->required();
  for (const char* key : {"a", "b", "c", "d"}) {
    cmd->add_option(std::string("--") + key, fam.params[key], std::string("family parameter ") + key);
  }
  cmd->add_option("--base", fam.base, "recurrence base of L/J families (default q)");
  cmd->add_option("--scale", fam.scale, "affine scale s in s^n F_n((x - t)/s)");
  cmd->add_option("--offset", fam.offset, "affine offset t; 'omega0' for w/(1-q)");
}

void add_lattice_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.q, "lattice parameter q")->required();
  cmd->add_option("--omega", c.omega, "lattice parameter omega");
}

R param(const FamilyArgs& fam, const std::string& key) {
  const auto it = fam.params.find(key);
  if (it == fam.params.end() || it->second.empty()) {
    throw Error(ErrorKind::ParseError, "--" + key + " is required for family " + fam.family);
  }
  return R::parse(it->second);
}

FamilySpec<R> build_family(const FamilyArgs& fam, const QParams<R>& qp) {
  const R offset = fam.offset == "omega0" ? qp.omega0() : R::parse(fam.offset);
  const R scale = R::parse(fam.scale);
  const R base = fam.base.empty() ? qp.q() : R::parse(fam.base);
  if (fam.family == "L") {
    return make_l_family(param(fam, "a"), param(fam, "b"), param(fam, "c"), base, scale, offset);
  }
  if (fam.family == "J") {
    return make_j_family(param(fam, "a"), param(fam, "b"), param(fam, "c"), param(fam, "d"), base, scale, offset);
  }
  const auto label = parse_label(fam.family);
  if (!label) throw Error(ErrorKind::ParseError, "unknown family '" + fam.family + "'");
  std::vector<R> values;
  const char* keys[] = {"a", "b", "c", "d"};
  for (int i = 0; i < classical_arity(*label); ++i) values.push_back(param(fam, keys[i]));
  FamilySpec<R> spec = classical(*label, values, base);
  // The classical map fixes scale; user scale and offset compose on top.
  spec.offset = spec.offset * scale + offset;
  spec.scale = spec.scale * scale;
  return spec;
}

QParams<R> lattice(const Common& c) { return QParams<R>(R::parse(c.q), R::parse(c.omega)); }

MomentFunctional<R> family_moments(const FamilySpec<R>& spec, int order) {
  return moments_from_ttrr(family_coeffs(spec, std::max(order, 1)), order);
}

int emit_reports(const std::string& command, const std::vector<IdentityReport>& reports, json extra = json::object()) {
  json out{{"command", command}};
  for (auto& [k, v] : extra.items()) out[k] = v;
  json list = json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  out["reports"] = list;
  const bool ok = all_hold(reports);
  out["all_hold"] = ok;
  std::cout << out.dump(2) << '\n';
  return ok ? kExitOk : kExitIdentity;
}

CoherenceConfig<R> make_config(const std::string& pi_text, int M, int m, int k) {
  CoherenceConfig<R> cfg;
  cfg.pi = parse_polynomial(pi_text);
  cfg.N = cfg.pi.degree();
  cfg.M = M;
  cfg.m = m;
  cfg.k = k;
  cfg.validate();
  return cfg;
}

int run_gen(const FamilyArgs& fam, const Common& c) {
  const auto qp = lattice(c);
  const auto spec = build_family(fam, qp);
  if (c.output == "csv") {
    std::cout << ttrr_csv(family_coeffs(spec, c.n));
  } else {
    std::cout << to_json(family_polynomials(spec, c.n)).dump(2) << '\n';
  }
  return kExitOk;
}

int run_moments(const FamilyArgs& fam, const Common& c) {
  const auto qp = lattice(c);
  json out = to_json(family_moments(build_family(fam, qp), c.order));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_pearson(const FamilyArgs& fam, const Common& c, const std::string& phi, const std::string& psi,
                const std::string& direction) {
  const auto qp = lattice(c);
  const auto u = family_moments(build_family(fam, qp), c.order);
  if (direction != "forward" && direction != "backward") throw Error(ErrorKind::ParseError, "direction must be forward or backward");
  const SemiclassicalWitness<R> w(parse_polynomial(phi), parse_polynomial(psi),
                                  direction == "forward" ? LatticeDirection::Forward : LatticeDirection::Backward);
  const auto res = pearson_check(w, u, qp);
  IdentityReport r{"pearson", res.holds ? ReportStatus::Holds : ReportStatus::Fails, res.order_checked, res.fails_at,
                   "class bound " + std::to_string(w.class_bound())};
  return emit_reports("verify pearson", {r});
}

int run_structure(const FamilyArgs& fam, const Common& c, const std::string& pi, int M, int m, int k) {
  const auto qp = lattice(c);
  const auto spec = build_family(fam, qp);
  const auto cfg = make_config(pi, M, m, k);
  const auto table = structure_coeffs(spec, spec, cfg, c.n, qp);
  IdentityReport r{"structure-relation", table.coherent() ? ReportStatus::Holds : ReportStatus::Fails, c.n,
                   std::nullopt, ""};
  if (!table.leading_ones()) r.note = "leading coefficient not 1";
  if (auto row = table.first_row_below_band()) {
    r.first_failure = *row;
    r.note = "non-zero coefficient below the band";
  } else if (!table.lower_band_nonzero()) {
    r.note = "lowest band coefficient vanishes";
  }
  return emit_reports("verify structure", {r}, json{{"table", to_json(table)}});
}

int run_coherence(const FamilyArgs& fam, const Common& c, const std::string& pi, int M, int m, int k) {
  const auto qp = lattice(c);
  const auto spec = build_family(fam, qp);
  const auto cfg = make_config(pi, M, m, k);
  const int rows = std::max(c.n, k - m + 2 * cfg.N);
  const auto data = make_coherence_data(spec, spec, cfg, qp, rows, c.order);
  std::vector<IdentityReport> reports;
  reports.push_back({"structure-relation", data.table.coherent() ? ReportStatus::Holds : ReportStatus::Fails,
                     data.table.n_max(), data.table.first_row_below_band(), ""});
  const auto system = build_system(data, rows);
  reports.push_back(degree_claims(system));
  for (auto& r : verify_psi_equations(cfg, data.u, data.v, system, qp, 0, c.n)) reports.push_back(r);
  if (m >= k + cfg.N && !(cfg.N == 0 && m <= k)) {
    const auto a = build_varphi_and_A(cfg, system, qp);
    for (auto& r : verify_a_system(data.u, data.v, a.A, a.A1, a.A2, qp)) reports.push_back(r);
  } else if (m < k + cfg.N) {
    const auto b = build_xi_and_B(cfg, system, qp);
    for (auto& r : verify_b_system(data.u, data.v, b.B, b.B1, b.B2, b.BN2, qp)) reports.push_back(r);
  }
  if (k == 0 && m >= 1) {
    const auto chain = build_phi_chain(cfg, data.Q, data.v_norms, system, qp);
    for (auto& r : verify_phi_chain(cfg, data.u, data.v, chain, qp)) reports.push_back(r);
    for (int n = 0; n <= c.n; ++n) reports.push_back(psi_oracle(data, system, n));
  }
  for (int n = 0; n <= c.n; ++n) reports.push_back(phi_oracle(data, system, n));
  return emit_reports("verify coherence", reports);
}

int run_reduction(const Common& c, const std::string& identity, int samples) {
  std::vector<const ReductionIdentity*> targets;
  if (identity == "all") {
    for (const auto& id : reduction_identities()) targets.push_back(&id);
  } else {
    targets.push_back(&find_reduction(identity));
  }
  RationalSampler sampler(c.seed);
  json list = json::array();
  bool ok = true;
  for (const auto* id : targets) {
    for (int s = 0; s < samples; ++s) {
      const R q = c.q.empty() ? sampler.q_value() : R::parse(c.q);
      const auto params = sample_reduction_params(*id, sampler, q, c.n);
      const auto rep = reduction_check(*id, params, q, c.n);
      ok = ok && rep.holds;
      json j = to_json(rep);
      j["q"] = to_json(q);
      list.push_back(j);
    }
  }
  json out{{"command", "verify reduction"}, {"reports", list}, {"all_hold", ok}};
  std::cout << out.dump(2) << '\n';
  return ok ? kExitOk : kExitIdentity;
}

int run_leibniz(const FamilyArgs& fam, const Common& c) {
  const auto qp = lattice(c);
  const auto u = family_moments(build_family(fam, qp), c.order);
  RationalSampler sampler(c.seed);
  std::vector<IdentityReport> reports;
  for (int n = 0; n <= c.n; ++n) {
    const auto f = sampler.polynomial(sampler.integer(0, 3));
    const auto e = leibniz_expansion(f, u, n, qp);
    reports.push_back(moment_report("leibniz-first-form n=" + std::to_string(n), e.direct, e.first_form));
    reports.push_back(moment_report("leibniz-second-form n=" + std::to_string(n), e.direct, e.second_form));
  }
  return emit_reports("verify leibniz", reports);
}

int run_classify(const Common& c, const std::string& pi, const std::string& beta0, const std::string& gamma1) {
  const auto qp = lattice(c);
  const auto trace = classify_self_coherent(parse_polynomial(pi), R::parse(beta0), R::parse(gamma1), qp, c.n);
  if (c.output == "csv") {
    std::cout << ttrr_csv(trace.predicted);
    return kExitOk;
  }
  json out = to_json(trace);
  const auto pearson = nossa_ttrr(trace.phi, trace.psi, qp, c.n).result;
  const bool post = pearson == trace.predicted;
  out["post_check"] = post ? "holds" : "fails";
  std::cout << out.dump(2) << '\n';
  return post ? kExitOk : kExitIdentity;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IdentityFailed:
    case ErrorKind::DegreeClaimViolated:
    case ErrorKind::InternalInconsistency:
      return kExitIdentity;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (q, omega) orthogonal polynomial toolkit"};
  app.require_subcommand(1);
  FamilyArgs fam;
  Common common;
  std::string pi = "1", phi, psi, direction = "backward", identity = "all", beta0, gamma1;
  int M = 0, m = 1, k = 0, samples = 10;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", common.n, "largest index n (default $QCOH_N_MAX or 10)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--output", common.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* gen = app.add_subcommand("gen", "polynomials P_0..P_n of a family");
  add_family_options(gen, fam);
  add_lattice_options(gen, common);
  add_common(gen);

  auto* moments = app.add_subcommand("moments", "moments m_0..m_K of the orthogonality functional");
  add_family_options(moments, fam);
  add_lattice_options(moments, common);
  moments->add_option("--order", common.order, "K")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "verify an identity family exactly");
  verify->require_subcommand(1);
  auto* pearson = verify->add_subcommand("pearson", "D(phi u) = psi u on moments");
  auto* structure = verify->add_subcommand("structure", "structure relation coefficients");
  auto* coherence = verify->add_subcommand("coherence", "coherent-pair constructions on a self pair");
  auto* reduction = verify->add_subcommand("reduction", "family reduction identities");
  auto* leibniz = verify->add_subcommand("leibniz", "functional Leibniz formula");
  for (auto* cmd : {pearson, structure, coherence, leibniz}) {
    add_family_options(cmd, fam);
    add_lattice_options(cmd, common);
    add_common(cmd);
    cmd->add_option("--order", common.order, "moment order K")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", common.seed, "seed for random inputs");
  }
  pearson->add_option("--phi", phi, "phi as [\"c0\",\"c1\",...] or c0,c1,...")->required();
  pearson->add_option("--psi", psi, "psi, same format")->required();
  pearson->add_option("--direction", direction, "backward (1/q,-w/q) or forward (q,w)");
  for (auto* cmd : {structure, coherence}) {
    cmd->add_option("--pi", pi, "monic pi_N, lowest power first");
    cmd->add_option("--M", M, "index M")->check(CLI::NonNegativeNumber);
    cmd->add_option("--m", m, "order m")->check(CLI::NonNegativeNumber);
    cmd->add_option("--k", k, "order k")->check(CLI::NonNegativeNumber);
  }
  reduction->add_option("--identity", identity, "identity id or 'all'");
  reduction->add_option("--seed", common.seed, "seed for parameter sampling");
  reduction->add_option("--samples", samples, "parameter points per identity")->check(CLI::PositiveNumber);
  reduction->add_option("--q", common.q, "fixed q (sampled when absent)");
  add_common(reduction);

  auto* classify = app.add_subcommand("classify", "identify a self-coherent OPS from (pi, beta_0, gamma_1)");
  add_lattice_options(classify, common);
  add_common(classify);
  classify->add_option("--pi", pi, "monic pi with deg <= 2, lowest power first")->required();
  classify->add_option("--beta0", beta0, "beta_0")->required();
  classify->add_option("--gamma1", gamma1, "gamma_1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(fam, common);
    if (*moments) return run_moments(fam, common);
    if (*pearson) return run_pearson(fam, common, phi, psi, direction);
    if (*structure) return run_structure(fam, common, pi, M, m, k);
    if (*coherence) return run_coherence(fam, common, pi, M, m, k);
    if (*reduction) return run_reduction(common, identity, samples);
    if (*leibniz) return run_leibniz(fam, common);
    if (*classify) return run_classify(common, pi, beta0, gamma1);
  } catch (const Error& e) {
    std::cerr << json{{"error", name(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
