#include "hclab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hclab/constructions.hpp"
#include "hclab/criterion.hpp"
#include "hclab/error.hpp"
#include "hclab/io.hpp"
#include "hclab/orbit.hpp"
#include "hclab/random.hpp"
#include "hclab/scenario.hpp"
#include "hclab/version.hpp"

namespace hclab::cli {

namespace {

using io::Json;

struct CommonOptions {
  std::string scenario;
  std::string config;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

Scenario load_scenario(const CommonOptions& opts) {
  if (!opts.config.empty()) return scenario_from_json(io::parse_json(read_file(opts.config)));
  if (opts.scenario.empty()) throw ParseError("pass --scenario NAME or --config FILE");
  if (auto s = builtin_scenario(opts.scenario)) return *s;
  std::string known;
  for (const auto& n : builtin_scenario_names()) known += " " + n;
  throw ParseError("unknown scenario '" + opts.scenario + "' (built-in:" + known + ")");
}

/// Writes to --out, else to $HCLAB_OUT_DIR/<command>.json, else stdout.
void emit(const Json& doc, const CommonOptions& opts, const std::string& command, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  std::filesystem::path path = opts.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) path = std::filesystem::path(dir) / (command + ".json");
  }
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

Json header(const std::string& command, const Scenario& s) {
  return Json{{"command", command}, {"scenario", s.name}};
}

// --- subcommands ----------------------------------------------------------

struct ConstructOptions {
  std::uint64_t samples = 200;
  std::uint64_t random = 1000;
  std::uint64_t seed = 1;
};

int cmd_construct(const CommonOptions& common, const ConstructOptions& o, std::ostream& out) {
  const Scenario s = load_scenario(common);
  const Operator& t = s.op;

  const Dyadic bound_sup = operator_norm_bound(t, NormKind::Sup);
  const Dyadic bound_l1 = operator_norm_bound(t, NormKind::L1);

  CheckReport bounded{.name = "boundedness"};
  std::mt19937_64 rng(o.seed);
  const SubspaceSpec everything = SubspaceSpec::all(NormKind::Sup);
  for (std::uint64_t i = 0; i < o.random; ++i) {
    const SparseVector x = random_vector(rng, everything);
    const SparseVector tx = apply(t, x);
    ++bounded.checked;
    if (norm(tx, NormKind::Sup) > bound_sup * norm(x, NormKind::Sup))
      bounded.fail({i, x, tx, "sup-norm bound violated"});
    if (norm(tx, NormKind::L1) > bound_l1 * norm(x, NormKind::L1)) bounded.fail({i, x, tx, "l1-norm bound violated"});
  }

  const CheckReport invariance = check_invariance(t, s.subspace, enumerate_prefix(s.subspace, o.samples, s.enumeration_offset));

  Json doc = header("construct", s);
  doc["operator"] = io::to_json(t);
  doc["norm_bound"] = Json{{"sup", io::to_json(bound_sup)}, {"l1", io::to_json(bound_l1)}};
  doc["seed"] = o.seed;
  doc["boundedness"] = io::to_json(bounded);
  doc["invariance"] = io::to_json(invariance);
  const bool passed = bounded.passed && invariance.passed;
  doc["passed"] = passed;
  emit(doc, common, "construct", out);
  return passed ? kOk : kCheckFailed;
}

int cmd_conjugacy(const CommonOptions& common, std::uint64_t n, std::ostream& out) {
  const Scenario s = load_scenario(common);
  if (!s.system) throw ParseError("scenario '" + s.name + "' has no biorthogonal system");
  const Operator S = build_S();
  const CheckReport report = check_quasiconjugacy(s.op, S, *s.system, n);

  Json doc = header("conjugacy", s);
  doc["t"] = io::to_json(s.op);
  doc["s"] = io::to_json(S);
  doc["system"] = io::to_json(*s.system);
  doc["n"] = n;
  doc["report"] = io::to_json(report);
  doc["passed"] = report.passed;
  emit(doc, common, "conjugacy", out);
  return report.passed ? kOk : kCheckFailed;
}

struct CriterionOptions {
  std::string a_operator;
  std::string op;
  std::string sequence;
  std::uint64_t samples = 100;
  std::uint64_t k_probe = 0;
  std::uint64_t K = 12;
  bool le = false;
};

Scenario with_overrides(Scenario s, const CriterionOptions& o) {
  if (!o.op.empty()) s.op = io::parse_operator(o.op);
  if (!o.a_operator.empty()) s.a_op = io::parse_operator(o.a_operator);
  if (!o.sequence.empty()) s.seq = io::parse_sequence(o.sequence);
  if (o.k_probe != 0) s.budgets.k_probe = o.k_probe;
  return s;
}

int cmd_criterion_check(const CommonOptions& common, const CriterionOptions& o, std::ostream& out) {
  const Scenario s = with_overrides(load_scenario(common), o);
  const CriterionWitness w = s.witness();
  const auto samples = enumerate_prefix(s.subspace, o.samples, s.enumeration_offset);

  Json doc = header("criterion-check", s);
  doc["witness"] = io::to_json(w);
  doc["samples"] = o.samples;
  doc["k_probe"] = s.budgets.k_probe;
  bool passed = false;
  try {
    const ConditionsReport r = check_conditions(w, samples, s.budgets.k_probe);
    doc["conditions"] = io::to_json(r);
    passed = r.passed();
  } catch (const PreconditionError& e) {
    doc["error"] = e.what();
  }
  if (o.le) {
    const LeReport le = check_le_criterion(w.t, w.a, w.m, samples, s.budgets.k_probe, w.decay, w.kernel_budget);
    doc["le_criterion"] = io::to_json(le);
  }
  doc["passed"] = passed;
  emit(doc, common, "criterion-check", out);
  return passed ? kOk : kCheckFailed;
}

int cmd_criterion_build(const CommonOptions& common, const CriterionOptions& o, std::ostream& out) {
  const Scenario s = with_overrides(load_scenario(common), o);
  if (o.K == 0) throw ParseError("--K must be >= 1");
  const CriterionWitness w = s.witness();
  const auto prefix = enumerate_prefix(s.subspace, o.K + 1, s.enumeration_offset);

  HypercyclicCertificate cert = build_vector(w, prefix, select_subsequence(w, prefix, o.K));
  cert.dense_prefix = prefix;
  cert.enumeration_offset = s.enumeration_offset;
  const bool passed = std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return c.ok(); });

  emit(io::certificate_to_json(cert), common, "certificate", out);
  return passed ? kOk : kCheckFailed;
}

int cmd_criterion_verify(const CommonOptions& common, const std::string& path, std::ostream& out) {
  const HypercyclicCertificate cert = io::certificate_from_json(io::parse_json(read_file(path)));
  const CertificateReport report = audit_certificate(cert);

  Json doc{{"command", "criterion-verify"}, {"certificate", path}, {"K", cert.K}};
  doc["report"] = io::to_json(report);
  doc["passed"] = report.passed();
  emit(doc, common, "criterion-verify", out);
  return report.passed() ? kOk : kCheckFailed;
}

struct OrbitOptions {
  std::string start;
  std::string op;
  std::uint64_t steps = 10;
  std::string certificate;
  std::uint64_t targets = 8;
  std::string eps = "1/2";
  std::uint64_t max_steps = 0;
  bool all_hits = false;
  std::string csv;
};

int cmd_orbit(const CommonOptions& common, const OrbitOptions& o, std::ostream& out) {
  OrbitReport report;
  Json doc{{"command", "orbit"}};
  bool passed = true;

  if (!o.certificate.empty()) {
    const HypercyclicCertificate cert = io::certificate_from_json(io::parse_json(read_file(o.certificate)));
    if (o.targets == 0 || o.targets > cert.K) throw ParseError("--targets must be between 1 and K");
    const std::vector<SparseVector> targets(cert.dense_prefix.begin(), cert.dense_prefix.begin() + static_cast<std::ptrdiff_t>(o.targets));
    const std::uint64_t max_steps = o.max_steps ? o.max_steps : cert.selection.picks[o.targets - 1].m;
    report = density_report(cert.witness.t, cert.x_partial, targets, Dyadic::parse(o.eps), max_steps,
                            cert.witness.m.norm(), o.all_hits ? HitPolicy::All : HitPolicy::First);
    doc["certificate"] = o.certificate;
    doc["eps"] = io::to_json(Dyadic::parse(o.eps));
    doc["evidence"] = "finite density evidence: hits of the computed orbit near the first targets";
    passed = report.missed_targets.empty();
  } else {
    const Scenario s = load_scenario(common);
    const Operator t = o.op.empty() ? s.op : io::parse_operator(o.op);
    if (o.start.empty()) throw ParseError("--start is required without --certificate");
    report = orbit(t, SparseVector::parse(o.start), o.steps, s.subspace.norm());
    doc["scenario"] = s.name;
  }

  doc["report"] = io::to_json(report);
  doc["passed"] = passed;
  if (!o.csv.empty()) write_file(o.csv, orbit_csv(report));
  emit(doc, common, "orbit", out);
  return passed ? kOk : kCheckFailed;
}

int cmd_enumerate(const CommonOptions& common, std::uint64_t count, std::uint64_t skip, std::ostream& out) {
  const Scenario s = load_scenario(common);
  Json vectors = Json::array();
  const auto prefix = enumerate_prefix(s.subspace, count, skip);
  for (std::uint64_t i = 0; i < prefix.size(); ++i)
    vectors.push_back(Json{{"n", skip + i + 1}, {"literal", prefix[i].to_string()}, {"triples", io::to_json(prefix[i])}});

  Json doc = header("enumerate", s);
  doc["subspace"] = io::to_json(s.subspace);
  doc["vectors"] = vectors;
  emit(doc, common, "enumerate", out);
  return kOk;
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--scenario", o.scenario, "Built-in scenario (example-linf, thm1-construction)");
  cmd->add_option("--config", o.config, "Scenario config file (JSON)");
  cmd->add_option("--out", o.out, "Output file (default: $HCLAB_OUT_DIR/<command>.json or stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hclab: exact dyadic laboratory for subspace-hypercyclic operators", "hclab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOptions common;
  ConstructOptions construct_opts;
  CriterionOptions crit;
  OrbitOptions orbit_opts;
  std::uint64_t conj_n = 500;
  std::uint64_t enum_count = 20;
  std::uint64_t enum_skip = 0;
  std::string cert_path;

  auto* construct = app.add_subcommand("construct", "Boundedness and invariance checks for the basis-perturbation operator");
  add_common(construct, common);
  construct->add_option("--samples", construct_opts.samples, "Enumerated subspace members for the invariance check");
  construct->add_option("--random", construct_opts.random, "Pseudo-random vectors for the norm bound");
  construct->add_option("--seed", construct_opts.seed);

  auto* conjugacy = app.add_subcommand("conjugacy", "Exact check T(phi(e_k)) = phi(S(e_k)) for k <= n");
  add_common(conjugacy, common);
  conjugacy->add_option("--n", conj_n);

  auto add_criterion = [&](CLI::App* cmd) {
    add_common(cmd, common);
    cmd->add_option("--operator", crit.op, "Override T (JSON or tag)");
    cmd->add_option("--a-operator", crit.a_operator, "Override A (JSON or tag)");
    cmd->add_option("--sequence", crit.sequence, "Override m_k, e.g. 2k or 2k+1");
    cmd->add_option("--k-probe", crit.k_probe);
  };
  auto* check = app.add_subcommand("criterion-check", "Check conditions (i)-(iv) on enumerated samples");
  add_criterion(check);
  check->add_option("--samples", crit.samples);
  check->add_flag("--le", crit.le, "Also evaluate Le's criterion and its invariance prerequisite");

  auto* build = app.add_subcommand("criterion-build", "Select (m_{j_k}), build the certified vector and write a certificate");
  add_criterion(build);
  build->add_option("--K", crit.K, "Number of certified stages");

  auto* verify = app.add_subcommand("criterion-verify", "Re-derive every verdict of a certificate file");
  add_common(verify, common);
  verify->add_option("certificate", cert_path, "Certificate file")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit segment, or density evidence for a certificate");
  add_common(orbit_cmd, common);
  orbit_cmd->add_option("--start", orbit_opts.start, "Start vector literal {i:p/2^e, ...}");
  orbit_cmd->add_option("--operator", orbit_opts.op);
  orbit_cmd->add_option("--steps", orbit_opts.steps);
  orbit_cmd->add_option("--certificate", orbit_opts.certificate);
  orbit_cmd->add_option("--targets", orbit_opts.targets);
  orbit_cmd->add_option("--eps", orbit_opts.eps, "Dyadic literal p/2^e");
  orbit_cmd->add_option("--max-steps", orbit_opts.max_steps);
  orbit_cmd->add_flag("--all-hits", orbit_opts.all_hits);
  orbit_cmd->add_option("--csv", orbit_opts.csv, "Also write n,norm,distance table");

  auto* enumerate = app.add_subcommand("enumerate", "List the canonical dense enumeration of the subspace");
  add_common(enumerate, common);
  enumerate->add_option("--count", enum_count);
  enumerate->add_option("--skip", enum_skip);

  std::vector<const char*> argv{"hclab"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*construct) return cmd_construct(common, construct_opts, out);
    if (*conjugacy) return cmd_conjugacy(common, conj_n, out);
    if (*check) return cmd_criterion_check(common, crit, out);
    if (*build) return cmd_criterion_build(common, crit, out);
    if (*verify) return cmd_criterion_verify(common, cert_path, out);
    if (*orbit_cmd) return cmd_orbit(common, orbit_opts, out);
    if (*enumerate) return cmd_enumerate(common, enum_count, enum_skip, out);
  } catch (const ParseError& e) {
    err << "hclab: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "hclab: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kParseError;
}

}  // namespace hclab::cli
