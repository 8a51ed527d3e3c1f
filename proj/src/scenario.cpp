#include "hclab/scenario.hpp"

#include "hclab/error.hpp"

namespace hclab {

CriterionWitness Scenario::witness() const {
  if (!a_op) throw PreconditionError("scenario '" + name + "' has no a_operator");
  return CriterionWitness{.t = op,
                          .a = *a_op,
                          .m = subspace,
                          .seq = seq,
                          .decay = decay,
                          .kernel_budget = budgets.kernel_budget,
                          .scan_limit = budgets.scan_limit};
}

std::optional<Scenario> builtin_scenario(std::string_view name) {
  if (name == "example-linf") {
    Scenario s;
    s.name = "example-linf";
    s.op = scale(2, backward_shift());
    s.a_op = scale(Dyadic::pow2(-1), forward_shift());
    s.subspace = SubspaceSpec::odd(NormKind::Sup);
    s.seq = PowerSequence(2, 0);
    s.decay = DecayCertificate{-1};
    return s;
  }
  if (name == "thm1-construction") {
    Scenario s;
    s.name = "thm1-construction";
    s.system = BiorthogonalSystem::odd();
    s.op = build_T(*s.system);
    s.subspace = SubspaceSpec::odd(NormKind::Sup);
    return s;
  }
  return std::nullopt;
}

std::vector<std::string> builtin_scenario_names() { return {"example-linf", "thm1-construction"}; }

io::Json scenario_to_json(const Scenario& s) {
  io::Json j;
  j["name"] = s.name;
  j["operator"] = io::to_json(s.op);
  if (s.a_op) j["a_operator"] = io::to_json(*s.a_op);
  j["subspace"] = io::to_json(s.subspace);
  j["sequence"] = io::to_json(s.seq);
  j["decay"] = io::to_json(s.decay);
  if (s.system) j["system"] = io::to_json(*s.system);
  j["enumeration"] = io::Json{{"offset", s.enumeration_offset}};
  j["budgets"] = io::Json{{"kernel_budget", s.budgets.kernel_budget},
                          {"scan_limit", s.budgets.scan_limit},
                          {"k_probe", s.budgets.k_probe}};
  return j;
}

Scenario scenario_from_json(const io::Json& j) {
  if (!j.is_object()) throw ParseError("scenario config must be a JSON object");
  try {
    Scenario s;
    s.name = j.value("name", std::string("custom"));
    if (!j.contains("operator")) throw ParseError("scenario needs an 'operator'");
    s.op = io::operator_from_json(j["operator"]);
    if (j.contains("a_operator")) s.a_op = io::operator_from_json(j["a_operator"]);
    if (!j.contains("subspace")) throw ParseError("scenario needs a 'subspace'");
    s.subspace = io::subspace_from_json(j["subspace"]);
    if (j.contains("sequence")) s.seq = io::sequence_from_json(j["sequence"]);
    if (j.contains("decay")) s.decay = io::decay_from_json(j["decay"]);
    if (j.contains("system")) s.system = io::system_from_json(j["system"]);
    if (j.contains("enumeration")) s.enumeration_offset = j["enumeration"].value("offset", std::uint64_t{0});
    if (j.contains("budgets")) {
      const auto& b = j["budgets"];
      s.budgets.kernel_budget = b.value("kernel_budget", s.budgets.kernel_budget);
      s.budgets.scan_limit = b.value("scan_limit", s.budgets.scan_limit);
      s.budgets.k_probe = b.value("k_probe", s.budgets.k_probe);
      if (s.budgets.kernel_budget == 0 || s.budgets.k_probe == 0) throw ParseError("budgets must be positive");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

}  // namespace hclab
