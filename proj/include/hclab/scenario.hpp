#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hclab/io.hpp"

namespace hclab {

struct Budgets {
  std::uint64_t kernel_budget = 64;
  std::uint64_t scan_limit = 4096;
  std::uint64_t k_probe = 20;

  friend bool operator==(const Budgets&, const Budgets&) = default;
};

/// A named bundle of everything one pipeline run needs.
struct Scenario {
  std::string name;
  Operator op;
  std::optional<Operator> a_op;
  SubspaceSpec subspace = SubspaceSpec::all(NormKind::Sup);
  PowerSequence seq{1, 0};
  DecayCertificate decay;
  std::optional<BiorthogonalSystem> system;
  std::uint64_t enumeration_offset = 0;
  Budgets budgets;

  /// Requires a_op.
  CriterionWitness witness() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// `example-linf`: T = 2B, A = (1/2)F, M = odd coordinates (sup), m_k = 2k.
/// `thm1-construction`: sigma(n) = 2n - 1, T = build_T, M = odd coordinates.
std::optional<Scenario> builtin_scenario(std::string_view name);
std::vector<std::string> builtin_scenario_names();

io::Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const io::Json& j);

}  // namespace hclab
