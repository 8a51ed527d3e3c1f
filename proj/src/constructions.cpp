#include "hclab/constructions.hpp"

#include <string>

#include "hclab/error.hpp"

namespace hclab {

Operator build_T(const BiorthogonalSystem& sys) { return basis_perturbation(sys); }

Operator build_S() { return sum({identity_op(), weighted_backward_shift(WeightRule::geometric(1, -1))}); }

SparseVector phi(const SparseVector& coeffs, const BiorthogonalSystem& sys) {
  SparseVector r;
  for (const auto& [n, a] : coeffs.entries()) r.set(sys.sigma(n), a);
  return r;
}

CheckReport check_quasiconjugacy(const Operator& t, const Operator& s, const BiorthogonalSystem& sys,
                                 std::uint64_t n_max) {
  CheckReport report{.name = "quasiconjugacy"};
  for (Index k = 1; k <= n_max; ++k) {
    const SparseVector ek = SparseVector::basis(k);
    const SparseVector lhs = apply(t, phi(ek, sys));
    const SparseVector rhs = phi(apply(s, ek), sys);
    ++report.checked;
    if (lhs != rhs) {
      report.fail({static_cast<std::size_t>(k), ek, lhs,
                   "T(phi(e_" + std::to_string(k) + ")) = " + lhs.to_string() + " but phi(S(e_" + std::to_string(k) +
                       ")) = " + rhs.to_string()});
    }
  }
  return report;
}

CheckReport check_invariance(const Operator& t, const SubspaceSpec& m, const std::vector<SparseVector>& samples) {
  CheckReport report{.name = "invariance"};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    if (const auto bad = m.first_violation(samples[s]))
      throw PreconditionError("invariance sample " + std::to_string(s) + " " + samples[s].to_string() +
                              " is not in the subspace (index " + std::to_string(*bad) + ")");
    const SparseVector image = apply(t, samples[s]);
    ++report.checked;
    if (const auto bad = m.first_violation(image))
      report.fail({s, samples[s], image, "image leaves the subspace at index " + std::to_string(*bad)});
  }
  return report;
}

}  // namespace hclab
