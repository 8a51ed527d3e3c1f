#include "hclab/subspace.hpp"

#include <algorithm>

#include "hclab/error.hpp"

namespace hclab {

SubspaceSpec SubspaceSpec::all(NormKind norm) { return {Pattern::All, norm, 1, 0, {}}; }
SubspaceSpec SubspaceSpec::odd(NormKind norm) { return {Pattern::Odd, norm, 2, -1, {}}; }
SubspaceSpec SubspaceSpec::even(NormKind norm) { return {Pattern::Even, norm, 2, 0, {}}; }

SubspaceSpec SubspaceSpec::progression(std::int64_t stride, std::int64_t offset, NormKind norm) {
  if (stride < 1 || stride + offset < 1) throw PreconditionError("progression needs stride >= 1 and a first index >= 1");
  return {Pattern::Progression, norm, stride, offset, {}};
}

SubspaceSpec SubspaceSpec::explicit_indices(std::vector<Index> indices, NormKind norm) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) throw PreconditionError("explicit subspace needs at least one index");
  if (indices.front() == 0) throw PreconditionError("explicit subspace indices are 1-based");
  return {Pattern::Explicit, norm, 0, 0, std::move(indices)};
}

bool SubspaceSpec::allows(Index i) const {
  if (i == 0) return false;
  if (pattern_ == Pattern::Explicit) return std::binary_search(indices_.begin(), indices_.end(), i);
  const auto d = static_cast<std::int64_t>(i) - offset_;
  return d >= stride_ && d % stride_ == 0;
}

std::optional<Index> SubspaceSpec::first_violation(const SparseVector& x) const {
  for (const auto& [i, v] : x.entries())
    if (!allows(i)) return i;
  return std::nullopt;
}

bool SubspaceSpec::contains(const SparseVector& x) const { return !first_violation(x).has_value(); }

std::optional<Index> SubspaceSpec::nth_allowed(std::uint64_t n) const {
  if (n == 0) return std::nullopt;
  if (pattern_ == Pattern::Explicit) {
    if (n > indices_.size()) return std::nullopt;
    return indices_[n - 1];
  }
  return static_cast<Index>(stride_ * static_cast<std::int64_t>(n) + offset_);
}

std::optional<std::uint64_t> SubspaceSpec::dimension() const {
  if (pattern_ == Pattern::Explicit) return indices_.size();
  return std::nullopt;
}

}  // namespace hclab
