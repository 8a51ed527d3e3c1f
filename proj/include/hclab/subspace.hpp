#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hclab/sparse_vector.hpp"

namespace hclab {

/// Coordinate-pattern subspace: the closed span of {e_i : allowed(i)} in the
/// given norm (c0-type closure for sup).
class SubspaceSpec {
 public:
  enum class Pattern { All, Odd, Even, Progression, Explicit };

  static SubspaceSpec all(NormKind norm);
  static SubspaceSpec odd(NormKind norm);
  static SubspaceSpec even(NormKind norm);
  /// Indices {stride * n + offset : n >= 1}.
  static SubspaceSpec progression(std::int64_t stride, std::int64_t offset, NormKind norm);
  /// A finite, non-empty index set.
  static SubspaceSpec explicit_indices(std::vector<Index> indices, NormKind norm);

  Pattern pattern() const noexcept { return pattern_; }
  NormKind norm() const noexcept { return norm_; }
  std::int64_t stride() const noexcept { return stride_; }
  std::int64_t offset() const noexcept { return offset_; }
  const std::vector<Index>& indices() const noexcept { return indices_; }

  bool allows(Index i) const;
  /// Every support index is allowed.
  bool contains(const SparseVector& x) const;
  /// First support index that is not allowed.
  std::optional<Index> first_violation(const SparseVector& x) const;

  /// The n-th allowed index (1-based); nullopt past the end of a finite set.
  std::optional<Index> nth_allowed(std::uint64_t n) const;
  /// Number of allowed indices, nullopt when infinite.
  std::optional<std::uint64_t> dimension() const;

  friend bool operator==(const SubspaceSpec&, const SubspaceSpec&) = default;

 private:
  SubspaceSpec(Pattern p, NormKind norm, std::int64_t stride, std::int64_t offset, std::vector<Index> indices)
      : pattern_(p), norm_(norm), stride_(stride), offset_(offset), indices_(std::move(indices)) {}

  Pattern pattern_;
  NormKind norm_;
  std::int64_t stride_;
  std::int64_t offset_;
  std::vector<Index> indices_;
};

}  // namespace hclab
