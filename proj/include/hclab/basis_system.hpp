#pragma once

#include <cstdint>
#include <optional>

#include "hclab/dyadic.hpp"
#include "hclab/sparse_vector.hpp"

namespace hclab {

/// Coordinate biorthogonal system x_n = e_{sigma(n)}, x_n^* = coordinate
/// functional at sigma(n), with sigma(n) = stride * n + offset.
///
/// Any strictly increasing sigma gives x_i^*(x_j) = delta_ij, ||x_n|| = 1 and
/// sup ||x_n^*|| = 1 in both l1 and sup norms. The functionals vanish on the
/// coordinates outside range(sigma).
class BiorthogonalSystem {
 public:
  /// Throws PreconditionError unless stride >= 1 and sigma(1) >= 1.
  BiorthogonalSystem(std::int64_t stride, std::int64_t offset);

  static BiorthogonalSystem identity() { return {1, 0}; }
  static BiorthogonalSystem odd() { return {2, -1}; }

  std::int64_t stride() const noexcept { return stride_; }
  std::int64_t offset() const noexcept { return offset_; }
  /// Bound on the functional norms; always 1 for coordinate systems.
  const Dyadic& functional_bound() const noexcept { return bound_; }

  Index sigma(Index n) const;
  /// n with sigma(n) == i, if i lies in range(sigma).
  std::optional<Index> position(Index i) const;

  friend bool operator==(const BiorthogonalSystem& a, const BiorthogonalSystem& b) {
    return a.stride_ == b.stride_ && a.offset_ == b.offset_;
  }

 private:
  std::int64_t stride_;
  std::int64_t offset_;
  Dyadic bound_{1};
};

}  // namespace hclab
