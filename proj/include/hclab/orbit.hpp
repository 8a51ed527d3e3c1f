#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hclab/operator.hpp"
#include "hclab/subspace.hpp"

namespace hclab {

/// Deterministic enumeration of the finitely supported dyadic vectors of a
/// coordinate-pattern subspace.
///
/// Level L covers vectors supported on the first c(L) = min(L, dim) allowed
/// indices with coordinates p * 2^-L, |p| <= 4^L. Within a level the
/// numerator tuples run in lexicographic order (first allowed index most
/// significant); tuples that already belong to level L-1 are skipped. The
/// levels are nested, so every vector is emitted exactly once, at its minimal
/// level, and the first N(L) = (2 * 4^L + 1)^c(L) outputs are exactly level L.
class DenseEnumerator {
 public:
  explicit DenseEnumerator(SubspaceSpec m);

  SparseVector next();
  /// Number of vectors emitted so far.
  std::uint64_t position() const noexcept { return emitted_; }
  std::uint64_t level() const noexcept { return level_; }

 private:
  void enter_level(std::uint64_t level);
  bool in_previous_level() const;
  bool advance();

  SubspaceSpec m_;
  std::vector<Index> coords_;
  std::vector<std::int64_t> tuple_;
  std::int64_t bound_ = 0;
  std::uint64_t level_ = 0;
  std::uint64_t emitted_ = 0;
  bool fresh_ = true;
};

/// The n-th (1-based) vector of the enumeration of m.
SparseVector enumerate_dense(const SubspaceSpec& m, std::uint64_t n);
/// The first count vectors of the enumeration, starting after `skip`.
std::vector<SparseVector> enumerate_prefix(const SubspaceSpec& m, std::uint64_t count, std::uint64_t skip = 0);

/// Number of vectors emitted once level L is exhausted: (2 * 4^L + 1)^c(L).
Dyadic::Int enumeration_level_bound(const SubspaceSpec& m, std::uint64_t level);

struct OrbitPoint {
  std::uint64_t n = 0;
  std::optional<SparseVector> vector;  // present for plain orbits
  Dyadic norm;
  std::optional<Dyadic> nearest_distance;  // present for density reports
};

struct OrbitHit {
  std::size_t target_index = 0;  // 1-based position in the target list
  std::uint64_t orbit_index = 0;
  Dyadic distance;
};

struct OrbitReport {
  Operator op;
  SparseVector start;
  NormKind norm = NormKind::Sup;
  /// Distances are measured from the computed start; the represented vector
  /// may differ from it by up to this much at n = 0.
  Dyadic tail_bound;
  std::vector<OrbitPoint> points;
  std::vector<OrbitHit> hits;
  std::vector<std::size_t> missed_targets;
};

/// Exact orbit points T^n x for n = 0..steps.
OrbitReport orbit(const Operator& t, const SparseVector& x, std::uint64_t steps, NormKind norm = NormKind::Sup);

enum class HitPolicy { First, All };

/// For each target, the orbit indices n <= max_steps with
/// ||T^n x.computed - target|| < eps. HitPolicy::First keeps only the least
/// such n per target.
OrbitReport density_report(const Operator& t, const CertifiedVector& x, const std::vector<SparseVector>& targets,
                           const Dyadic& eps, std::uint64_t max_steps, NormKind norm,
                           HitPolicy policy = HitPolicy::First);

/// Flat table `n,norm,distance` (distance empty when there are no targets).
std::string orbit_csv(const OrbitReport& report);

}  // namespace hclab
