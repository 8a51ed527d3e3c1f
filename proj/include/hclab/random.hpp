#pragma once

#include <cstdint>
#include <random>

#include "hclab/sparse_vector.hpp"
#include "hclab/subspace.hpp"

namespace hclab {

struct RandomVectorShape {
  std::uint64_t max_nnz = 6;
  std::uint64_t max_position = 40;  // n-th allowed index, n <= max_position
  std::int64_t max_numerator = 64;
  std::uint64_t max_exponent = 8;
};

/// Pseudo-random finitely supported dyadic vector supported on allowed
/// indices of m (possibly zero).
SparseVector random_vector(std::mt19937_64& rng, const SubspaceSpec& m, const RandomVectorShape& shape = {});

Dyadic random_dyadic(std::mt19937_64& rng, std::int64_t max_numerator = 64, std::uint64_t max_exponent = 8);

}  // namespace hclab
