#include "hclab/random.hpp"

#include <algorithm>

namespace hclab {

Dyadic random_dyadic(std::mt19937_64& rng, std::int64_t max_numerator, std::uint64_t max_exponent) {
  std::uniform_int_distribution<std::int64_t> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<std::uint64_t> exp(0, max_exponent);
  const std::int64_t p = num(rng);
  const std::uint64_t e = exp(rng);
  return Dyadic(Dyadic::Int(p), e);
}

SparseVector random_vector(std::mt19937_64& rng, const SubspaceSpec& m, const RandomVectorShape& shape) {
  std::uniform_int_distribution<std::uint64_t> count(0, shape.max_nnz);
  std::uint64_t limit = shape.max_position;
  if (const auto dim = m.dimension()) limit = std::min(limit, *dim);
  std::uniform_int_distribution<std::uint64_t> position(1, limit);

  SparseVector v;
  const std::uint64_t n = count(rng);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Index idx = *m.nth_allowed(position(rng));
    v.add_to(idx, random_dyadic(rng, shape.max_numerator, shape.max_exponent));
  }
  return v;
}

}  // namespace hclab
