#pragma once

#include <random>
#include <string_view>

#include "hclab/dyadic.hpp"
#include "hclab/random.hpp"
#include "hclab/sparse_vector.hpp"

namespace hclab::testing {

inline Dyadic D(std::string_view s) { return Dyadic::parse(s); }
inline SparseVector V(std::string_view s) { return SparseVector::parse(s); }
inline SparseVector e(Index i) { return SparseVector::basis(i); }

inline std::mt19937_64 seeded(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace hclab::testing
