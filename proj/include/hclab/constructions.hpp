#pragma once

#include <vector>

#include "hclab/basis_system.hpp"
#include "hclab/operator.hpp"
#include "hclab/subspace.hpp"

namespace hclab {

/// The perturbation of the identity Tx = x + sum_n 2^-n x*_{n+1}(x) x_n.
/// On the system: T x_1 = x_1, T x_n = x_n + 2^-(n-1) x_{n-1}; fixes every
/// e_j with j outside range(sigma).
Operator build_T(const BiorthogonalSystem& sys);

/// S(a) = (a_1 + a_2/2, a_2 + a_3/4, ...) on l1, i.e. I + wbs(2^-n).
Operator build_S();

/// phi(a) = sum_n a_n x_n: coordinate a_n moves to index sigma(n).
SparseVector phi(const SparseVector& coeffs, const BiorthogonalSystem& sys);

/// Exact check T(phi(e_k)) == phi(S(e_k)) for k = 1..n_max.
CheckReport check_quasiconjugacy(const Operator& t, const Operator& s, const BiorthogonalSystem& sys,
                                 std::uint64_t n_max);

/// Checks that t maps every sample of m back into m. Throws
/// PreconditionError when a sample is not itself a member.
CheckReport check_invariance(const Operator& t, const SubspaceSpec& m, const std::vector<SparseVector>& samples);

}  // namespace hclab
