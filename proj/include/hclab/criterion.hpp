#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hclab/operator.hpp"
#include "hclab/subspace.hpp"

namespace hclab {

/// Affine power sequence m_k = stride * k + offset, k >= 1.
class PowerSequence {
 public:
  /// Throws PreconditionError unless stride >= 1 and m_1 >= 1.
  PowerSequence(std::int64_t stride, std::int64_t offset);

  std::int64_t stride() const noexcept { return stride_; }
  std::int64_t offset() const noexcept { return offset_; }

  std::uint64_t member(std::uint64_t k) const;
  /// k with m_k == m, if m is a member.
  std::optional<std::uint64_t> index_of(std::uint64_t m) const;
  /// Least k with m_k >= bound.
  std::uint64_t first_index_at_least(std::int64_t bound) const;
  /// m_j - m_i is a member for all i < j. For an affine rule this holds
  /// exactly when the offset is zero.
  bool difference_closed() const noexcept { return offset_ == 0; }

  friend bool operator==(const PowerSequence&, const PowerSequence&) = default;

 private:
  std::int64_t stride_;
  std::int64_t offset_;
};

/// Asserts ||A^m x|| = 2^(rate * m) ||x|| for every finitely supported x.
/// Every use re-validates the identity against exact norms.
struct DecayCertificate {
  std::int64_t rate = -1;

  Dyadic predicted(const Dyadic& norm_x, std::uint64_t m) const {
    return norm_x.shifted(rate * static_cast<std::int64_t>(m));
  }
  bool decays() const noexcept { return rate < 0; }

  friend bool operator==(const DecayCertificate&, const DecayCertificate&) = default;
};

/// Hypotheses of the kernel criterion: T, a right inverse A on
/// ker*(T) ∩ M, the subspace M, the sequence (m_k) and the search budgets.
struct CriterionWitness {
  Operator t;
  Operator a;
  SubspaceSpec m = SubspaceSpec::all(NormKind::Sup);
  PowerSequence seq{1, 0};
  DecayCertificate decay;
  std::uint64_t kernel_budget = 64;
  std::uint64_t scan_limit = 4096;
};

struct ConditionsReport {
  CheckReport decay;               // (i)
  CheckReport membership;          // (ii)
  CheckReport difference_closure;  // (iii)
  CheckReport left_inverse;        // (iv)

  bool passed() const { return decay.passed && membership.passed && difference_closure.passed && left_inverse.passed; }
};

/// Checks conditions (i)-(iv) on samples, for the members m_1..m_{k_probe}.
/// Throws PreconditionError naming the first sample outside ker*(T) ∩ M.
ConditionsReport check_conditions(const CriterionWitness& w, const std::vector<SparseVector>& samples,
                                  std::uint64_t k_probe);

/// Least member m* of the sequence with ||A^m x|| < 2^-k for all members
/// m >= m*. Throws BoundError past the scan limit and PreconditionError when
/// the decay certificate does not hold for x.
std::uint64_t decay_threshold(const CriterionWitness& w, const SparseVector& x, std::int64_t k);

struct SelectionThresholds {
  std::uint64_t decay_self = 0;  // decay_threshold(x_k, k)
  std::uint64_t decay_next = 0;  // decay_threshold(x_{k+1}, k+1), bound for the successor member
  std::uint64_t kernel_p = 0;    // least p with T^p x_k = 0
  std::optional<std::uint64_t> doubling;  // 2 * m_{j_{k-1}}, k >= 2

  friend bool operator==(const SelectionThresholds&, const SelectionThresholds&) = default;
};

struct SelectionPick {
  std::uint64_t k = 0;
  std::uint64_t j = 0;  // position in the sequence
  std::uint64_t m = 0;  // m_{j_k}
  SelectionThresholds thresholds;

  friend bool operator==(const SelectionPick&, const SelectionPick&) = default;
};

struct SubseqSelection {
  std::vector<SelectionPick> picks;

  friend bool operator==(const SubseqSelection&, const SubseqSelection&) = default;
};

/// Greedy choice of (m_{j_k})_{k<=K}: the least member that is at least
/// decay_self, kernel_p and doubling, and whose successor member is at least
/// decay_next. Needs K+1 prefix vectors.
SubseqSelection select_subsequence(const CriterionWitness& w, const std::vector<SparseVector>& dense_prefix,
                                   std::uint64_t K);

struct CertificateCheck {
  std::uint64_t k = 0;
  Dyadic exact_error;  // ||T^{m_{j_k}} x_partial - x_k||
  Dyadic tail_bound;
  bool membership_ok = false;
  bool vanishing_ok = false;
  /// exact_error + tail_bound < 2^-k
  bool bound_holds = false;
  /// Only k <= K-2 is asserted; the last two are informational.
  bool asserted = false;
  std::string detail;

  bool ok() const { return membership_ok && vanishing_ok && (bound_holds || !asserted); }
  friend bool operator==(const CertificateCheck&, const CertificateCheck&) = default;
};

struct HypercyclicCertificate {
  CriterionWitness witness;
  std::uint64_t K = 0;
  /// Offset of the prefix in the canonical enumeration of witness.m.
  std::uint64_t enumeration_offset = 0;
  std::vector<SparseVector> dense_prefix;
  SubseqSelection selection;
  CertifiedVector x_partial;
  std::vector<CertificateCheck> checks;
};

/// x_partial = sum_{k<=K} A^{m_{j_k}} x_k with tail bound 2^-K; checks are
/// filled in by verify_certificate.
HypercyclicCertificate build_vector(const CriterionWitness& w, const std::vector<SparseVector>& dense_prefix,
                                    const SubseqSelection& sel);

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  /// Structural or consistency problems (wrong tail bound, recorded values
  /// that do not match the re-derived ones, ...).
  std::vector<std::string> problems;

  bool passed() const;
};

/// Re-derives every per-k verdict by recomputing T-powers of x_partial
/// directly; does not use A or condition (iv).
CertificateReport verify_certificate(const HypercyclicCertificate& cert, bool parallel = true);

/// verify_certificate plus consistency of every recorded field: the prefix
/// is the enumeration slice, the selection and x_partial are re-derived, and
/// recorded checks match.
CertificateReport audit_certificate(const HypercyclicCertificate& cert);

struct LeReport {
  enum class Verdict { Applicable, InvarianceFails, Inapplicable };

  CheckReport kernel;
  CheckReport decay;
  CheckReport left_inverse;
  CheckReport subspace_membership;
  CheckReport invariance;
  Verdict verdict = Verdict::Inapplicable;
};

std::string_view to_string(LeReport::Verdict v);

/// Conditions of Le's criterion on samples (kernel membership, decay over
/// powers 1..k_probe, TA = I) plus the prerequisites of its nonseparable
/// form (samples inside m, t leaves m invariant).
LeReport check_le_criterion(const Operator& t, const Operator& a, const SubspaceSpec& m,
                            const std::vector<SparseVector>& samples, std::uint64_t k_probe,
                            const DecayCertificate& decay, std::uint64_t kernel_budget = 64);

}  // namespace hclab
