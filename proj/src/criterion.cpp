#include "hclab/criterion.hpp"

#include <algorithm>
#include <future>

#include "hclab/constructions.hpp"
#include "hclab/error.hpp"
#include "hclab/orbit.hpp"

namespace hclab {

// --- PowerSequence --------------------------------------------------------

PowerSequence::PowerSequence(std::int64_t stride, std::int64_t offset) : stride_(stride), offset_(offset) {
  if (stride < 1) throw PreconditionError("power sequence stride must be >= 1");
  if (stride + offset < 1) throw PreconditionError("power sequence must start at m_1 >= 1");
}

std::uint64_t PowerSequence::member(std::uint64_t k) const {
  if (k == 0) throw PreconditionError("power sequence positions are 1-based");
  return static_cast<std::uint64_t>(stride_ * static_cast<std::int64_t>(k) + offset_);
}

std::optional<std::uint64_t> PowerSequence::index_of(std::uint64_t m) const {
  const auto d = static_cast<std::int64_t>(m) - offset_;
  if (d < stride_ || d % stride_ != 0) return std::nullopt;
  return static_cast<std::uint64_t>(d / stride_);
}

std::uint64_t PowerSequence::first_index_at_least(std::int64_t bound) const {
  const std::int64_t d = bound - offset_;
  if (d <= stride_) return 1;
  return static_cast<std::uint64_t>((d + stride_ - 1) / stride_);
}

// --- conditions -----------------------------------------------------------

namespace {

void require_in_kernel_and_subspace(const CriterionWitness& w, const SparseVector& x, std::size_t position,
                                    const char* what) {
  if (const auto bad = w.m.first_violation(x))
    throw PreconditionError(std::string(what) + " " + std::to_string(position) + " " + x.to_string() +
                            " is not in the subspace (index " + std::to_string(*bad) + ")");
  if (!kernel_index(w.t, x, w.kernel_budget))
    throw PreconditionError(std::string(what) + " " + std::to_string(position) + " " + x.to_string() +
                            " is not annihilated by T^p for p <= " + std::to_string(w.kernel_budget));
}

}  // namespace

ConditionsReport check_conditions(const CriterionWitness& w, const std::vector<SparseVector>& samples,
                                  std::uint64_t k_probe) {
  if (k_probe == 0) throw PreconditionError("k_probe must be >= 1");
  for (std::size_t s = 0; s < samples.size(); ++s) require_in_kernel_and_subspace(w, samples[s], s, "sample");

  ConditionsReport r;
  r.decay.name = "decay";
  r.membership.name = "membership";
  r.difference_closure.name = "difference_closure";

  if (!w.decay.decays()) {
    r.decay.fail({0, {}, {}, "decay certificate rate " + std::to_string(w.decay.rate) + " is not negative"});
  }

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const SparseVector& x = samples[s];
    const Dyadic nx = norm(x, w.m.norm());
    SparseVector y = apply_power(w.a, w.seq.member(1), x);
    for (std::uint64_t k = 1; k <= k_probe; ++k) {
      const std::uint64_t mk = w.seq.member(k);
      if (k > 1) y = apply_power(w.a, static_cast<std::uint64_t>(w.seq.stride()), y);

      ++r.decay.checked;
      const Dyadic ny = norm(y, w.m.norm());
      if (ny != w.decay.predicted(nx, mk))
        r.decay.fail({s, x, y,
                      "||A^" + std::to_string(mk) + " x|| = " + ny.to_string() + ", certificate predicts " +
                          w.decay.predicted(nx, mk).to_string()});

      ++r.membership.checked;
      if (const auto bad = w.m.first_violation(y)) {
        r.membership.fail({s, x, y, "A^" + std::to_string(mk) + " x leaves the subspace at index " + std::to_string(*bad)});
      } else if (!kernel_index(w.t, y, w.kernel_budget + mk)) {
        r.membership.fail({s, x, y, "A^" + std::to_string(mk) + " x not in ker*(T) within budget"});
      }
    }
  }

  r.difference_closure.checked = 1;
  if (!w.seq.difference_closed()) {
    const std::uint64_t diff = w.seq.member(2) - w.seq.member(1);
    r.difference_closure.fail({0, {}, {},
                               "m_2 - m_1 = " + std::to_string(diff) + " is not a member of m_k = " +
                                   std::to_string(w.seq.stride()) + "k" + (w.seq.offset() < 0 ? "" : "+") +
                                   std::to_string(w.seq.offset())});
  }

  r.left_inverse = is_left_inverse_on(w.t, w.a, samples);
  return r;
}

// --- selection ------------------------------------------------------------

std::uint64_t decay_threshold(const CriterionWitness& w, const SparseVector& x, std::int64_t k) {
  if (x.is_zero()) return w.seq.member(1);
  if (!w.decay.decays()) throw PreconditionError("decay certificate does not decay");

  const Dyadic nx = norm(x, w.m.norm());
  SparseVector y = apply_power(w.a, w.seq.member(1), x);
  for (std::uint64_t j = 1; j <= w.scan_limit; ++j) {
    const std::uint64_t m = w.seq.member(j);
    if (j > 1) y = apply_power(w.a, static_cast<std::uint64_t>(w.seq.stride()), y);
    const Dyadic ny = norm(y, w.m.norm());
    if (ny != w.decay.predicted(nx, m))
      throw PreconditionError("decay certificate fails for " + x.to_string() + " at power " + std::to_string(m));
    // Norms along the sequence strictly decrease, so the first hit holds for all later members.
    if (lt_pow2(ny, k)) return m;
  }
  throw BoundError("decay threshold for " + x.to_string() + " at k = " + std::to_string(k) + " exceeds scan limit " +
                   std::to_string(w.scan_limit));
}

SubseqSelection select_subsequence(const CriterionWitness& w, const std::vector<SparseVector>& dense_prefix,
                                   std::uint64_t K) {
  if (K == 0) throw PreconditionError("K must be >= 1");
  if (dense_prefix.size() < K + 1)
    throw PreconditionError("selection with K = " + std::to_string(K) + " needs " + std::to_string(K + 1) +
                            " prefix vectors, got " + std::to_string(dense_prefix.size()));
  for (std::size_t i = 0; i <= K; ++i) require_in_kernel_and_subspace(w, dense_prefix[i], i + 1, "prefix vector");

  SubseqSelection sel;
  std::uint64_t previous = 0;
  for (std::uint64_t k = 1; k <= K; ++k) {
    SelectionThresholds th;
    th.decay_self = decay_threshold(w, dense_prefix[k - 1], static_cast<std::int64_t>(k));
    th.decay_next = decay_threshold(w, dense_prefix[k], static_cast<std::int64_t>(k + 1));
    th.kernel_p = *kernel_index(w.t, dense_prefix[k - 1], w.kernel_budget);
    if (k >= 2) th.doubling = 2 * previous;

    std::int64_t lower = static_cast<std::int64_t>(std::max({th.decay_self, th.kernel_p, th.doubling.value_or(0)}));
    lower = std::max(lower, static_cast<std::int64_t>(th.decay_next) - w.seq.stride());
    const std::uint64_t j = w.seq.first_index_at_least(lower);
    if (j > w.scan_limit)
      throw BoundError("selection for k = " + std::to_string(k) + " needs sequence position " + std::to_string(j) +
                       " beyond scan limit " + std::to_string(w.scan_limit));

    previous = w.seq.member(j);
    sel.picks.push_back({k, j, previous, th});
  }
  return sel;
}

// --- certificate ----------------------------------------------------------

HypercyclicCertificate build_vector(const CriterionWitness& w, const std::vector<SparseVector>& dense_prefix,
                                    const SubseqSelection& sel) {
  const std::uint64_t K = sel.picks.size();
  if (dense_prefix.size() < K) throw PreconditionError("prefix shorter than the selection");

  HypercyclicCertificate cert{.witness = w, .K = K, .dense_prefix = dense_prefix, .selection = sel};
  cert.x_partial.norm = w.m.norm();
  cert.x_partial.tail_bound = Dyadic::pow2(-static_cast<std::int64_t>(K));
  for (std::uint64_t k = 1; k <= K; ++k)
    cert.x_partial.computed += apply_power(w.a, sel.picks[k - 1].m, dense_prefix[k - 1]);

  cert.checks = verify_certificate(cert).checks;
  return cert;
}

bool CertificateReport::passed() const {
  return problems.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

namespace {

CertificateCheck verify_one(const HypercyclicCertificate& cert, std::uint64_t k) {
  const auto& w = cert.witness;
  const std::uint64_t mk = cert.selection.picks[k - 1].m;
  CertificateCheck c{.k = k, .tail_bound = cert.x_partial.tail_bound, .vanishing_ok = true};

  // Decomposition: T^{m_k} x = sum_{i<k} T^{m_k - m_i} x_i + x_k + (terms in A-powers).
  // The first sum must vanish term by term.
  for (std::uint64_t i = 1; i < k; ++i) {
    const std::uint64_t mi = cert.selection.picks[i - 1].m;
    if (mk < mi) {
      c.vanishing_ok = false;
      c.detail = "m_j" + std::to_string(k) + " < m_j" + std::to_string(i);
      break;
    }
    const SparseVector term = apply_power(w.t, mk - mi, cert.dense_prefix[i - 1]);
    if (!term.is_zero()) {
      c.vanishing_ok = false;
      c.detail = "T^" + std::to_string(mk - mi) + " x_" + std::to_string(i) + " = " + term.to_string() + " != 0";
      break;
    }
  }

  const SparseVector point = apply_power(w.t, mk, cert.x_partial.computed);
  c.exact_error = norm(point - cert.dense_prefix[k - 1], w.m.norm());
  c.membership_ok = w.m.contains(point);
  if (!c.membership_ok && c.detail.empty())
    c.detail = "orbit point leaves the subspace at index " + std::to_string(*w.m.first_violation(point));
  c.bound_holds = lt_pow2(c.exact_error + c.tail_bound, static_cast<std::int64_t>(k));
  c.asserted = k + 2 <= cert.K;
  return c;
}

}  // namespace

CertificateReport verify_certificate(const HypercyclicCertificate& cert, bool parallel) {
  CertificateReport report;
  if (cert.selection.picks.size() != cert.K) {
    report.problems.push_back("selection has " + std::to_string(cert.selection.picks.size()) + " picks, K = " +
                              std::to_string(cert.K));
    return report;
  }
  if (cert.dense_prefix.size() < cert.K) {
    report.problems.push_back("dense prefix shorter than K");
    return report;
  }
  if (cert.x_partial.tail_bound != Dyadic::pow2(-static_cast<std::int64_t>(cert.K)))
    report.problems.push_back("tail bound " + cert.x_partial.tail_bound.to_string() + " != 2^-K");
  if (cert.x_partial.norm != cert.witness.m.norm()) report.problems.push_back("x_partial norm differs from the subspace norm");

  for (std::uint64_t k = 1; k <= cert.K; ++k) {
    const auto& pick = cert.selection.picks[k - 1];
    if (pick.k != k) report.problems.push_back("selection pick " + std::to_string(k) + " is labelled k = " + std::to_string(pick.k));
    if (cert.witness.seq.index_of(pick.m) != pick.j)
      report.problems.push_back("selection pick " + std::to_string(k) + ": m = " + std::to_string(pick.m) +
                                " is not member j = " + std::to_string(pick.j));
  }

  // Per-k checks are independent; results are merged in ascending k.
  report.checks.resize(cert.K);
  if (parallel && cert.K > 1) {
    std::vector<std::future<CertificateCheck>> jobs;
    jobs.reserve(cert.K);
    for (std::uint64_t k = 1; k <= cert.K; ++k)
      jobs.push_back(std::async(std::launch::async, [&cert, k] { return verify_one(cert, k); }));
    for (std::uint64_t k = 1; k <= cert.K; ++k) report.checks[k - 1] = jobs[k - 1].get();
  } else {
    for (std::uint64_t k = 1; k <= cert.K; ++k) report.checks[k - 1] = verify_one(cert, k);
  }
  return report;
}

CertificateReport audit_certificate(const HypercyclicCertificate& cert) {
  CertificateReport report = verify_certificate(cert);
  auto& problems = report.problems;
  const auto& w = cert.witness;

  if (cert.dense_prefix.size() != cert.K + 1) {
    problems.push_back("dense prefix must hold K + 1 vectors");
    return report;
  }
  if (enumerate_prefix(w.m, cert.K + 1, cert.enumeration_offset) != cert.dense_prefix)
    problems.push_back("dense prefix is not the enumeration slice starting after " +
                       std::to_string(cert.enumeration_offset));

  try {
    if (select_subsequence(w, cert.dense_prefix, cert.K) != cert.selection)
      problems.push_back("recorded selection differs from the re-derived greedy selection");
  } catch (const Error& e) {
    problems.push_back(std::string("selection cannot be re-derived: ") + e.what());
  }

  SparseVector expected;
  for (std::uint64_t k = 1; k <= cert.K && k <= cert.selection.picks.size(); ++k)
    expected += apply_power(w.a, cert.selection.picks[k - 1].m, cert.dense_prefix[k - 1]);
  if (expected != cert.x_partial.computed) problems.push_back("x_partial differs from sum_k A^{m_{j_k}} x_k");

  if (cert.checks != report.checks) problems.push_back("recorded per-k checks differ from the re-derived ones");
  return report;
}

// --- Le's criterion -------------------------------------------------------

std::string_view to_string(LeReport::Verdict v) {
  switch (v) {
    case LeReport::Verdict::Applicable:
      return "le-applicable";
    case LeReport::Verdict::InvarianceFails:
      return "le-inapplicable-kernel-criterion-may-apply";
    case LeReport::Verdict::Inapplicable:
      return "le-inapplicable";
  }
  return "le-inapplicable";
}

LeReport check_le_criterion(const Operator& t, const Operator& a, const SubspaceSpec& m,
                            const std::vector<SparseVector>& samples, std::uint64_t k_probe,
                            const DecayCertificate& decay, std::uint64_t kernel_budget) {
  LeReport r;
  r.kernel.name = "kernel";
  r.decay.name = "decay";
  r.subspace_membership.name = "subspace_membership";

  if (!decay.decays()) r.decay.fail({0, {}, {}, "decay certificate rate is not negative"});

  std::vector<SparseVector> members;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const SparseVector& x = samples[s];
    ++r.kernel.checked;
    if (!kernel_index(t, x, kernel_budget)) r.kernel.fail({s, x, apply(t, x), "not in ker*(T) within budget"});

    ++r.subspace_membership.checked;
    if (m.contains(x)) {
      members.push_back(x);
    } else {
      r.subspace_membership.fail({s, x, x, "sample is not in the subspace"});
    }

    const Dyadic nx = norm(x, m.norm());
    SparseVector y = x;
    for (std::uint64_t p = 1; p <= k_probe; ++p) {
      y = apply(a, y);
      ++r.decay.checked;
      if (norm(y, m.norm()) != decay.predicted(nx, p)) {
        r.decay.fail({s, x, y, "||A^" + std::to_string(p) + " x|| does not match the certificate"});
        break;
      }
    }
  }

  r.left_inverse = is_left_inverse_on(t, a, samples);
  r.invariance = check_invariance(t, m, members);

  const bool core = r.kernel.passed && r.decay.passed && r.left_inverse.passed;
  if (!core) {
    r.verdict = LeReport::Verdict::Inapplicable;
  } else if (r.subspace_membership.passed && r.invariance.passed) {
    r.verdict = LeReport::Verdict::Applicable;
  } else {
    r.verdict = LeReport::Verdict::InvarianceFails;
  }
  return r;
}

}  // namespace hclab
