#include "hclab/orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hclab/error.hpp"

namespace hclab {

namespace {

constexpr std::uint64_t kMaxLevel = 30;  // 4^L must fit in int64

std::uint64_t coords_at_level(const SubspaceSpec& m, std::uint64_t level) {
  const auto dim = m.dimension();
  return dim ? std::min(level, *dim) : level;
}

}  // namespace

DenseEnumerator::DenseEnumerator(SubspaceSpec m) : m_(std::move(m)) { enter_level(1); }

void DenseEnumerator::enter_level(std::uint64_t level) {
  if (level > kMaxLevel) throw BoundError("enumeration level " + std::to_string(level) + " is out of range");
  level_ = level;
  bound_ = std::int64_t{1} << (2 * level);
  coords_.clear();
  for (std::uint64_t i = 1; i <= coords_at_level(m_, level); ++i) coords_.push_back(*m_.nth_allowed(i));
  tuple_.assign(coords_.size(), -bound_);
  fresh_ = true;
}

bool DenseEnumerator::advance() {
  for (std::size_t i = tuple_.size(); i-- > 0;) {
    if (tuple_[i] < bound_) {
      ++tuple_[i];
      return true;
    }
    tuple_[i] = -bound_;
  }
  return false;
}

bool DenseEnumerator::in_previous_level() const {
  if (level_ <= 1) return false;
  const std::uint64_t prev_coords = coords_at_level(m_, level_ - 1);
  const std::int64_t prev_bound = bound_ / 4;
  for (std::size_t i = 0; i < tuple_.size(); ++i) {
    const std::int64_t p = tuple_[i];
    if (i >= prev_coords && p != 0) return false;
    if (p % 2 != 0 || std::abs(p / 2) > prev_bound) return false;
  }
  return true;
}

SparseVector DenseEnumerator::next() {
  for (;;) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      enter_level(level_ + 1);
      fresh_ = false;
    }
    if (in_previous_level()) continue;

    SparseVector v;
    for (std::size_t i = 0; i < tuple_.size(); ++i)
      v.set(coords_[i], Dyadic(Dyadic::Int(tuple_[i]), level_));
    ++emitted_;
    return v;
  }
}

SparseVector enumerate_dense(const SubspaceSpec& m, std::uint64_t n) {
  if (n == 0) throw PreconditionError("enumeration positions are 1-based");
  DenseEnumerator e(m);
  SparseVector v;
  for (std::uint64_t i = 0; i < n; ++i) v = e.next();
  return v;
}

std::vector<SparseVector> enumerate_prefix(const SubspaceSpec& m, std::uint64_t count, std::uint64_t skip) {
  DenseEnumerator e(m);
  for (std::uint64_t i = 0; i < skip; ++i) e.next();
  std::vector<SparseVector> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(e.next());
  return out;
}

Dyadic::Int enumeration_level_bound(const SubspaceSpec& m, std::uint64_t level) {
  const Dyadic::Int side = 2 * (Dyadic::Int(1) << (2 * level)) + 1;
  Dyadic::Int total = 1;
  for (std::uint64_t i = 0; i < coords_at_level(m, level); ++i) total *= side;
  return total;
}

OrbitReport orbit(const Operator& t, const SparseVector& x, std::uint64_t steps, NormKind norm) {
  OrbitReport report{.op = t, .start = x, .norm = norm};
  report.points.reserve(steps + 1);
  SparseVector y = x;
  for (std::uint64_t n = 0; n <= steps; ++n) {
    report.points.push_back({n, y, hclab::norm(y, norm), std::nullopt});
    if (n < steps) y = apply(t, y);
  }
  return report;
}

OrbitReport density_report(const Operator& t, const CertifiedVector& x, const std::vector<SparseVector>& targets,
                           const Dyadic& eps, std::uint64_t max_steps, NormKind norm, HitPolicy policy) {
  if (eps.sign() <= 0) throw PreconditionError("density_report needs eps > 0");
  OrbitReport report{.op = t, .start = x.computed, .norm = norm, .tail_bound = x.tail_bound};
  std::vector<bool> hit(targets.size(), false);

  SparseVector y = x.computed;
  for (std::uint64_t n = 0; n <= max_steps; ++n) {
    OrbitPoint point{.n = n, .norm = hclab::norm(y, norm)};
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const Dyadic d = hclab::norm(y - targets[j], norm);
      if (!point.nearest_distance || d < *point.nearest_distance) point.nearest_distance = d;
      if (d < eps && (policy == HitPolicy::All || !hit[j])) {
        report.hits.push_back({j + 1, n, d});
        hit[j] = true;
      }
    }
    report.points.push_back(std::move(point));
    if (n < max_steps) y = apply(t, y);
  }
  for (std::size_t j = 0; j < targets.size(); ++j)
    if (!hit[j]) report.missed_targets.push_back(j + 1);
  return report;
}

std::string orbit_csv(const OrbitReport& report) {
  std::ostringstream os;
  os << "n,norm,distance\n";
  for (const auto& p : report.points) {
    os << p.n << ',' << p.norm << ',';
    if (p.nearest_distance) os << *p.nearest_distance;
    os << '\n';
  }
  return os.str();
}

}  // namespace hclab
