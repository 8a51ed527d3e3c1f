#include "hclab/operator.hpp"

#include <sstream>
#include <type_traits>

#include "hclab/error.hpp"

namespace hclab {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// --- BiorthogonalSystem ---------------------------------------------------

BiorthogonalSystem::BiorthogonalSystem(std::int64_t stride, std::int64_t offset) : stride_(stride), offset_(offset) {
  if (stride < 1) throw PreconditionError("biorthogonal system stride must be >= 1");
  if (stride + offset < 1) throw PreconditionError("biorthogonal system must start at an index >= 1");
}

Index BiorthogonalSystem::sigma(Index n) const {
  if (n == 0) throw PreconditionError("system positions are 1-based");
  return static_cast<Index>(stride_ * static_cast<std::int64_t>(n) + offset_);
}

std::optional<Index> BiorthogonalSystem::position(Index i) const {
  const auto d = static_cast<std::int64_t>(i) - offset_;
  if (d < stride_ || d % stride_ != 0) return std::nullopt;
  return static_cast<Index>(d / stride_);
}

// --- WeightRule -----------------------------------------------------------

Dyadic WeightRule::at(Index n) const {
  if (kind == Kind::Constant) return c;
  return c.shifted(base_exp * static_cast<std::int64_t>(n));
}

Dyadic WeightRule::sup_bound() const {
  if (kind == Kind::Constant || c.is_zero()) return c.abs();
  if (base_exp > 0) throw BoundError("geometric weight with base exponent " + std::to_string(base_exp) + " is unbounded");
  return c.abs().shifted(base_exp);  // attained at n = 1
}

// --- construction ---------------------------------------------------------

struct OperatorFactory {
  template <class T>
  static Operator make(T node) {
    return Operator(std::make_shared<const OperatorNode>(OperatorNode{std::move(node)}));
  }
};

Operator::Operator() : node_(std::make_shared<const OperatorNode>(OperatorNode{Identity{}})) {}

Operator identity_op() { return OperatorFactory::make(Operator::Identity{}); }
Operator backward_shift() { return OperatorFactory::make(Operator::BackwardShift{}); }
Operator forward_shift() { return OperatorFactory::make(Operator::ForwardShift{}); }
Operator scale(Dyadic c, Operator inner) { return OperatorFactory::make(Operator::Scale{std::move(c), std::move(inner)}); }
Operator weighted_backward_shift(WeightRule w) { return OperatorFactory::make(Operator::WeightedBackwardShift{std::move(w)}); }
Operator weighted_forward_shift(WeightRule w) { return OperatorFactory::make(Operator::WeightedForwardShift{std::move(w)}); }
Operator sum(std::vector<Operator> terms) {
  if (terms.empty()) throw PreconditionError("sum needs at least one term");
  return OperatorFactory::make(Operator::Sum{std::move(terms)});
}
Operator compose(Operator outer, Operator inner) {
  return OperatorFactory::make(Operator::Compose{std::move(outer), std::move(inner)});
}
Operator power(Operator inner, std::uint64_t m) { return OperatorFactory::make(Operator::Power{std::move(inner), m}); }
Operator basis_perturbation(BiorthogonalSystem sys) { return OperatorFactory::make(Operator::BasisPerturbation{sys}); }

bool operator==(const Operator& a, const Operator& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node().v;
  const auto& vb = b.node().v;
  if (va.index() != vb.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(vb);
        if constexpr (std::is_same_v<T, Operator::Scale>) {
          return x.c == y.c && x.inner == y.inner;
        } else if constexpr (std::is_same_v<T, Operator::WeightedBackwardShift> ||
                             std::is_same_v<T, Operator::WeightedForwardShift>) {
          return x.w == y.w;
        } else if constexpr (std::is_same_v<T, Operator::Sum>) {
          return x.terms == y.terms;
        } else if constexpr (std::is_same_v<T, Operator::Compose>) {
          return x.outer == y.outer && x.inner == y.inner;
        } else if constexpr (std::is_same_v<T, Operator::Power>) {
          return x.m == y.m && x.inner == y.inner;
        } else if constexpr (std::is_same_v<T, Operator::BasisPerturbation>) {
          return x.sys == y.sys;
        } else {
          return true;
        }
      },
      va);
}

// --- rendering ------------------------------------------------------------

namespace {

std::string describe_weight(const WeightRule& w) {
  if (w.kind == WeightRule::Kind::Constant) return w.c.to_string();
  return w.c.to_string() + "*2^(" + std::to_string(w.base_exp) + "n)";
}

}  // namespace

std::string describe(const Operator& op) {
  return std::visit(overloaded{
                        [](const Operator::Identity&) -> std::string { return "I"; },
                        [](const Operator::BackwardShift&) -> std::string { return "B"; },
                        [](const Operator::ForwardShift&) -> std::string { return "F"; },
                        [](const Operator::Scale& s) { return s.c.to_string() + "*" + describe(s.inner); },
                        [](const Operator::WeightedBackwardShift& s) { return "wbs(" + describe_weight(s.w) + ")"; },
                        [](const Operator::WeightedForwardShift& s) { return "wfs(" + describe_weight(s.w) + ")"; },
                        [](const Operator::Sum& s) {
                          std::string out = "(";
                          for (std::size_t i = 0; i < s.terms.size(); ++i) {
                            if (i) out += " + ";
                            out += describe(s.terms[i]);
                          }
                          return out + ")";
                        },
                        [](const Operator::Compose& c) { return "(" + describe(c.outer) + " o " + describe(c.inner) + ")"; },
                        [](const Operator::Power& p) { return "(" + describe(p.inner) + ")^" + std::to_string(p.m); },
                        [](const Operator::BasisPerturbation& b) {
                          std::ostringstream os;
                          os << "T[sigma(n)=" << b.sys.stride() << "n" << (b.sys.offset() < 0 ? "" : "+") << b.sys.offset()
                             << "]";
                          return os.str();
                        },
                    },
                    op.node().v);
}

// --- evaluation -----------------------------------------------------------

SparseVector apply(const Operator& op, const SparseVector& x) {
  if (x.is_zero()) return x;
  return std::visit(
      overloaded{
          [&](const Operator::Identity&) { return x; },
          [&](const Operator::BackwardShift&) {
            SparseVector r;
            for (const auto& [i, v] : x.entries())
              if (i >= 2) r.set(i - 1, v);
            return r;
          },
          [&](const Operator::ForwardShift&) {
            SparseVector r;
            for (const auto& [i, v] : x.entries()) r.set(i + 1, v);
            return r;
          },
          [&](const Operator::Scale& s) { return apply(s.inner, x).scaled(s.c); },
          [&](const Operator::WeightedBackwardShift& s) {
            SparseVector r;
            for (const auto& [i, v] : x.entries())
              if (i >= 2) r.set(i - 1, s.w.at(i - 1) * v);
            return r;
          },
          [&](const Operator::WeightedForwardShift& s) {
            SparseVector r;
            for (const auto& [i, v] : x.entries()) r.set(i + 1, s.w.at(i) * v);
            return r;
          },
          [&](const Operator::Sum& s) {
            SparseVector r;
            for (const auto& t : s.terms) r += apply(t, x);
            return r;
          },
          [&](const Operator::Compose& c) { return apply(c.outer, apply(c.inner, x)); },
          [&](const Operator::Power& p) { return apply_power(p.inner, p.m, x); },
          [&](const Operator::BasisPerturbation& b) {
            // x_{n} = e_{sigma(n)} contributes 2^-(n-1) * x_n^*(x) to x_{n-1}.
            SparseVector r = x;
            for (const auto& [i, v] : x.entries()) {
              const auto n = b.sys.position(i);
              if (n && *n >= 2) r.add_to(b.sys.sigma(*n - 1), v.shifted(-static_cast<std::int64_t>(*n - 1)));
            }
            return r;
          },
      },
      op.node().v);
}

SparseVector apply_power(const Operator& op, std::uint64_t m, const SparseVector& x) {
  SparseVector y = x;
  for (std::uint64_t i = 0; i < m && !y.is_zero(); ++i) y = apply(op, y);
  return y;
}

std::optional<std::uint64_t> kernel_index(const Operator& op, const SparseVector& x, std::uint64_t budget) {
  if (budget == 0) throw PreconditionError("kernel_index budget must be >= 1");
  SparseVector y = x;
  for (std::uint64_t p = 0; p <= budget; ++p) {
    if (y.is_zero()) return p;
    if (p < budget) y = apply(op, y);
  }
  return std::nullopt;
}

Dyadic operator_norm_bound(const Operator& op, NormKind kind) {
  return std::visit(overloaded{
                        [](const Operator::Identity&) { return Dyadic(1); },
                        [](const Operator::BackwardShift&) { return Dyadic(1); },
                        [](const Operator::ForwardShift&) { return Dyadic(1); },
                        [&](const Operator::Scale& s) { return s.c.abs() * operator_norm_bound(s.inner, kind); },
                        [](const Operator::WeightedBackwardShift& s) { return s.w.sup_bound(); },
                        [](const Operator::WeightedForwardShift& s) { return s.w.sup_bound(); },
                        [&](const Operator::Sum& s) {
                          Dyadic b;
                          for (const auto& t : s.terms) b += operator_norm_bound(t, kind);
                          return b;
                        },
                        [&](const Operator::Compose& c) {
                          return operator_norm_bound(c.outer, kind) * operator_norm_bound(c.inner, kind);
                        },
                        [&](const Operator::Power& p) {
                          const Dyadic base = operator_norm_bound(p.inner, kind);
                          Dyadic b(1);
                          for (std::uint64_t i = 0; i < p.m; ++i) b *= base;
                          return b;
                        },
                        // ||x|| + sum_n 2^-n |x*_{n+1}(x)| ||x_n|| <= (1 + C) ||x||
                        [](const Operator::BasisPerturbation& b) { return Dyadic(1) + b.sys.functional_bound(); },
                    },
                    op.node().v);
}

CheckReport is_left_inverse_on(const Operator& t, const Operator& a, const std::vector<SparseVector>& samples) {
  CheckReport report{.name = "left_inverse"};
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const SparseVector image = apply(t, apply(a, samples[s]));
    ++report.checked;
    if (image != samples[s]) report.fail({s, samples[s], image, "t(a(x)) != x"});
  }
  return report;
}

}  // namespace hclab
