#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hclab/basis_system.hpp"
#include "hclab/dyadic.hpp"
#include "hclab/sparse_vector.hpp"

namespace hclab {

/// Weight sequence for weighted shifts: constant c, or geometric
/// c * 2^(base_exp * n).
struct WeightRule {
  enum class Kind { Constant, Geometric };

  Kind kind = Kind::Constant;
  Dyadic c{1};
  std::int64_t base_exp = 0;

  static WeightRule constant(Dyadic c) { return {Kind::Constant, std::move(c), 0}; }
  static WeightRule geometric(Dyadic c, std::int64_t base_exp) { return {Kind::Geometric, std::move(c), base_exp}; }

  Dyadic at(Index n) const;
  /// sup_n |w(n)|; BoundError when the weights are unbounded.
  Dyadic sup_bound() const;

  friend bool operator==(const WeightRule&, const WeightRule&) = default;
};

struct OperatorNode;

/// Immutable expression tree for a bounded operator on finitely supported
/// sequences. Copies share structure.
class Operator {
 public:
  struct Identity {};
  struct BackwardShift {};
  struct ForwardShift {};
  struct Scale;
  /// e_{n+1} -> w(n) e_n, i.e. (Tx)_n = w(n) x_{n+1}.
  struct WeightedBackwardShift {
    WeightRule w;
  };
  /// e_n -> w(n) e_{n+1}.
  struct WeightedForwardShift {
    WeightRule w;
  };
  struct Sum;
  struct Compose;
  struct Power;
  /// Tx = x + sum_n 2^-n x*_{n+1}(x) x_n for the given system.
  struct BasisPerturbation {
    BiorthogonalSystem sys;
  };

  Operator();  // identity

  const OperatorNode& node() const { return *node_; }

  friend bool operator==(const Operator& a, const Operator& b);

 private:
  friend struct OperatorFactory;
  explicit Operator(std::shared_ptr<const OperatorNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const OperatorNode> node_;
};

struct Operator::Scale {
  Dyadic c;
  Operator inner;
};
struct Operator::Sum {
  std::vector<Operator> terms;
};
struct Operator::Compose {
  Operator outer;
  Operator inner;
};
struct Operator::Power {
  Operator inner;
  std::uint64_t m;
};

struct OperatorNode {
  using Variant = std::variant<Operator::Identity, Operator::BackwardShift, Operator::ForwardShift, Operator::Scale,
                               Operator::WeightedBackwardShift, Operator::WeightedForwardShift, Operator::Sum,
                               Operator::Compose, Operator::Power, Operator::BasisPerturbation>;
  Variant v;
};

// Constructors.
Operator identity_op();
Operator backward_shift();
Operator forward_shift();
Operator scale(Dyadic c, Operator inner);
Operator weighted_backward_shift(WeightRule w);
Operator weighted_forward_shift(WeightRule w);
Operator sum(std::vector<Operator> terms);
/// outer after inner.
Operator compose(Operator outer, Operator inner);
Operator power(Operator inner, std::uint64_t m);
Operator basis_perturbation(BiorthogonalSystem sys);

/// Short human-readable rendering, e.g. "2*B" or "(I + wbs(1*2^(-1n)))".
std::string describe(const Operator& op);

SparseVector apply(const Operator& op, const SparseVector& x);
/// m-fold application; m == 0 returns x.
SparseVector apply_power(const Operator& op, std::uint64_t m, const SparseVector& x);

/// Least p <= budget with op^p(x) == 0 (p == 0 iff x == 0).
std::optional<std::uint64_t> kernel_index(const Operator& op, const SparseVector& x, std::uint64_t budget);

/// Compositional upper bound on the operator norm in the given norm.
Dyadic operator_norm_bound(const Operator& op, NormKind kind);

/// One failed sample in a pointwise check.
struct Counterexample {
  std::size_t sample = 0;
  SparseVector input;
  SparseVector observed;
  std::string detail;
};

/// Outcome of a pointwise check over a list of samples or basis vectors.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<Counterexample> failures;

  void fail(Counterexample c) {
    passed = false;
    failures.push_back(std::move(c));
  }
};

/// Exact check t(a(x)) == x for every sample.
CheckReport is_left_inverse_on(const Operator& t, const Operator& a, const std::vector<SparseVector>& samples);

}  // namespace hclab
