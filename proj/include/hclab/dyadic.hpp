#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hclab {

/// Exact dyadic rational numerator * 2^(-exponent).
///
/// Values are kept in canonical form: the exponent is the smallest
/// non-negative one that represents the value, so the numerator is odd
/// whenever the exponent is positive, and zero is stored as (0, 0). Equality
/// of canonical forms is therefore equality of values.
class Dyadic {
 public:
  using Int = boost::multiprecision::cpp_int;

  Dyadic() = default;
  Dyadic(long long value) : num_(value) { normalize(); }  // NOLINT(google-explicit-constructor)
  Dyadic(Int numerator, std::uint64_t exponent);

  /// 2^k for any integer k.
  static Dyadic pow2(std::int64_t k);

  /// Parses `p`, `p/2^e` or `p/D` with D a power of two.
  static Dyadic parse(std::string_view text);

  const Int& numerator() const noexcept { return num_; }
  std::uint64_t exponent() const noexcept { return exp_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }
  bool is_integer() const noexcept { return exp_ == 0; }

  Dyadic abs() const;
  /// this * 2^j.
  Dyadic shifted(std::int64_t j) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// Canonical text: `p` for integers, `p/2^e` otherwise.
  std::string to_string() const;

  /// Best-effort double, for human-facing summaries only.
  double approx() const;

 private:
  void normalize();

  Int num_{0};
  std::uint64_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

enum class ScalarOp { Add, Sub, Mul, Shift2 };

/// Single entry point for the four scalar operations. For Shift2 the second
/// operand must be an integer (the power-of-two offset).
Dyadic scalar_op(ScalarOp op, const Dyadic& a, const Dyadic& b);

/// Exact test a < 2^(-k).
bool lt_pow2(const Dyadic& a, std::int64_t k);

}  // namespace hclab
