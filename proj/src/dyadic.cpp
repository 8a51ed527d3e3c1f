#include "hclab/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "hclab/error.hpp"

namespace hclab {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Dyadic::Int parse_signed(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("bad integer literal '" + std::string(s) + "'");
  Dyadic::Int value{std::string(s)};
  return negative ? Dyadic::Int(-value) : value;
}

std::uint64_t parse_exponent(std::string_view s) {
  if (!all_digits(s) || s.size() > 18) throw ParseError("bad exponent '" + std::string(s) + "'");
  return std::stoull(std::string(s));
}

}  // namespace

Dyadic::Dyadic(Int numerator, std::uint64_t exponent) : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const int s = num_.sign();
  Int mag = s < 0 ? Int(-num_) : num_;
  const std::uint64_t tz = std::min<std::uint64_t>(mp::lsb(mag), exp_);
  if (tz == 0) return;
  mag >>= tz;
  exp_ -= tz;
  num_ = s < 0 ? Int(-mag) : mag;
}

Dyadic Dyadic::pow2(std::int64_t k) {
  if (k >= 0) return Dyadic(Int(1) << static_cast<std::uint64_t>(k), 0);
  return Dyadic(Int(1), static_cast<std::uint64_t>(-k));
}

Dyadic Dyadic::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_signed(text), 0);

  Int num = parse_signed(trim(text.substr(0, slash)));
  std::string_view den = trim(text.substr(slash + 1));
  if (den.starts_with("2^")) return Dyadic(std::move(num), parse_exponent(den.substr(2)));

  if (!all_digits(den)) throw ParseError("bad denominator '" + std::string(den) + "'");
  const Int d(std::string{den});
  if (d.is_zero() || (d & (d - 1)) != 0) throw ParseError("denominator " + std::string(den) + " is not a power of two");
  return Dyadic(std::move(num), mp::msb(d));
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  if (r.num_.sign() < 0) r.num_ = -r.num_;
  return r;
}

Dyadic Dyadic::shifted(std::int64_t j) const {
  if (is_zero() || j == 0) return *this;
  Dyadic r = *this;
  if (j < 0) {
    r.exp_ += static_cast<std::uint64_t>(-j);
    r.normalize();
    return r;
  }
  const auto up = static_cast<std::uint64_t>(j);
  if (r.exp_ >= up) {
    r.exp_ -= up;
  } else {
    r.num_ <<= (up - r.exp_);
    r.exp_ = 0;
  }
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (exp_ == rhs.exp_) {
    num_ += rhs.num_;
  } else if (exp_ > rhs.exp_) {
    num_ += rhs.num_ << (exp_ - rhs.exp_);
  } else {
    num_ = (num_ << (rhs.exp_ - exp_)) + rhs.num_;
    exp_ = rhs.exp_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  num_ *= rhs.num_;
  exp_ += rhs.exp_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.exp_ == b.exp_) return a.num_.compare(b.num_) <=> 0;
  // Scale the operand with the smaller exponent up to the larger one.
  const int c = a.exp_ > b.exp_ ? a.num_.compare(b.num_ << (a.exp_ - b.exp_))
                                 : Dyadic::Int(a.num_ << (b.exp_ - a.exp_)).compare(b.num_);
  return c <=> 0;
}

std::string Dyadic::to_string() const {
  std::string s = num_.str();
  if (exp_ != 0) s += "/2^" + std::to_string(exp_);
  return s;
}

double Dyadic::approx() const {
  if (is_zero()) return 0.0;
  // Split into mantissa bits and binary exponent to survive exponents beyond double range.
  const int s = num_.sign();
  Int mag = s < 0 ? Int(-num_) : num_;
  const std::uint64_t bits = mp::msb(mag) + 1;
  std::int64_t shift = -static_cast<std::int64_t>(exp_);
  if (bits > 60) {
    mag >>= (bits - 60);
    shift += static_cast<std::int64_t>(bits - 60);
  }
  if (shift < std::numeric_limits<int>::min() / 2) return 0.0;
  return s * std::ldexp(mag.convert_to<double>(), static_cast<int>(std::max<std::int64_t>(shift, -100000)));
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

Dyadic scalar_op(ScalarOp op, const Dyadic& a, const Dyadic& b) {
  switch (op) {
    case ScalarOp::Add:
      return a + b;
    case ScalarOp::Sub:
      return a - b;
    case ScalarOp::Mul:
      return a * b;
    case ScalarOp::Shift2: {
      if (!b.is_integer()) throw PreconditionError("shift2 offset must be an integer, got " + b.to_string());
      const Dyadic::Int& j = b.numerator();
      if (j > std::numeric_limits<std::int64_t>::max() || j < std::numeric_limits<std::int64_t>::min())
        throw PreconditionError("shift2 offset out of range");
      return a.shifted(j.convert_to<std::int64_t>());
    }
  }
  return a;
}

bool lt_pow2(const Dyadic& a, std::int64_t k) {
  if (a.sign() <= 0) return true;
  // a = p / 2^e with p >= 1; a < 2^-k  <=>  p < 2^(e-k)  <=>  msb(p) < e - k.
  const auto e = static_cast<std::int64_t>(a.exponent());
  if (e - k <= 0) return false;
  return static_cast<std::int64_t>(mp::msb(a.numerator())) < e - k;
}

}  // namespace hclab
