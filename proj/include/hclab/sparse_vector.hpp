#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hclab/dyadic.hpp"

namespace hclab {

/// 1-based coordinate index.
using Index = std::uint64_t;

/// Finitely supported sequence with dyadic coordinates. Zero coordinates are
/// never stored, so two vectors are equal iff their entry maps are equal.
class SparseVector {
 public:
  using Entries = std::map<Index, Dyadic>;

  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<const Index, Dyadic>> entries);

  /// The basis vector e_i (scaled by c).
  static SparseVector basis(Index i, Dyadic c = 1);

  /// Parses the text literal `{i:p/2^e, ...}` (also accepts `p/D`).
  static SparseVector parse(std::string_view text);

  Dyadic get(Index i) const;
  /// Sets coordinate i; assigning zero erases it.
  void set(Index i, Dyadic value);
  /// Adds value to coordinate i, dropping the entry if it cancels.
  void add_to(Index i, const Dyadic& value);

  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::vector<Index> support() const;
  /// Largest support index; nullopt for the zero vector.
  std::optional<Index> max_index() const;

  SparseVector scaled(const Dyadic& c) const;

  SparseVector& operator+=(const SparseVector& rhs);
  SparseVector& operator-=(const SparseVector& rhs);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Dyadic& c, const SparseVector& x) { return x.scaled(c); }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  /// Canonical text literal, e.g. `{1:3/2^2, 7:-1/2^3}`; `{}` for zero.
  std::string to_string() const;

 private:
  Entries entries_;
};

/// c*x + y, exact.
SparseVector vec_axpy(const Dyadic& c, const SparseVector& x, const SparseVector& y);

enum class NormKind { L1, Sup };

std::string_view to_string(NormKind k);
NormKind parse_norm_kind(std::string_view s);

Dyadic norm(const SparseVector& x, NormKind kind);

/// A computed vector together with a bound on its distance to the vector it
/// stands for. tail_bound == 0 means the representation is exact.
struct CertifiedVector {
  SparseVector computed;
  Dyadic tail_bound;
  NormKind norm = NormKind::Sup;
};

}  // namespace hclab
