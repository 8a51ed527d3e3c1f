#include "hclab/sparse_vector.hpp"

#include <cctype>

#include "hclab/error.hpp"

namespace hclab {

SparseVector::SparseVector(std::initializer_list<std::pair<const Index, Dyadic>> entries) {
  for (const auto& [i, v] : entries) add_to(i, v);
}

SparseVector SparseVector::basis(Index i, Dyadic c) {
  SparseVector v;
  v.set(i, std::move(c));
  return v;
}

Dyadic SparseVector::get(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Dyadic{} : it->second;
}

void SparseVector::set(Index i, Dyadic value) {
  if (i == 0) throw PreconditionError("coordinate indices are 1-based");
  if (value.is_zero()) {
    entries_.erase(i);
  } else {
    entries_.insert_or_assign(i, std::move(value));
  }
}

void SparseVector::add_to(Index i, const Dyadic& value) {
  if (value.is_zero()) return;
  if (i == 0) throw PreconditionError("coordinate indices are 1-based");
  auto [it, inserted] = entries_.try_emplace(i, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

std::vector<Index> SparseVector::support() const {
  std::vector<Index> s;
  s.reserve(entries_.size());
  for (const auto& [i, v] : entries_) s.push_back(i);
  return s;
}

std::optional<Index> SparseVector::max_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

SparseVector SparseVector::scaled(const Dyadic& c) const {
  SparseVector r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : entries_) r.entries_.emplace_hint(r.entries_.end(), i, v * c);
  return r;
}

SparseVector& SparseVector::operator+=(const SparseVector& rhs) {
  for (const auto& [i, v] : rhs.entries_) add_to(i, v);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& rhs) {
  for (const auto& [i, v] : rhs.entries_) add_to(i, -v);
  return *this;
}

std::string SparseVector::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, v] : entries_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(i) + ":" + v.to_string();
  }
  return s + "}";
}

SparseVector SparseVector::parse(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("vector literal must look like {i:p/2^e, ...}");
  text = text.substr(1, text.size() - 2);

  SparseVector v;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    if (item.empty()) {
      if (text.empty() && comma == std::string_view::npos) break;
      throw ParseError("empty entry in vector literal");
    }
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("vector entry missing ':'");
    const Dyadic idx = Dyadic::parse(item.substr(0, colon));
    if (!idx.is_integer() || idx.sign() <= 0) throw ParseError("vector index must be a positive integer");
    const Index i = idx.numerator().convert_to<Index>();
    if (v.entries_.contains(i)) throw ParseError("duplicate index " + std::to_string(i) + " in vector literal");
    v.set(i, Dyadic::parse(item.substr(colon + 1)));
  }
  return v;
}

SparseVector vec_axpy(const Dyadic& c, const SparseVector& x, const SparseVector& y) {
  SparseVector r = y;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : x.entries()) r.add_to(i, c * v);
  return r;
}

std::string_view to_string(NormKind k) { return k == NormKind::L1 ? "l1" : "sup"; }

NormKind parse_norm_kind(std::string_view s) {
  if (s == "l1" || s == "L1") return NormKind::L1;
  if (s == "sup" || s == "SUP" || s == "linf" || s == "c0") return NormKind::Sup;
  throw ParseError("unknown norm '" + std::string(s) + "'");
}

Dyadic norm(const SparseVector& x, NormKind kind) {
  Dyadic acc;
  for (const auto& [i, v] : x.entries()) {
    Dyadic a = v.abs();
    if (kind == NormKind::L1) {
      acc += a;
    } else if (a > acc) {
      acc = std::move(a);
    }
  }
  return acc;
}

}  // namespace hclab
