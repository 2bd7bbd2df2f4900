#pragma once

// Core value types: vertex sets, direction subsets, multidegrees and
// 2^k-indexed families of vertex sets.
//
// Conventions used throughout the library:
//   * directions are 0-based internally (dir = 0 .. k-1); every JSON and
//     CLI surface prints them 1-based;
//   * a vertex set is a bitmask over at most 64 vertices and stands for the
//     ideal of c0(V) spanned by the corresponding point projections.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tfam {

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxRank = 16;

/// Malformed input: schema violations, out-of-range indices, dimension
/// mismatches between a model and the sets handed to it.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search ran past its configured work budget.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::uint64_t visited, std::uint64_t found)
      : std::runtime_error(what), visited_(visited), found_(found) {}

  std::uint64_t visited() const { return visited_; }
  std::uint64_t found() const { return found_; }

 private:
  std::uint64_t visited_;
  std::uint64_t found_;
};

/// An internal cross-check failed; this always indicates a bug.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet of(std::initializer_list<std::size_t> vs) {
    VertexSet s;
    for (auto v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return v < 64 && ((bits_ >> v) & 1u) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  /// True when every member is below n.
  constexpr bool fits(std::size_t n) const { return subset_of(full(n)); }

  constexpr VertexSet& insert(std::size_t v) {
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& erase(std::size_t v) {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  /// Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// A subset F of the directions {1..k}; bit d is set iff direction d+1 is in F.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static constexpr SubsetMask full(std::size_t k) { return SubsetMask((std::uint32_t{1} << k) - 1); }
  /// Builds F from 1-based direction labels, matching the usual notation.
  static constexpr SubsetMask of(std::initializer_list<std::size_t> one_based) {
    std::uint32_t b = 0;
    for (auto i : one_based) b |= std::uint32_t{1} << (i - 1);
    return SubsetMask(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t dir) const { return ((bits_ >> dir) & 1u) != 0; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr SubsetMask with(std::size_t dir) const { return SubsetMask(bits_ | (std::uint32_t{1} << dir)); }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

  /// Comma-joined sorted 1-based labels; "" for the empty set.
  std::string key() const {
    std::string out;
    for (std::size_t d = 0; d < 32; ++d) {
      if (!contains(d)) continue;
      if (!out.empty()) out += ',';
      out += std::to_string(d + 1);
    }
    return out;
  }

  /// Inverse of key(); rejects labels outside 1..k, duplicates and unsorted keys.
  static SubsetMask parse_key(std::string_view key, std::size_t k) {
    SubsetMask F;
    if (key.empty()) return F;
    std::size_t last = 0;
    std::size_t pos = 0;
    while (pos <= key.size()) {
      auto comma = key.find(',', pos);
      if (comma == std::string_view::npos) comma = key.size();
      auto tok = key.substr(pos, comma - pos);
      if (tok.empty() || tok.size() > 3 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw invalid_input("bad direction label in family key \"" + std::string(key) + "\"");
      std::size_t i = std::stoul(std::string(tok));
      if (i < 1 || i > k) throw invalid_input("direction " + std::to_string(i) + " out of range in key \"" + std::string(key) + "\"");
      if (i <= last) throw invalid_input("family key \"" + std::string(key) + "\" is not strictly increasing");
      last = i;
      F = F.with(i - 1);
      pos = comma + 1;
    }
    return F;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of {1..k} ordered by (size, numeric value).
inline std::vector<SubsetMask> canonical_subsets(std::size_t k) {
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << k); ++b) out.emplace_back(b);
  std::stable_sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) { return a.size() < b.size(); });
  return out;
}

/// Cached canonical_subsets(k); hot loops iterate this instead of rebuilding it.
inline const std::vector<SubsetMask>& canonical_order(std::size_t k) {
  static const auto table = [] {
    std::vector<std::vector<SubsetMask>> t;
    for (std::size_t r = 0; r <= kMaxRank; ++r) t.push_back(canonical_subsets(r));
    return t;
  }();
  return table.at(k);
}

/// A degree n in Z_+^k.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<std::size_t> exponents) : exps_(std::move(exponents)) {}
  MultiDegree(std::initializer_list<std::size_t> exponents) : exps_(exponents) {}

  static MultiDegree zero(std::size_t k) { return MultiDegree(std::vector<std::size_t>(k, 0)); }
  static MultiDegree unit(std::size_t k, std::size_t dir) {
    auto d = zero(k);
    d.exps_[dir] = 1;
    return d;
  }
  /// The degree 1_F.
  static MultiDegree indicator(std::size_t k, SubsetMask F) {
    auto d = zero(k);
    for (std::size_t i = 0; i < k; ++i) d.exps_[i] = F.contains(i) ? 1 : 0;
    return d;
  }

  std::size_t rank() const { return exps_.size(); }
  std::size_t operator[](std::size_t dir) const { return exps_[dir]; }
  std::size_t& operator[](std::size_t dir) { return exps_[dir]; }

  SubsetMask support() const {
    SubsetMask s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) s = s.with(i);
    return s;
  }
  /// n is perpendicular to F when supp(n) and F are disjoint.
  bool perp(SubsetMask F) const { return (support().bits() & F.bits()) == 0; }
  bool is_zero() const { return support().empty(); }

  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) a.exps_[i] += b.exps_[i];
    return a;
  }
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<std::size_t> exps_;
};

/// A total map from subsets F of {1..k} to vertex sets (a 2^k-tuple).
class IdealFamily {
 public:
  IdealFamily() = default;
  explicit IdealFamily(std::size_t rank, VertexSet fill = {}) : rank_(rank), sets_(std::size_t{1} << rank, fill) {
    if (rank > kMaxRank) throw invalid_input("rank " + std::to_string(rank) + " exceeds the supported maximum");
  }

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return sets_.size(); }

  VertexSet& operator[](SubsetMask F) { return sets_[F.bits()]; }
  VertexSet operator[](SubsetMask F) const { return sets_[F.bits()]; }
  /// Sets indexed by raw mask bits.
  const std::vector<VertexSet>& raw() const { return sets_; }

  bool subset_of(const IdealFamily& o) const {
    for (std::size_t b = 0; b < sets_.size(); ++b)
      if (!sets_[b].subset_of(o.sets_[b])) return false;
    return true;
  }
  std::size_t height() const {
    std::size_t h = 0;
    for (auto s : sets_) h += s.size();
    return h;
  }
  bool fits(std::size_t n) const {
    return std::all_of(sets_.begin(), sets_.end(), [n](VertexSet s) { return s.fits(n); });
  }

  /// Vertex bitmasks listed in canonical subset order.
  std::vector<std::uint64_t> canonical_key() const {
    std::vector<std::uint64_t> key;
    key.reserve(sets_.size());
    for (auto F : canonical_order(rank_)) key.push_back(sets_[F.bits()].bits());
    return key;
  }

  friend IdealFamily pointwise_meet(IdealFamily a, const IdealFamily& b) {
    for (std::size_t i = 0; i < a.sets_.size(); ++i) a.sets_[i] &= b.sets_[i];
    return a;
  }
  friend IdealFamily pointwise_join(IdealFamily a, const IdealFamily& b) {
    for (std::size_t i = 0; i < a.sets_.size(); ++i) a.sets_[i] |= b.sets_[i];
    return a;
  }
  friend bool operator==(const IdealFamily&, const IdealFamily&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<VertexSet> sets_;
};

/// Strict weak order used for every emitted list of families.
inline bool canonical_less(const IdealFamily& a, const IdealFamily& b) {
  return a.canonical_key() < b.canonical_key();
}

}  // namespace tfam
