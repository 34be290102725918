#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace arbor {

using Vertex = int;
using EdgeId = int;

inline constexpr int kMaxBitsetEdges = 64;

/// Fixed-width set of edge ids in [0, 64).
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static EdgeSet from_ids(const std::vector<EdgeId>& ids) {
    EdgeSet s;
    for (EdgeId e : ids) s.insert(e);
    return s;
  }

  /// The set {0, ..., m-1}.
  static constexpr EdgeSet first(int m) {
    return EdgeSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr bool contains(EdgeId e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(EdgeId e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(EdgeId e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Smallest member; undefined on the empty set.
  constexpr EdgeId min() const { return std::countr_zero(bits_); }
  constexpr EdgeId max() const { return 63 - std::countl_zero(bits_); }

  constexpr bool intersects(EdgeSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }

  constexpr bool operator==(const EdgeSet&) const = default;
  constexpr auto operator<=>(const EdgeSet&) const = default;

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(static_cast<EdgeId>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace arbor
