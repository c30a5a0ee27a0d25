#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace topocount {

/// Width of the label universe. Points are integers in [0, kMaxPoints).
inline constexpr int kMaxPoints = 32;

/// A subset of labeled points, bit i set <=> point i is a member.
/// Plain value type; ordered by numeric mask value.
class PointSet {
 public:
  constexpr PointSet() = default;
  explicit constexpr PointSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr PointSet empty_set() { return PointSet(0); }
  static constexpr PointSet single(int p) { return PointSet(1u << p); }
  /// The set {0, 1, ..., n-1}.
  static constexpr PointSet first_n(int n) {
    return PointSet(n >= kMaxPoints ? ~0u : (1u << n) - 1u);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int p) const { return (mask_ >> p) & 1u; }
  constexpr bool subset_of(PointSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool disjoint_with(PointSet other) const {
    return (mask_ & other.mask_) == 0;
  }

  friend constexpr PointSet operator|(PointSet a, PointSet b) {
    return PointSet(a.mask_ | b.mask_);
  }
  friend constexpr PointSet operator&(PointSet a, PointSet b) {
    return PointSet(a.mask_ & b.mask_);
  }
  /// Set difference: members of *this not in other.
  constexpr PointSet minus(PointSet other) const {
    return PointSet(mask_ & ~other.mask_);
  }

  /// Lowest member; only meaningful on non-empty sets.
  constexpr int lowest() const { return std::countr_zero(mask_); }

  template <class F>
  void for_each_point(F&& f) const {
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      f(std::countr_zero(m));
    }
  }

  std::vector<int> to_points() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_point([&](int p) { out.push_back(p); });
    return out;
  }

  friend constexpr auto operator<=>(PointSet, PointSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace topocount
