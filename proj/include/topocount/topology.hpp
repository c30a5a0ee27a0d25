#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "topocount/errors.hpp"
#include "topocount/pointset.hpp"

namespace topocount {

/// A finite topology: an explicit ground set plus its open sets.
///
/// Representation invariants (enforced by validate(), assumed by unchecked()):
///   - every open is a subset of ground;
///   - the empty set and ground are members;
///   - the family is closed under pairwise union and intersection;
///   - opens is strictly ascending by numeric mask value.
///
/// The ground set is explicit rather than implied by the set bits so that
/// sub-topologies and shifts keep their original point labels; normalize()
/// compacts labels on demand. Equality is representation equality (same
/// ground, same opens); homeomorphism lives in canon.hpp.
class Topology {
 public:
  /// The unique topology on the empty ground set: {∅}.
  Topology() : opens_{PointSet::empty_set()} {}

  PointSet ground() const { return ground_; }
  const std::vector<PointSet>& opens() const { return opens_; }

  /// Ground cardinality (the number of points, not the number of opens).
  int size() const { return ground_.size(); }
  int open_count() const { return static_cast<int>(opens_.size()); }

  bool contains_open(PointSet s) const;

  friend bool operator==(const Topology&, const Topology&) = default;

  /// Wraps an already-normalized family without re-checking the axioms.
  /// Callers must guarantee the representation invariants.
  static Topology unchecked(PointSet ground, std::vector<PointSet> sorted_opens) {
    Topology t;
    t.ground_ = ground;
    t.opens_ = std::move(sorted_opens);
    return t;
  }

 private:
  PointSet ground_;
  std::vector<PointSet> opens_;
};

/// A family closed under pairwise union and intersection whose smallest
/// member need not be empty. This is what the inverse shift produces; it is
/// deliberately not convertible to Topology.
struct ClosedFamily {
  PointSet floor;
  PointSet ceiling;
  std::vector<PointSet> members;  // ascending

  friend bool operator==(const ClosedFamily&, const ClosedFamily&) = default;
};

/// Description of one axiom violation found in a candidate family.
struct FamilyViolation {
  Errc kind = Errc::w1_missing;
  PointSet witness_a;
  PointSet witness_b;
};

/// Checks a sorted, deduplicated family against the axioms. Checks run in
/// the order: containment in ground, w1, w2, w3; witnesses are the first
/// offending element or pair in ascending mask order.
std::vector<PointSet> normalize_family(std::span<const PointSet> family);
bool find_family_violation(std::span<const PointSet> sorted_family,
                           PointSet ground, FamilyViolation* out);

/// Normalizes the family (sort + dedup) and returns it as a Topology iff
/// the axioms hold. Throws Error with code w1_missing, w2_violation,
/// w3_violation or not_subset, carrying the witness masks.
Topology validate(std::span<const PointSet> family, PointSet ground);

/// Trace of the topology on an open x: opens become {O ∩ x}, ground becomes
/// x. Point labels are kept as-is. Throws not_open.
Topology intersection_topology(const Topology& t, PointSet x);

/// Deletion of an open x: opens become {O \ x} on ground \ x. Throws not_open.
Topology shift_topology(const Topology& t, PointSet x);

/// Adjoins a set y disjoint from the ground: members {O ∪ y}. The result is
/// closed under union and intersection but its floor is y, so it is returned
/// as a ClosedFamily rather than a Topology. Throws not_disjoint.
ClosedFamily inverse_shift(const Topology& t, PointSet y);

/// Complements of all opens on the same ground. An involution.
Topology co_topology(const Topology& t);

/// True iff every pair of distinct ground points is separated by an open
/// containing exactly one of them. Vacuously true for size <= 1.
bool is_t0(const Topology& t);

/// All pairwise unions {O1 ∪ O2} on the disjoint union of grounds.
/// Commutative. Throws not_disjoint.
Topology direct_sum(const Topology& t1, const Topology& t2);

/// t1.opens ∪ {O ∪ ground1 : O ∈ t2.opens} on the disjoint union of
/// grounds. Not commutative in general. Throws not_disjoint.
Topology w_sum(const Topology& t1, const Topology& t2);

/// Splits a topology along an open e1 into (intersection, shift). When t
/// was built as w_sum(a, b) with e1 = a.ground(), this returns exactly
/// (a, b). Throws not_open.
std::pair<Topology, Topology> recover_components(const Topology& t, PointSet e1);

/// A point-to-point map over the 32-point universe, used to carry
/// bijections between ground sets. Defaults to the identity.
class Relabeling {
 public:
  Relabeling() {
    for (int i = 0; i < kMaxPoints; ++i) to_[i] = static_cast<std::uint8_t>(i);
  }

  /// i -> i + offset for every point.
  static Relabeling shift(int offset);
  /// i -> image[i] for i < image.size(), identity beyond.
  static Relabeling from_permutation(std::span<const int> image);
  static Relabeling swap_points(int a, int b);

  Relabeling& map(int from, int to) {
    to_[from] = static_cast<std::uint8_t>(to);
    return *this;
  }

  int image_of(int p) const { return to_[p]; }

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  std::array<std::uint8_t, kMaxPoints> to_;
};

/// Remaps every open through the bijection. The map must be injective on
/// the ground points and stay inside the universe width; other entries are
/// ignored. Throws not_injective or width_exceeded.
Topology relabel(const Topology& t, const Relabeling& bijection);

/// Relabels the ground points to 0..n-1 preserving their numeric order.
/// Idempotent.
Topology normalize(const Topology& t);

}  // namespace topocount
