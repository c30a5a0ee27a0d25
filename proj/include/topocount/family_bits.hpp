#pragma once

#include <cstdint>

#include "topocount/topology.hpp"

namespace topocount::family_bits {

/// Families of subsets of {0..n-1} with n <= 6 packed into one word:
/// bit m is set <=> the subset with mask m is a member. This is the hot
/// representation for enumeration and canonicalization at desk scale.
inline constexpr int kMaxBitsPoints = 6;

/// Packs a topology whose ground set is exactly {0..n-1}.
std::uint64_t from_topology(const Topology& t);

/// Expands a family word into a Topology on ground {0..n-1} without
/// re-checking the axioms. Opens come out ascending by construction.
Topology to_topology(std::uint64_t fam, int n);

/// Strict order on families: open count first, then lexicographic on the
/// ascending member-mask sequence.
bool less(std::uint64_t a, std::uint64_t b);

/// Lexicographic comparison for families with equal open count.
inline bool lex_less_equal_size(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  // The family containing the smallest differing member is the smaller one.
  return (a >> std::countr_zero(diff)) & 1u;
}

/// Minimum of the family over all point permutations, i.e. the canonical
/// form of its homeomorphism class.
std::uint64_t canonical(std::uint64_t fam, int n);

/// w1-w3 on ground {0..n-1}.
bool satisfies_axioms(std::uint64_t fam, int n);

bool is_t0_family(std::uint64_t fam, int n);

}  // namespace topocount::family_bits
