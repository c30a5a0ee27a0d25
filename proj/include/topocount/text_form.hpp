#pragma once

#include <string>
#include <string_view>

#include "topocount/topology.hpp"

namespace topocount {

/// One-line text form used by caches and the CLI:
///   n=<int>;ground=<hex>;opens=<hex>,<hex>,...
/// Masks are lowercase hex without prefix, opens ascending, bit i <=> point i,
/// and n is the ground cardinality.
std::string to_text(const Topology& t);

/// Parses the text form. The line must be well-formed (n matching the
/// ground popcount, opens strictly ascending) and the family must satisfy
/// the topology axioms. Throws Error with parse_error for malformed input;
/// axiom failures propagate from validate().
Topology parse_topology(std::string_view line);

}  // namespace topocount
