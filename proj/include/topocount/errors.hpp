#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topocount {

/// Failure codes surfaced by the library. Each operation documents which
/// subset it can raise.
enum class Errc {
  // family / topology structure
  w1_missing,      // empty set or ground absent
  w2_violation,    // a pair of opens whose union is absent
  w3_violation,    // a pair of opens whose intersection is absent
  not_subset,      // family element not contained in the ground set
  not_open,        // operand set is not an open of the topology
  not_disjoint,    // operand set overlaps the ground set
  not_injective,   // relabeling collapses two ground points
  width_exceeded,  // a point index falls outside the 32-point universe
  size_mismatch,   // operands have different ground cardinality
  too_large,       // request beyond the supported enumeration scale
  // ingestion / tables
  parse_error,
  gap_error,
  duplicate_index,
  out_of_range,
  empty_table,
  missing_counts,
  // runtime
  budget_exceeded,
  io_error,
};

const char* errc_name(Errc code);

/// Single exception type carrying a code plus optional context: witness
/// masks for axiom violations, a line number for parse failures.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  Error& with_witness(std::uint32_t a, std::uint32_t b = 0) {
    witness_a_ = a;
    witness_b_ = b;
    return *this;
  }

  Error& with_line(int line) {
    line_ = line;
    return *this;
  }

  Errc code() const { return code_; }
  std::uint32_t witness_a() const { return witness_a_; }
  std::uint32_t witness_b() const { return witness_b_; }
  int line() const { return line_; }

 private:
  Errc code_;
  std::uint32_t witness_a_ = 0;
  std::uint32_t witness_b_ = 0;
  int line_ = 0;
};

}  // namespace topocount
