#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cnotperm/gf2.hpp"
#include "cnotperm/search.hpp"

namespace cnotperm {

/// Hamming weight of the traced state after each prefix of a circuit.
struct PhiTrace {
  int wires = 0;
  BitVec input = 0;
  std::vector<int> weights;  // weights[k]: after the first k gates
};

PhiTrace phi_trace(const Circuit& c, BitVec input);

struct PhiCircuitCheck {
  Circuit circuit;
  PhiTrace trace;
  bool steps_bounded = true;     // every step changes the weight by at most 1
  bool in_range = true;          // every weight in [0, n]
  bool penultimate_is_n_minus_1 = true;  // weight before the last gate == n - 1
};

struct PhiReport {
  std::vector<PhiCircuitCheck> circuits;
  std::size_t step_violations = 0;
  std::size_t range_violations = 0;
  std::size_t penultimate_violations = 0;

  bool all_hold() const {
    return step_violations == 0 && range_violations == 0 && penultimate_violations == 0;
  }
};

/// Evaluates the three weight properties on each circuit. An empty circuit has
/// no penultimate weight and counts as a penultimate violation.
PhiReport check_phi_properties(const std::vector<Circuit>& circuits, BitVec input);

struct ImpossibilityReport {
  PermSpec target;
  std::vector<std::uint64_t> counts;  // counts[L]: realizations with exactly L gates
  std::optional<int> smallest_length;
};

/// Brute-force realization counts for every length 0..max_length.
ImpossibilityReport impossibility_report(const PermSpec& target, int max_length,
                                         std::uint64_t budget = kDefaultBruteForceBudget);

// ---- verification suite -------------------------------------------------------

enum class ClaimStatus { Pass, Fail, Skipped };

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Fail;
};

struct SuiteOptions {
  bool skip_n5 = false;
  /// When set, tables are read from cpdt-n{n}.bin here if present and
  /// integrity-checked before use; missing files are rebuilt in memory.
  std::optional<std::filesystem::path> cache_dir;
};

struct SuiteReport {
  std::vector<std::string> integrity_failures;
  std::vector<ClaimResult> claims;

  bool passed() const;
};

/// Runs every claim in a fixed order. Table I/O problems other than integrity
/// failures propagate as TableError.
SuiteReport paper_verification_suite(const SuiteOptions& options = {});

std::string to_text(const SuiteReport& report);
std::string to_json(const SuiteReport& report);
const char* to_string(ClaimStatus status);

/// Conventional cache file name for a table of n wires.
std::filesystem::path table_file_name(int n);

}  // namespace cnotperm
