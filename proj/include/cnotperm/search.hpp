#pragma once

// Exact CNOT counts by breadth-first search over the Cayley graph of GL(n,2)
// generated by the n(n-1) CNOT gates, plus an exhaustive brute-force oracle that
// never touches the distance table.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cnotperm/gf2.hpp"

namespace cnotperm {

inline constexpr int kMinTableWires = 2;
inline constexpr int kMaxTableWires = 5;
inline constexpr std::uint8_t kUnreached = 255;

/// Minimal CNOT count from the identity to every matrix code of one wire count.
/// Entries for non-invertible codes hold kUnreached.
class DistanceTable {
 public:
  DistanceTable(int n, std::vector<std::uint8_t> dist);

  int wires() const noexcept { return n_; }
  std::size_t size() const noexcept { return dist_.size(); }
  std::uint8_t operator[](std::uint64_t code) const { return dist_[code]; }
  const std::vector<std::uint8_t>& data() const noexcept { return dist_; }

  /// Number of reached (invertible) entries.
  std::uint64_t reached() const;
  std::uint8_t max_distance() const;
  /// histogram[d] = number of elements at distance d.
  std::vector<std::uint64_t> histogram() const;

 private:
  int n_;
  std::vector<std::uint8_t> dist_;
};

/// Throws UnsupportedSize unless 2 <= n <= 5.
DistanceTable build_distance_table(int n);

/// First violated table invariant, or nullopt when the table is a valid BFS result.
std::optional<std::string> check_table_integrity(const DistanceTable& table);

int min_cnot_count(const Gf2Matrix& target, const DistanceTable& table);
int min_cnot_count(const PermSpec& target, const DistanceTable& table);

/// Geodesic walk taking the smallest distance-decreasing gate at each step.
Circuit extract_one_minimal_circuit(const Gf2Matrix& target, const DistanceTable& table);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Every minimal-length circuit realizing target, sorted and duplicate-free.
/// Throws BudgetExceeded once more than `limit` circuits would be produced.
std::vector<Circuit> enumerate_minimal_circuits(const Gf2Matrix& target,
                                                const DistanceTable& table,
                                                std::uint64_t limit = kDefaultEnumerationLimit);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 1'000'000'000;

/// Counts gate sequences of exactly `length` gates whose product is target by
/// trying all (n(n-1))^length of them.
std::uint64_t brute_force_count_sequences(const Gf2Matrix& target, int length,
                                          std::uint64_t budget = kDefaultBruteForceBudget);
/// The sequences counted above, in ascending order.
std::vector<Circuit> brute_force_sequences(const Gf2Matrix& target, int length,
                                           std::uint64_t budget = kDefaultBruteForceBudget);

/// Rows that differ from the identity; each CNOT changes one row, so this never
/// exceeds the minimal count.
int lower_bound_rows(const Gf2Matrix& target);
/// Sum over cycles of length l >= 2 of 3(l - 1).
int upper_bound_cycles(const PermSpec& p);

// Table file: "CPDT", version byte, n byte, u64 LE payload length, payload.
inline constexpr std::uint8_t kTableFormatVersion = 1;

void save_table(const DistanceTable& table, std::ostream& out);
void save_table(const DistanceTable& table, const std::filesystem::path& path);
DistanceTable load_table(std::istream& in, std::optional<int> expected_wires = std::nullopt);
DistanceTable load_table(const std::filesystem::path& path,
                         std::optional<int> expected_wires = std::nullopt);

}  // namespace cnotperm
