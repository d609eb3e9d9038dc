#include "cnotperm/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>

namespace cnotperm {

namespace {

// A CNOT acting on packed matrix codes: row target ^= row control.
struct CodeMove {
  int control_shift;
  int target_shift;
  std::uint64_t row_mask;

  std::uint64_t operator()(std::uint64_t code) const {
    return code ^ (((code >> control_shift) & row_mask) << target_shift);
  }
};

std::vector<CodeMove> code_moves(const std::vector<CnotGate>& gates, int n) {
  std::vector<CodeMove> moves;
  moves.reserve(gates.size());
  for (const auto& g : gates) {
    moves.push_back({(g.control - 1) * n, (g.target - 1) * n, (std::uint64_t{1} << n) - 1});
  }
  return moves;
}

void check_table_wires(int n) {
  if (n < kMinTableWires || n > kMaxTableWires) {
    throw UnsupportedSize("distance tables support " + std::to_string(kMinTableWires) + " <= n <= " +
                          std::to_string(kMaxTableWires) + ", got n = " + std::to_string(n));
  }
}

std::uint64_t table_entries(int n) { return std::uint64_t{1} << (n * n); }

std::uint64_t checked_code(const Gf2Matrix& target, const DistanceTable& table) {
  if (target.size() != table.wires()) {
    throw InvalidInput("target has " + std::to_string(target.size()) + " wires, table has " +
                       std::to_string(table.wires()));
  }
  if (!target.is_invertible()) {
    throw Unrealizable("target matrix is singular; no CNOT circuit realizes it");
  }
  const std::uint64_t code = target.code();
  if (table[code] == kUnreached) {
    throw Unrealizable("target is invertible but missing from the distance table");
  }
  return code;
}

void enumerate_from(std::uint64_t code, const DistanceTable& table,
                    const std::vector<CnotGate>& gates, const std::vector<CodeMove>& moves,
                    std::vector<CnotGate>& prefix, std::vector<Circuit>& out,
                    std::uint64_t limit) {
  const std::uint8_t d = table[code];
  if (d == 0) {
    if (out.size() >= limit) {
      throw BudgetExceeded("more than " + std::to_string(limit) + " minimal circuits");
    }
    out.emplace_back(table.wires(), prefix);
    return;
  }
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const std::uint64_t next = moves[k](code);
    if (table[next] + 1 != d) continue;
    prefix.push_back(gates[k]);
    enumerate_from(next, table, gates, moves, prefix, out, limit);
    prefix.pop_back();
  }
}

void write_u64_le(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

}  // namespace

// ---- DistanceTable ------------------------------------------------------------

DistanceTable::DistanceTable(int n, std::vector<std::uint8_t> dist) : n_(n), dist_(std::move(dist)) {
  check_table_wires(n);
  if (dist_.size() != table_entries(n)) {
    throw InvalidInput("distance array must have 2^(n*n) entries");
  }
}

std::uint64_t DistanceTable::reached() const {
  return static_cast<std::uint64_t>(
      std::count_if(dist_.begin(), dist_.end(), [](std::uint8_t d) { return d != kUnreached; }));
}

std::uint8_t DistanceTable::max_distance() const {
  std::uint8_t best = 0;
  for (auto d : dist_) {
    if (d != kUnreached) best = std::max(best, d);
  }
  return best;
}

std::vector<std::uint64_t> DistanceTable::histogram() const {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(max_distance()) + 1, 0);
  for (auto d : dist_) {
    if (d != kUnreached) ++hist[d];
  }
  return hist;
}

// ---- BFS ----------------------------------------------------------------------

DistanceTable build_distance_table(int n) {
  check_table_wires(n);
  const auto moves = code_moves(all_gates(n), n);
  std::vector<std::uint8_t> dist(table_entries(n), kUnreached);

  const std::uint64_t identity = Gf2Matrix::identity(n).code();
  dist[identity] = 0;
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(identity)};
  std::vector<std::uint32_t> next;
  for (std::uint8_t depth = 0; !frontier.empty(); ++depth) {
    next.clear();
    for (std::uint32_t code : frontier) {
      for (const auto& move : moves) {
        const auto neighbor = static_cast<std::uint32_t>(move(code));
        if (dist[neighbor] == kUnreached) {
          dist[neighbor] = static_cast<std::uint8_t>(depth + 1);
          next.push_back(neighbor);
        }
      }
    }
    frontier.swap(next);
  }
  return DistanceTable(n, std::move(dist));
}

std::optional<std::string> check_table_integrity(const DistanceTable& table) {
  const int n = table.wires();
  const auto moves = code_moves(all_gates(n), n);
  const std::uint64_t identity = Gf2Matrix::identity(n).code();
  if (table[identity] != 0) return "identity entry is not 0";

  std::uint64_t reached = 0;
  for (std::uint64_t code = 0; code < table.size(); ++code) {
    const std::uint8_t d = table[code];
    if (d == kUnreached) continue;
    ++reached;
    bool has_parent = d == 0;
    for (const auto& move : moves) {
      const std::uint8_t nd = table[move(code)];
      if (nd == kUnreached) {
        return "entry " + std::to_string(code) + " has an unreached neighbor";
      }
      if (nd > d + 1 || d > nd + 1) {
        return "entry " + std::to_string(code) + " differs from a neighbor by more than one";
      }
      if (nd + 1 == d) has_parent = true;
    }
    if (!has_parent) return "entry " + std::to_string(code) + " has no neighbor one step closer";
    if (d == 0 && code != identity) return "non-identity entry " + std::to_string(code) + " at 0";
  }
  if (reached != gl_order(n)) {
    return "reached " + std::to_string(reached) + " entries, expected |GL(" + std::to_string(n) +
           ",2)| = " + std::to_string(gl_order(n));
  }
  return std::nullopt;
}

// ---- queries ------------------------------------------------------------------

int min_cnot_count(const Gf2Matrix& target, const DistanceTable& table) {
  return table[checked_code(target, table)];
}

int min_cnot_count(const PermSpec& target, const DistanceTable& table) {
  return min_cnot_count(perm_matrix(target), table);
}

// A circuit g1..gk realizes M iff Gk..G1 M^-1 = I. Walking from M^-1 by left
// multiplication therefore emits gates in circuit order.
Circuit extract_one_minimal_circuit(const Gf2Matrix& target, const DistanceTable& table) {
  checked_code(target, table);
  const int n = table.wires();
  const auto gates = all_gates(n);
  const auto moves = code_moves(gates, n);
  std::uint64_t code = target.inverse()->code();
  Circuit circuit(n);
  while (table[code] != 0) {
    const std::uint8_t d = table[code];
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const std::uint64_t next = moves[k](code);
      if (table[next] + 1 == d) {
        circuit.push_back(gates[k]);
        code = next;
        break;
      }
    }
    if (table[code] == d) throw Error("distance table has no descending edge; table is corrupt");
  }
  return circuit;
}

std::vector<Circuit> enumerate_minimal_circuits(const Gf2Matrix& target, const DistanceTable& table,
                                                std::uint64_t limit) {
  checked_code(target, table);
  const int n = table.wires();
  const auto gates = all_gates(n);
  const auto moves = code_moves(gates, n);
  std::vector<Circuit> out;
  std::vector<CnotGate> prefix;
  // Gates are tried in ascending order, so the output comes out sorted.
  enumerate_from(target.inverse()->code(), table, gates, moves, prefix, out, limit);
  return out;
}

// ---- brute force oracle -------------------------------------------------------

namespace {

struct BruteForce {
  int n;
  int length;
  std::array<std::uint32_t, kMaxWires> goal{};
  std::vector<std::pair<int, int>> gates;  // 0-based (control, target)
  std::vector<CnotGate> sequence;
  std::vector<Circuit>* collected = nullptr;
  std::uint64_t count = 0;

  void run(std::array<std::uint32_t, kMaxWires>& rows, int depth) {
    if (depth == length) {
      bool match = true;
      for (int i = 0; i < n && match; ++i) match = rows[i] == goal[i];
      if (match) {
        ++count;
        if (collected) collected->emplace_back(n, sequence);
      }
      return;
    }
    for (const auto& [c, t] : gates) {
      rows[t] ^= rows[c];
      sequence.push_back({c + 1, t + 1});
      run(rows, depth + 1);
      sequence.pop_back();
      rows[t] ^= rows[c];
    }
  }
};

std::uint64_t brute_force(const Gf2Matrix& target, int length, std::uint64_t budget,
                          std::vector<Circuit>* collected) {
  const int n = target.size();
  if (n < 2) throw InvalidInput("brute force needs at least two wires");
  if (length < 0) throw InvalidInput("sequence length must be non-negative");
  const std::uint64_t branching = static_cast<std::uint64_t>(n) * (n - 1);
  std::uint64_t work = 1;
  for (int i = 0; i < length; ++i) {
    if (work > budget / branching) {
      throw BudgetExceeded("(" + std::to_string(branching) + ")^" + std::to_string(length) +
                           " sequences exceeds the budget of " + std::to_string(budget));
    }
    work *= branching;
  }

  BruteForce search;
  search.n = n;
  search.length = length;
  for (int i = 0; i < n; ++i) search.goal[i] = target.row(i);
  // Same ascending pair-major order as CnotGate, spelled out independently.
  for (int lo = 0; lo < n; ++lo) {
    for (int hi = lo + 1; hi < n; ++hi) {
      search.gates.emplace_back(lo, hi);
      search.gates.emplace_back(hi, lo);
    }
  }
  search.collected = collected;
  std::array<std::uint32_t, kMaxWires> rows{};
  for (int i = 0; i < n; ++i) rows[i] = 1u << i;
  search.run(rows, 0);
  return search.count;
}

}  // namespace

std::uint64_t brute_force_count_sequences(const Gf2Matrix& target, int length,
                                          std::uint64_t budget) {
  return brute_force(target, length, budget, nullptr);
}

std::vector<Circuit> brute_force_sequences(const Gf2Matrix& target, int length,
                                           std::uint64_t budget) {
  std::vector<Circuit> out;
  brute_force(target, length, budget, &out);
  return out;
}

// ---- bounds -------------------------------------------------------------------

int lower_bound_rows(const Gf2Matrix& target) {
  int moved = 0;
  for (int i = 0; i < target.size(); ++i) {
    if (target.row(i) != (1u << i)) ++moved;
  }
  return moved;
}

int upper_bound_cycles(const PermSpec& p) {
  int bound = 0;
  for (const auto& cycle : cycle_decompose(p)) {
    if (cycle.size() >= 2) bound += 3 * (static_cast<int>(cycle.size()) - 1);
  }
  return bound;
}

// ---- persistence --------------------------------------------------------------

void save_table(const DistanceTable& table, std::ostream& out) {
  out.write("CPDT", 4);
  out.put(static_cast<char>(kTableFormatVersion));
  out.put(static_cast<char>(table.wires()));
  write_u64_le(out, table.size());
  out.write(reinterpret_cast<const char*>(table.data().data()),
            static_cast<std::streamsize>(table.size()));
  if (!out) throw TableError(TableError::Kind::Io, "failed writing distance table");
}

void save_table(const DistanceTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TableError(TableError::Kind::Io, "cannot open " + path.string() + " for writing");
  save_table(table, out);
  out.close();
  if (!out) throw TableError(TableError::Kind::Io, "failed writing " + path.string());
}

DistanceTable load_table(std::istream& in, std::optional<int> expected_wires) {
  using Kind = TableError::Kind;
  std::array<char, 14> header{};
  in.read(header.data(), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size())) {
    throw TableError(Kind::Corrupt, "distance table header is truncated");
  }
  if (std::string_view(header.data(), 4) != "CPDT") {
    throw TableError(Kind::BadMagic, "not a distance table (bad magic)");
  }
  const auto version = static_cast<std::uint8_t>(header[4]);
  if (version != kTableFormatVersion) {
    throw TableError(Kind::VersionMismatch, "unsupported table version " + std::to_string(version));
  }
  const int n = static_cast<std::uint8_t>(header[5]);
  if (n < kMinTableWires || n > kMaxTableWires) {
    throw TableError(Kind::Corrupt, "table header declares unsupported n = " + std::to_string(n));
  }
  if (expected_wires && *expected_wires != n) {
    throw TableError(Kind::SizeMismatch, "table is for n = " + std::to_string(n) + ", expected n = " +
                                             std::to_string(*expected_wires));
  }
  std::uint64_t length = 0;
  for (int i = 0; i < 8; ++i) {
    length |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(header[6 + i])) << (8 * i);
  }
  if (length != table_entries(n)) {
    throw TableError(Kind::Corrupt, "payload length " + std::to_string(length) +
                                        " does not match 2^(n*n) for n = " + std::to_string(n));
  }
  std::vector<std::uint8_t> dist(length);
  in.read(reinterpret_cast<char*>(dist.data()), static_cast<std::streamsize>(length));
  if (static_cast<std::uint64_t>(in.gcount()) != length) {
    throw TableError(Kind::Corrupt, "distance table payload is truncated");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw TableError(Kind::Corrupt, "trailing bytes after distance table payload");
  }
  return DistanceTable(n, std::move(dist));
}

DistanceTable load_table(const std::filesystem::path& path, std::optional<int> expected_wires) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableError(TableError::Kind::Io, "cannot open " + path.string());
  return load_table(in, expected_wires);
}

}  // namespace cnotperm
