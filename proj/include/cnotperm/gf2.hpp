#pragma once

// Core semantics of CNOT-only circuits: invertible linear maps over GF(2).
//
// Conventions used throughout the library:
//   * wires are 1-based in every public type (CnotGate, PermSpec, WireRelabeling);
//   * CNOT(c, t) acts on a bit-vector x by x_t <- x_t ^ x_c, i.e. the matrix I + E(t, c);
//   * matrices act on column vectors, and a circuit's gates are applied left to right,
//     so the circuit g1 g2 ... gk has matrix Gk * ... * G2 * G1;
//   * a BitVec stores wire i in bit (i - 1).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cnotperm/errors.hpp"

namespace cnotperm {

inline constexpr int kMaxWires = 32;

/// Basis state of n wires; bit (i - 1) holds wire i.
using BitVec = std::uint32_t;

struct CnotGate {
  int control = 1;
  int target = 2;

  /// Throws InvalidInput unless 1 <= control, target <= n and control != target.
  void validate(int n) const;

  bool operator==(const CnotGate&) const = default;

  // Pair-major order: gates on wires {1,2} first, then {1,3}, ..., with the
  // downward gate (control above target) before the upward one. For n = 3 this
  // is exactly A < B < C < D < E < F of the letter aliases.
  std::strong_ordering operator<=>(const CnotGate& other) const {
    auto key = [](const CnotGate& g) {
      int lo = g.control < g.target ? g.control : g.target;
      int hi = g.control < g.target ? g.target : g.control;
      return std::array<int, 3>{lo, hi, g.control > g.target ? 1 : 0};
    };
    return key(*this) <=> key(other);
  }
};

/// All n(n-1) gates on n wires in ascending gate order.
std::vector<CnotGate> all_gates(int n);

class Gf2Matrix {
 public:
  /// Zero matrix of dimension n.
  explicit Gf2Matrix(int n);

  static Gf2Matrix identity(int n);
  /// Bit (i*n + j) of `code` is entry (i, j), 0-based. Requires n <= 8.
  static Gf2Matrix from_code(int n, std::uint64_t code);
  /// Row i given as a bitmask over columns (bit j = column j, 0-based).
  static Gf2Matrix from_rows(int n, std::span<const std::uint32_t> rows);

  int size() const noexcept { return n_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool value);
  std::uint32_t row(int i) const { return rows_[i]; }
  void set_row(int i, std::uint32_t bits) { rows_[i] = bits & row_mask(); }

  /// Packed row-major code; see from_code. Requires n <= 8.
  std::uint64_t code() const;

  BitVec apply(BitVec x) const;
  int rank() const;
  bool is_invertible() const { return rank() == n_; }
  std::optional<Gf2Matrix> inverse() const;

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::uint32_t row_mask() const {
    return n_ == 32 ? 0xffffffffu : ((1u << n_) - 1u);
  }

  int n_;
  std::array<std::uint32_t, kMaxWires> rows_{};
};

class Circuit {
 public:
  explicit Circuit(int n) : Circuit(n, {}) {}
  Circuit(int n, std::vector<CnotGate> gates);

  int wires() const noexcept { return n_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const std::vector<CnotGate>& gates() const noexcept { return gates_; }
  const CnotGate& operator[](std::size_t i) const { return gates_[i]; }

  void push_back(CnotGate g);
  /// This circuit followed by `tail`.
  Circuit then(const Circuit& tail) const;

  bool operator==(const Circuit&) const = default;
  /// Lexicographic over the gate sequence (shorter prefix first).
  std::strong_ordering operator<=>(const Circuit& other) const;

 private:
  int n_;
  std::vector<CnotGate> gates_;
};

/// One-line permutation: output wire i carries input wire images[i-1].
class PermSpec {
 public:
  /// Throws InvalidInput unless `images` is a bijection on {1..n}.
  explicit PermSpec(std::vector<int> images);

  static PermSpec identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  /// 1-based lookup.
  int operator()(int i) const { return images_[i - 1]; }

  PermSpec inverse() const;
  bool is_identity() const;
  bool operator==(const PermSpec&) const = default;

 private:
  std::vector<int> images_;
};

using Cycle = std::vector<int>;

Gf2Matrix gate_matrix(CnotGate g, int n);
/// gate_matrix(g) * m: row target ^= row control.
Gf2Matrix apply_gate_left(const Gf2Matrix& m, CnotGate g);
Gf2Matrix circuit_matrix(const Circuit& c);
Gf2Matrix perm_matrix(const PermSpec& p);
BitVec apply_circuit_to_state(const Circuit& c, BitVec x);

/// Disjoint cycles with fixed points as 1-cycles; each cycle starts at its
/// smallest element and cycles are sorted by first element.
std::vector<Cycle> cycle_decompose(const PermSpec& p);
/// Inverse of cycle_decompose.
PermSpec compose_cycles(int n, const std::vector<Cycle>& cycles);
/// True unless p is a single cycle through all n >= 2 wires.
bool is_reducible(const PermSpec& p);

/// |GL(n,2)| = prod_{i<n} (2^n - 2^i).
std::uint64_t gl_order(int n);

}  // namespace cnotperm
