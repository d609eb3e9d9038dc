#include "cnotperm/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cnotperm {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxWires) {
    throw InvalidInput("wire count " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxWires));
  }
}

}  // namespace

void CnotGate::validate(int n) const {
  if (control < 1 || control > n || target < 1 || target > n) {
    throw InvalidInput("CNOT " + std::to_string(control) + ">" + std::to_string(target) +
                       " has a wire outside 1.." + std::to_string(n));
  }
  if (control == target) {
    throw InvalidInput("CNOT control and target coincide on wire " + std::to_string(control));
  }
}

std::vector<CnotGate> all_gates(int n) {
  std::vector<CnotGate> gates;
  for (int c = 1; c <= n; ++c) {
    for (int t = 1; t <= n; ++t) {
      if (c != t) gates.push_back({c, t});
    }
  }
  std::sort(gates.begin(), gates.end());
  return gates;
}

// ---- Gf2Matrix ----------------------------------------------------------------

Gf2Matrix::Gf2Matrix(int n) : n_(n) { check_dimension(n); }

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = 1u << i;
  return m;
}

Gf2Matrix Gf2Matrix::from_code(int n, std::uint64_t code) {
  if (n < 1 || n > 8) throw InvalidInput("matrix codes require 1 <= n <= 8");
  if (n < 8 && (code >> (n * n)) != 0) {
    throw InvalidInput("matrix code has bits beyond n*n");
  }
  Gf2Matrix m(n);
  const std::uint64_t mask = (1u << n) - 1u;
  for (int i = 0; i < n; ++i) m.rows_[i] = static_cast<std::uint32_t>((code >> (i * n)) & mask);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(int n, std::span<const std::uint32_t> rows) {
  if (static_cast<int>(rows.size()) != n) throw InvalidInput("row count does not match n");
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~m.row_mask()) throw InvalidInput("row has bits beyond column n");
    m.rows_[i] = rows[i];
  }
  return m;
}

void Gf2Matrix::set(int i, int j, bool value) {
  if (value) {
    rows_[i] |= 1u << j;
  } else {
    rows_[i] &= ~(1u << j);
  }
}

std::uint64_t Gf2Matrix::code() const {
  if (n_ > 8) throw InvalidInput("matrix codes require n <= 8");
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i) code |= static_cast<std::uint64_t>(rows_[i]) << (i * n_);
  return code;
}

BitVec Gf2Matrix::apply(BitVec x) const {
  BitVec y = 0;
  for (int i = 0; i < n_; ++i) {
    if (std::popcount(rows_[i] & x) & 1) y |= 1u << i;
  }
  return y;
}

int Gf2Matrix::rank() const {
  auto rows = rows_;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r) {
      if ((rows[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n_; ++r) {
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
  // Gauss-Jordan on [A | I].
  auto left = rows_;
  Gf2Matrix right = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if ((left[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(left[col], left[pivot]);
    std::swap(right.rows_[col], right.rows_[pivot]);
    for (int r = 0; r < n_; ++r) {
      if (r != col && ((left[r] >> col) & 1u)) {
        left[r] ^= left[col];
        right.rows_[r] ^= right.rows_[col];
      }
    }
  }
  return right;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.n_ != b.n_) throw InvalidInput("matrix dimensions differ");
  Gf2Matrix out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    std::uint32_t acc = 0;
    for (std::uint32_t bits = a.rows_[i]; bits; bits &= bits - 1) {
      acc ^= b.rows_[std::countr_zero(bits)];
    }
    out.rows_[i] = acc;
  }
  return out;
}

// ---- Circuit ------------------------------------------------------------------

Circuit::Circuit(int n, std::vector<CnotGate> gates) : n_(n), gates_(std::move(gates)) {
  check_dimension(n);
  for (const auto& g : gates_) g.validate(n_);
}

void Circuit::push_back(CnotGate g) {
  g.validate(n_);
  gates_.push_back(g);
}

Circuit Circuit::then(const Circuit& tail) const {
  if (tail.n_ != n_) throw InvalidInput("cannot concatenate circuits on different wire counts");
  Circuit out = *this;
  out.gates_.insert(out.gates_.end(), tail.gates_.begin(), tail.gates_.end());
  return out;
}

std::strong_ordering Circuit::operator<=>(const Circuit& other) const {
  if (auto cmp = n_ <=> other.n_; cmp != 0) return cmp;
  return std::lexicographical_compare_three_way(gates_.begin(), gates_.end(),
                                                other.gates_.begin(), other.gates_.end());
}

// ---- PermSpec -----------------------------------------------------------------

PermSpec::PermSpec(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw InvalidInput("permutation must have at least one element");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw InvalidInput("permutation image " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
    }
    if (seen[v]) throw InvalidInput("permutation repeats image " + std::to_string(v));
    seen[v] = true;
  }
}

PermSpec PermSpec::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return PermSpec(std::move(images));
}

PermSpec PermSpec::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return PermSpec(std::move(inv));
}

bool PermSpec::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

// ---- operations ---------------------------------------------------------------

Gf2Matrix gate_matrix(CnotGate g, int n) {
  g.validate(n);
  Gf2Matrix m = Gf2Matrix::identity(n);
  m.set(g.target - 1, g.control - 1, true);
  return m;
}

Gf2Matrix apply_gate_left(const Gf2Matrix& m, CnotGate g) {
  g.validate(m.size());
  Gf2Matrix out = m;
  out.set_row(g.target - 1, m.row(g.target - 1) ^ m.row(g.control - 1));
  return out;
}

Gf2Matrix circuit_matrix(const Circuit& c) {
  Gf2Matrix m = Gf2Matrix::identity(c.wires());
  for (const auto& g : c.gates()) m = apply_gate_left(m, g);
  return m;
}

Gf2Matrix perm_matrix(const PermSpec& p) {
  Gf2Matrix m(p.size());
  for (int i = 1; i <= p.size(); ++i) m.set(i - 1, p(i) - 1, true);
  return m;
}

BitVec apply_circuit_to_state(const Circuit& c, BitVec x) {
  for (const auto& g : c.gates()) {
    x ^= ((x >> (g.control - 1)) & 1u) << (g.target - 1);
  }
  return x;
}

std::vector<Cycle> cycle_decompose(const PermSpec& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> visited(p.size() + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    for (int i = start; !visited[i]; i = p(i)) {
      visited[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

PermSpec compose_cycles(int n, const std::vector<Cycle>& cycles) {
  std::vector<int> images(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > n) throw InvalidInput("cycle element outside 1..n");
      images[from - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return PermSpec(std::move(images));
}

bool is_reducible(const PermSpec& p) {
  return p.size() >= 2 && cycle_decompose(p).size() > 1;
}

std::uint64_t gl_order(int n) {
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return order;
}

}  // namespace cnotperm
