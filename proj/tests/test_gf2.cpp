#include <doctest.h>

#include <random>

#include "cnotperm/gf2.hpp"
#include "cnotperm/text.hpp"
#include "oracle.hpp"

using namespace cnotperm;

namespace {

Gf2Matrix rows(int n, std::vector<std::uint32_t> r) { return Gf2Matrix::from_rows(n, r); }

}  // namespace

TEST_CASE("gate_matrix is identity plus E(target, control)") {
  CHECK(gate_matrix({1, 2}, 2) == rows(2, {0b01, 0b11}));

  const Gf2Matrix m = gate_matrix({3, 1}, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.get(i, j) == (i == j || (i == 0 && j == 2)));

  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_gates(n)) CHECK(gate_matrix(g, n) * gate_matrix(g, n) == Gf2Matrix::identity(n));
}

TEST_CASE("gate validation") {
  CHECK_THROWS_AS(gate_matrix({1, 1}, 3), InvalidInput);
  CHECK_THROWS_AS(gate_matrix({0, 1}, 3), InvalidInput);
  CHECK_THROWS_AS(gate_matrix({1, 4}, 3), InvalidInput);
  CHECK_THROWS_AS(Circuit(2, {{1, 3}}), InvalidInput);
  CHECK(all_gates(4).size() == 12);
}

TEST_CASE("apply_gate_left changes exactly the target row") {
  const Gf2Matrix a = apply_gate_left(Gf2Matrix::identity(3), {1, 2});
  CHECK(a == rows(3, {0b001, 0b011, 0b100}));
  CHECK(apply_gate_left(a, {1, 2}) == Gf2Matrix::identity(3));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const Gf2Matrix m = circuit_matrix(testgen::random_circuit(rng, n, 10));
    for (const auto& g : all_gates(n)) {
      const Gf2Matrix out = apply_gate_left(m, g);
      CHECK(out == gate_matrix(g, n) * m);
      int changed = 0;
      for (int i = 0; i < n; ++i) changed += out.row(i) != m.row(i);
      CHECK(changed == 1);
      CHECK(out.row(g.target - 1) != m.row(g.target - 1));
    }
  }
}

TEST_CASE("circuit_matrix on the worked examples") {
  // B then A then B on the identity, gate by gate:
  //   B: row1 ^= row2 -> [11, 01]   A: row2 ^= row1 -> [11, 10]   B: row1 ^= row2 -> [01, 10]
  const Gf2Matrix swap = rows(2, {0b10, 0b01});
  CHECK(circuit_matrix(parse_circuit("2>1 1>2 2>1", 2)) == swap);
  CHECK(circuit_matrix(parse_circuit("1>2 2>1 1>2", 2)) == swap);
  CHECK(circuit_matrix(parse_circuit("AEFDCB", 3)) == perm_matrix(parse_perm("231")));
  CHECK(circuit_matrix(Circuit(4)) == Gf2Matrix::identity(4));
}

TEST_CASE("circuit_matrix matches the naive oracle and is a homomorphism") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const Circuit a = testgen::random_circuit(rng, n, 8);
    const Circuit b = testgen::random_circuit(rng, n, 8);
    std::vector<std::pair<int, int>> seq;
    for (const auto& g : a.gates()) seq.emplace_back(g.control, g.target);
    CHECK(oracle::from(circuit_matrix(a)) == oracle::circuit(seq, n));
    CHECK(circuit_matrix(a.then(b)) == circuit_matrix(b) * circuit_matrix(a));
  }
}

TEST_CASE("perm_matrix") {
  CHECK(perm_matrix(parse_perm("231")) == rows(3, {0b010, 0b100, 0b001}));
  CHECK(perm_matrix(parse_perm("1234")) == Gf2Matrix::identity(4));
  CHECK(perm_matrix(parse_perm("21")) == rows(2, {0b10, 0b01}));
  CHECK_THROWS_AS(PermSpec({1, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(PermSpec({1, 4, 2}), InvalidInput);

  // y_i = x_{s[i]}: wire i of the output carries input wire s[i].
  const PermSpec p = parse_perm("3142");
  for (BitVec x = 0; x < 16; ++x) {
    const BitVec y = perm_matrix(p).apply(x);
    for (int i = 1; i <= 4; ++i) CHECK(((y >> (i - 1)) & 1u) == ((x >> (p(i) - 1)) & 1u));
  }

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const PermSpec q = testgen::random_perm(rng, 1 + trial % 7);
    const auto inv = perm_matrix(q).inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == perm_matrix(q.inverse()));
  }
}

TEST_CASE("apply_circuit_to_state") {
  const Circuit c = parse_circuit("AEFDCB", 3);
  CHECK(apply_circuit_to_state(c, parse_bits("111")) == parse_bits("111"));
  // Hand simulation: (1,0,0) -A-> (1,1,0) -E-> (1,1,1) -F-> (1,0,1) -D-> (0,0,1) -C-> (0,0,1) -B-> (0,0,1)
  CHECK(apply_circuit_to_state(c, parse_bits("100")) == parse_bits("001"));
  for (BitVec x = 0; x < 8; ++x) CHECK(apply_circuit_to_state(Circuit(3), x) == x);
}

TEST_CASE("state and matrix semantics agree on every basis input") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 3;
    const Circuit c = testgen::random_circuit(rng, n, 12);
    const Gf2Matrix m = circuit_matrix(c);
    for (BitVec x = 0; x < (1u << n); ++x) CHECK(apply_circuit_to_state(c, x) == m.apply(x));
  }
}

TEST_CASE("matrix codes, rank and inverse") {
  const Gf2Matrix m = perm_matrix(parse_perm("231"));
  // rows e2, e3, e1 -> bits 1, 5, 6
  CHECK(m.code() == ((1u << 1) | (1u << 5) | (1u << 6)));
  CHECK(Gf2Matrix::from_code(3, m.code()) == m);
  CHECK(Gf2Matrix::identity(5).code() == 0b1000001000001000001000001u);
  CHECK_THROWS_AS(Gf2Matrix::from_code(2, 1u << 4), InvalidInput);
  CHECK_FALSE(rows(2, {0b11, 0b11}).is_invertible());
  CHECK_FALSE(rows(2, {0b11, 0b11}).inverse().has_value());

  int invertible = 0;
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Gf2Matrix a = Gf2Matrix::from_code(3, code);
    if (auto inv = a.inverse()) {
      ++invertible;
      CHECK(a * *inv == Gf2Matrix::identity(3));
      CHECK(a.rank() == 3);
    } else {
      CHECK(a.rank() < 3);
    }
  }
  CHECK(invertible == 168);
  CHECK(gl_order(3) == 168);
  CHECK(gl_order(4) == 20160);
  CHECK(gl_order(5) == 9999360);
}

TEST_CASE("cycle_decompose") {
  CHECK(cycle_decompose(parse_perm("2341")) == std::vector<Cycle>{{1, 2, 3, 4}});
  CHECK(cycle_decompose(parse_perm("2143")) == std::vector<Cycle>{{1, 2}, {3, 4}});
  CHECK(cycle_decompose(parse_perm("1234")) == std::vector<Cycle>{{1}, {2}, {3}, {4}});
  CHECK(cycle_decompose(parse_perm("1342")) == std::vector<Cycle>{{1}, {2, 3, 4}});

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const PermSpec p = testgen::random_perm(rng, 1 + trial % 9);
    const auto cycles = cycle_decompose(p);
    CHECK(compose_cycles(p.size(), cycles) == p);
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      CHECK(cycles[k].front() == *std::min_element(cycles[k].begin(), cycles[k].end()));
      if (k > 0) CHECK(cycles[k - 1].front() < cycles[k].front());
    }
  }
}

TEST_CASE("is_reducible") {
  CHECK_FALSE(is_reducible(parse_perm("2341")));
  CHECK(is_reducible(parse_perm("2143")));
  CHECK(is_reducible(parse_perm("1342")));
  CHECK_FALSE(is_reducible(parse_perm("21")));
  CHECK(is_reducible(parse_perm("12")));
  CHECK_FALSE(is_reducible(parse_perm("1")));

  // Exactly six irreducible elements on four wires: (n-1)! full cycles.
  std::vector<int> images{1, 2, 3, 4};
  std::vector<std::string> irreducible;
  do {
    const PermSpec p(images);
    if (!is_reducible(p)) irreducible.push_back(format_perm(p));
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(irreducible == std::vector<std::string>{"2341", "2413", "3142", "3421", "4123", "4312"});
}
