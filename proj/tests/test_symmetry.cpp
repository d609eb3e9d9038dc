#include <doctest.h>

#include <random>

#include "cnotperm/search.hpp"
#include "cnotperm/symmetry.hpp"
#include "cnotperm/text.hpp"
#include "oracle.hpp"
#include "tables.hpp"

using namespace cnotperm;

namespace {

std::string rotate(const std::string& letters) {
  return format_circuit(relabel_circuit(parse_circuit(letters, 3), WireRelabeling::rotation(3)));
}

std::vector<Circuit> minimal(const char* perm) {
  const PermSpec p = parse_perm(perm);
  return enumerate_minimal_circuits(perm_matrix(p), testtables::get(p.size()));
}

}  // namespace

TEST_CASE("rotation moves the bottom wire to the top") {
  CHECK(WireRelabeling::rotation(3).sigma() == parse_perm("231"));
  CHECK(WireRelabeling::rotation(5).sigma() == parse_perm("23451"));
  CHECK(rotate("A") == "E");
  CHECK(rotate("E") == "D");
  CHECK(rotate("D") == "A");
  CHECK(rotate("AEFDCB") == "EDCABF");
  CHECK(rotate("EDCABF") == "DABEFC");
  CHECK(rotate("DABEFC") == "AEFDCB");

  std::mt19937 rng(2);
  for (int n = 2; n <= 6; ++n) {
    const Circuit c = testgen::random_circuit(rng, n, 10);
    Circuit r = c;
    for (int k = 0; k < n; ++k) {
      r = relabel_circuit(r, WireRelabeling::rotation(n));
      CHECK(r.size() == c.size());
    }
    CHECK(r == c);
  }
}

TEST_CASE("conjugate_perm") {
  CHECK(format_perm(conjugate_perm(parse_perm("2341"), WireRelabeling::transposition(4, 1, 2))) == "3142");
  CHECK(format_perm(conjugate_perm(parse_perm("2341"), WireRelabeling::transposition(4, 1, 3))) == "4123");
  CHECK(format_perm(conjugate_perm(parse_perm("2341"), WireRelabeling::transposition(4, 1, 4))) == "4312");
  CHECK(format_perm(conjugate_perm(parse_perm("2341"), WireRelabeling::transposition(4, 2, 3))) == "3421");
  CHECK(format_perm(conjugate_perm(parse_perm("2341"), WireRelabeling::transposition(4, 3, 4))) == "2413");
  // The (2 4) swap lands on 4123 again, repeating the (1 3) result.
  CHECK(format_perm(conjugate_perm(parse_perm("2341"), WireRelabeling::transposition(4, 2, 4))) == "4123");
  CHECK(conjugate_perm(parse_perm("2341"), WireRelabeling::identity(4)) == parse_perm("2341"));
  CHECK(conjugate_perm(parse_perm("231"), WireRelabeling::rotation(3)) == parse_perm("231"));
}

TEST_CASE("relabeling is equivariant with matrix conjugation") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 4;
    const Circuit c = testgen::random_circuit(rng, n, 12);
    const WireRelabeling r(testgen::random_perm(rng, n));
    const Gf2Matrix q = relabeling_matrix(r);
    CHECK(circuit_matrix(relabel_circuit(c, r)) == q * circuit_matrix(c) * *q.inverse());
  }
}

TEST_CASE("relabeling a realization of p realizes the conjugate of p") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const PermSpec p = testgen::random_perm(rng, n);
    const WireRelabeling r(testgen::random_perm(rng, n));
    const Circuit c = extract_one_minimal_circuit(perm_matrix(p), testtables::get(n));
    CHECK(circuit_matrix(relabel_circuit(c, r)) == perm_matrix(conjugate_perm(p, r)));
  }
}

TEST_CASE("distance is invariant under relabeling (exhaustive n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    const auto& table = testtables::get(n);
    std::vector<std::pair<Gf2Matrix, Gf2Matrix>> conjugators;
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    do {
      const Gf2Matrix q = perm_matrix(PermSpec(images));
      conjugators.emplace_back(q, *q.inverse());
    } while (std::next_permutation(images.begin(), images.end()));

    std::size_t mismatches = 0;
    for (std::uint64_t code = 0; code < table.size(); ++code) {
      if (table[code] == kUnreached) continue;
      const Gf2Matrix m = Gf2Matrix::from_code(n, code);
      for (const auto& [q, qi] : conjugators) mismatches += table[(q * m * qi).code()] != table[code];
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("orbit_under_rotation") {
  const auto cls = orbit_under_rotation(parse_circuit("AEFDCB", 3));
  REQUIRE(cls.members.size() == 3);
  CHECK(format_circuit(cls.representative) == "AEFDCB");
  std::vector<std::string> names;
  for (const auto& m : cls.members) names.push_back(format_circuit(m));
  CHECK(names == std::vector<std::string>{"AEFDCB", "DABEFC", "EDCABF"});

  CHECK(orbit_under_rotation(Circuit(4)).members.size() == 1);
  // A gate is moved by every nontrivial rotation, so nonempty orbits are full.
  CHECK(orbit_under_rotation(parse_circuit("1>2 3>4", 4)).members.size() == 4);

  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const auto orbit = orbit_under_rotation(testgen::random_circuit(rng, n, 6));
    CHECK(orbit.members.size() == (orbit.representative.empty() ? 1u : static_cast<std::size_t>(n)));
    CHECK(orbit.representative == orbit.members.front());
  }
}

TEST_CASE("group_into_classes on the 90 minimal three-wire circuits") {
  const auto circuits = minimal("231");
  const auto classes = group_into_classes(circuits);
  CHECK(classes.size() == 30);
  std::size_t total = 0;
  std::size_t ade = 0;
  std::size_t bcf = 0;
  for (const auto& cls : classes) {
    CHECK(cls.members.size() == 3);
    total += cls.members.size();
    const char first = format_circuit(cls.representative)[0];
    // Every member of a rotation class starts in the same gate family.
    for (const auto& m : cls.members) {
      CHECK(gate_family(m[0], 3) == gate_family(cls.representative[0], 3));
    }
    if (first == 'A' || first == 'D' || first == 'E') ++ade;
    if (first == 'B' || first == 'C' || first == 'F') ++bcf;
  }
  CHECK(total == 90);
  CHECK(ade == 15);
  CHECK(bcf == 15);
  CHECK(std::is_sorted(classes.begin(), classes.end(),
                       [](const auto& a, const auto& b) { return a.representative < b.representative; }));

  const auto families = gate_families(3);
  REQUIRE(families.size() == 2);
  CHECK(format_circuit(Circuit(3, families[0])) == "ADE");
  CHECK(format_circuit(Circuit(3, families[1])) == "BCF");
}

TEST_CASE("group_into_classes edge cases") {
  const auto single = group_into_classes({Circuit(3)});
  REQUIRE(single.size() == 1);
  CHECK(single.front().representative.empty());
  CHECK(group_into_classes({}).empty());

  const auto swaps = group_into_classes(minimal("21"));
  REQUIRE(swaps.size() == 1);
  CHECK(swaps.front().members.size() == 2);

  auto circuits = minimal("231");
  circuits.erase(circuits.begin() + 5);
  CHECK_THROWS_AS(group_into_classes(circuits), Inconsistent);
  CHECK_THROWS_AS(group_into_classes({parse_circuit("AB", 3)}), Inconsistent);
}

TEST_CASE("all-wire symmetry merges rotation classes") {
  // 231 is not fixed by a transposition (its conjugate is 312), so the
  // union of both targets' minimal circuits is what closes under S_3.
  auto circuits = minimal("231");
  const auto other = minimal("312");
  circuits.insert(circuits.end(), other.begin(), other.end());
  const auto classes = group_into_classes(circuits, Symmetry::AllWires);
  std::size_t total = 0;
  for (const auto& cls : classes) {
    total += cls.members.size();
    // No nontrivial relabeling of three wires fixes a gate.
    CHECK(cls.members.size() == 6);
  }
  CHECK(total == 180);
  CHECK(classes.size() == 30);
  CHECK_THROWS_AS(group_into_classes(minimal("231"), Symmetry::AllWires), Inconsistent);
}

TEST_CASE("verify_table1") {
  const auto classes = group_into_classes(minimal("231"));
  const auto report = verify_table1(classes);
  CHECK(report.full_match);
  CHECK(report.distinct_classes == 30);
  CHECK(report.circuits_covered == 90);
  for (const auto& e : report.entries) CHECK_MESSAGE(e.realizes, e.circuit);

  // With the letter gate order the representatives are exactly the listed strings.
  std::vector<std::string> reps;
  for (const auto& cls : classes) reps.push_back(format_circuit(cls.representative));
  CHECK(reps == table1_strings());

  auto corrupted = table1_strings();
  corrupted[0] = "AAAAAA";
  const auto bad = verify_table1(classes, corrupted);
  CHECK_FALSE(bad.full_match);
  CHECK_FALSE(bad.entries[0].realizes);
  CHECK(bad.entries[0].class_index == -1);
  CHECK(bad.distinct_classes == 29);

  auto duplicated = table1_strings();
  duplicated[1] = "EDCABF";  // same class as AEFDCB
  CHECK_FALSE(verify_table1(classes, duplicated).full_match);
}
