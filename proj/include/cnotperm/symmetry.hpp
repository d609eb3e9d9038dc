#pragma once

#include <string>
#include <vector>

#include "cnotperm/gf2.hpp"

namespace cnotperm {

/// Wire renaming: wire i becomes wire sigma(i).
class WireRelabeling {
 public:
  explicit WireRelabeling(PermSpec sigma) : sigma_(std::move(sigma)) {}

  static WireRelabeling identity(int n) { return WireRelabeling(PermSpec::identity(n)); }
  /// Moves the bottom wire to the top: n -> 1 and i -> i + 1 otherwise.
  static WireRelabeling rotation(int n);
  /// Exchanges wires a and b.
  static WireRelabeling transposition(int n, int a, int b);

  int size() const noexcept { return sigma_.size(); }
  int operator()(int wire) const { return sigma_(wire); }
  const PermSpec& sigma() const noexcept { return sigma_; }

 private:
  PermSpec sigma_;
};

/// Matrix Q with Q * circuit_matrix(c) * Q^-1 == circuit_matrix(relabel_circuit(c, r)).
/// Equal to perm_matrix(r.sigma().inverse()).
Gf2Matrix relabeling_matrix(const WireRelabeling& r);

Circuit relabel_circuit(const Circuit& c, const WireRelabeling& r);
/// sigma . p . sigma^-1 in one-line form.
PermSpec conjugate_perm(const PermSpec& p, const WireRelabeling& r);

struct EquivalenceClass {
  std::vector<Circuit> members;  // sorted, distinct
  Circuit representative;        // members.front()
};

enum class Symmetry {
  Rotation,   // cyclic wire rotations only
  AllWires,   // every relabeling of the n wires
};

EquivalenceClass orbit_under_rotation(const Circuit& c);
EquivalenceClass orbit(const Circuit& c, Symmetry symmetry);

/// Partitions circuits into orbits, sorted by representative. Throws
/// Inconsistent when the input is not closed under the symmetry.
std::vector<EquivalenceClass> group_into_classes(const std::vector<Circuit>& circuits,
                                                 Symmetry symmetry = Symmetry::Rotation);

/// Rotation orbits of the gates themselves. Rotation maps a circuit's first gate
/// within its family, so every member of a rotation class shares one family.
std::vector<std::vector<CnotGate>> gate_families(int n);
/// Index into gate_families(g's wire count).
std::size_t gate_family(CnotGate g, int n);

/// Reference list of 30 class representatives among the minimal three-wire
/// realizations of "231", as letter strings.
const std::vector<std::string>& table1_strings();

struct Table1Entry {
  std::string circuit;
  bool realizes = false;
  int class_index = -1;  // -1 when not a member of any supplied class
};

struct Table1Report {
  std::vector<Table1Entry> entries;
  std::size_t distinct_classes = 0;
  std::size_t classes_total = 0;
  std::size_t circuits_covered = 0;
  std::size_t circuits_total = 0;
  bool full_match = false;
};

/// Checks each listed string against the target and the supplied classes.
Table1Report verify_table1(const std::vector<EquivalenceClass>& classes,
                           const std::vector<std::string>& listed = table1_strings());

}  // namespace cnotperm
