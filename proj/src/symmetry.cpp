#include "cnotperm/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cnotperm/text.hpp"

namespace cnotperm {

WireRelabeling WireRelabeling::rotation(int n) {
  std::vector<int> images(n);
  for (int i = 1; i < n; ++i) images[i - 1] = i + 1;
  images[n - 1] = 1;
  return WireRelabeling(PermSpec(std::move(images)));
}

WireRelabeling WireRelabeling::transposition(int n, int a, int b) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  if (a < 1 || a > n || b < 1 || b > n) throw InvalidInput("transposition wire outside 1..n");
  std::swap(images[a - 1], images[b - 1]);
  return WireRelabeling(PermSpec(std::move(images)));
}

Gf2Matrix relabeling_matrix(const WireRelabeling& r) { return perm_matrix(r.sigma().inverse()); }

Circuit relabel_circuit(const Circuit& c, const WireRelabeling& r) {
  if (c.wires() != r.size()) throw InvalidInput("relabeling and circuit wire counts differ");
  std::vector<CnotGate> gates;
  gates.reserve(c.size());
  for (const auto& g : c.gates()) gates.push_back({r(g.control), r(g.target)});
  return Circuit(c.wires(), std::move(gates));
}

PermSpec conjugate_perm(const PermSpec& p, const WireRelabeling& r) {
  if (p.size() != r.size()) throw InvalidInput("relabeling and permutation sizes differ");
  const PermSpec inv = r.sigma().inverse();
  std::vector<int> images(p.size());
  for (int i = 1; i <= p.size(); ++i) images[i - 1] = r(p(inv(i)));
  return PermSpec(std::move(images));
}

namespace {

EquivalenceClass make_class(std::set<Circuit> members) {
  std::vector<Circuit> sorted(members.begin(), members.end());
  Circuit rep = sorted.front();
  return {std::move(sorted), std::move(rep)};
}

std::vector<WireRelabeling> group_elements(int n, Symmetry symmetry) {
  std::vector<WireRelabeling> out;
  if (symmetry == Symmetry::Rotation) {
    const auto rot = WireRelabeling::rotation(n);
    auto current = WireRelabeling::identity(n);
    for (int k = 0; k < n; ++k) {
      out.push_back(current);
      std::vector<int> images(n);
      for (int i = 1; i <= n; ++i) images[i - 1] = rot(current(i));
      current = WireRelabeling(PermSpec(std::move(images)));
    }
    return out;
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(PermSpec(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

EquivalenceClass orbit(const Circuit& c, Symmetry symmetry) {
  std::set<Circuit> members;
  for (const auto& r : group_elements(c.wires(), symmetry)) members.insert(relabel_circuit(c, r));
  return make_class(std::move(members));
}

EquivalenceClass orbit_under_rotation(const Circuit& c) { return orbit(c, Symmetry::Rotation); }

std::vector<EquivalenceClass> group_into_classes(const std::vector<Circuit>& circuits,
                                                 Symmetry symmetry) {
  if (circuits.empty()) return {};
  const int n = circuits.front().wires();
  for (const auto& c : circuits) {
    if (c.wires() != n) throw InvalidInput("circuits to group have different wire counts");
  }
  const std::set<Circuit> input(circuits.begin(), circuits.end());
  std::set<Circuit> assigned;
  std::vector<EquivalenceClass> classes;
  for (const auto& c : input) {
    if (assigned.contains(c)) continue;
    EquivalenceClass cls = orbit(c, symmetry);
    for (const auto& member : cls.members) {
      if (!input.contains(member)) {
        throw Inconsistent("input is not closed under the symmetry: " + format_circuit(c) +
                           " maps to missing circuit " + format_circuit(member));
      }
      assigned.insert(member);
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.representative < b.representative;
  });
  return classes;
}

std::vector<std::vector<CnotGate>> gate_families(int n) {
  std::vector<std::vector<CnotGate>> families;
  std::set<CnotGate> seen;
  const auto rot = WireRelabeling::rotation(n);
  for (const auto& g : all_gates(n)) {
    if (seen.contains(g)) continue;
    std::vector<CnotGate> family;
    for (CnotGate h = g; !seen.contains(h); h = {rot(h.control), rot(h.target)}) {
      seen.insert(h);
      family.push_back(h);
    }
    std::sort(family.begin(), family.end());
    families.push_back(std::move(family));
  }
  return families;
}

std::size_t gate_family(CnotGate g, int n) {
  const auto families = gate_families(n);
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (std::find(families[i].begin(), families[i].end(), g) != families[i].end()) return i;
  }
  throw InvalidInput("gate not valid for the wire count");
}

const std::vector<std::string>& table1_strings() {
  static const std::vector<std::string> strings = {
      "ABAEFE", "ABAFEF", "ABEFCE", "ABEFEC", "ABFAEF", "ABFEFC", "ACBAFE", "ACBFAE",
      "AEBFCE", "AEBFEC", "AEDFCB", "AEFDCB", "AEFEDC", "AFEDFC", "AFEFDC", "BABEFE",
      "BABFEF", "BAEBFE", "BAEFED", "BAFEDF", "BAFEFD", "BDABEF", "BDAEBF", "BEFCED",
      "BEFECD", "BFAEDF", "BFAEFD", "BFCEDA", "BFECDA", "BFEFCD",
  };
  return strings;
}

Table1Report verify_table1(const std::vector<EquivalenceClass>& classes,
                           const std::vector<std::string>& listed) {
  const Gf2Matrix goal = perm_matrix(parse_perm("231"));
  Table1Report report;
  report.classes_total = classes.size();
  for (const auto& cls : classes) report.circuits_total += cls.members.size();

  std::set<int> hit;
  for (const auto& text : listed) {
    Table1Entry entry{text};
    try {
      const Circuit c = parse_circuit(text, 3);
      entry.realizes = circuit_matrix(c) == goal;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& members = classes[i].members;
        if (std::binary_search(members.begin(), members.end(), c)) {
          entry.class_index = static_cast<int>(i);
          break;
        }
      }
    } catch (const InvalidInput&) {
      entry.realizes = false;
    }
    if (entry.class_index >= 0) hit.insert(entry.class_index);
    report.entries.push_back(std::move(entry));
  }
  report.distinct_classes = hit.size();
  for (int i : hit) report.circuits_covered += classes[i].members.size();

  const bool all_realize = std::all_of(report.entries.begin(), report.entries.end(),
                                       [](const auto& e) { return e.realizes && e.class_index >= 0; });
  report.full_match = all_realize && report.distinct_classes == listed.size() &&
                      report.distinct_classes == report.classes_total &&
                      report.circuits_covered == report.circuits_total;
  return report;
}

}  // namespace cnotperm
