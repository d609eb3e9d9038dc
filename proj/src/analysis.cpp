#include "cnotperm/analysis.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cnotperm/symmetry.hpp"
#include "cnotperm/text.hpp"

namespace cnotperm {

PhiTrace phi_trace(const Circuit& c, BitVec input) {
  PhiTrace trace{c.wires(), input, {}};
  trace.weights.reserve(c.size() + 1);
  BitVec state = input;
  trace.weights.push_back(std::popcount(state));
  for (const auto& g : c.gates()) {
    state ^= ((state >> (g.control - 1)) & 1u) << (g.target - 1);
    trace.weights.push_back(std::popcount(state));
  }
  return trace;
}

PhiReport check_phi_properties(const std::vector<Circuit>& circuits, BitVec input) {
  PhiReport report;
  for (const auto& c : circuits) {
    PhiCircuitCheck check{c, phi_trace(c, input)};
    const auto& w = check.trace.weights;
    const int n = c.wires();
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] < 0 || w[k] > n) check.in_range = false;
      if (k > 0 && std::abs(w[k] - w[k - 1]) > 1) check.steps_bounded = false;
    }
    check.penultimate_is_n_minus_1 = w.size() >= 2 && w[w.size() - 2] == n - 1;
    report.step_violations += !check.steps_bounded;
    report.range_violations += !check.in_range;
    report.penultimate_violations += !check.penultimate_is_n_minus_1;
    report.circuits.push_back(std::move(check));
  }
  return report;
}

ImpossibilityReport impossibility_report(const PermSpec& target, int max_length,
                                         std::uint64_t budget) {
  if (max_length < 0) throw InvalidInput("max length must be non-negative");
  const Gf2Matrix goal = perm_matrix(target);
  ImpossibilityReport report{target, {}, std::nullopt};
  for (int length = 0; length <= max_length; ++length) {
    const std::uint64_t count = brute_force_count_sequences(goal, length, budget);
    report.counts.push_back(count);
    if (count > 0 && !report.smallest_length) report.smallest_length = length;
  }
  return report;
}

// ---- verification suite -------------------------------------------------------

std::filesystem::path table_file_name(int n) { return "cpdt-n" + std::to_string(n) + ".bin"; }

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "fail";
}

bool SuiteReport::passed() const {
  return integrity_failures.empty() &&
         std::none_of(claims.begin(), claims.end(),
                      [](const auto& c) { return c.status == ClaimStatus::Fail; });
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string join_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<std::string> parts;
  for (auto c : counts) parts.push_back(std::to_string(c));
  return join(parts, ",");
}

class TableSource {
 public:
  TableSource(const SuiteOptions& options, SuiteReport& report) : options_(options), report_(report) {
    for (int n = kMinTableWires; n <= kMaxTableWires; ++n) {
      if (n == 5 && options.skip_n5) continue;
      tables_.emplace(n, load(n));
    }
  }

  const DistanceTable* get(int n) const {
    auto it = tables_.find(n);
    return it == tables_.end() || !it->second ? nullptr : &*it->second;
  }

 private:
  std::optional<DistanceTable> load(int n) {
    if (options_.cache_dir) {
      const auto path = *options_.cache_dir / table_file_name(n);
      if (std::filesystem::exists(path)) {
        std::optional<DistanceTable> table;
        try {
          table = load_table(path, n);
        } catch (const TableError& e) {
          if (e.kind() == TableError::Kind::Io) throw;
          report_.integrity_failures.push_back(path.string() + ": " + e.what());
          return std::nullopt;
        }
        if (auto problem = check_table_integrity(*table)) {
          report_.integrity_failures.push_back(path.string() + ": " + *problem);
          return std::nullopt;
        }
        return table;
      }
    }
    return build_distance_table(n);
  }

  const SuiteOptions& options_;
  SuiteReport& report_;
  std::map<int, std::optional<DistanceTable>> tables_;
};

struct Claim {
  std::string id;
  std::string description;
  std::string expected;
  std::vector<int> needs_tables;
  // Returns the computed value; the claim passes when it equals `expected`.
  std::function<std::string(const TableSource&)> compute;
};

PermSpec full_cycle(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
  return PermSpec(std::move(images));
}

std::vector<Claim> claims() {
  const PermSpec swap = parse_perm("21");
  const PermSpec three = parse_perm("231");

  std::vector<Claim> out;
  out.push_back({"swap-cost", "SWAP on two wires needs exactly 3 CNOTs", "3", {2},
                 [=](const TableSource& t) { return std::to_string(min_cnot_count(swap, *t.get(2))); }});
  out.push_back({"swap-circuits", "number of minimal SWAP circuits", "2", {2}, [=](const TableSource& t) {
                   return std::to_string(enumerate_minimal_circuits(perm_matrix(swap), *t.get(2)).size());
                 }});
  out.push_back({"three-cycle-necessity",
                 "brute-force realizations of 231 with 0..5 gates", "0,0,0,0,0,0", {},
                 [=](const TableSource&) { return join_counts(impossibility_report(three, 5).counts); }});
  out.push_back({"three-cycle-cost", "minimal CNOT count for 231", "6", {3},
                 [=](const TableSource& t) { return std::to_string(min_cnot_count(three, *t.get(3))); }});
  out.push_back({"three-cycle-census",
                 "minimal circuits for 231 (enumerator / brute force / sets identical)", "90/90/yes", {3},
                 [=](const TableSource& t) {
                   const auto enumerated = enumerate_minimal_circuits(perm_matrix(three), *t.get(3));
                   const auto brute = brute_force_sequences(perm_matrix(three), 6);
                   return std::to_string(enumerated.size()) + "/" + std::to_string(brute.size()) + "/" +
                          (enumerated == brute ? "yes" : "no");
                 }});
  out.push_back({"three-cycle-classes", "rotation classes of the minimal 231 circuits (count x size)",
                 "30x3", {3}, [=](const TableSource& t) {
                   const auto classes =
                       group_into_classes(enumerate_minimal_circuits(perm_matrix(three), *t.get(3)));
                   std::size_t common = classes.empty() ? 0 : classes.front().members.size();
                   for (const auto& c : classes) {
                     if (c.members.size() != common) common = 0;
                   }
                   return std::to_string(classes.size()) + "x" +
                          (common ? std::to_string(common) : std::string("mixed"));
                 }});
  out.push_back({"three-cycle-table", "30 listed circuits realize 231 and hit 30 distinct classes covering 90",
                 "30/30 classes, 90/90 circuits", {3}, [=](const TableSource& t) {
                   const auto classes =
                       group_into_classes(enumerate_minimal_circuits(perm_matrix(three), *t.get(3)));
                   const auto report = verify_table1(classes);
                   std::size_t realizing = std::count_if(report.entries.begin(), report.entries.end(),
                                                         [](const auto& e) { return e.realizes; });
                   std::string text = std::to_string(report.distinct_classes) + "/" +
                                      std::to_string(report.classes_total) + " classes, " +
                                      std::to_string(report.circuits_covered) + "/" +
                                      std::to_string(report.circuits_total) + " circuits";
                   if (realizing != report.entries.size()) text += ", non-realizing listed strings";
                   return text;
                 }});
  out.push_back({"three-cycle-first-gate-split",
                 "classes whose circuits start in {A,D,E} / {B,C,F}", "15/15", {3}, [=](const TableSource& t) {
                   const auto classes =
                       group_into_classes(enumerate_minimal_circuits(perm_matrix(three), *t.get(3)));
                   std::size_t ade = 0;
                   std::size_t bcf = 0;
                   for (const auto& c : classes) {
                     const char first = gate_letter(c.representative[0]);
                     if (first == 'A' || first == 'D' || first == 'E') ++ade;
                     if (first == 'B' || first == 'C' || first == 'F') ++bcf;
                   }
                   return std::to_string(ade) + "/" + std::to_string(bcf);
                 }});
  out.push_back({"worked-example", "AEFDCB realizes 231; its rotations", "yes EDCABF DABEFC", {},
                 [=](const TableSource&) {
                   const Circuit c = parse_circuit("AEFDCB", 3);
                   const auto rot = WireRelabeling::rotation(3);
                   const Circuit r1 = relabel_circuit(c, rot);
                   const Circuit r2 = relabel_circuit(r1, rot);
                   return std::string(circuit_matrix(c) == perm_matrix(three) ? "yes" : "no") + " " +
                          format_circuit(r1) + " " + format_circuit(r2);
                 }});
  out.push_back({"phi-minimal-three-cycle",
                 "weight trace properties on all minimal 231 circuits from input 111 (violations)",
                 "0/0/0", {3}, [=](const TableSource& t) {
                   const auto report = check_phi_properties(
                       enumerate_minimal_circuits(perm_matrix(three), *t.get(3)), parse_bits("111"));
                   return std::to_string(report.step_violations) + "/" +
                          std::to_string(report.range_violations) + "/" +
                          std::to_string(report.penultimate_violations);
                 }});
  out.push_back({"four-cycle-cost", "minimal CNOT count for 2341", "9", {4}, [](const TableSource& t) {
                   return std::to_string(min_cnot_count(parse_perm("2341"), *t.get(4)));
                 }});
  out.push_back({"four-cycle-relabelings", "minimal counts of 3142 4123 4312 3421 2413", "9 9 9 9 9", {4},
                 [](const TableSource& t) {
                   std::vector<std::string> parts;
                   for (const char* p : {"3142", "4123", "4312", "3421", "2413"}) {
                     parts.push_back(std::to_string(min_cnot_count(parse_perm(p), *t.get(4))));
                   }
                   return join(parts);
                 }});
  out.push_back({"four-wire-reducible", "largest minimal count over reducible permutations of 4 wires <= 6",
                 "yes", {4}, [](const TableSource& t) {
                   std::vector<int> images{1, 2, 3, 4};
                   int worst = 0;
                   do {
                     const PermSpec p(images);
                     if (is_reducible(p)) worst = std::max(worst, min_cnot_count(p, *t.get(4)));
                   } while (std::next_permutation(images.begin(), images.end()));
                   return std::string(worst <= 6 ? "yes" : "no (" + std::to_string(worst) + ")");
                 }});
  out.push_back({"five-cycle-cost", "minimal CNOT count for 23451", "12", {5}, [](const TableSource& t) {
                   return std::to_string(min_cnot_count(parse_perm("23451"), *t.get(5)));
                 }});
  for (int n = 2; n <= 5; ++n) {
    out.push_back({"cycle-bound-n" + std::to_string(n),
                   "full cycle on " + std::to_string(n) + " wires costs exactly 3(n-1)",
                   std::to_string(3 * (n - 1)), {n}, [n](const TableSource& t) {
                     const PermSpec p = full_cycle(n);
                     const int cost = min_cnot_count(p, *t.get(n));
                     std::string text = std::to_string(cost);
                     if (cost > upper_bound_cycles(p)) text += " (exceeds cycle bound)";
                     return text;
                   }});
  }
  return out;
}

}  // namespace

SuiteReport paper_verification_suite(const SuiteOptions& options) {
  SuiteReport report;
  const TableSource tables(options, report);
  for (const auto& claim : claims()) {
    ClaimResult result{claim.id, claim.description, claim.expected, "", ClaimStatus::Fail};
    bool skipped = false;
    bool missing = false;
    for (int n : claim.needs_tables) {
      if (n == 5 && options.skip_n5) {
        skipped = true;
      } else if (!tables.get(n)) {
        missing = true;
      }
    }
    if (skipped) {
      result.status = ClaimStatus::Skipped;
      result.computed = "skipped (n = 5)";
    } else if (missing) {
      result.computed = "table failed integrity check";
    } else {
      try {
        result.computed = claim.compute(tables);
        result.status = result.computed == claim.expected ? ClaimStatus::Pass : ClaimStatus::Fail;
      } catch (const Error& e) {
        result.computed = std::string("error: ") + e.what();
      }
    }
    report.claims.push_back(std::move(result));
  }
  return report;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& failure : report.integrity_failures) out << "INTEGRITY FAIL  " << failure << '\n';
  for (const auto& c : report.claims) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    out << status << std::string(9 - std::min<std::size_t>(status.size(), 8), ' ') << c.id << ": "
        << c.description << " | expected " << c.expected << " | computed " << c.computed << '\n';
  }
  out << (report.passed() ? "all claims pass" : "verification FAILED") << '\n';
  return out.str();
}

std::string to_json(const SuiteReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", to_string(c.status)}});
  }
  nlohmann::json doc = {{"integrity_failures", report.integrity_failures},
                        {"claims", claims},
                        {"passed", report.passed()}};
  return doc.dump(2);
}

}  // namespace cnotperm
