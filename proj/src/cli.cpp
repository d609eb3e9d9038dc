#include "cnotperm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnotperm/search.hpp"
#include "cnotperm/symmetry.hpp"
#include "cnotperm/text.hpp"

namespace cnotperm {

using nlohmann::json;

std::string render_circuit(const Circuit& c) {
  const int n = c.wires();
  const int label_width = static_cast<int>(std::to_string(n).size()) + 2;
  std::vector<std::string> rows;
  for (int wire = 1; wire <= n; ++wire) {
    std::string label = "q" + std::to_string(wire);
    label.resize(label_width, ' ');
    std::string row = label + "-";
    for (const auto& g : c.gates()) {
      const int lo = std::min(g.control, g.target);
      const int hi = std::max(g.control, g.target);
      if (wire == g.control) {
        row += "-●-";
      } else if (wire == g.target) {
        row += "-⊕-";
      } else if (wire > lo && wire < hi) {
        row += "-|-";
      } else {
        row += "---";
      }
    }
    rows.push_back(row + "-");
    if (wire == n) break;

    std::string gap(label_width + 1, ' ');
    for (const auto& g : c.gates()) {
      const int lo = std::min(g.control, g.target);
      const int hi = std::max(g.control, g.target);
      gap += (wire >= lo && wire < hi) ? " | " : "   ";
    }
    while (!gap.empty() && gap.back() == ' ') gap.pop_back();
    rows.push_back(gap);
  }
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

std::string sparkline(const PhiTrace& trace) {
  static const char* const kBlocks[] = {"▁", "▂", "▃", "▄", "▅", "▆", "▇", "█"};
  std::string out;
  for (int w : trace.weights) {
    const int level = trace.wires == 0 ? 0 : (w * 7 + trace.wires / 2) / trace.wires;
    out += kBlocks[std::clamp(level, 0, 7)];
  }
  return out;
}

namespace {

struct GlobalOptions {
  int wires = 0;  // 0: not given
  std::string format = "text";
  std::filesystem::path cache_dir = ".";
  std::uint64_t budget = kDefaultEnumerationLimit;
  bool skip_n5 = false;
};

class UsageError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

bool json_output(const GlobalOptions& g) { return g.format == "json"; }

DistanceTable obtain_table(int n, const GlobalOptions& g, std::ostream& err) {
  const auto path = g.cache_dir / table_file_name(n);
  if (std::filesystem::exists(path)) return load_table(path, n);
  if (n > 3) err << "note: no cached table at " << path.string() << "; building n = " << n << " in memory\n";
  return build_distance_table(n);
}

void check_wire_option(const GlobalOptions& g, int n, const std::string& what) {
  if (g.wires != 0 && g.wires != n) {
    throw UsageError("--n " + std::to_string(g.wires) + " does not match " + what + " on " +
                     std::to_string(n) + " wires");
  }
}

int infer_wires(std::string_view text) {
  int wires = 0;
  bool letters = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch >= 'A' && ch <= 'F') {
      letters = true;
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      wires = std::max(wires, std::stoi(std::string(text.substr(pos, end - pos))));
      pos = end;
    } else {
      ++pos;
    }
  }
  if (letters) return 3;
  return std::max(wires, 2);
}

Circuit circuit_argument(const std::string& text, const GlobalOptions& g) {
  const int n = g.wires != 0 ? g.wires : infer_wires(text);
  return parse_circuit(text, n);
}

json circuits_json(const std::vector<Circuit>& circuits) {
  json arr = json::array();
  for (const auto& c : circuits) arr.push_back(format_circuit(c));
  return arr;
}

// ---- subcommands --------------------------------------------------------------

int cmd_bfs(const GlobalOptions& g, const std::string& out_path, std::ostream& out) {
  if (g.wires == 0) throw UsageError("bfs requires -n");
  const DistanceTable table = build_distance_table(g.wires);
  const std::filesystem::path path =
      out_path.empty() ? g.cache_dir / table_file_name(g.wires) : std::filesystem::path(out_path);
  save_table(table, path);
  const auto hist = table.histogram();
  if (json_output(g)) {
    out << json{{"n", g.wires},
                {"elements", table.reached()},
                {"max_distance", table.max_distance()},
                {"histogram", hist},
                {"path", path.string()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "n = " << g.wires << ": " << table.reached() << " elements, max distance "
      << int(table.max_distance()) << '\n';
  for (std::size_t d = 0; d < hist.size(); ++d) out << "  " << d << "\t" << hist[d] << '\n';
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_count(const GlobalOptions& g, const std::string& perm_text, std::ostream& out,
              std::ostream& err) {
  const PermSpec p = parse_perm(perm_text);
  const int n = p.size();
  check_wire_option(g, n, "permutation");
  const int lower = lower_bound_rows(perm_matrix(p));
  const int upper = upper_bound_cycles(p);
  const bool reducible = is_reducible(p);
  std::optional<int> exact;
  if (n >= kMinTableWires && n <= kMaxTableWires) {
    exact = min_cnot_count(p, obtain_table(n, g, err));
  } else if (n == 1) {
    exact = 0;
  }
  if (json_output(g)) {
    json doc = {{"perm", format_perm(p)},
                {"n", n},
                {"lower_bound", lower},
                {"upper_bound", upper},
                {"reducible", reducible}};
    doc["min_cnot_count"] = exact ? json(*exact) : json(nullptr);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << format_perm(p) << ": ";
  if (exact) {
    out << *exact << " CNOT" << (*exact == 1 ? "" : "s");
  } else {
    out << "exact count unavailable for n = " << n << " (tables cover n <= " << kMaxTableWires << ")";
  }
  out << ", bounds [" << lower << ", " << upper << "], " << (reducible ? "reducible" : "irreducible")
      << '\n';
  return kExitOk;
}

int cmd_enumerate(const GlobalOptions& g, const std::string& perm_text, std::ostream& out,
                  std::ostream& err) {
  const PermSpec p = parse_perm(perm_text);
  check_wire_option(g, p.size(), "permutation");
  const auto circuits = enumerate_minimal_circuits(perm_matrix(p), obtain_table(p.size(), g, err), g.budget);
  if (json_output(g)) {
    out << json{{"perm", format_perm(p)},
                {"n", p.size()},
                {"length", circuits.front().size()},
                {"count", circuits.size()},
                {"circuits", circuits_json(circuits)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  for (const auto& c : circuits) out << format_circuit(c) << '\n';
  return kExitOk;
}

int cmd_classes(const GlobalOptions& g, const std::string& perm_text, bool check_table1,
                bool all_wires, std::ostream& out, std::ostream& err) {
  const PermSpec p = parse_perm(perm_text);
  check_wire_option(g, p.size(), "permutation");
  if (check_table1 && format_perm(p) != "231") throw UsageError("--check-table1 applies to 231 only");
  const auto circuits = enumerate_minimal_circuits(perm_matrix(p), obtain_table(p.size(), g, err), g.budget);
  const auto classes =
      group_into_classes(circuits, all_wires ? Symmetry::AllWires : Symmetry::Rotation);

  const int n = p.size();
  const auto families = gate_families(n);
  std::vector<std::size_t> per_family(families.size(), 0);
  for (const auto& cls : classes) {
    if (!cls.representative.empty()) ++per_family[gate_family(cls.representative[0], n)];
  }
  auto family_name = [&](std::size_t i) {
    std::string name;
    for (const auto& gate : families[i]) {
      if (!name.empty()) name += ',';
      name += format_circuit(Circuit(n, {gate}));
    }
    return "{" + name + "}";
  };

  std::optional<Table1Report> table1;
  if (check_table1) table1 = verify_table1(classes);

  if (json_output(g)) {
    json arr = json::array();
    for (const auto& cls : classes) {
      arr.push_back({{"representative", format_circuit(cls.representative)},
                     {"size", cls.members.size()},
                     {"members", circuits_json(cls.members)}});
    }
    json fam = json::array();
    if (!all_wires) {
      for (std::size_t i = 0; i < families.size(); ++i) {
        fam.push_back({{"first_gates", family_name(i)}, {"classes", per_family[i]}});
      }
    }
    json doc = {{"perm", format_perm(p)},
                {"symmetry", all_wires ? "all-wires" : "rotation"},
                {"circuits", circuits.size()},
                {"class_count", classes.size()},
                {"classes", arr},
                {"first_gate_families", fam}};
    if (table1) {
      json entries = json::array();
      for (const auto& e : table1->entries) {
        entries.push_back({{"circuit", e.circuit}, {"realizes", e.realizes}, {"class_index", e.class_index}});
      }
      doc["table1"] = {{"full_match", table1->full_match},
                       {"distinct_classes", table1->distinct_classes},
                       {"circuits_covered", table1->circuits_covered},
                       {"entries", entries}};
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& cls : classes) {
      out << format_circuit(cls.representative) << "\tsize " << cls.members.size() << "\t";
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        out << (i ? " " : "") << format_circuit(cls.members[i]);
      }
      out << '\n';
    }
    out << classes.size() << " classes over " << circuits.size() << " circuits ("
        << (all_wires ? "all wire relabelings" : "rotation") << ")\n";
    if (!all_wires) {
      for (std::size_t i = 0; i < families.size(); ++i) {
        out << "first gate in " << family_name(i) << ": " << per_family[i] << " classes\n";
      }
    }
    if (table1) {
      for (const auto& e : table1->entries) {
        if (!e.realizes || e.class_index < 0) {
          out << "table1: " << e.circuit << (e.realizes ? " is not a minimal circuit" : " does not realize 231")
              << '\n';
        }
      }
      out << "table1: " << table1->distinct_classes << "/" << table1->classes_total << " classes hit, "
          << table1->circuits_covered << "/" << table1->circuits_total << " circuits covered, "
          << (table1->full_match ? "full match" : "MISMATCH") << '\n';
    }
  }
  return table1 && !table1->full_match ? kExitFailure : kExitOk;
}

int cmd_render(const GlobalOptions& g, const std::string& text, std::ostream& out) {
  const Circuit c = circuit_argument(text, g);
  if (json_output(g)) {
    out << json{{"n", c.wires()}, {"circuit", format_circuit(c)}, {"diagram", render_circuit(c)}}.dump(2)
        << '\n';
  } else {
    out << render_circuit(c);
  }
  return kExitOk;
}

int cmd_trace(const GlobalOptions& g, const std::string& text, const std::string& bits, bool spark,
              std::ostream& out) {
  const int n = static_cast<int>(bits.size());
  const BitVec input = parse_bits(bits);
  check_wire_option(g, n, "input bits");
  const PhiTrace trace = phi_trace(parse_circuit(text, n), input);
  if (json_output(g)) {
    json doc = {{"n", n}, {"input", bits}, {"weights", trace.weights}};
    if (spark) doc["sparkline"] = sparkline(trace);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < trace.weights.size(); ++k) out << (k ? " " : "") << trace.weights[k];
  out << '\n';
  if (spark) out << sparkline(trace) << '\n';
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, bool cache_given, std::ostream& out) {
  SuiteOptions options;
  options.skip_n5 = g.skip_n5;
  if (cache_given) options.cache_dir = g.cache_dir;
  const SuiteReport report = paper_verification_suite(options);
  out << (json_output(g) ? to_json(report) + "\n" : to_text(report));
  if (!report.integrity_failures.empty()) return kExitResource;
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal CNOT circuits for wire permutations"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("-n,--n", g.wires, "Wire count");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* cache_opt = app.add_option("--cache-dir", g.cache_dir, "Directory holding cpdt-n{n}.bin tables");
  app.add_option("--budget", g.budget, "Maximum number of circuits to enumerate");
  app.add_flag("--skip-n5", g.skip_n5, "Skip five-wire claims in verify-paper");

  std::string out_path;
  auto* bfs = app.add_subcommand("bfs", "Build and save the distance table for n wires");
  bfs->add_option("-o,--out", out_path, "Output file (default: <cache-dir>/cpdt-n{n}.bin)");

  std::string perm;
  auto* count = app.add_subcommand("count", "Minimal CNOT count and bounds for a permutation");
  count->add_option("perm", perm, "One-line permutation, e.g. 2341 or 2,3,4,1")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every minimal circuit for a permutation");
  enumerate->add_option("perm", perm, "One-line permutation")->required();

  bool check_table1 = false;
  bool all_wires = false;
  auto* classes = app.add_subcommand("classes", "Group minimal circuits into rotation classes");
  classes->add_option("perm", perm, "One-line permutation")->required();
  classes->add_flag("--check-table1", check_table1, "Check the 30 reference class representatives (231 only)");
  classes->add_flag("--all-wires", all_wires, "Group under every wire relabeling instead of rotations");

  std::string circuit_text;
  auto* render = app.add_subcommand("render", "Draw a circuit as text");
  render->add_option("circuit", circuit_text, "Circuit, e.g. \"1>2 2>1\" or AEFDCB")->required();

  std::string bits;
  bool spark = false;
  auto* trace = app.add_subcommand("trace", "Hamming-weight trace of a basis state through a circuit");
  trace->add_option("circuit", circuit_text, "Circuit")->required();
  trace->add_option("bits", bits, "Input basis state, wire 1 first, e.g. 111")->required();
  trace->add_flag("--sparkline", spark, "Also print a sparkline");

  auto* verify = app.add_subcommand("verify-paper", "Run the full claim verification suite");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bfs) return cmd_bfs(g, out_path, out);
    if (*count) return cmd_count(g, perm, out, err);
    if (*enumerate) return cmd_enumerate(g, perm, out, err);
    if (*classes) return cmd_classes(g, perm, check_table1, all_wires, out, err);
    if (*render) return cmd_render(g, circuit_text, out);
    if (*trace) return cmd_trace(g, circuit_text, bits, spark, out);
    if (*verify) return cmd_verify(g, cache_opt->count() > 0, out);
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Inconsistent& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Unrealizable& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    // TableError, BudgetExceeded
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace cnotperm
