#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cnotperm/analysis.hpp"
#include "cnotperm/gf2.hpp"

namespace cnotperm {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // claim or verification failure, unrealizable target
  kExitUsage = 2,
  kExitResource = 3,  // I/O, corrupt tables, budgets
};

/// One text row per wire: control `●`, target `⊕`, `|` where a gate passes a
/// wire or spans the gap between two wires.
std::string render_circuit(const Circuit& c);

/// Trace weights as block characters scaled to [0, n].
std::string sparkline(const PhiTrace& trace);

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnotperm
