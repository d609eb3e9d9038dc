#pragma once

// Text forms used by the CLI and reports.
//
// Circuits: whitespace-separated "c>t" tokens ("1>2 2>3"). On three wires the
// letter aliases A=1>2 B=2>1 C=1>3 D=3>1 E=2>3 F=3>2 are also accepted, either
// run together ("AEFDCB") or as separate tokens. The empty circuit is written
// as an em dash.
//
// Permutations: digit string "2341" (n <= 9) or comma list "2,3,4,1".

#include <string>
#include <string_view>

#include "cnotperm/gf2.hpp"

namespace cnotperm {

inline constexpr std::string_view kEmptyCircuitMarker = "—";

Circuit parse_circuit(std::string_view text, int n);
/// Letter aliases when n == 3, "c>t" tokens otherwise.
std::string format_circuit(const Circuit& c);
/// Always "c>t" tokens.
std::string format_circuit_tokens(const Circuit& c);

/// Letter alias of a three-wire gate ('A'..'F').
char gate_letter(CnotGate g);

PermSpec parse_perm(std::string_view text);
std::string format_perm(const PermSpec& p);

/// "101" -> wire 1 = 1, wire 2 = 0, wire 3 = 1.
BitVec parse_bits(std::string_view text);
std::string format_bits(BitVec x, int n);

}  // namespace cnotperm
