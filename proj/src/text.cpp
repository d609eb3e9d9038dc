#include "cnotperm/text.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace cnotperm {

namespace {

constexpr std::array<CnotGate, 6> kLetterGates = {
    CnotGate{1, 2}, CnotGate{2, 1}, CnotGate{1, 3},
    CnotGate{3, 1}, CnotGate{2, 3}, CnotGate{3, 2},
};

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

// Parses a positive integer at text[pos..]; advances pos.
int parse_wire(std::string_view text, std::size_t& pos) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || end == text.data() + pos) {
    throw ParseError("expected a wire number", pos + 1);
  }
  pos = static_cast<std::size_t>(end - text.data());
  return value;
}

}  // namespace

char gate_letter(CnotGate g) {
  for (std::size_t i = 0; i < kLetterGates.size(); ++i) {
    if (kLetterGates[i] == g) return static_cast<char>('A' + i);
  }
  throw InvalidInput("gate " + std::to_string(g.control) + ">" + std::to_string(g.target) +
                     " has no three-wire letter alias");
}

Circuit parse_circuit(std::string_view text, int n) {
  Circuit circuit(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text.substr(pos, kEmptyCircuitMarker.size()) == kEmptyCircuitMarker) {
      if (!circuit.empty()) throw ParseError("empty-circuit marker after gates", pos + 1);
      pos += kEmptyCircuitMarker.size();
      continue;
    }
    const char ch = text[pos];
    if (ch >= 'A' && ch <= 'F') {
      if (n != 3) throw ParseError("letter gate aliases are only defined for 3 wires", pos + 1);
      circuit.push_back(kLetterGates[ch - 'A']);
      ++pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos;
      const int control = parse_wire(text, pos);
      if (pos >= text.size() || text[pos] != '>') throw ParseError("expected '>'", pos + 1);
      ++pos;
      const int target = parse_wire(text, pos);
      if (pos < text.size() && !is_space(text[pos])) {
        throw ParseError("unexpected character after gate", pos + 1);
      }
      const CnotGate g{control, target};
      try {
        g.validate(n);
      } catch (const InvalidInput& e) {
        throw ParseError(e.what(), start + 1);
      }
      circuit.push_back(g);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", pos + 1);
  }
  return circuit;
}

std::string format_circuit_tokens(const Circuit& c) {
  if (c.empty()) return std::string(kEmptyCircuitMarker);
  std::string out;
  for (const auto& g : c.gates()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g.control) + ">" + std::to_string(g.target);
  }
  return out;
}

std::string format_circuit(const Circuit& c) {
  if (c.wires() != 3) return format_circuit_tokens(c);
  if (c.empty()) return std::string(kEmptyCircuitMarker);
  std::string out;
  for (const auto& g : c.gates()) out += gate_letter(g);
  return out;
}

PermSpec parse_perm(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      while (pos < text.size() && is_space(text[pos])) ++pos;
      images.push_back(parse_wire(text, pos));
      while (pos < text.size() && is_space(text[pos])) ++pos;
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ','", pos + 1);
      ++pos;
    }
  } else {
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '0') {
        throw ParseError("expected a digit 1-9", pos + 1);
      }
      images.push_back(text[pos] - '0');
    }
  }
  if (images.empty()) throw ParseError("empty permutation", 1);
  return PermSpec(std::move(images));
}

std::string format_perm(const PermSpec& p) {
  std::string out;
  const bool digits = p.size() <= 9;
  for (int v : p.images()) {
    if (!digits && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

BitVec parse_bits(std::string_view text) {
  if (text.empty()) throw ParseError("empty bit string", 1);
  if (text.size() > static_cast<std::size_t>(kMaxWires)) {
    throw ParseError("bit string longer than " + std::to_string(kMaxWires), kMaxWires + 1);
  }
  BitVec x = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      x |= 1u << i;
    } else if (text[i] != '0') {
      throw ParseError("expected '0' or '1'", i + 1);
    }
  }
  return x;
}

std::string format_bits(BitVec x, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> i) & 1u) out[i] = '1';
  }
  return out;
}

}  // namespace cnotperm
