#pragma once

#include "dasatom/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dasatom {

/// One CZ-connectivity gate. `index` is the ordinal position in the
/// circuit's gate list; `a` and `b` are distinct program-qubit ids.
struct CzGate {
  int index = 0;
  int a = 0;
  int b = 0;

  bool touches(int q) const { return a == q || b == q; }
};

/// CZ circuit plus (once layer_circuit has run) its ASAP layer partition.
/// Layers hold gate indices; gates within one layer are pairwise
/// qubit-disjoint and concatenating layers in order preserves the
/// per-qubit gate order of the original list.
struct CzCircuit {
  int qubit_count = 0;
  std::vector<CzGate> gates;
  std::vector<std::vector<int>> layers;

  bool layered() const { return !layers.empty() || gates.empty(); }
  int layer_count() const { return static_cast<int>(layers.size()); }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("qasm:" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line(line), column(column) {}

  int line;
  int column;
};

/// Parses an OpenQASM 2.0 subset: one qreg, optional cregs, single-qubit
/// gates of any name (discarded), cz/cx two-qubit gates (kept, cx treated
/// as CZ connectivity), barrier and measure (ignored). Gates with arity
/// >= 3, repeated qubit operands, or out-of-range indices are errors.
CzCircuit parse_qasm(std::string_view text);
CzCircuit parse_qasm_file(const std::string& path);

/// ASAP layering: each gate lands in the earliest layer after all its
/// same-qubit predecessors. Deterministic; ties resolve by gate order.
CzCircuit layer_circuit(CzCircuit circuit);

/// Interaction graph over all gates of the circuit.
Graph interaction_graph(const CzCircuit& circuit);

/// Interaction graph over the half-open layer interval [begin, end).
/// Requires a layered circuit and a valid interval.
Graph interaction_graph(const CzCircuit& circuit, int layer_begin,
                        int layer_end);

/// Canonical dump: "qubits <n>" followed by one "cz <a> <b>" line per gate.
std::string dump_canonical(const CzCircuit& circuit);

/// Emits the circuit as OpenQASM 2.0 (pure CZ gate list).
std::string to_qasm(const CzCircuit& circuit);

} // namespace dasatom
