#include "dasatom/divide.hpp"

namespace dasatom {

namespace {

void add_layer_edges(Graph& graph, const CzCircuit& circuit, int layer) {
  for (int idx : circuit.layers[layer]) {
    graph.add_edge(circuit.gates[idx].a, circuit.gates[idx].b);
  }
}

bool embeddable(const Graph& graph, const GridArch& arch) {
  return !find_embeddings(graph, arch, 1).empty();
}

} // namespace

Division divide_circuit(const CzCircuit& circuit, const GridArch& arch,
                        bool chain_prev, std::size_t embed_limit) {
  if (!circuit.layered()) {
    throw std::invalid_argument("divide_circuit: circuit not layered");
  }
  if (circuit.qubit_count > arch.point_count()) {
    throw std::invalid_argument("divide_circuit: more qubits than traps");
  }
  Division division;
  const int layer_count = circuit.layer_count();
  int begin = 0;
  while (begin < layer_count) {
    // Grow the interaction graph one layer at a time, memoizing the edge
    // set; a failed check discards only the trial layer's edges.
    Graph accumulated(circuit.qubit_count);
    add_layer_edges(accumulated, circuit, begin);
    if (!embeddable(accumulated, arch)) {
      throw UnembeddableLayer(begin);
    }
    int end = begin + 1;
    while (end < layer_count) {
      Graph trial = accumulated;
      add_layer_edges(trial, circuit, end);
      if (!embeddable(trial, arch)) {
        break;
      }
      accumulated = std::move(trial);
      ++end;
    }
    const Mapping* prev =
        (chain_prev && !division.embeddings.empty())
            ? &division.embeddings.back()
            : nullptr;
    const std::vector<Mapping> candidates =
        find_embeddings(accumulated, arch, embed_limit, prev);
    division.intervals.push_back(LayerInterval{begin, end});
    division.embeddings.push_back(choose_embedding(candidates, prev));
    begin = end;
  }
  return division;
}

std::vector<std::string> verify_division(const Division& division,
                                         const CzCircuit& circuit,
                                         const GridArch& arch) {
  std::vector<std::string> violations;
  const int k = division.subcircuit_count();
  if (static_cast<int>(division.embeddings.size()) != k) {
    violations.push_back("EmbeddingCount: one mapping per subcircuit required");
    return violations;
  }
  if (!circuit.layered()) {
    violations.push_back("CircuitNotLayered");
    return violations;
  }
  const int layer_count = circuit.layer_count();
  if (k == 0) {
    if (layer_count != 0) {
      violations.push_back("CoverageIncomplete: empty division of a "
                           "nonempty circuit");
    }
    return violations;
  }
  if (division.intervals.front().begin != 0) {
    violations.push_back("CoverageIncomplete: first interval must start at "
                         "layer 1");
  }
  if (division.intervals.back().end != layer_count) {
    violations.push_back("CoverageIncomplete: last interval must end at the "
                         "final layer");
  }
  for (int i = 0; i < k; ++i) {
    const LayerInterval& cur = division.intervals[i];
    if (cur.begin >= cur.end || cur.begin < 0 || cur.end > layer_count) {
      violations.push_back("IntervalOrder: subcircuit " + std::to_string(i + 1) +
                           " is empty or out of bounds");
      continue;
    }
    if (i + 1 < k) {
      const LayerInterval& next = division.intervals[i + 1];
      if (next.begin < cur.end) {
        violations.push_back("IntervalOverlap: subcircuits " +
                             std::to_string(i + 1) + " and " +
                             std::to_string(i + 2));
      } else if (next.begin > cur.end) {
        violations.push_back("IntervalGap: between subcircuits " +
                             std::to_string(i + 1) + " and " +
                             std::to_string(i + 2));
      }
    }
    const Mapping& mapping = division.embeddings[i];
    if (mapping.qubit_count() != circuit.qubit_count ||
        !mapping.within(arch)) {
      violations.push_back("BadMapping: subcircuit " + std::to_string(i + 1));
      continue;
    }
    const Graph ig = interaction_graph(circuit, cur.begin, cur.end);
    if (!is_embedding(mapping, ig, arch)) {
      violations.push_back("BadEmbedding: subcircuit " +
                           std::to_string(i + 1));
    }
    // Greedy maximality: absorbing the next layer must break embeddability
    // for every subcircuit except the last.
    if (i + 1 < k && cur.end < layer_count) {
      const Graph extended = interaction_graph(circuit, cur.begin, cur.end + 1);
      if (!find_embeddings(extended, arch, 1).empty()) {
        violations.push_back("NotMaximal(" + std::to_string(i + 1) + ")");
      }
    }
  }
  return violations;
}

} // namespace dasatom
