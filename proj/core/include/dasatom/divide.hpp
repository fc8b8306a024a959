#pragma once

#include "dasatom/arch.hpp"
#include "dasatom/circuit.hpp"
#include "dasatom/embed.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dasatom {

/// Half-open layer interval [begin, end).
struct LayerInterval {
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
  bool operator==(const LayerInterval& o) const {
    return begin == o.begin && end == o.end;
  }
};

/// Ordered partition of the circuit's layers into maximal embeddable
/// subcircuits, one embedding each.
struct Division {
  std::vector<LayerInterval> intervals;
  std::vector<Mapping> embeddings;

  int subcircuit_count() const { return static_cast<int>(intervals.size()); }
};

struct UnembeddableLayer : std::runtime_error {
  explicit UnembeddableLayer(int layer)
      : std::runtime_error("layer " + std::to_string(layer + 1) +
                           " has no embedding into the architecture"),
        layer(layer) {}

  int layer;
};

/// Greedy layer-granular division: each subcircuit absorbs layers while
/// its accumulated interaction graph stays embeddable. When `chain_prev`
/// is set, each subcircuit's embedding is chosen to minimize displacement
/// from the previous one; interval boundaries are unaffected by it.
Division divide_circuit(const CzCircuit& circuit, const GridArch& arch,
                        bool chain_prev = true,
                        std::size_t embed_limit = kDefaultEmbedLimit);

/// Re-checks all Division invariants plus greedy maximality. Returns one
/// human-readable violation per defect; empty means valid.
std::vector<std::string> verify_division(const Division& division,
                                         const CzCircuit& circuit,
                                         const GridArch& arch);

} // namespace dasatom
