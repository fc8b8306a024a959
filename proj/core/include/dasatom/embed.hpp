#pragma once

#include "dasatom/arch.hpp"
#include "dasatom/graph.hpp"

#include <cstddef>
#include <vector>

namespace dasatom {

/// Total injective assignment of program qubits to grid points.
class Mapping {
public:
  Mapping() = default;
  explicit Mapping(std::vector<GridPoint> points);

  int qubit_count() const { return static_cast<int>(points_.size()); }
  GridPoint at(int qubit) const { return points_.at(qubit); }
  GridPoint operator[](int qubit) const { return points_[qubit]; }
  const std::vector<GridPoint>& points() const { return points_; }

  bool within(const GridArch& arch) const;

  bool operator==(const Mapping& o) const { return points_ == o.points_; }
  bool operator!=(const Mapping& o) const { return !(*this == o); }

private:
  std::vector<GridPoint> points_;
};

/// True iff every interaction-graph edge lands on an architecture edge.
bool is_embedding(const Mapping& mapping, const Graph& interaction,
                  const GridArch& arch);

inline constexpr std::size_t kDefaultEmbedLimit = 1000;

/// Enumerates up to `limit` embeddings of `interaction` into the grid.
/// Deterministic: vertices are matched in descending-degree order (ties by
/// ascending id) and candidate grid points are scanned row-major. Isolated
/// vertices do not branch; each core embedding is completed once, placing
/// them on their `prev` positions when given and free, then filling
/// row-major. Returns an empty vector when no embedding exists.
std::vector<Mapping> find_embeddings(const Graph& interaction,
                                     const GridArch& arch,
                                     std::size_t limit = kDefaultEmbedLimit,
                                     const Mapping* prev = nullptr);

/// Sum over qubits of the Euclidean distance between images (grid units).
double total_displacement(const Mapping& from, const Mapping& to);

/// Picks the first candidate when `prev` is absent, otherwise the one
/// minimizing total displacement from `prev` (ties by candidate order).
Mapping choose_embedding(const std::vector<Mapping>& candidates,
                         const Mapping* prev);

} // namespace dasatom
