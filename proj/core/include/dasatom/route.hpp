#pragma once

#include "dasatom/arch.hpp"
#include "dasatom/embed.hpp"
#include "dasatom/graph.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dasatom {

/// Trap position in half-grid units. Grid points have even coordinates;
/// parking spots on a fully occupied grid sit at odd (half-integer)
/// coordinates, which can never collide with a trap site.
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;

  static HalfPoint of(GridPoint p) { return HalfPoint{2 * p.x, 2 * p.y}; }
  bool on_grid() const { return x2 % 2 == 0 && y2 % 2 == 0; }
  GridPoint to_grid() const { return GridPoint{x2 / 2, y2 / 2}; }
  double x() const { return x2 / 2.0; }
  double y() const { return y2 / 2.0; }

  bool operator==(const HalfPoint& o) const {
    return x2 == o.x2 && y2 == o.y2;
  }
  bool operator!=(const HalfPoint& o) const { return !(*this == o); }
};

struct HalfPointHash {
  std::size_t operator()(const HalfPoint& p) const {
    return std::hash<long long>()((static_cast<long long>(p.x2) << 32) ^
                                  static_cast<unsigned int>(p.y2));
  }
};

using Occupancy = std::unordered_map<HalfPoint, int, HalfPointHash>;

/// Relocation of one atom. Non-trivial by construction (from != to).
struct Move {
  int qubit = 0;
  HalfPoint from;
  HalfPoint to;

  double length_units() const;
  double length_um(double spacing_um) const {
    return length_units() * spacing_um;
  }
};

/// One move per qubit whose image differs between the two mappings,
/// ordered by qubit id.
std::vector<Move> extract_moves(const Mapping& from, const Mapping& to);

/// AOD compatibility: the x-order relation between sources equals the one
/// between targets, and likewise for y (rows and columns must not cross).
bool compatible(const Move& m1, const Move& m2);

/// Node i stands for moves[i]; an edge joins each incompatible pair.
Graph conflict_graph(const std::vector<Move>& moves);

/// Pairwise-compatible moves executed in one AOD stage.
struct MoveBatch {
  std::vector<Move> moves;
  double max_distance_um = 0;
};

struct RoutePlan {
  std::vector<MoveBatch> batches;
  long long transfers = 0;           // 2 per executed move (load + offload)
  double total_max_distance_um = 0;  // sum over batches of longest move
};

struct RouteError : std::runtime_error {
  enum class Code { OccupancyViolation, IncompatibleBatch, OffGridFinish };

  RouteError(Code code, const std::string& message)
      : std::runtime_error(message), code(code) {}

  Code code;
};

/// Plans the transition from one mapping to the next as a sequence of
/// compatible batches: repeatedly restrict the pending moves to those
/// whose destination trap is currently free, take a greedy maximal
/// independent set of the conflict graph (ascending conflict degree, ties
/// by shorter move then qubit id), and execute it. When every pending
/// move is blocked (a cycle), the shortest move whose atom occupies
/// another move's destination is split in two via a parking spot: the
/// nearest free grid point to its source (row-major ties), or the
/// half-offset point source + (1/2, 1/2) when the grid is full.
RoutePlan route(const Mapping& from, const Mapping& to, const GridArch& arch);

/// Applies the plan to the start occupancy, asserting the batch
/// invariants at every stage. Returns the final mapping.
Mapping replay(const RoutePlan& plan, const Mapping& start);

} // namespace dasatom
