#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dasatom {

/// Undirected simple graph on vertices {0..n-1}. Used for interaction
/// graphs over program qubits and for conflict graphs over moves.
class Graph {
public:
  Graph() = default;
  explicit Graph(int order) : adjacent_(static_cast<std::size_t>(order)) {
    if (order < 0) {
      throw std::invalid_argument("Graph: negative order");
    }
    for (auto& row : adjacent_) {
      row.assign(static_cast<std::size_t>(order), false);
    }
  }

  int order() const { return static_cast<int>(adjacent_.size()); }
  int edge_count() const { return edge_count_; }

  /// Adds edge (u,v); returns false if it was already present.
  bool add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("Graph: self-loop");
    }
    if (adjacent_[u][v]) {
      return false;
    }
    adjacent_[u][v] = adjacent_[v][u] = true;
    ++edge_count_;
    return true;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adjacent_[u][v];
  }

  int degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (bool b : adjacent_[v]) {
      deg += b ? 1 : 0;
    }
    return deg;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < order(); ++u) {
      if (adjacent_[v][u]) {
        out.push_back(u);
      }
    }
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u) {
      for (int v = u + 1; v < order(); ++v) {
        if (adjacent_[u][v]) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const {
    return adjacent_ == other.adjacent_;
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= order()) {
      throw std::out_of_range("Graph: vertex out of range");
    }
  }

  std::vector<std::vector<bool>> adjacent_;
  int edge_count_ = 0;
};

} // namespace dasatom
