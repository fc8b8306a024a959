#include "dasatom/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dasatom {

Mapping::Mapping(std::vector<GridPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw std::invalid_argument("Mapping: two qubits share a grid point");
      }
    }
  }
}

bool Mapping::within(const GridArch& arch) const {
  for (const GridPoint& p : points_) {
    if (!arch.contains(p)) {
      return false;
    }
  }
  return true;
}

bool is_embedding(const Mapping& mapping, const Graph& interaction,
                  const GridArch& arch) {
  if (mapping.qubit_count() < interaction.order()) {
    throw std::invalid_argument("is_embedding: mapping not total");
  }
  for (const auto& [u, v] : interaction.edges()) {
    if (!arch.connected(mapping[u], mapping[v])) {
      return false;
    }
  }
  return true;
}

namespace {

/// Backtracking subgraph-monomorphism search. The vertex order is fixed
/// up front (descending interaction degree, ties by ascending id), grid
/// candidates are scanned row-major, so the enumeration order is fully
/// reproducible.
class EmbedSearch {
public:
  EmbedSearch(const Graph& interaction, const GridArch& arch,
              std::size_t limit, const Mapping* prev)
      : ig_(interaction), arch_(arch), limit_(limit), prev_(prev),
        assignment_(interaction.order(), GridPoint{-1, -1}),
        point_used_(static_cast<std::size_t>(arch.point_count()), false) {
    for (int v = 0; v < ig_.order(); ++v) {
      (ig_.degree(v) > 0 ? core_ : isolated_).push_back(v);
    }
    std::stable_sort(core_.begin(), core_.end(), [this](int a, int b) {
      const int da = ig_.degree(a);
      const int db = ig_.degree(b);
      return da != db ? da > db : a < b;
    });
  }

  std::vector<Mapping> run() {
    if (ig_.order() > arch_.point_count()) {
      return {};
    }
    if (limit_ > 0) {
      extend(0);
    }
    return std::move(results_);
  }

private:
  void extend(std::size_t depth) {
    if (depth == core_.size()) {
      emit();
      return;
    }
    const int u = core_[depth];
    const std::vector<int> mapped_neighbors = [&] {
      std::vector<int> out;
      for (int v : ig_.neighbors(u)) {
        if (assignment_[v].x >= 0) {
          out.push_back(v);
        }
      }
      return out;
    }();
    const int pending_neighbors =
        ig_.degree(u) - static_cast<int>(mapped_neighbors.size());
    for (int idx = 0; idx < arch_.point_count(); ++idx) {
      if (point_used_[idx]) {
        continue;
      }
      const GridPoint p = arch_.point_at(idx);
      bool ok = true;
      for (int v : mapped_neighbors) {
        if (!arch_.connected(p, assignment_[v])) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        continue;
      }
      if (pending_neighbors > 0 && free_degree(p) < pending_neighbors) {
        continue;
      }
      assignment_[u] = p;
      point_used_[idx] = true;
      extend(depth + 1);
      point_used_[idx] = false;
      assignment_[u] = GridPoint{-1, -1};
      if (results_.size() >= limit_) {
        return;
      }
    }
  }

  int free_degree(GridPoint p) const {
    int count = 0;
    for (int idx = 0; idx < arch_.point_count(); ++idx) {
      if (!point_used_[idx] && arch_.connected(p, arch_.point_at(idx))) {
        ++count;
      }
    }
    return count;
  }

  void emit() {
    std::vector<GridPoint> points = assignment_;
    std::vector<bool> used = point_used_;
    std::vector<int> remaining;
    for (int v : isolated_) {
      if (prev_ != nullptr && v < prev_->qubit_count()) {
        const GridPoint keep = prev_->at(v);
        if (arch_.contains(keep) && !used[arch_.index_of(keep)]) {
          points[v] = keep;
          used[arch_.index_of(keep)] = true;
          continue;
        }
      }
      remaining.push_back(v);
    }
    int idx = 0;
    for (int v : remaining) {
      while (idx < arch_.point_count() && used[idx]) {
        ++idx;
      }
      points[v] = arch_.point_at(idx);
      used[idx] = true;
    }
    results_.emplace_back(std::move(points));
  }

  const Graph& ig_;
  const GridArch& arch_;
  std::size_t limit_;
  const Mapping* prev_;
  std::vector<int> core_;
  std::vector<int> isolated_;
  std::vector<GridPoint> assignment_;
  std::vector<bool> point_used_;
  std::vector<Mapping> results_;
};

} // namespace

std::vector<Mapping> find_embeddings(const Graph& interaction,
                                     const GridArch& arch, std::size_t limit,
                                     const Mapping* prev) {
  return EmbedSearch(interaction, arch, limit, prev).run();
}

double total_displacement(const Mapping& from, const Mapping& to) {
  if (from.qubit_count() != to.qubit_count()) {
    throw std::invalid_argument("total_displacement: domain mismatch");
  }
  double sum = 0;
  for (int q = 0; q < from.qubit_count(); ++q) {
    sum += std::sqrt(static_cast<double>(distance_sq(from[q], to[q])));
  }
  return sum;
}

Mapping choose_embedding(const std::vector<Mapping>& candidates,
                         const Mapping* prev) {
  if (candidates.empty()) {
    throw std::invalid_argument("choose_embedding: no candidates");
  }
  if (prev == nullptr) {
    return candidates.front();
  }
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double cost = total_displacement(*prev, candidates[i]);
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  return candidates[best];
}

} // namespace dasatom
