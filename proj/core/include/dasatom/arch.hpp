#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dasatom {

/// Exact nonnegative rational, kept normalized with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <
           static_cast<__int128>(o.num) * den;
  }
  bool operator<=(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <=
           static_cast<__int128>(o.num) * den;
  }
  double value() const { return static_cast<double>(num) / den; }
};

/// A radius factor (multiple of the atom spacing d). The square of the
/// factor is held exactly so that comparisons against integer lattice
/// distances never hit floating-point boundary ambiguity. Accepted input
/// forms: "2", "1.5", "3/2", and "sqrt:<integer>".
struct Radius {
  Rational squared;
  std::string text;

  static Radius parse(const std::string& spec);
  static Radius from_integer(std::int64_t factor);

  double value() const;
  bool operator==(const Radius& o) const { return squared == o.squared; }
};

struct GridPoint {
  int x = 0;
  int y = 0;

  bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const GridPoint& o) const { return !(*this == o); }
};

/// Squared Euclidean distance in grid units (exact).
inline std::int64_t distance_sq(GridPoint a, GridPoint b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance_um(GridPoint a, GridPoint b, double spacing_um);

/// b x b grid of optical traps with spacing d. Connectivity is induced by
/// the interaction radius R_int = r_int * d; simultaneous two-qubit gates
/// must keep all cross distances above R_restr = r_restr * d.
class GridArch {
public:
  GridArch(int side, double spacing_um, Radius r_int, Radius r_restr);

  /// Smallest square grid holding n qubits: side = ceil(sqrt(n)).
  static GridArch for_qubits(int qubits, double spacing_um, Radius r_int,
                             Radius r_restr);

  int side() const { return side_; }
  int point_count() const { return side_ * side_; }
  double spacing_um() const { return spacing_um_; }
  const Radius& interaction_factor() const { return r_int_; }
  const Radius& restriction_factor() const { return r_restr_; }
  double interaction_radius_um() const { return r_int_.value() * spacing_um_; }
  double restriction_radius_um() const {
    return r_restr_.value() * spacing_um_;
  }

  bool contains(GridPoint p) const {
    return p.x >= 0 && p.x < side_ && p.y >= 0 && p.y < side_;
  }

  /// Row-major index ((0,0),(1,0),...,(0,1),...).
  int index_of(GridPoint p) const { return p.y * side_ + p.x; }
  GridPoint point_at(int index) const {
    return GridPoint{index % side_, index / side_};
  }

  /// True iff a != b and D(a,b) <= R_int (exact squared comparison).
  bool connected(GridPoint a, GridPoint b) const;

  std::vector<GridPoint> neighbors(GridPoint p) const;

  /// True iff CZ gates at (g1.first,g1.second) and (g2.first,g2.second)
  /// may run in the same Rydberg stage: all four cross distances are
  /// strictly greater than R_restr. The four points must be distinct.
  bool may_run_parallel(std::pair<GridPoint, GridPoint> g1,
                        std::pair<GridPoint, GridPoint> g2) const;

private:
  int side_;
  double spacing_um_;
  Radius r_int_;
  Radius r_restr_;
};

} // namespace dasatom
