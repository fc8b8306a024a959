#include "dasatom/arch.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dasatom {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw std::invalid_argument("Rational: expected nonnegative num, positive den");
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

std::int64_t to_int(const std::string& s, const std::string& ctx) {
  if (!all_digits(s)) {
    throw std::invalid_argument("Radius: bad " + ctx + " in '" + s + "'");
  }
  return std::stoll(s);
}

} // namespace

Radius Radius::parse(const std::string& spec) {
  if (spec.rfind("sqrt:", 0) == 0) {
    const std::int64_t k = to_int(spec.substr(5), "sqrt argument");
    return Radius{Rational::of(k, 1), spec};
  }
  const auto slash = spec.find('/');
  if (slash != std::string::npos) {
    const std::int64_t p = to_int(spec.substr(0, slash), "numerator");
    const std::int64_t q = to_int(spec.substr(slash + 1), "denominator");
    if (q == 0) {
      throw std::invalid_argument("Radius: zero denominator");
    }
    return Radius{Rational::of(p * p, q * q), spec};
  }
  const auto dot = spec.find('.');
  if (dot != std::string::npos) {
    const std::string whole = spec.substr(0, dot);
    const std::string frac = spec.substr(dot + 1);
    if (frac.size() > 6) {
      throw std::invalid_argument("Radius: more than 6 decimal places");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      den *= 10;
    }
    const std::int64_t p =
        to_int(whole.empty() ? "0" : whole, "integer part") * den +
        (frac.empty() ? 0 : to_int(frac, "fraction part"));
    return Radius{Rational::of(p * p, den * den), spec};
  }
  const std::int64_t k = to_int(spec, "value");
  return Radius{Rational::of(k * k, 1), spec};
}

Radius Radius::from_integer(std::int64_t factor) {
  return Radius{Rational::of(factor * factor, 1), std::to_string(factor)};
}

double Radius::value() const { return std::sqrt(squared.value()); }

double distance_um(GridPoint a, GridPoint b, double spacing_um) {
  return std::sqrt(static_cast<double>(distance_sq(a, b))) * spacing_um;
}

GridArch::GridArch(int side, double spacing_um, Radius r_int, Radius r_restr)
    : side_(side), spacing_um_(spacing_um), r_int_(std::move(r_int)),
      r_restr_(std::move(r_restr)) {
  if (side_ < 1) {
    throw std::invalid_argument("GridArch: side must be >= 1");
  }
  if (!(spacing_um_ > 0)) {
    throw std::invalid_argument("GridArch: spacing must be positive");
  }
  const Rational one = Rational::of(1, 1);
  if (r_int_.squared < one) {
    throw std::invalid_argument("GridArch: r_int must be >= 1");
  }
  if (r_restr_.squared < r_int_.squared) {
    throw std::invalid_argument("GridArch: r_restr must be >= r_int");
  }
}

GridArch GridArch::for_qubits(int qubits, double spacing_um, Radius r_int,
                              Radius r_restr) {
  if (qubits < 1) {
    throw std::invalid_argument("GridArch: need at least one qubit");
  }
  int side = 1;
  while (static_cast<std::int64_t>(side) * side < qubits) {
    ++side;
  }
  return GridArch(side, spacing_um, std::move(r_int), std::move(r_restr));
}

bool GridArch::connected(GridPoint a, GridPoint b) const {
  if (a == b) {
    return false;
  }
  // D(a,b) <= R_int  <=>  lattice_dist_sq * den <= num (units of d^2).
  const __int128 s = distance_sq(a, b);
  return s * r_int_.squared.den <= r_int_.squared.num;
}

std::vector<GridPoint> GridArch::neighbors(GridPoint p) const {
  if (!contains(p)) {
    throw std::out_of_range("GridArch: point outside grid");
  }
  std::vector<GridPoint> out;
  for (int i = 0; i < point_count(); ++i) {
    const GridPoint q = point_at(i);
    if (connected(p, q)) {
      out.push_back(q);
    }
  }
  return out;
}

bool GridArch::may_run_parallel(std::pair<GridPoint, GridPoint> g1,
                                std::pair<GridPoint, GridPoint> g2) const {
  const GridPoint pts1[2] = {g1.first, g1.second};
  const GridPoint pts2[2] = {g2.first, g2.second};
  for (const GridPoint& u : pts1) {
    for (const GridPoint& v : pts2) {
      if (u == v) {
        throw std::invalid_argument(
            "may_run_parallel: gates share a grid point");
      }
    }
  }
  for (const GridPoint& u : pts1) {
    for (const GridPoint& v : pts2) {
      // Eq. uses strict '>': points at exactly R_restr block parallelism.
      const __int128 s = distance_sq(u, v);
      if (!(s * r_restr_.squared.den > r_restr_.squared.num)) {
        return false;
      }
    }
  }
  return true;
}

} // namespace dasatom
