#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace fssinv {

/// Jerusalem-cross unit cell.  All lengths in mm:
///   a - unit-cell period, b - end-cap bar length, c - strip width,
///   d - cross arm tip-to-tip length, t - grounded spacer thickness.
/// The cap-to-cell-edge margin e = (a - b) / 2 is derived.
struct UnitCellGeometry {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double t = 0.0;
};

/// Cap margin e = (a - b) / 2.
inline double derived_gap(const UnitCellGeometry& g) { return (g.a - g.b) / 2.0; }

/// Returns the list of violated constraints (empty means the geometry is
/// feasible).  Each entry names the constraint that failed, e.g. "b < a".
/// Note 0 < b < a already implies 0 < e < a/2 for the derived gap.
inline std::vector<std::string> validate(const UnitCellGeometry& g) {
  std::vector<std::string> violations;
  auto require = [&](bool ok, const char* constraint) {
    if (!ok) violations.emplace_back(constraint);
  };
  require(g.a > 0.0, "a > 0");
  require(g.b > 0.0, "b > 0");
  require(g.b < g.a, "b < a");
  require(g.c > 0.0, "c > 0");
  require(g.c < g.b, "c < b");
  require(g.d > 0.0, "d > 0");
  require(g.d < g.a, "d < a");
  require(g.t > 0.0, "t > 0");
  return violations;
}

inline bool is_valid(const UnitCellGeometry& g) { return validate(g).empty(); }

/// One row of the parametric sweep: fixed period a with inclusive
/// [min, max] ranges for b, c, d.
struct SweepRow {
  double a = 0.0;
  double b_min = 0.0, b_max = 0.0;
  double c_min = 0.0, c_max = 0.0;
  double d_min = 0.0, d_max = 0.0;
};

struct SweepSteps {
  double b = 0.15;
  double c = 0.2;
  double d = 0.3;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  SweepSteps steps;
  std::vector<double> thicknesses;
};

/// The published 8-row sweep (a from 3.5 to 7.0 mm) used for dataset
/// generation, with the default step sizes and the given spacer thicknesses.
inline SweepTable default_sweep_table(std::vector<double> thicknesses = {2.0}) {
  SweepTable table;
  table.rows = {
      {3.5, 1.5, 3.4, 0.25, 1.5, 1.0, 3.4},
      {4.0, 1.5, 3.8, 0.25, 1.4, 1.0, 3.8},
      {4.5, 1.5, 4.4, 0.25, 1.4, 2.0, 4.4},
      {5.0, 2.0, 4.8, 1.20, 1.8, 1.0, 4.8},
      {5.5, 2.5, 5.3, 1.70, 2.3, 1.0, 5.3},
      {6.0, 3.0, 5.8, 2.00, 2.8, 2.0, 5.8},
      {6.5, 3.0, 6.3, 2.00, 2.8, 2.0, 6.2},
      {7.0, 3.5, 6.9, 2.60, 3.3, 3.0, 6.8},
  };
  table.thicknesses = std::move(thicknesses);
  return table;
}

namespace detail {

// Lengths are snapped to a 1e-6 mm grid at enumeration time so that the
// plain-text persistence layer (6 decimals) round-trips values exactly.
inline double quantize_um(double v) { return std::round(v * 1e6) / 1e6; }

inline std::int64_t quantize_key(double v) {
  return static_cast<std::int64_t>(std::llround(v * 1e6));
}

/// Grid min, min+step, ... not exceeding max (1e-9 slack on the division).
inline std::vector<double> axis_grid(double min, double max, double step) {
  const int n = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
  for (int k = 0; k < n; ++k) values.push_back(quantize_um(min + k * step));
  return values;
}

struct GeometryKeyHash {
  std::size_t operator()(const std::array<std::int64_t, 5>& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

inline void check_sweep_table(const SweepTable& table) {
  if (!(table.steps.b > 0.0 && table.steps.c > 0.0 && table.steps.d > 0.0))
    throw std::invalid_argument("sweep table: all steps must be > 0");
  for (const SweepRow& row : table.rows) {
    if (row.b_min > row.b_max || row.c_min > row.c_max || row.d_min > row.d_max)
      throw std::invalid_argument("sweep table: range min exceeds max");
  }
  for (double t : table.thicknesses)
    if (!(t > 0.0)) throw std::invalid_argument("sweep table: thickness must be > 0");
}

/// Enumerates the Cartesian product of the per-row axis grids and the
/// thickness list, keeping only feasible geometries.  Order is deterministic:
/// rows in table order, then b, c, d, t ascending.  Duplicate geometries
/// (possible when rows overlap) keep their first occurrence.
inline std::vector<UnitCellGeometry> enumerate_sweep(const SweepTable& table) {
  check_sweep_table(table);
  std::vector<UnitCellGeometry> result;
  std::unordered_set<std::array<std::int64_t, 5>, detail::GeometryKeyHash> seen;
  for (const SweepRow& row : table.rows) {
    const auto bs = detail::axis_grid(row.b_min, row.b_max, table.steps.b);
    const auto cs = detail::axis_grid(row.c_min, row.c_max, table.steps.c);
    const auto ds = detail::axis_grid(row.d_min, row.d_max, table.steps.d);
    const double a = detail::quantize_um(row.a);
    for (double b : bs)
      for (double c : cs)
        for (double d : ds)
          for (double t : table.thicknesses) {
            UnitCellGeometry g{a, b, c, d, detail::quantize_um(t)};
            if (!is_valid(g)) continue;
            const std::array<std::int64_t, 5> key = {
                detail::quantize_key(g.a), detail::quantize_key(g.b),
                detail::quantize_key(g.c), detail::quantize_key(g.d),
                detail::quantize_key(g.t)};
            if (seen.insert(key).second) result.push_back(g);
          }
  }
  return result;
}

}  // namespace fssinv
