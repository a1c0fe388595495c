#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fssinv/config.hpp"
#include "fssinv/em_forward.hpp"
#include "fssinv/geometry.hpp"
#include "fssinv/io_util.hpp"
#include "fssinv/rng.hpp"

namespace fssinv {

struct Sample {
  UnitCellGeometry geometry;
  ReflectionCurve curve;
};

/// Generation provenance, persisted in the `.meta` sidecar next to the CSV.
struct DatasetMetadata {
  SweepTable sweep;
  StackSpec stack;
  FrequencyGrid grid;
  std::string generator = "fssinv-1";
  std::string prng = "splitmix64 fisher-yates";
  std::uint64_t seed = 0;
};

struct Dataset {
  DatasetMetadata meta;
  std::vector<Sample> samples;
};

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
};

/// One sample per feasible sweep geometry, curves from the forward solver.
/// Content is deterministic for identical inputs.
inline Dataset generate(const SweepTable& table, const StackSpec& stack,
                        const FrequencyGrid& grid) {
  const std::vector<UnitCellGeometry> geometries = enumerate_sweep(table);
  if (geometries.empty()) throw std::runtime_error("generate: empty dataset");
  Dataset ds;
  ds.meta.sweep = table;
  ds.meta.stack = stack;
  ds.meta.grid = grid;
  ds.samples.reserve(geometries.size());
  for (const UnitCellGeometry& g : geometries)
    ds.samples.push_back({g, reflection_curve(g, stack, grid)});
  return ds;
}

/// Seeded uniform shuffle then prefix split; train gets floor(n * fraction).
inline std::pair<Dataset, Dataset> split(const Dataset& ds, const SplitSpec& spec) {
  if (ds.samples.empty()) throw std::invalid_argument("split: dataset is empty");
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw std::invalid_argument("split: train_fraction must be in (0, 1)");
  const std::size_t n = ds.samples.size();
  const std::size_t n_train =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.train_fraction));
  if (n_train == 0 || n_train == n)
    throw std::invalid_argument("split: fraction leaves an empty side");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(spec.seed);
  fisher_yates_shuffle(order, rng);

  Dataset train, test;
  train.meta = ds.meta;
  test.meta = ds.meta;
  train.meta.seed = spec.seed;
  test.meta.seed = spec.seed;
  train.samples.reserve(n_train);
  test.samples.reserve(n - n_train);
  for (std::size_t i = 0; i < n; ++i)
    (i < n_train ? train : test).samples.push_back(ds.samples[order[i]]);
  return {std::move(train), std::move(test)};
}

// ---------------------------------------------------------------------------
// Persistence: CSV (header a_mm,...,t_mm,r_0001..r_NNNN; 6-decimal fixed
// point) plus a key=value metadata sidecar at `<path>.meta`.  The 6-decimal
// file is the canonical representation: saving what load() returned
// reproduces the file byte for byte.
// ---------------------------------------------------------------------------

namespace detail {

inline void write_metadata(std::ostream& out, const DatasetMetadata& meta,
                           std::size_t sample_count) {
  out << "[dataset]\n";
  out << "generator=" << meta.generator << "\n";
  out << "samples=" << sample_count << "\n";
  out << "prng=" << meta.prng << "\n";
  out << "seed=" << meta.seed << "\n";
  out << "[grid]\n";
  out << "f_start=" << format_full(meta.grid.f_start) << "\n";
  out << "f_stop=" << format_full(meta.grid.f_stop) << "\n";
  out << "f_step=" << format_full(meta.grid.f_step) << "\n";
  out << "[stack]\n";
  out << "superstrate_eps_r=" << format_full(meta.stack.superstrate.eps_r) << "\n";
  out << "superstrate_tan_delta=" << format_full(meta.stack.superstrate.tan_delta) << "\n";
  out << "superstrate_mm=" << format_full(meta.stack.superstrate_mm) << "\n";
  out << "spacer_eps_r=" << format_full(meta.stack.spacer.eps_r) << "\n";
  out << "spacer_tan_delta=" << format_full(meta.stack.spacer.tan_delta) << "\n";
  out << "sheet_ohms=" << format_full(meta.stack.sheet_resistance) << "\n";
  out << "[steps]\n";
  out << "b=" << format_full(meta.sweep.steps.b) << "\n";
  out << "c=" << format_full(meta.sweep.steps.c) << "\n";
  out << "d=" << format_full(meta.sweep.steps.d) << "\n";
  out << "[thicknesses]\n";
  out << "values=";
  for (std::size_t i = 0; i < meta.sweep.thicknesses.size(); ++i)
    out << (i ? " " : "") << format_full(meta.sweep.thicknesses[i]);
  out << "\n";
  for (const SweepRow& row : meta.sweep.rows) {
    out << "[row]\n";
    out << "a=" << format_full(row.a) << "\n";
    out << "b=" << format_full(row.b_min) << " " << format_full(row.b_max) << "\n";
    out << "c=" << format_full(row.c_min) << " " << format_full(row.c_max) << "\n";
    out << "d=" << format_full(row.d_min) << " " << format_full(row.d_max) << "\n";
  }
}

inline DatasetMetadata read_metadata(const std::string& path) {
  DatasetMetadata meta;
  bool saw_grid = false;
  meta.sweep.rows.clear();
  meta.sweep.thicknesses.clear();
  for (const ConfigSection& sec : parse_config_file(path)) {
    if (sec.name == "dataset") {
      if (const std::string* v = sec.find("generator")) meta.generator = *v;
      if (const std::string* v = sec.find("prng")) meta.prng = *v;
      if (const std::string* v = sec.find("seed"))
        meta.seed = static_cast<std::uint64_t>(std::strtoull(v->c_str(), nullptr, 10));
    } else if (sec.name == "grid") {
      meta.grid.f_start = config_double(sec, "f_start");
      meta.grid.f_stop = config_double(sec, "f_stop");
      meta.grid.f_step = config_double(sec, "f_step");
      saw_grid = true;
    } else if (sec.name == "stack") {
      meta.stack.superstrate.eps_r = config_double(sec, "superstrate_eps_r");
      meta.stack.superstrate.tan_delta = config_double(sec, "superstrate_tan_delta");
      meta.stack.superstrate_mm = config_double(sec, "superstrate_mm");
      meta.stack.spacer.eps_r = config_double(sec, "spacer_eps_r");
      meta.stack.spacer.tan_delta = config_double(sec, "spacer_tan_delta");
      meta.stack.sheet_resistance = config_double(sec, "sheet_ohms");
    } else if (sec.name == "steps") {
      meta.sweep.steps.b = config_double(sec, "b");
      meta.sweep.steps.c = config_double(sec, "c");
      meta.sweep.steps.d = config_double(sec, "d");
    } else if (sec.name == "thicknesses") {
      meta.sweep.thicknesses = config_double_list(sec, "values");
    } else if (sec.name == "row") {
      SweepRow row;
      row.a = config_double(sec, "a");
      const auto b = config_double_list(sec, "b");
      const auto c = config_double_list(sec, "c");
      const auto d = config_double_list(sec, "d");
      if (b.size() != 2 || c.size() != 2 || d.size() != 2)
        throw std::runtime_error("metadata [row]: b/c/d need 'min max' pairs");
      row.b_min = b[0]; row.b_max = b[1];
      row.c_min = c[0]; row.c_max = c[1];
      row.d_min = d[0]; row.d_max = d[1];
      meta.sweep.rows.push_back(row);
    }
  }
  if (!saw_grid)
    throw std::runtime_error("metadata sidecar missing [grid] section: " + path);
  return meta;
}

inline double parse_cell(const char* begin, const char* end, const std::string& path,
                         std::size_t lineno, std::size_t column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error(path + ":" + std::to_string(lineno) +
                             ": non-numeric cell in column " + std::to_string(column + 1));
  return value;
}

}  // namespace detail

inline void save(const Dataset& ds, const std::string& path) {
  const std::size_t n_points = ds.meta.grid.point_count();
  {
    AtomicFileWriter writer(path);
    std::ostream& out = writer.stream();
    out << "a_mm,b_mm,c_mm,d_mm,t_mm";
    for (std::size_t i = 1; i <= n_points; ++i) {
      char col[16];
      std::snprintf(col, sizeof(col), ",r_%04zu", i);
      out << col;
    }
    out << "\n";
    std::string line;
    for (const Sample& s : ds.samples) {
      if (s.curve.values_db.size() != n_points)
        throw std::runtime_error("save: sample curve length does not match grid");
      line.clear();
      line += detail::format_fixed(s.geometry.a, 6);
      line += ',';
      line += detail::format_fixed(s.geometry.b, 6);
      line += ',';
      line += detail::format_fixed(s.geometry.c, 6);
      line += ',';
      line += detail::format_fixed(s.geometry.d, 6);
      line += ',';
      line += detail::format_fixed(s.geometry.t, 6);
      for (double v : s.curve.values_db) {
        line += ',';
        line += detail::format_fixed(v, 6);
      }
      line += '\n';
      out << line;
    }
    writer.commit();
  }
  AtomicFileWriter meta_writer(path + ".meta");
  detail::write_metadata(meta_writer.stream(), ds.meta, ds.samples.size());
  meta_writer.commit();
}

inline Dataset load(const std::string& path) {
  Dataset ds;
  ds.meta = detail::read_metadata(path + ".meta");
  const std::size_t n_points = ds.meta.grid.point_count();
  const std::size_t n_cols = 5 + n_points;

  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line))
    throw std::runtime_error(path + ":1: missing header row");
  ++lineno;
  {
    std::size_t commas = static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
    if (line.rfind("a_mm,b_mm,c_mm,d_mm,t_mm", 0) != 0 || commas + 1 != n_cols)
      throw std::runtime_error(path + ":1: malformed header (expected " +
                               std::to_string(n_cols) + " columns)");
  }

  std::vector<double> cells(n_cols);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char* p = line.data();
    const char* line_end = p + line.size();
    std::size_t col = 0;
    while (true) {
      const char* cell_end = std::find(p, line_end, ',');
      if (col >= n_cols)
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": too many columns");
      cells[col] = detail::parse_cell(p, cell_end, path, lineno, col);
      ++col;
      if (cell_end == line_end) break;
      p = cell_end + 1;
    }
    if (col != n_cols)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(n_cols) + " columns, got " +
                               std::to_string(col));
    Sample s;
    s.geometry = {cells[0], cells[1], cells[2], cells[3], cells[4]};
    s.curve.grid = ds.meta.grid;
    s.curve.values_db.assign(cells.begin() + 5, cells.end());
    ds.samples.push_back(std::move(s));
  }
  if (ds.samples.empty())
    throw std::runtime_error(path + ": dataset has no sample rows");
  return ds;
}

}  // namespace fssinv
