#pragma once

#include <array>
#include <string>
#include <vector>

#include "mfgnet/grid.hpp"
#include "mfgnet/hj.hpp"
#include "mfgnet/network.hpp"
#include "mfgnet/ot.hpp"
#include "mfgnet/scenario.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

struct OuterRecord {
  int iteration = 0;
  double metric = 0.0;          // max over populations and slices
  double max_mass_error = 0.0;  // |averaged integral - 1|
  double min_density = 0.0;
};

struct EquilibriumSolution {
  ScenarioConfig config;
  Network network;
  Grid grid;
  std::array<std::vector<Vec>, 2> densities;  // [pop][slice]
  std::array<std::vector<Vec>, 2> values;
  std::array<std::vector<Vec>, 2> controls;
  std::vector<Vec> theta1, theta2;            // per slice, node fields
  std::vector<double> transport_cost;         // per slice
  std::vector<OuterRecord> history;
  std::vector<double> overlap;                // per slice
  std::array<std::vector<int>, 2> clusters;   // per pop, per slice
  bool converged = false;
  int iterations = 0;
};

// Fixed-point iteration over (OT potentials -> HJ -> FP -> relaxation),
// stopping when the densities move less than the configured tolerance.
// Slice-level transport solves run in parallel; results are independent of
// the thread count.
EquilibriumSolution run_fixed_point(const ScenarioConfig& config, int threads = 1);

// Averaged integral of min(m1, m2): 1 for identical densities, near the
// floor level for segregated ones.
double overlap_index(const Grid& grid, const Vec& m1, const Vec& m2);

// Connected components of {m > 1.5 * averaged_integral(m)} in the grid graph.
int cluster_count(const Grid& grid, const Vec& m, double threshold_factor = 1.5);

// CSV snapshots (one row per node per sampled slice) plus a JSON run
// document with the config echo, convergence history and diagnostics.
void write_snapshots(const EquilibriumSolution& solution, const std::string& out_dir,
                     int stride);

} // namespace mfgnet
