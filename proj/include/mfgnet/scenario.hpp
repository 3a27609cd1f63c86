#pragma once

#include <array>
#include <string>
#include <vector>

#include "mfgnet/costs.hpp"
#include "mfgnet/grid.hpp"
#include "mfgnet/network.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

// Initial profile of one population, evaluated at node coordinates, floored
// at a positive level and renormalized to averaged integral 1.
struct InitialDensity {
  std::string kind = "uniform";  // "uniform" | "gaussian"
  double level = 1.0;            // uniform level (pre-normalization)
  Vec2 center = Vec2::Zero();    // gaussian parameters
  double gamma = 1.0;
  double baseline = 0.0;         // additive offset under the gaussian
};

enum class ConvergenceMetric { wasserstein1, linf };

struct FixedPointParams {
  double tol = 1e-4;
  int max_iter = 50;
  double lambda = 0.5;              // relaxation weight in (0,1]
  double guess_perturbation = 0.0;  // deterministic seed on the initial guess
  ConvergenceMetric metric = ConvergenceMetric::wasserstein1;
};

struct ScenarioConfig {
  std::string name = "custom";
  NetworkSpec network;
  std::array<PopulationParams, 2> populations;
  InteractionParams interaction;
  double sigma = 0.5;          // entropic regularization
  double sinkhorn_tol = 1e-8;
  int sinkhorn_max_iter = 200000;
  double T = 2.0;
  double dx = 0.01;
  double dt = 0.01;
  CommutingCost cost_kind = CommutingCost::linear;
  std::string cost_metric = "geodesic";  // "geodesic" | "euclidean"
  std::array<InitialDensity, 2> initial;
  double density_floor = 1e-3;
  int control_samples = 41;
  FixedPointParams fixed_point;
  int snapshot_stride = 10;
};

// Shipped presets: test1a, test1b, test1c, test1d, test2-lin, test2-sqr,
// test2-quad, test3.
bool is_preset(const std::string& name);
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Accepts a preset name or a path to a scenario file.
ScenarioConfig load_scenario(const std::string& path_or_name);

std::string scenario_to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const std::string& text);

// Schema and consistency checks, including the vertex-crossing bound on dt
// and integrality of T/dt. Throws with a field-level message on failure.
void validate_scenario(const ScenarioConfig& config);

int num_time_steps(const ScenarioConfig& config);

Vec initial_density(const ScenarioConfig& config, int pop, const Network& net,
                    const Grid& grid);

} // namespace mfgnet
