#pragma once

#include <vector>

#include "mfgnet/network.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

struct Branch {
  double prob = 0.0;
  int edge = -1;
  double arclength = 0.0;
};

// One-step expansion of the Euler-Maruyama dynamics: every reachable
// position with its probability. Probabilities are dyadic products of 1/2
// and the vertex exit probabilities, so they sum to 1.
struct BranchSet {
  int source_edge = -1;
  double source_arclength = 0.0;
  double control = 0.0;
  double dt = 0.0;
  std::vector<Branch> branches;
  int reflections = 0;  // residual vertex hits resolved by reflection
};

// Enumerates the drift/noise sub-cases for one time step. A source at an
// edge endpoint (arclength exactly 0 or length) is treated as sitting on
// the vertex: it scatters into the incident edges with the transition
// probabilities and drifts into each one with speed |u|.
BranchSet branch_step(const Network& net, int edge, double arclength, double u,
                      int pop, double dt);

// Probability-weighted mean of the branch destinations in the plane.
Vec2 mean_position(const Network& net, const BranchSet& branches);

// Largest dt such that sqrt(2 dt max mu) <= min edge length / 2; scenario
// validation rejects anything above it.
double max_stable_dt(const Network& net);

} // namespace mfgnet
