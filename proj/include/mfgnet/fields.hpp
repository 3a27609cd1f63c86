#pragma once

#include <array>

#include "mfgnet/grid.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

// Hat-function weights at a location: a convex combination of at most two
// bracketing nodes on the same edge.
struct BasisWeights {
  std::array<int, 2> nodes = {-1, -1};
  std::array<double, 2> weights = {0.0, 0.0};
  int count = 0;
};

// Length-averaged network integral: (1/|Gamma|) sum_alpha int_alpha v dx,
// trapezoidal per edge. Probability densities average to 1.
double averaged_integral(const Grid& grid, const Vec& field);

// Piecewise-linear interpolation along an edge; exact at nodes.
double interpolate(const Grid& grid, const Vec& field, int edge, double arclength);

BasisWeights basis_weights(const Grid& grid, int edge, double arclength);

// Enforces the vertex partition law m_alpha / gamma_alpha = m_beta / gamma_beta
// while preserving the local trapezoidal mass at each vertex.
void project_vertex_ratios(const Network& net, const Grid& grid, int pop, Vec& density);

// Node masses w_i * m_i / |Gamma| aggregated over coincident endpoint nodes.
Vec site_masses(const Grid& grid, const Vec& density);

// Copies a per-site value to every constituent node (single-valued at vertices).
Vec expand_site_values(const Grid& grid, const Vec& site_values);

// Exact 1-Wasserstein distance between two probability densities, cost =
// geodesic distance between sites. Solved by the exact transport LP after
// cancelling common mass (valid since the cost is a metric).
double wasserstein1(const Grid& grid, const Vec& m1, const Vec& m2, const Mat& site_dist);

} // namespace mfgnet
