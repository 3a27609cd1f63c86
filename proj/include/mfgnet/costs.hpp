#pragma once

#include <string>

#include "mfgnet/fields.hpp"
#include "mfgnet/grid.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

struct PopulationParams {
  double rho = 1.0;    // mobility cost, > 0
  double a = 0.5;      // happiness threshold, in (0,1)
  double b = 4.0;      // overcrowding threshold, > 0
  double C = 1.0;      // overcrowding coefficient, >= 0
  double mu = 0.4;     // diffusion, > 0
  std::array<double, 2> control_bounds = {-5.0, 5.0};
};

struct InteractionParams {
  double delta = 0.1;     // kernel radius
  double epsilon = 1e-5;  // separation regularizer
};

enum class CommutingCost { linear, square_root, quadratic };

CommutingCost commuting_cost_from_string(const std::string& s);
std::string to_string(CommutingCost kind);

// H(x,p) = p^2 / (2 rho) + A(x).
double hamiltonian(double p, double rho, double housing);

// argmin_u { u p + rho u^2 / 2 } over [lo, hi], i.e. clamp(-p/rho).
double optimal_control(double p, double rho, double lo, double hi);

// (1/(2 delta)) * integral of m over the geodesic ball B_delta(node),
// quadrature weights restricted to ball nodes.
double kernel_average(const Grid& grid, const Vec& m, int node, double delta,
                      const Mat& node_dist);

// Separation cost G = max(a - r/(r+s+eps), 0) with r, s the smoothed own
// and other population densities at the node.
double separation_cost(const Grid& grid, const Vec& m1, const Vec& m2, int node,
                       int pop, const PopulationParams& pp, const InteractionParams& ip,
                       const Mat& node_dist);

// Overcrowding cost O = C * max(smoothed (m1+m2)/2 - b, 0).
double overcrowding_cost(const Grid& grid, const Vec& m1, const Vec& m2, int node,
                         int pop, const PopulationParams& pp, const InteractionParams& ip,
                         const Mat& node_dist);

// Nodewise R = S + O; coincident endpoint nodes receive identical values.
Vec coupling_cost(const Grid& grid, const Vec& m1, const Vec& m2, int pop,
                  const PopulationParams& pp, const InteractionParams& ip,
                  const Mat& node_dist);

// Elementwise d, sqrt(d) or d^2 of a distance matrix.
Mat commuting_cost_matrix(const Mat& dist, CommutingCost kind);

} // namespace mfgnet
