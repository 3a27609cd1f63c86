#pragma once

#include <vector>

#include "mfgnet/costs.hpp"
#include "mfgnet/fields.hpp"
#include "mfgnet/grid.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

struct ValueStep {
  Vec values;
  Vec controls;
};

// Backward value trajectory: values[n] and the minimizing controls used to
// step from slice n to n+1 (controls[N_T] duplicates the last step).
struct ValueTrajectory {
  std::vector<Vec> values;
  std::vector<Vec> controls;
};

// One backward semi-Lagrangian step:
//   Phi[j] = min_u { sum_c p_c I[Phi_next](Psi_c(x_j,u,dt)) + dt (L(x_j,u) + rhs[j]) }
// with L = rho u^2 / 2 + A(x_j). Controls are sampled uniformly over the
// edge's control interval; the candidate set is fixed per node so the step
// is monotone in (Phi_next, rhs). Ties break toward smaller |u|, then
// toward the negative sign. Vertices get a single value from a
// vertex-centered branch set.
ValueStep hj_backward_step(const Network& net, const Grid& grid, const Vec& phi_next,
                           const Vec& rhs, const PopulationParams& pp, int pop,
                           double dt, int control_samples);

// Backward recursion from Phi(T) = 0; rhs[n] is used for the step ending
// at slice n (the earlier time of the step).
ValueTrajectory solve_hj(const Network& net, const Grid& grid,
                         const std::vector<Vec>& rhs, const PopulationParams& pp,
                         int pop, double dt, int control_samples);

// Pure transfer part of the scheme at fixed controls:
//   out[k] = sum_c p_c I[phi](Psi_c(x_k, u_k, dt)).
// Its adjoint is the density transfer of the forward solver.
Vec apply_value_transfer(const Network& net, const Grid& grid, const Vec& phi,
                         const Vec& controls, int pop, double dt);

} // namespace mfgnet
