#pragma once

#include <vector>

#include "mfgnet/costs.hpp"
#include "mfgnet/grid.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

// Exact transpose of the value transfer: each node's mass w_k M_k / |Gamma|
// is pushed through its branch set and deposited through the interpolation
// basis, then converted back to a density. Mass is conserved by
// construction and nonnegativity is preserved.
Vec apply_density_transfer(const Network& net, const Grid& grid, const Vec& density,
                           const Vec& controls, int pop, double dt);

// Density transfer followed by the vertex-ratio projection.
Vec fp_forward_step(const Network& net, const Grid& grid, const Vec& density,
                    const Vec& controls, int pop, double dt);

// Forward recursion from m0; controls[n] moves slice n to n+1.
std::vector<Vec> solve_fp(const Network& net, const Grid& grid, const Vec& m0,
                          const std::vector<Vec>& controls, int pop, double dt);

// Mass-weighted nodal pairing <phi, m> = sum_i w_i phi_i m_i / |Gamma|,
// the duality pairing of the two transfers.
double field_pairing(const Grid& grid, const Vec& phi, const Vec& density);

} // namespace mfgnet
