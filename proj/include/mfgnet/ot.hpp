#pragma once

#include <utility>

#include "mfgnet/grid.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

struct TransportSolution {
  Mat plan;            // coupling, row sums ~ first marginal
  Vec log_u, log_v;    // log of the Sinkhorn scaling vectors (empty for the LP)
  Vec theta1, theta2;  // dual potentials (LP: exact duals)
  double cost = 0.0;   // <plan, C>
  double sigma = 0.0;  // 0 for the exact LP
  int iterations = 0;
  double marginal_error = 0.0;
  bool converged = true;
};

struct SinkhornParams {
  double sigma = 0.5;
  double tol = 1e-8;           // max-norm marginal violation
  int max_iter = 200000;
  double log_switch = 0.05;    // below this sigma run in log domain
  bool warm_start_scaling = true;  // anneal sigma in the log-domain path
};

// Entropic transport by alternating scalings u = a/(Kv), v = b/(K^T u)
// with K = exp(-C/sigma). Marginals must be strictly positive with equal
// totals. Non-convergence is reported through the converged flag.
TransportSolution sinkhorn(const Vec& a, const Vec& b, const Mat& C,
                           const SinkhornParams& params);

// Normalized potentials from positive scaling vectors: theta1 = sigma log u
// shifted to zero averaged integral over the network, theta2 = sigma log v
// shifted oppositely.
std::pair<Vec, Vec> recover_potentials(const Vec& u, const Vec& v, double sigma,
                                       const Grid& grid);

// Exact solution of the transport LP by the transportation simplex, with
// optimal dual potentials. Complementary slackness holds on the support.
// N beyond the cap is rejected.
TransportSolution exact_ot_lp(const Vec& a, const Vec& b, const Mat& C,
                              int size_cap = 600);

struct OtSlice {
  Vec theta1, theta2;  // node fields, zero-mean theta1
  double cost = 0.0;
  int iterations = 0;
  double marginal_error = 0.0;
  bool converged = true;
};

// Transport between two densities at one time slice: densities are turned
// into site masses, solved entropically, and the mass-relative potentials
// theta1 = -sigma log(K v), theta2 = -sigma log(K^T u) are normalized and
// expanded back to node fields. These converge to the Kantorovich
// potentials as sigma -> 0 and inherit the cost's modulus of continuity.
OtSlice ot_at_time(const Grid& grid, const Vec& m1, const Vec& m2, const Mat& site_cost,
                   const SinkhornParams& params);

} // namespace mfgnet
