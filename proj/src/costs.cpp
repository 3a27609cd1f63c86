#include "mfgnet/costs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfgnet {

CommutingCost commuting_cost_from_string(const std::string& s) {
  if (s == "linear" || s == "lin") return CommutingCost::linear;
  if (s == "square_root" || s == "sqr" || s == "sqrt") return CommutingCost::square_root;
  if (s == "quadratic" || s == "quad") return CommutingCost::quadratic;
  throw std::invalid_argument("unknown commuting cost kind: " + s);
}

std::string to_string(CommutingCost kind) {
  switch (kind) {
    case CommutingCost::linear: return "linear";
    case CommutingCost::square_root: return "square_root";
    case CommutingCost::quadratic: return "quadratic";
  }
  return "linear";
}

double hamiltonian(double p, double rho, double housing) {
  return p * p / (2.0 * rho) + housing;
}

double optimal_control(double p, double rho, double lo, double hi) {
  return std::clamp(-p / rho, lo, hi);
}

double kernel_average(const Grid& grid, const Vec& m, int node, double delta,
                      const Mat& node_dist) {
  if (delta <= 0.0) throw std::invalid_argument("kernel_average: delta must be positive");
  double sum = 0.0;
  for (int j = 0; j < grid.num_nodes; ++j)
    if (node_dist(node, j) < delta) sum += grid.weight[j] * m[j];
  return sum / (2.0 * delta);
}

double separation_cost(const Grid& grid, const Vec& m1, const Vec& m2, int node,
                       int pop, const PopulationParams& pp, const InteractionParams& ip,
                       const Mat& node_dist) {
  const double r = kernel_average(grid, pop == 0 ? m1 : m2, node, ip.delta, node_dist);
  const double s = kernel_average(grid, pop == 0 ? m2 : m1, node, ip.delta, node_dist);
  return std::max(pp.a - r / (r + s + ip.epsilon), 0.0);
}

double overcrowding_cost(const Grid& grid, const Vec& m1, const Vec& m2, int node,
                         int pop, const PopulationParams& pp, const InteractionParams& ip,
                         const Mat& node_dist) {
  const Vec avg = 0.5 * (m1 + m2);
  return pp.C * std::max(kernel_average(grid, avg, node, ip.delta, node_dist) - pp.b, 0.0);
}

Vec coupling_cost(const Grid& grid, const Vec& m1, const Vec& m2, int pop,
                  const PopulationParams& pp, const InteractionParams& ip,
                  const Mat& node_dist) {
  const Vec& own = pop == 0 ? m1 : m2;
  const Vec& other = pop == 0 ? m2 : m1;
  const Vec avg = 0.5 * (m1 + m2);
  Vec out(grid.num_nodes);
  for (int n = 0; n < grid.num_nodes; ++n) {
    double r = 0.0, s = 0.0, tot = 0.0;
    for (int j = 0; j < grid.num_nodes; ++j) {
      if (node_dist(n, j) < ip.delta) {
        const double w = grid.weight[j];
        r += w * own[j];
        s += w * other[j];
        tot += w * avg[j];
      }
    }
    r /= 2.0 * ip.delta;
    s /= 2.0 * ip.delta;
    tot /= 2.0 * ip.delta;
    const double sep = std::max(pp.a - r / (r + s + ip.epsilon), 0.0);
    const double over = pp.C * std::max(tot - pp.b, 0.0);
    out[n] = sep + over;
  }
  return out;
}

Mat commuting_cost_matrix(const Mat& dist, CommutingCost kind) {
  switch (kind) {
    case CommutingCost::linear: return dist;
    case CommutingCost::square_root: return dist.array().sqrt().matrix();
    case CommutingCost::quadratic: return dist.array().square().matrix();
  }
  return dist;
}

} // namespace mfgnet
