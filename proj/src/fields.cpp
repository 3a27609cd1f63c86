#include "mfgnet/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "mfgnet/ot.hpp"

namespace mfgnet {

double averaged_integral(const Grid& grid, const Vec& field) {
  if (field.size() != grid.num_nodes)
    throw std::invalid_argument("averaged_integral: field size mismatch");
  double sum = 0.0;
  for (int n = 0; n < grid.num_nodes; ++n) sum += grid.weight[n] * field[n];
  return sum / grid.total_length;
}

BasisWeights basis_weights(const Grid& grid, int edge, double arclength) {
  const GridEdge& ge = grid.edges.at(edge);
  const double length = grid.arc_of[ge.first_node + ge.count - 1];
  if (arclength < -1e-12 || arclength > length + 1e-12)
    throw std::out_of_range("basis_weights: location outside edge");
  const double y = std::clamp(arclength, 0.0, length);
  int cell = std::min(static_cast<int>(y / ge.spacing), ge.count - 2);
  double t = y / ge.spacing - cell;
  if (t > 1.0) t = 1.0;
  BasisWeights bw;
  if (t == 0.0) {
    bw.count = 1;
    bw.nodes[0] = ge.first_node + cell;
    bw.weights[0] = 1.0;
  } else if (t == 1.0) {
    bw.count = 1;
    bw.nodes[0] = ge.first_node + cell + 1;
    bw.weights[0] = 1.0;
  } else {
    bw.count = 2;
    bw.nodes[0] = ge.first_node + cell;
    bw.nodes[1] = ge.first_node + cell + 1;
    bw.weights[0] = 1.0 - t;
    bw.weights[1] = t;
  }
  return bw;
}

double interpolate(const Grid& grid, const Vec& field, int edge, double arclength) {
  const BasisWeights bw = basis_weights(grid, edge, arclength);
  double v = 0.0;
  for (int i = 0; i < bw.count; ++i) v += bw.weights[i] * field[bw.nodes[i]];
  return v;
}

void project_vertex_ratios(const Network& net, const Grid& grid, int pop, Vec& density) {
  for (int v = 0; v < static_cast<int>(net.vertices.size()); ++v) {
    const auto& edges = net.incident[v];
    if (edges.size() < 2) continue;
    double mass = 0.0, denom = 0.0;
    for (size_t k = 0; k < edges.size(); ++k) {
      const GridEdge& ge = grid.edges[edges[k]];
      const int n = net.edges[edges[k]].tail == v ? ge.first_node : ge.first_node + ge.count - 1;
      mass += grid.weight[n] * density[n];
      denom += grid.weight[n] * net.gamma[pop][v][k];
    }
    const double c = mass / denom;
    for (size_t k = 0; k < edges.size(); ++k) {
      const GridEdge& ge = grid.edges[edges[k]];
      const int n = net.edges[edges[k]].tail == v ? ge.first_node : ge.first_node + ge.count - 1;
      density[n] = c * net.gamma[pop][v][k];
    }
  }
}

Vec site_masses(const Grid& grid, const Vec& density) {
  Vec masses = Vec::Zero(grid.num_sites);
  for (int n = 0; n < grid.num_nodes; ++n)
    masses[grid.site_of[n]] += grid.weight[n] * density[n] / grid.total_length;
  return masses;
}

Vec expand_site_values(const Grid& grid, const Vec& site_values) {
  Vec out(grid.num_nodes);
  for (int n = 0; n < grid.num_nodes; ++n) out[n] = site_values[grid.site_of[n]];
  return out;
}

double wasserstein1(const Grid& grid, const Vec& m1, const Vec& m2, const Mat& site_dist) {
  const Vec a = site_masses(grid, m1);
  const Vec b = site_masses(grid, m2);
  if (std::abs(a.sum() - b.sum()) > 1e-9)
    throw std::invalid_argument("wasserstein1: unbalanced masses");
  // cost is a metric, so common mass stays in place: transport only the
  // signed difference
  std::vector<int> surplus, deficit;
  for (int i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d > 0.0) surplus.push_back(i);
    else if (d < 0.0) deficit.push_back(i);
  }
  if (surplus.empty() || deficit.empty()) return 0.0;
  Vec sa(surplus.size()), sb(deficit.size());
  Mat cost(surplus.size(), deficit.size());
  for (size_t i = 0; i < surplus.size(); ++i) sa[i] = a[surplus[i]] - b[surplus[i]];
  for (size_t j = 0; j < deficit.size(); ++j) sb[j] = b[deficit[j]] - a[deficit[j]];
  for (size_t i = 0; i < surplus.size(); ++i)
    for (size_t j = 0; j < deficit.size(); ++j) cost(i, j) = site_dist(surplus[i], deficit[j]);
  // rebalance the float residue
  sb *= sa.sum() / sb.sum();
  return exact_ot_lp(sa, sb, cost).cost;
}

} // namespace mfgnet
