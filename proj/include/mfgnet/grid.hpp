#pragma once

#include <utility>
#include <vector>

#include "mfgnet/network.hpp"
#include "mfgnet/types.hpp"

namespace mfgnet {

struct GridEdge {
  int first_node = 0;
  int count = 0;       // nodes on this edge, endpoints included
  double spacing = 0;  // length / (count - 1), <= dx
};

// Spatial discretization of the network. Every edge carries its own chain
// of nodes; edge endpoints are grid nodes, so a vertex of degree d is
// represented by d coincident nodes (one per incident edge). Value fields
// keep a single value across those; density fields keep one per edge.
// Coincident endpoint nodes are merged into "sites": sites 0..V-1 are the
// vertices, interior nodes follow in node order.
struct Grid {
  std::vector<GridEdge> edges;
  int num_nodes = 0;
  int num_sites = 0;
  double total_length = 0.0;

  std::vector<int> edge_of;     // per node
  std::vector<double> arc_of;   // per node, exact 0 / length at endpoints
  std::vector<double> weight;   // trapezoidal quadrature weight
  std::vector<int> vertex_of;   // vertex id at endpoints, -1 inside
  std::vector<Vec2> coords;

  std::vector<int> site_of;        // node -> site
  std::vector<int> site_rep;       // site -> representative node
  std::vector<double> site_weight; // summed node weights

  // Grid graph used for geodesic distances and connectivity: consecutive
  // nodes along an edge (weight = spacing) and coincident endpoint nodes
  // (weight = 0).
  std::vector<std::vector<std::pair<int, double>>> arcs;

  int node(int edge, int k) const { return edges[edge].first_node + k; }
};

// N_alpha = ceil(length/dx) + 1 nodes per edge, uniform spacing.
Grid discretize(const Network& net, double dx);

// All-pairs shortest path over the grid graph; symmetric, zero diagonal.
Mat geodesic_distance_matrix(const Grid& grid);

// Distance matrix restricted to site representatives.
Mat site_distance_matrix(const Grid& grid, const Mat& node_dist);

// Pairwise Euclidean distances between site coordinates.
Mat site_euclidean_matrix(const Grid& grid);

} // namespace mfgnet
