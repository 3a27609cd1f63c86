#include "mfgnet/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mfgnet {

Grid discretize(const Network& net, double dx) {
  if (dx <= 0.0) throw std::invalid_argument("discretize: dx must be positive");
  if (dx >= net.min_edge_length)
    throw std::invalid_argument("discretize: dx too large, must be below the shortest edge");

  Grid grid;
  grid.total_length = net.total_length;
  grid.edges.resize(net.edges.size());
  for (const Edge& e : net.edges) {
    // guard against ceil(l/dx) picking up an extra node when l/dx is integral
    const int count = static_cast<int>(std::ceil(e.length / dx * (1.0 - 1e-14))) + 1;
    GridEdge ge;
    ge.first_node = grid.num_nodes;
    ge.count = count;
    ge.spacing = e.length / (count - 1);
    grid.edges[e.id] = ge;
    grid.num_nodes += count;
  }

  grid.edge_of.resize(grid.num_nodes);
  grid.arc_of.resize(grid.num_nodes);
  grid.weight.resize(grid.num_nodes);
  grid.vertex_of.assign(grid.num_nodes, -1);
  grid.coords.resize(grid.num_nodes);
  for (const Edge& e : net.edges) {
    const GridEdge& ge = grid.edges[e.id];
    for (int k = 0; k < ge.count; ++k) {
      const int n = ge.first_node + k;
      grid.edge_of[n] = e.id;
      grid.arc_of[n] = k == ge.count - 1 ? e.length : k * ge.spacing;
      grid.weight[n] = (k == 0 || k == ge.count - 1) ? ge.spacing / 2.0 : ge.spacing;
      grid.coords[n] = edge_point(net, e.id, grid.arc_of[n]);
    }
    grid.vertex_of[ge.first_node] = e.tail;
    grid.vertex_of[ge.first_node + ge.count - 1] = e.head;
  }

  // sites: vertices first, then interior nodes in node order
  const int nv = static_cast<int>(net.vertices.size());
  grid.site_of.resize(grid.num_nodes);
  grid.site_rep.assign(nv, -1);
  grid.num_sites = nv;
  for (int n = 0; n < grid.num_nodes; ++n) {
    const int v = grid.vertex_of[n];
    if (v >= 0) {
      grid.site_of[n] = v;
      if (grid.site_rep[v] < 0) grid.site_rep[v] = n;
    } else {
      grid.site_of[n] = grid.num_sites++;
      grid.site_rep.push_back(n);
    }
  }
  grid.site_weight.assign(grid.num_sites, 0.0);
  for (int n = 0; n < grid.num_nodes; ++n) grid.site_weight[grid.site_of[n]] += grid.weight[n];

  grid.arcs.resize(grid.num_nodes);
  for (const GridEdge& ge : grid.edges)
    for (int k = 0; k + 1 < ge.count; ++k) {
      const int a = ge.first_node + k;
      const int b = a + 1;
      grid.arcs[a].push_back({b, ge.spacing});
      grid.arcs[b].push_back({a, ge.spacing});
    }
  // coincident endpoint nodes at each vertex
  std::vector<std::vector<int>> vertex_nodes(nv);
  for (int n = 0; n < grid.num_nodes; ++n)
    if (grid.vertex_of[n] >= 0) vertex_nodes[grid.vertex_of[n]].push_back(n);
  for (const auto& nodes : vertex_nodes)
    for (size_t i = 0; i < nodes.size(); ++i)
      for (size_t j = i + 1; j < nodes.size(); ++j) {
        grid.arcs[nodes[i]].push_back({nodes[j], 0.0});
        grid.arcs[nodes[j]].push_back({nodes[i], 0.0});
      }
  return grid;
}

Mat geodesic_distance_matrix(const Grid& grid) {
  const int n = grid.num_nodes;
  Mat dist(n, n);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(n);
  using Item = std::pair<double, int>;
  for (int src = 0; src < n; ++src) {
    std::fill(d.begin(), d.end(), inf);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    d[src] = 0.0;
    heap.push({0.0, src});
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > d[u]) continue;
      for (const auto& [v, w] : grid.arcs[u]) {
        const double alt = du + w;
        if (alt < d[v]) {
          d[v] = alt;
          heap.push({alt, v});
        }
      }
    }
    for (int j = 0; j < n; ++j) dist(src, j) = d[j];
  }
  // rounding can make opposite sweeps differ at the last ulp
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double m = std::min(dist(i, j), dist(j, i));
      dist(i, j) = m;
      dist(j, i) = m;
    }
  return dist;
}

Mat site_distance_matrix(const Grid& grid, const Mat& node_dist) {
  const int m = grid.num_sites;
  Mat dist(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) dist(i, j) = node_dist(grid.site_rep[i], grid.site_rep[j]);
  return dist;
}

Mat site_euclidean_matrix(const Grid& grid) {
  const int m = grid.num_sites;
  Mat dist = Mat::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double d = (grid.coords[grid.site_rep[i]] - grid.coords[grid.site_rep[j]]).norm();
      dist(i, j) = d;
      dist(j, i) = d;
    }
  return dist;
}

} // namespace mfgnet
