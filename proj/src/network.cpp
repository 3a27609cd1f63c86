#include "mfgnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfgnet {

double HousingProfile::at(double arclength, double length) const {
  if (samples.empty()) return constant;
  if (samples.size() == 1) return samples.front();
  const double t = std::clamp(arclength / length, 0.0, 1.0) * (samples.size() - 1);
  const int cell = std::min(static_cast<int>(t), static_cast<int>(samples.size()) - 2);
  const double frac = t - cell;
  return (1.0 - frac) * samples[cell] + frac * samples[cell + 1];
}

int Network::incident_slot(int vertex, int edge) const {
  const auto& list = incident[vertex];
  for (int k = 0; k < static_cast<int>(list.size()); ++k)
    if (list[k] == edge) return k;
  throw std::logic_error("edge not incident to vertex");
}

Network build_network(const NetworkSpec& spec) {
  if (spec.vertices.empty()) throw std::invalid_argument("network: no vertices");
  if (spec.edges.empty()) throw std::invalid_argument("network: no edges");

  Network net;
  const int nv = static_cast<int>(spec.vertices.size());
  net.vertices.resize(nv);
  std::vector<bool> seen(nv, false);
  for (const auto& vs : spec.vertices) {
    if (vs.id < 0 || vs.id >= nv || seen[vs.id])
      throw std::invalid_argument("network: vertex ids must be unique and contiguous from 0");
    seen[vs.id] = true;
    net.vertices[vs.id] = Vertex{vs.id, Vec2(vs.x, vs.y)};
  }

  std::set<std::pair<int, int>> edge_keys;
  net.incident.resize(nv);
  net.orientation.resize(nv);
  for (const auto& es : spec.edges) {
    if (es.tail < 0 || es.tail >= nv || es.head < 0 || es.head >= nv)
      throw std::invalid_argument("network: edge endpoint out of range");
    if (es.tail >= es.head)
      throw std::invalid_argument("network: edges must be declared with tail id < head id");
    if (!edge_keys.insert({es.tail, es.head}).second)
      throw std::invalid_argument("network: duplicate edge " + std::to_string(es.tail) + "-" +
                                  std::to_string(es.head));
    Edge e;
    e.id = static_cast<int>(net.edges.size());
    e.tail = es.tail;
    e.head = es.head;
    const Vec2 d = net.vertices[e.head].coords - net.vertices[e.tail].coords;
    e.length = d.norm();
    if (e.length <= 0.0) throw std::invalid_argument("network: zero-length edge");
    e.unit = d / e.length;
    e.mu = es.mu.value_or(spec.default_mu);
    e.housing = es.housing.value_or(spec.default_housing);
    for (int p = 0; p < 2; ++p)
      if (e.mu[p] <= 0.0) throw std::invalid_argument("network: mu must be positive");
    e.control_bounds = es.control_bounds.value_or(spec.default_control_bounds);
    for (int p = 0; p < 2; ++p)
      if (e.control_bounds[p][0] > e.control_bounds[p][1])
        throw std::invalid_argument("network: empty control interval");
    net.incident[e.tail].push_back(e.id);
    net.incident[e.head].push_back(e.id);
    net.edges.push_back(e);
  }

  for (int v = 0; v < nv; ++v) {
    std::sort(net.incident[v].begin(), net.incident[v].end());
    for (int eid : net.incident[v])
      net.orientation[v].push_back(net.edges[eid].head == v ? +1 : -1);
    if (net.incident[v].empty())
      throw std::invalid_argument("network: isolated vertex " + std::to_string(v));
  }

  // connectivity
  std::vector<bool> reached(nv, false);
  std::vector<int> stack = {0};
  reached[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int eid : net.incident[v]) {
      const Edge& e = net.edges[eid];
      const int w = e.tail == v ? e.head : e.tail;
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
    throw std::invalid_argument("network: graph is not connected");

  // Kirchhoff weights: uniform default 1/(deg * mu), overrides must satisfy
  // sum gamma*mu = 1 and are rejected otherwise.
  for (int p = 0; p < 2; ++p) {
    net.gamma[p].resize(nv);
    for (int v = 0; v < nv; ++v) {
      const int deg = net.degree(v);
      net.gamma[p][v].resize(deg);
      for (int k = 0; k < deg; ++k)
        net.gamma[p][v][k] = 1.0 / (deg * net.edges[net.incident[v][k]].mu[p]);
    }
  }
  for (const auto& ov : spec.gamma) {
    if (ov.vertex < 0 || ov.vertex >= nv)
      throw std::invalid_argument("network: gamma override for unknown vertex");
    const int deg = net.degree(ov.vertex);
    for (int p = 0; p < 2; ++p) {
      if (static_cast<int>(ov.values[p].size()) != deg)
        throw std::invalid_argument("network: gamma override size mismatch at vertex " +
                                    std::to_string(ov.vertex));
      double sum = 0.0;
      for (int k = 0; k < deg; ++k) {
        if (ov.values[p][k] <= 0.0)
          throw std::invalid_argument("network: gamma must be positive");
        sum += ov.values[p][k] * net.edges[net.incident[ov.vertex][k]].mu[p];
      }
      if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("network: gamma*mu must sum to 1 at vertex " +
                                    std::to_string(ov.vertex));
      net.gamma[p][ov.vertex] = ov.values[p];
    }
  }

  net.total_length = 0.0;
  net.min_edge_length = net.edges.front().length;
  for (const Edge& e : net.edges) {
    net.total_length += e.length;
    net.min_edge_length = std::min(net.min_edge_length, e.length);
  }
  return net;
}

Vec2 edge_point(const Network& net, int edge, double arclength) {
  const Edge& e = net.edges.at(edge);
  if (arclength < -1e-12 || arclength > e.length + 1e-12)
    throw std::out_of_range("edge_point: arclength outside [0, length]");
  const double y = std::clamp(arclength, 0.0, e.length);
  return (y * net.vertices[e.head].coords + (e.length - y) * net.vertices[e.tail].coords) /
         e.length;
}

Vec transition_probabilities(const Network& net, int vertex, int pop) {
  if (vertex < 0 || vertex >= static_cast<int>(net.vertices.size()))
    throw std::out_of_range("transition_probabilities: unknown vertex");
  const int deg = net.degree(vertex);
  Vec p(deg);
  double sum = 0.0;
  for (int k = 0; k < deg; ++k) {
    p[k] = net.gamma[pop][vertex][k] * net.edges[net.incident[vertex][k]].mu[pop];
    sum += p[k];
  }
  p /= sum;
  p[deg - 1] = 1.0 - p.head(deg - 1).sum();  // exact unit total
  return p;
}

NetworkSpec network_to_spec(const Network& net) {
  NetworkSpec spec;
  for (const Vertex& v : net.vertices)
    spec.vertices.push_back({v.id, v.coords.x(), v.coords.y()});
  for (const Edge& e : net.edges) {
    EdgeSpec es;
    es.tail = e.tail;
    es.head = e.head;
    es.mu = e.mu;
    es.housing = e.housing;
    es.control_bounds = e.control_bounds;
    spec.edges.push_back(es);
  }
  for (int v = 0; v < static_cast<int>(net.vertices.size()); ++v) {
    GammaOverride ov;
    ov.vertex = v;
    ov.values[0] = net.gamma[0][v];
    ov.values[1] = net.gamma[1][v];
    spec.gamma.push_back(ov);
  }
  return spec;
}

} // namespace mfgnet
