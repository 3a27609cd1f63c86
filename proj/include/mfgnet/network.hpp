#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mfgnet/types.hpp"

namespace mfgnet {

struct Vertex {
  int id = -1;
  Vec2 coords = Vec2::Zero();
};

// Housing cost along an edge: either a constant or a piecewise-linear
// profile sampled uniformly over [0, length].
struct HousingProfile {
  double constant = 0.0;
  std::vector<double> samples;

  double at(double arclength, double length) const;
  bool operator==(const HousingProfile&) const = default;
};

struct Edge {
  int id = -1;
  int tail = -1;  // vertex with the smaller id
  int head = -1;
  double length = 0.0;
  Vec2 unit = Vec2::Zero();  // (head - tail) / length
  std::array<double, 2> mu = {0.0, 0.0};
  std::array<HousingProfile, 2> housing;
  std::array<std::array<double, 2>, 2> control_bounds = {{{-5.0, 5.0}, {-5.0, 5.0}}};
};

struct VertexSpec {
  int id = -1;
  double x = 0.0;
  double y = 0.0;
  bool operator==(const VertexSpec&) const = default;
};

struct EdgeSpec {
  int tail = -1;
  int head = -1;
  std::optional<std::array<double, 2>> mu;  // defaults apply when absent
  std::optional<std::array<HousingProfile, 2>> housing;
  std::optional<std::array<std::array<double, 2>, 2>> control_bounds;
  bool operator==(const EdgeSpec&) const = default;
};

// Kirchhoff weights for one vertex, one list per population, aligned with
// the incident edges sorted by edge id.
struct GammaOverride {
  int vertex = -1;
  std::array<std::vector<double>, 2> values;
  bool operator==(const GammaOverride&) const = default;
};

struct NetworkSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::array<double, 2> default_mu = {0.4, 0.2};
  std::array<HousingProfile, 2> default_housing = {HousingProfile{1.0, {}}, HousingProfile{1.0, {}}};
  std::array<std::array<double, 2>, 2> default_control_bounds = {{{-5.0, 5.0}, {-5.0, 5.0}}};
  std::vector<GammaOverride> gamma;
};

struct Network {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  // Per vertex: incident edge ids (sorted) and orientation signs n_{j,alpha}
  // (+1 when the vertex is the head of the edge, -1 when it is the tail).
  std::vector<std::vector<int>> incident;
  std::vector<std::vector<int>> orientation;
  // gamma[pop][vertex][k] aligned with incident[vertex].
  std::array<std::vector<std::vector<double>>, 2> gamma;
  double total_length = 0.0;
  double min_edge_length = 0.0;

  int degree(int vertex) const { return static_cast<int>(incident[vertex].size()); }
  int incident_slot(int vertex, int edge) const;
};

// Builds and validates the metric graph. When gamma overrides are absent,
// gamma_{j,alpha} = 1 / (deg(j) * mu_alpha) so that sum gamma*mu = 1 and
// vertex exits are uniform. Supplied gammas violating the normalization
// are rejected.
Network build_network(const NetworkSpec& spec);

// Planar point at the given arclength of an edge.
Vec2 edge_point(const Network& net, int edge, double arclength);

// Exit probabilities p_{j,alpha} = gamma*mu / sum(gamma*mu), aligned with
// incident[vertex]; adjusted so they sum to 1 exactly.
Vec transition_probabilities(const Network& net, int vertex, int pop);

// Inverse of build_network up to representation: rebuilding from the
// returned spec reproduces the same network.
NetworkSpec network_to_spec(const Network& net);

} // namespace mfgnet
