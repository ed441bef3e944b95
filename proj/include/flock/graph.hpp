#pragma once

#include <span>
#include <vector>

#include "flock/model.hpp"

namespace flock {

/// Pin selection for navigation: one maximum-degree vertex per component
/// (drivers) plus every degree-1 vertex (leaves).
struct PinSet {
  std::vector<int> drivers;  // P_d, one entry per component, component order
  std::vector<int> leaves;   // P_l, ascending
  std::vector<char> mask;    // mask[i] != 0 iff i in P_d or P_l

  bool pinned(int i) const {
    return i >= 0 && i < static_cast<int>(mask.size()) && mask[i] != 0;
  }
};

/// Proximity-graph snapshot with the derived quantities the controller
/// needs: degrees, connected components, and the pin set.
struct FlockGraph {
  int n = 0;
  std::vector<char> adjacency;  // n*n row-major, symmetric, zero diagonal
  std::vector<int> degrees;
  std::vector<std::vector<int>> components;  // ordered by smallest vertex
  PinSet pins;

  bool edge(int i, int j) const { return adjacency[static_cast<std::size_t>(i) * n + j] != 0; }
};

/// A_ij = 1 iff i != j and ||x_i - x_j|| < min(r_i, r_j). Strict inequality;
/// asymmetric ranges are symmetrized with the min so the graph stays
/// undirected.
std::vector<char> build_adjacency(std::span<const Vec2> positions,
                                  std::span<const double> ranges);

/// Connected components of a symmetric adjacency matrix. Each component is
/// sorted ascending; components are ordered by their smallest vertex.
std::vector<std::vector<int>> find_components(const std::vector<char>& adjacency, int n);

/// Degree centrality per vertex: row sums of the adjacency matrix.
std::vector<int> degree_centrality(const std::vector<char>& adjacency, int n);

/// Pin set from components and degrees. The driver of each component is its
/// argmax-degree vertex, lowest index on ties; leaves are all degree-1
/// vertices.
PinSet select_pins(const std::vector<std::vector<int>>& components,
                   const std::vector<int>& degrees);

/// Builds the full snapshot: adjacency, degrees, components, pins.
FlockGraph build_graph(std::span<const Vec2> positions, std::span<const double> ranges);

}  // namespace flock
