#include "flock/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace flock {

std::vector<char> build_adjacency(std::span<const Vec2> positions,
                                  std::span<const double> ranges) {
  const int n = static_cast<int>(positions.size());
  if (ranges.size() != positions.size())
    throw std::invalid_argument("positions and ranges must have equal length");

  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = (positions[i] - positions[j]).norm();
      const double range = std::min(ranges[i], ranges[j]);
      if (dist < range) {
        adj[static_cast<std::size_t>(i) * n + j] = 1;
        adj[static_cast<std::size_t>(j) * n + i] = 1;
      }
    }
  }
  return adj;
}

std::vector<std::vector<int>> find_components(const std::vector<char>& adjacency, int n) {
  std::vector<std::vector<int>> components;
  std::vector<char> visited(n, 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<int> comp;
    stack.push_back(start);
    visited[start] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (!visited[w] && adjacency[static_cast<std::size_t>(v) * n + w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<int> degree_centrality(const std::vector<char>& adjacency, int n) {
  std::vector<int> degrees(n, 0);
  for (int i = 0; i < n; ++i) {
    int d = 0;
    for (int j = 0; j < n; ++j) d += adjacency[static_cast<std::size_t>(i) * n + j];
    degrees[i] = d;
  }
  return degrees;
}

PinSet select_pins(const std::vector<std::vector<int>>& components,
                   const std::vector<int>& degrees) {
  PinSet pins;
  pins.mask.assign(degrees.size(), 0);
  for (const auto& comp : components) {
    int best = comp.front();
    for (int v : comp)
      if (degrees[v] > degrees[best]) best = v;  // lowest index wins ties
    pins.drivers.push_back(best);
    pins.mask[best] = 1;
  }
  for (int v = 0; v < static_cast<int>(degrees.size()); ++v) {
    if (degrees[v] == 1) {
      pins.leaves.push_back(v);
      pins.mask[v] = 1;
    }
  }
  return pins;
}

FlockGraph build_graph(std::span<const Vec2> positions, std::span<const double> ranges) {
  FlockGraph g;
  g.n = static_cast<int>(positions.size());
  g.adjacency = build_adjacency(positions, ranges);
  g.degrees = degree_centrality(g.adjacency, g.n);
  g.components = find_components(g.adjacency, g.n);
  g.pins = select_pins(g.components, g.degrees);
  return g;
}

}  // namespace flock
