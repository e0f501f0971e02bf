#pragma once

#include <optional>
#include <vector>

#include "farey/metric.hpp"
#include "farey/slope.hpp"

namespace farey {

// Verification oracle, kept independent of the production distance path:
// vertices come from plain window enumeration and edges from the pairwise
// |b*x - a*y| = 1 test, with no shared neighbor-generation code. Building
// the graph is quadratic in the vertex count; use it for checking, not
// for production queries.
class OracleGraph {
 public:
  explicit OracleGraph(const Window& w);

  const Window& window() const { return window_; }
  const std::vector<Slope>& vertices() const { return vertices_; }

  std::optional<int> index_of(const Slope& s) const;

  // Single-source BFS distances in the truncated graph; -1 for unreachable.
  std::vector<int> distances_from(const Slope& s) const;

  std::optional<int> distance(const Slope& s, const Slope& t) const;

 private:
  Window window_;
  std::vector<Slope> vertices_;  // sorted by (b, a)
  std::vector<std::vector<int>> adjacency_;
};

// Distance in the truncated graph over canonical slopes inside the window;
// nullopt when an endpoint is outside the window or the truncation
// disconnects the pair.
std::optional<int> oracle_distance_bfs(const Slope& s, const Slope& t, const Window& w);

}  // namespace farey
