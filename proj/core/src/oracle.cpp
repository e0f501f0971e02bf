#include "farey/oracle.hpp"

#include <algorithm>
#include <deque>

namespace farey {

OracleGraph::OracleGraph(const Window& w) : window_(w), vertices_(window_slopes(w)) {
  const std::size_t n = vertices_.size();
  adjacency_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersection_number(vertices_[i], vertices_[j]) == 1) {
        adjacency_[i].push_back(static_cast<int>(j));
        adjacency_[j].push_back(static_cast<int>(i));
      }
    }
  }
}

std::optional<int> OracleGraph::index_of(const Slope& s) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it == vertices_.end() || !(*it == s)) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<int> OracleGraph::distances_from(const Slope& s) const {
  std::vector<int> dist(vertices_.size(), -1);
  auto src = index_of(s);
  if (!src) return dist;
  std::deque<int> queue{*src};
  dist[*src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int n : adjacency_[v]) {
      if (dist[n] < 0) {
        dist[n] = dist[v] + 1;
        queue.push_back(n);
      }
    }
  }
  return dist;
}

std::optional<int> OracleGraph::distance(const Slope& s, const Slope& t) const {
  auto ti = index_of(t);
  if (!index_of(s) || !ti) return std::nullopt;
  int d = distances_from(s)[*ti];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> oracle_distance_bfs(const Slope& s, const Slope& t, const Window& w) {
  if (!window_contains(w, s) || !window_contains(w, t)) return std::nullopt;
  return OracleGraph(w).distance(s, t);
}

}  // namespace farey
