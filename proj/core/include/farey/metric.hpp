#pragma once

#include <optional>
#include <vector>

#include "farey/slope.hpp"

namespace farey {

// Truncation bounds |a| <= maxA, |b| <= maxB for window-exact enumeration.
// Balls in the Farey graph are infinite; every report is window-relative.
struct Window {
  long long maxA = 1;
  long long maxB = 1;

  bool operator==(const Window& o) const {
    return maxA == o.maxA && maxB == o.maxB;
  }
};

Window validated_window(long long maxA, long long maxB);

bool window_contains(const Window& w, const Slope& s);

// All canonical slopes inside the window, sorted by (b, a).
std::vector<Slope> window_slopes(const Window& w);

struct BallMember {
  Slope slope;
  int distance = 0;

  bool operator==(const BallMember& o) const {
    return slope == o.slope && distance == o.distance;
  }
};

struct BallReport {
  Slope center;
  int radius = 0;
  Window window;
  std::vector<BallMember> members;  // sorted by (b, a)

  bool operator==(const BallReport& o) const {
    return center == o.center && radius == o.radius && window == o.window &&
           members == o.members;
  }
};

struct GeodesicWitness {
  std::vector<Slope> vertices;  // source first, target last
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// True iff the slopes intersect in one point.
bool are_adjacent(const Slope& s, const Slope& t);

// Neighbors of s as the two affine families x0_eps + t * (a, b), eps = +-1,
// with (x0_eps, y0_eps) a particular solution of b*x - a*y = eps from the
// extended Euclidean algorithm. Returns distinct canonical slopes, t ascending
// within each sign family; every neighbor of s appears for some (eps, t).
std::vector<Slope> neighbor_family(const Slope& s, const Int& t_lo, const Int& t_hi);

// Exact Farey-graph distance.
int distance(const Slope& s, const Slope& t);

// Variant with an early exit: the exact distance if it is <= limit, else
// nullopt without computing the exact value.
std::optional<int> distance_at_most(const Slope& s, const Slope& t, int limit);

// Distance in the subgraph of canonical slopes inside the window, by
// breadth-first search with neighbor_family ranges clipped to the window.
// nullopt when an endpoint is outside the window or the truncated graph
// disconnects the pair. Never shorter than distance(s, t); equal whenever
// some geodesic stays inside the window.
std::optional<int> distance_in_window(const Slope& s, const Slope& t, const Window& w);

// The square window bounded by the largest endpoint coordinate; some geodesic
// between the endpoints lies inside it (denominator-descent through
// convergent-like vertices).
Window safety_window(const Slope& s, const Slope& t);

// A path realizing distance(s, t): consecutive vertices adjacent, length
// equal to the distance. Deterministic.
GeodesicWitness geodesic_witness(const Slope& s, const Slope& t);

// Exactly the canonical slopes inside the window at distance <= n from the
// center, with exact distances. Enumerates the window point by point, so the
// report is window-exact by construction.
BallReport ball(const Slope& center, int n, const Window& w);

}  // namespace farey
