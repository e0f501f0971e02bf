#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "farey/mapping_class.hpp"
#include "farey/metric.hpp"
#include "farey/oracle.hpp"

using namespace farey;

namespace {

Slope random_slope(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  while (true) {
    int x = coord(rng), y = coord(rng);
    if (x == 0 && y == 0) continue;
    return canonicalize(x, y);
  }
}

MappingClass random_unimodular(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    MappingClass m{entry(rng), entry(rng), entry(rng), entry(rng)};
    Int d = det(m);
    if (d == 1 || d == -1) return m;
  }
}

std::set<Slope> as_set(const std::vector<Slope>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("adjacency is intersection number one") {
  CHECK(are_adjacent(slope_infinity(), canonicalize(1, 5)));
  CHECK_FALSE(are_adjacent(slope_infinity(), canonicalize(2, 1)));
  CHECK(are_adjacent(canonicalize(2, 1), canonicalize(3, 1)));
}

TEST_CASE("neighbor family of 1/0 lies in the vertical lines") {
  std::vector<Slope> fam = neighbor_family(slope_infinity(), -2, 2);
  std::set<Slope> expected;
  for (int k = -2; k <= 2; ++k) expected.insert(canonicalize(1, k));
  CHECK(as_set(fam) == expected);  // both sign families coincide canonically
}

TEST_CASE("neighbor family of 0/1 lies in the horizontal line") {
  std::set<Slope> fam = as_set(neighbor_family(slope_zero(), 0, 2));
  CHECK(fam.count(slope_infinity()) == 1);
  CHECK(fam.count(canonicalize(1, 1)) == 1);
  CHECK(fam.count(canonicalize(2, 1)) == 1);
}

TEST_CASE("neighbor family members are adjacent and complete in a window") {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    Slope s = random_slope(rng, 8);
    for (const Slope& n : neighbor_family(s, -1, 1))
      CHECK(intersection_number(s, n) == 1);

    // Completeness: a wide parameter sweep catches every windowed neighbor.
    Window w{10, 10};
    std::set<Slope> swept;
    for (const Slope& n : neighbor_family(s, -25, 25))
      if (window_contains(w, n)) swept.insert(n);
    for (const Slope& v : window_slopes(w))
      if (intersection_number(s, v) == 1) CHECK(swept.count(v) == 1);
  }
}

TEST_CASE("distance examples") {
  for (int k = -100; k <= 100; ++k)
    CHECK(distance(slope_infinity(), canonicalize(1, k)) == 1);
  Slope s = canonicalize(4, 7);
  CHECK(distance(s, s) == 0);

  // Oracle first: the frozen values are reproduced by truncated BFS.
  CHECK(oracle_distance_bfs(slope_infinity(), canonicalize(5, 2), Window{10, 10}) ==
        std::optional<int>(3));
  CHECK(distance(slope_infinity(), canonicalize(5, 2)) == 3);
  CHECK(oracle_distance_bfs(slope_infinity(), canonicalize(2, 1), Window{10, 10}) ==
        std::optional<int>(2));
  CHECK(distance(slope_infinity(), canonicalize(2, 1)) == 2);
}

TEST_CASE("distance equals the oracle on a full window from several centers") {
  Window w{12, 12};
  OracleGraph g(w);
  for (const Slope& c :
       {slope_infinity(), slope_zero(), canonicalize(1, 1), canonicalize(-3, 2)}) {
    std::vector<int> dist = g.distances_from(c);
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      CHECK(distance(c, g.vertices()[i]) == dist[i]);
  }
}

TEST_CASE("geodesic witness realizes the distance") {
  GeodesicWitness trivial = geodesic_witness(slope_infinity(), slope_infinity());
  CHECK(trivial.vertices == std::vector<Slope>{slope_infinity()});

  GeodesicWitness two = geodesic_witness(slope_infinity(), canonicalize(2, 1));
  CHECK(two.length() == 2);
  bool middle_ok =
      two.vertices[1] == slope_zero() || two.vertices[1] == canonicalize(1, 1);
  CHECK(middle_ok);

  GeodesicWitness three = geodesic_witness(slope_infinity(), canonicalize(5, 2));
  CHECK(three.length() == 3);

  std::mt19937 rng(22);
  for (int i = 0; i < 150; ++i) {
    Slope s = random_slope(rng, 40);
    Slope t = random_slope(rng, 40);
    GeodesicWitness w = geodesic_witness(s, t);
    CHECK(w.vertices.front() == s);
    CHECK(w.vertices.back() == t);
    CHECK(w.length() == distance(s, t));
    for (std::size_t j = 0; j + 1 < w.vertices.size(); ++j)
      CHECK(intersection_number(w.vertices[j], w.vertices[j + 1]) == 1);
    CHECK(geodesic_witness(s, t).vertices == w.vertices);  // deterministic
  }
}

TEST_CASE("ball of radius one around 1/0") {
  BallReport b = ball(slope_infinity(), 1, Window{10, 10});
  std::set<Slope> expected{slope_infinity()};
  for (int k = -10; k <= 10; ++k) expected.insert(canonicalize(1, k));
  std::set<Slope> got;
  for (const BallMember& m : b.members) {
    got.insert(m.slope);
    if (m.slope != slope_infinity()) {
      Int abs_a = m.slope.a < 0 ? Int(-m.slope.a) : m.slope.a;
      CHECK(abs_a == 1);
    }
  }
  CHECK(got == expected);
  CHECK(b.members.size() == 22);
}

TEST_CASE("ball of radius zero is the center alone") {
  BallReport b = ball(slope_infinity(), 0, Window{5, 5});
  REQUIRE(b.members.size() == 1);
  CHECK(b.members[0].slope == slope_infinity());
  CHECK(b.members[0].distance == 0);
}

TEST_CASE("ball matches the oracle member by member") {
  Window w{6, 6};
  BallReport b = ball(slope_infinity(), 2, w);
  std::set<Slope> got;
  for (const BallMember& m : b.members) got.insert(m.slope);
  CHECK(got.count(canonicalize(2, 1)) == 1);  // 1/2 at distance 2
  CHECK(got.count(canonicalize(5, 2)) == 0);  // 2/5 at distance 3

  OracleGraph g(w);
  std::vector<int> dist = g.distances_from(slope_infinity());
  std::set<Slope> expected;
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    if (dist[i] >= 0 && dist[i] <= 2) expected.insert(g.vertices()[i]);
  CHECK(got == expected);
}

TEST_CASE("ball members are sorted and grow with the radius") {
  Window w{8, 8};
  BallReport b2 = ball(slope_infinity(), 2, w);
  CHECK(std::is_sorted(
      b2.members.begin(), b2.members.end(),
      [](const BallMember& x, const BallMember& y) { return x.slope < y.slope; }));
  BallReport b3 = ball(slope_infinity(), 3, w);
  std::set<Slope> larger;
  for (const BallMember& m : b3.members) larger.insert(m.slope);
  for (const BallMember& m : b2.members) CHECK(larger.count(m.slope) == 1);
}

TEST_CASE("oracle BFS examples") {
  CHECK(oracle_distance_bfs(slope_infinity(), slope_zero(), Window{5, 5}) ==
        std::optional<int>(1));
  CHECK(oracle_distance_bfs(slope_infinity(), canonicalize(5, 3), Window{10, 10}) ==
        std::optional<int>(3));
  CHECK_FALSE(
      oracle_distance_bfs(slope_infinity(), canonicalize(5, 2), Window{1, 1}).has_value());
}

TEST_CASE("metric axioms on random samples") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    Slope s = random_slope(rng, 15);
    Slope t = random_slope(rng, 15);
    Slope u = random_slope(rng, 15);
    int d_st = distance(s, t);
    CHECK(d_st == distance(t, s));
    CHECK(distance(s, u) <= d_st + distance(t, u));
    CHECK((d_st == 0) == (s == t));
    CHECK((d_st == 1) == (intersection_number(s, t) == 1));
  }
}

TEST_CASE("unimodular matrices act by isometries") {
  std::mt19937 rng(24);
  for (int i = 0; i < 120; ++i) {
    Slope s = random_slope(rng, 20);
    Slope t = random_slope(rng, 20);
    MappingClass m = random_unimodular(rng, 12);
    CHECK(distance(act(m, s), act(m, t)) == distance(s, t));
  }
}

TEST_CASE("window stability of the BFS baseline") {
  std::mt19937 rng(25);
  for (int i = 0; i < 60; ++i) {
    Slope s = random_slope(rng, 10);
    Slope t = random_slope(rng, 10);
    Window w0 = safety_window(s, t);
    Window w1{2 * w0.maxA, 2 * w0.maxB};
    std::optional<int> d0 = distance_in_window(s, t, w0);
    std::optional<int> d1 = distance_in_window(s, t, w1);
    REQUIRE(d0.has_value());
    CHECK(d0 == d1);
    CHECK(*d0 == distance(s, t));

    // Enlarging the window never increases the truncated value.
    std::optional<int> o0 = oracle_distance_bfs(s, t, w0);
    std::optional<int> o1 = oracle_distance_bfs(s, t, w1);
    REQUIRE(o0.has_value());
    REQUIRE(o1.has_value());
    CHECK(*o1 <= *o0);
    CHECK(*o1 == distance(s, t));
  }
}

TEST_CASE("distance one from 1/0 characterizes the vertical lines") {
  for (const Slope& v : window_slopes(Window{9, 9})) {
    if (v == slope_infinity()) continue;
    Int abs_a = v.a < 0 ? Int(-v.a) : v.a;
    CHECK((distance(slope_infinity(), v) == 1) == (abs_a == 1));
    if (abs_a >= 2) CHECK(distance(slope_infinity(), v) >= 2);
  }
}

TEST_CASE("distance_at_most mirrors distance") {
  Slope s = slope_infinity(), t = canonicalize(5, 2);
  CHECK(distance_at_most(s, t, 3) == std::optional<int>(3));
  CHECK_FALSE(distance_at_most(s, t, 2).has_value());
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(validated_window(0, 5), Error);
  CHECK_THROWS_AS(ball(slope_infinity(), -1, Window{3, 3}), Error);
}
