#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include "farey/cache.hpp"
#include "farey/cli.hpp"
#include "farey/cone.hpp"
#include "farey/serialize.hpp"
#include "farey/svg.hpp"
#include "farey/text_format.hpp"

using namespace farey;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/farey_test_") + std::to_string(::getpid()) + "_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Slope random_slope(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  while (true) {
    int x = coord(rng), y = coord(rng);
    if (x == 0 && y == 0) continue;
    return canonicalize(x, y);
  }
}

}  // namespace

TEST_CASE("slope parsing") {
  CHECK(parse_slope("2/5") == Slope{5, 2});
  CHECK(parse_slope("inf") == slope_infinity());
  CHECK(parse_slope("1/0") == slope_infinity());
  CHECK(parse_slope("4/6") == Slope{3, 2});
  CHECK(parse_slope("-3/7") == Slope{-7, 3});
}

TEST_CASE("slope parse errors carry positions") {
  CHECK_THROWS_AS(parse_slope("abc"), Error);
  CHECK_THROWS_AS(parse_slope("3/"), Error);
  CHECK_THROWS_AS(parse_slope("/5"), Error);
  CHECK_THROWS_AS(parse_slope("3/4x"), Error);
  CHECK_THROWS_AS(parse_slope("0/0"), Error);
  CHECK(error_message([] { parse_slope("3/4x"); }).find("position 3") !=
        std::string::npos);
  CHECK(error_message([] { parse_slope("0/0"); }).find("0/0") != std::string::npos);
}

TEST_CASE("slope text round-trips") {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    Slope s = random_slope(rng, 50);
    CHECK(parse_slope(to_string(s)) == s);
  }
}

TEST_CASE("matrix and window parsing") {
  MappingClass m = parse_matrix("2,1,1,1");
  CHECK(m == MappingClass{2, 1, 1, 1});
  CHECK_THROWS_AS(parse_matrix("2,1,1"), Error);
  CHECK_THROWS_AS(parse_matrix("2,1,1,2"), Error);  // det 3
  Window w = parse_window("10");
  CHECK(w.maxA == 10);
  CHECK(w.maxB == 10);
  Window w2 = parse_window("5,7");
  CHECK(w2.maxA == 5);
  CHECK(w2.maxB == 7);
  CHECK_THROWS_AS(parse_window("0"), Error);
  CHECK_THROWS_AS(parse_window("5,"), Error);
}

TEST_CASE("rationals as p/q strings") {
  CHECK(format_rat(Rat(3)) == "3/1");
  CHECK(format_rat(make_rat(6, -4)) == "-3/2");
  CHECK(parse_rat("-3/2") == Rat(-3, 2));
}

TEST_CASE("report JSON round-trips byte for byte") {
  BallReport b = ball(slope_infinity(), 2, Window{6, 6});
  std::string b_json = serialize_ball(b);
  CHECK(parse_ball_json(b_json) == b);
  CHECK(serialize_ball(parse_ball_json(b_json)) == b_json);
  CHECK(serialize_ball(b) == b_json);  // deterministic

  CoverReport c = build_cover(2, Window{30, 30});
  std::string c_json = serialize_cover(c);
  CHECK(parse_cover_json(c_json) == c);
  CHECK(serialize_cover(parse_cover_json(c_json)) == c_json);

  SafeConeResult sc = find_safe_cone(1, Window{10, 10});
  std::string sc_json = serialize_safe_cone(sc);
  SafeConeResult sc2 = parse_safe_cone_json(sc_json);
  CHECK(sc2.cone == sc.cone);
  CHECK(serialize_safe_cone(sc2) == sc_json);

  OrbitReport o = orbit_growth(MappingClass{2, 1, 1, 1}, slope_zero(), 5);
  std::string o_json = serialize_orbit(o);
  CHECK(parse_orbit_json(o_json) == o);

  EigenDirectionReport e = eigen_directions(MappingClass{2, 1, 1, 1}, 8);
  std::string e_json = serialize_eigen(e);
  CHECK(parse_eigen_json(e_json) == e);
}

TEST_CASE("ball SVG has one marker per member") {
  BallReport b = ball(slope_infinity(), 1, Window{10, 10});
  std::string svg = render_svg(b, 8);
  CHECK(count_occurrences(svg, "class=\"member\"") == b.members.size());
  CHECK(count_occurrences(svg, "<circle") == b.members.size());
  CHECK(count_occurrences(svg, "<svg") == 1);
  CHECK(count_occurrences(svg, "</svg>") == 1);
  CHECK(count_occurrences(svg, "<line") == 3);  // X+, X-, Y
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

  BallReport single = ball(slope_infinity(), 0, Window{4, 4});
  CHECK(count_occurrences(render_svg(single, 8), "class=\"member\"") == 1);
}

TEST_CASE("cover SVG sector count matches the report") {
  CoverReport r1 = build_cover(1, Window{10, 10});
  std::string svg1 = render_svg(r1, 8);
  CHECK(count_occurrences(svg1, "class=\"cone\"") == 0);
  CHECK(count_occurrences(svg1, "class=\"safe-cone\"") == 1);

  CoverReport r2 = build_cover(2, Window{20, 20});
  std::string svg2 = render_svg(r2, 8);
  CHECK(count_occurrences(svg2, "class=\"cone\"") == r2.cones.size());
}

TEST_CASE("cache lookups respect window provenance") {
  std::string path = temp_path("cache.txt");
  std::remove(path.c_str());

  CacheEntry small{slope_infinity(), canonicalize(5, 2), 3, 5, 5};
  DistanceCache::append_entry(path, small);
  DistanceCache cache = DistanceCache::load(path);
  CHECK(cache.size() == 1);
  CHECK(cache.lookup(slope_infinity(), canonicalize(5, 2), Window{5, 5}) ==
        std::optional<int>(3));
  // provenance window smaller than the required safety window: not served
  CHECK_FALSE(
      cache.lookup(slope_infinity(), canonicalize(5, 2), Window{10, 10}).has_value());
  // symmetric key order
  CHECK(cache.lookup(canonicalize(5, 2), slope_infinity(), Window{4, 4}) ==
        std::optional<int>(3));

  // cached values agree with fresh recomputation
  CHECK(distance(slope_infinity(), canonicalize(5, 2)) == 3);
  std::remove(path.c_str());
}

TEST_CASE("cache compaction is a bit-identical normal form") {
  std::string path = temp_path("cache2.txt");
  std::remove(path.c_str());
  DistanceCache::append_entry(path, {canonicalize(3, 1), canonicalize(7, 2), 2, 7, 7});
  DistanceCache::append_entry(path, {slope_infinity(), canonicalize(5, 2), 3, 5, 5});
  DistanceCache::append_entry(path, {slope_infinity(), canonicalize(5, 2), 3, 9, 9});

  DistanceCache cache = DistanceCache::load(path);
  CHECK(cache.size() == 2);  // duplicate pair keeps the larger window
  CHECK(cache.lookup(slope_infinity(), canonicalize(5, 2), Window{9, 9}) ==
        std::optional<int>(3));

  cache.write_compacted(path);
  std::string first = slurp(path);
  DistanceCache reloaded = DistanceCache::load(path);
  reloaded.write_compacted(path);
  CHECK(slurp(path) == first);
  CHECK(first.find("2/5") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("run dispatches and reports errors with exit codes") {
  CommandRequest dist_req;
  dist_req.kind = CommandRequest::Kind::kDist;
  dist_req.from = parse_slope("1/0");
  dist_req.to = parse_slope("2/5");
  RunResult ok = run(dist_req);
  CHECK(ok.exit_code == 0);
  CHECK(ok.document.find("\"distance\": 3") != std::string::npos);
  CHECK(run(dist_req).document == ok.document);  // deterministic

  CommandRequest missing;
  missing.kind = CommandRequest::Kind::kDist;
  RunResult bad = run(missing);
  CHECK(bad.exit_code == 2);
  CHECK(bad.document.find("\"error\"") != std::string::npos);

  CommandRequest bad_n;
  bad_n.kind = CommandRequest::Kind::kSafeCone;
  bad_n.n = 0;
  bad_n.window = Window{10, 10};
  CHECK(run(bad_n).exit_code == 2);

  CommandRequest unwritable;
  unwritable.kind = CommandRequest::Kind::kBall;
  unwritable.center = slope_infinity();
  unwritable.n = 1;
  unwritable.window = Window{5, 5};
  unwritable.out_path = "/nonexistent-dir/report.json";
  RunResult io_fail = run(unwritable);
  CHECK(io_fail.exit_code == 3);
  CHECK(io_fail.document.find("computation") != std::string::npos);
}

TEST_CASE("run writes reports and SVG files") {
  std::string out = temp_path("ball.json");
  std::string svg = temp_path("ball.svg");
  CommandRequest req;
  req.kind = CommandRequest::Kind::kRender;
  req.render_ball = true;
  req.center = slope_infinity();
  req.n = 1;
  req.window = Window{10, 10};
  req.svg_path = svg;
  req.out_path = out;
  RunResult r = run(req);
  CHECK(r.exit_code == 0);
  CHECK(parse_ball_json(slurp(out)).members.size() == 22);
  CHECK(count_occurrences(slurp(svg), "class=\"member\"") == 22);
  std::remove(out.c_str());
  std::remove(svg.c_str());
}

TEST_CASE("the FAREY_CACHE environment variable overrides the cache path") {
  std::string path = temp_path("env_cache.txt");
  std::remove(path.c_str());
  ::setenv("FAREY_CACHE", path.c_str(), 1);
  CommandRequest req;
  req.kind = CommandRequest::Kind::kDist;
  req.from = parse_slope("1/0");
  req.to = parse_slope("2/5");
  RunResult r = run(req);
  ::unsetenv("FAREY_CACHE");
  CHECK(r.exit_code == 0);
  DistanceCache cache = DistanceCache::load(path);
  CHECK(cache.size() == 1);
  CHECK(cache.lookup(slope_infinity(), canonicalize(5, 2), Window{5, 5}) ==
        std::optional<int>(3));
  std::remove(path.c_str());
}
