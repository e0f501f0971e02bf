#include "farey/cli.hpp"

#include <cstdlib>
#include <fstream>

#include "farey/cache.hpp"
#include "farey/cone.hpp"
#include "farey/serialize.hpp"
#include "farey/svg.hpp"

namespace farey {

namespace {

void require(bool present, const std::string& what) {
  if (!present)
    throw Error(ErrorKind::kArgument, "missing required argument: " + what);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw Error(ErrorKind::kComputation, "cannot open " + path);
  out << content;
  if (!out) throw Error(ErrorKind::kComputation, "cannot write " + path);
}

std::string run_dist(const CommandRequest& req) {
  require(req.from.has_value(), "--from");
  require(req.to.has_value(), "--to");

  std::optional<std::string> cache_path = req.cache_path;
  if (const char* env = std::getenv("FAREY_CACHE")) cache_path = env;

  const Window safety = safety_window(*req.from, *req.to);
  std::optional<int> d;
  std::optional<DistanceCache> cache;
  if (cache_path) {
    cache = DistanceCache::load(*cache_path);
    d = cache->lookup(*req.from, *req.to, safety);
  }
  if (!d) {
    d = distance(*req.from, *req.to);
    if (cache_path) {
      CacheEntry e{*req.from, *req.to, *d, safety.maxA, safety.maxB};
      DistanceCache::append_entry(*cache_path, e);
      cache->insert(e);
    }
  }
  if (cache_path && req.compact_cache) cache->write_compacted(*cache_path);
  return serialize_distance_result(*req.from, *req.to, *d);
}

std::string run_ball(const CommandRequest& req) {
  require(req.center.has_value(), "--center");
  require(req.n >= 0, "-n");
  require(req.window.has_value(), "--window");
  return serialize_ball(ball(*req.center, req.n, *req.window));
}

std::string run_cover(const CommandRequest& req) {
  require(req.n >= 0, "-n");
  require(req.window.has_value(), "--window");
  return serialize_cover(build_cover(req.n, *req.window));
}

std::string run_safe_cone(const CommandRequest& req) {
  require(req.n >= 0, "-n");
  require(req.window.has_value(), "--window");
  return serialize_safe_cone(find_safe_cone(req.n, *req.window));
}

std::string run_orbit(const CommandRequest& req) {
  require(req.matrix.has_value(), "--matrix");
  require(req.start.has_value(), "--start");
  require(req.n >= 1, "--steps");
  return serialize_orbit(orbit_growth(*req.matrix, *req.start, req.n));
}

std::string run_eigen(const CommandRequest& req) {
  require(req.matrix.has_value(), "--matrix");
  require(req.n >= 1, "-k");
  return serialize_eigen(eigen_directions(*req.matrix, req.n));
}

std::string run_render(const CommandRequest& req) {
  require(req.render_ball != req.render_cover, "exactly one of --ball / --cover");
  require(req.svg_path.has_value(), "--svg");
  require(req.n >= 0, "-n");
  require(req.window.has_value(), "--window");
  std::string document, svg;
  if (req.render_ball) {
    require(req.center.has_value(), "--center");
    BallReport report = ball(*req.center, req.n, *req.window);
    svg = render_svg(report, req.scale);
    document = serialize_ball(report);
  } else {
    CoverReport report = build_cover(req.n, *req.window);
    svg = render_svg(report, req.scale);
    document = serialize_cover(report);
  }
  write_file(*req.svg_path, svg);
  return document;
}

}  // namespace

RunResult run(const CommandRequest& req) {
  RunResult result;
  try {
    switch (req.kind) {
      case CommandRequest::Kind::kDist: result.document = run_dist(req); break;
      case CommandRequest::Kind::kBall: result.document = run_ball(req); break;
      case CommandRequest::Kind::kCover: result.document = run_cover(req); break;
      case CommandRequest::Kind::kSafeCone: result.document = run_safe_cone(req); break;
      case CommandRequest::Kind::kOrbit: result.document = run_orbit(req); break;
      case CommandRequest::Kind::kEigen: result.document = run_eigen(req); break;
      case CommandRequest::Kind::kRender: result.document = run_render(req); break;
    }
    if (req.out_path) write_file(*req.out_path, result.document);
    return result;
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::kArgument ? 2 : 3;
    result.document = serialize_error(e.kind(), e.what());
    return result;
  }
}

}  // namespace farey
