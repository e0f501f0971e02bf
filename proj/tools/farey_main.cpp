#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "farey/cli.hpp"
#include "farey/serialize.hpp"
#include "farey/text_format.hpp"

namespace {

struct RawArgs {
  std::string from, to, center, start, matrix, window;
  int n = -1;
  std::string out, svg, cache;
  int scale = 8;
  bool render_ball = false, render_cover = false, compact_cache = false;
};

farey::CommandRequest to_request(farey::CommandRequest::Kind kind, const RawArgs& raw) {
  farey::CommandRequest req;
  req.kind = kind;
  if (!raw.from.empty()) req.from = farey::parse_slope(raw.from);
  if (!raw.to.empty()) req.to = farey::parse_slope(raw.to);
  if (!raw.center.empty()) req.center = farey::parse_slope(raw.center);
  if (!raw.start.empty()) req.start = farey::parse_slope(raw.start);
  if (!raw.matrix.empty()) req.matrix = farey::parse_matrix(raw.matrix);
  if (!raw.window.empty()) req.window = farey::parse_window(raw.window);
  req.n = raw.n;
  if (!raw.out.empty()) req.out_path = raw.out;
  if (!raw.svg.empty()) req.svg_path = raw.svg;
  if (!raw.cache.empty()) req.cache_path = raw.cache;
  req.scale = raw.scale;
  req.render_ball = raw.render_ball;
  req.render_cover = raw.render_cover;
  req.compact_cache = raw.compact_cache;
  return req;
}

void add_common_output(CLI::App* cmd, RawArgs& raw) {
  cmd->add_option("--out", raw.out, "write the JSON report to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Farey graph toolkit: distances, balls, cone covers, orbits"};
  app.require_subcommand(1);

  RawArgs raw;
  farey::CommandRequest::Kind kind = farey::CommandRequest::Kind::kDist;

  CLI::App* dist = app.add_subcommand("dist", "Farey distance between two slopes");
  dist->add_option("--from", raw.from, "source slope, b/a or inf")->required();
  dist->add_option("--to", raw.to, "target slope, b/a or inf")->required();
  dist->add_option("--cache", raw.cache,
                   "distance cache file (FAREY_CACHE overrides the path)");
  dist->add_flag("--compact-cache", raw.compact_cache,
                 "rewrite the cache in compacted form after the query");
  add_common_output(dist, raw);
  dist->callback([&] { kind = farey::CommandRequest::Kind::kDist; });

  CLI::App* ball = app.add_subcommand("ball", "windowed distance ball around a slope");
  ball->add_option("--center", raw.center, "center slope")->required();
  ball->add_option("-n", raw.n, "ball radius")->required();
  ball->add_option("--window", raw.window, "lattice window A or A,B")->required();
  add_common_output(ball, raw);
  ball->callback([&] { kind = farey::CommandRequest::Kind::kBall; });

  CLI::App* cover = app.add_subcommand("cover", "cone cover of the n-ball around 1/0");
  cover->add_option("-n", raw.n, "ball radius")->required();
  cover->add_option("--window", raw.window, "lattice window A or A,B")->required();
  add_common_output(cover, raw);
  cover->callback([&] { kind = farey::CommandRequest::Kind::kCover; });

  CLI::App* safe = app.add_subcommand("safe-cone", "cone avoiding the windowed n-ball");
  safe->add_option("-n", raw.n, "ball radius")->required();
  safe->add_option("--window", raw.window, "lattice window A or A,B")->required();
  add_common_output(safe, raw);
  safe->callback([&] { kind = farey::CommandRequest::Kind::kSafeCone; });

  CLI::App* orbit = app.add_subcommand("orbit", "distance growth along a matrix orbit");
  orbit->add_option("--matrix", raw.matrix, "integer matrix p,q,r,s")->required();
  orbit->add_option("--start", raw.start, "starting slope")->required();
  orbit->add_option("--steps", raw.n, "number of iterations")->required();
  add_common_output(orbit, raw);
  orbit->callback([&] { kind = farey::CommandRequest::Kind::kOrbit; });

  CLI::App* eigen = app.add_subcommand("eigen", "fixed directions of an Anosov matrix");
  eigen->add_option("--matrix", raw.matrix, "integer matrix p,q,r,s")->required();
  eigen->add_option("-k", raw.n, "continued-fraction prefix length")->required();
  add_common_output(eigen, raw);
  eigen->callback([&] { kind = farey::CommandRequest::Kind::kEigen; });

  CLI::App* render = app.add_subcommand("render", "SVG picture of a ball or cover");
  render->add_flag("--ball", raw.render_ball, "render a distance ball");
  render->add_flag("--cover", raw.render_cover, "render a cone cover");
  render->add_option("--center", raw.center, "ball center (with --ball)");
  render->add_option("-n", raw.n, "radius")->required();
  render->add_option("--window", raw.window, "lattice window A or A,B")->required();
  render->add_option("--svg", raw.svg, "output SVG path")->required();
  render->add_option("--scale", raw.scale, "pixels per lattice unit (default 8)");
  add_common_output(render, raw);
  render->callback([&] { kind = farey::CommandRequest::Kind::kRender; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << farey::serialize_error(farey::ErrorKind::kArgument, e.what());
    return 2;
  }

  farey::CommandRequest req;
  try {
    req = to_request(kind, raw);
  } catch (const farey::Error& e) {
    std::cout << farey::serialize_error(e.kind(), e.what());
    return 2;
  }

  farey::RunResult result = farey::run(req);
  if (!req.out_path || result.exit_code != 0) std::cout << result.document;
  return result.exit_code;
}
