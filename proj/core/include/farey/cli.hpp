#pragma once

#include <optional>
#include <string>

#include "farey/mapping_class.hpp"
#include "farey/metric.hpp"

namespace farey {

// A validated-by-run() request for one subcommand. Parameter presence is
// checked before any computation starts.
struct CommandRequest {
  enum class Kind { kDist, kBall, kCover, kSafeCone, kOrbit, kEigen, kRender };

  Kind kind = Kind::kDist;
  std::optional<Slope> from, to;      // dist
  std::optional<Slope> center;        // ball, render --ball
  std::optional<Slope> start;         // orbit
  std::optional<MappingClass> matrix; // orbit, eigen
  std::optional<Window> window;
  int n = -1;                         // radius (ball/cover/safe-cone),
                                      // steps (orbit), prefix length (eigen)
  std::optional<std::string> out_path;   // report file; stdout when absent

  bool render_ball = false;           // render mode switches
  bool render_cover = false;
  std::optional<std::string> svg_path;
  int scale = 8;

  std::optional<std::string> cache_path;  // dist; FAREY_CACHE overrides
  bool compact_cache = false;
};

struct RunResult {
  // 0 success, 2 argument error, 3 computation error.
  int exit_code = 0;
  // The report document, or a machine-readable error document.
  std::string document;
};

// Dispatches to the owning module and produces the report document. Writes
// to req.out_path when set (the caller prints the document otherwise); the
// render subcommand also writes the SVG file. Deterministic for identical
// requests.
RunResult run(const CommandRequest& req);

}  // namespace farey
