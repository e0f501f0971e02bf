#pragma once

#include <string>

#include "farey/cone.hpp"
#include "farey/mapping_class.hpp"
#include "farey/metric.hpp"

namespace farey {

// JSON documents with deterministic key and member ordering: identical
// reports serialize to identical bytes. Integer scalars are emitted as JSON
// numbers when they fit 53 bits and as decimal strings beyond that;
// parsers accept both forms.

std::string serialize_ball(const BallReport& r);
BallReport parse_ball_json(const std::string& text);

std::string serialize_cover(const CoverReport& r);
CoverReport parse_cover_json(const std::string& text);

std::string serialize_safe_cone(const SafeConeResult& r);
SafeConeResult parse_safe_cone_json(const std::string& text);

std::string serialize_orbit(const OrbitReport& r);
OrbitReport parse_orbit_json(const std::string& text);

std::string serialize_eigen(const EigenDirectionReport& r);
EigenDirectionReport parse_eigen_json(const std::string& text);

std::string serialize_distance_result(const Slope& from, const Slope& to, int dist);

std::string serialize_error(ErrorKind kind, const std::string& message);

}  // namespace farey
