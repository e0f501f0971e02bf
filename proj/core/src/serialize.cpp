#include "farey/serialize.hpp"

#include <json.hpp>

#include "farey/text_format.hpp"

namespace farey {

namespace {

using nlohmann::json;

constexpr long long kJsonIntMax = (1ll << 53) - 1;

json json_int(const Int& v) {
  if (v <= kJsonIntMax && v >= -kJsonIntMax) return v.convert_to<long long>();
  return v.str();
}

Int read_int(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(ErrorKind::kArgument, std::string(what) + ": expected an integer");
}

int read_small_int(const json& j, const char* what) {
  return static_cast<int>(to_long_checked(read_int(j, what), what));
}

json window_to_json(const Window& w) {
  return json{{"maxA", w.maxA}, {"maxB", w.maxB}};
}

Window window_from_json(const json& j) {
  return validated_window(to_long_checked(read_int(j.at("maxA"), "window"), "window"),
                          to_long_checked(read_int(j.at("maxB"), "window"), "window"));
}

json cone_to_json(const ConeSector& c) {
  return json{{"lo", format_rat(c.lo)}, {"hi", format_rat(c.hi)}};
}

ConeSector cone_from_json(const json& j) {
  return ConeSector{parse_rat(j.at("lo").get<std::string>()),
                    parse_rat(j.at("hi").get<std::string>())};
}

json surd_to_json(const QuadraticSurd& s) {
  return json{{"p", format_rat(s.p)}, {"q", format_rat(s.q)}, {"d", json_int(s.d)}};
}

QuadraticSurd surd_from_json(const json& j) {
  return QuadraticSurd{parse_rat(j.at("p").get<std::string>()),
                       parse_rat(j.at("q").get<std::string>()),
                       read_int(j.at("d"), "surd discriminant")};
}

json parse_document(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorKind::kArgument, std::string(what) + ": malformed JSON");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_ball(const BallReport& r) {
  json members = json::array();
  for (const BallMember& m : r.members)
    members.push_back(json{{"slope", to_string(m.slope)}, {"distance", m.distance}});
  return dump(json{{"center", to_string(r.center)},
                   {"radius", r.radius},
                   {"window", window_to_json(r.window)},
                   {"members", members}});
}

BallReport parse_ball_json(const std::string& text) {
  json j = parse_document(text, "ball report");
  BallReport r;
  r.center = parse_slope(j.at("center").get<std::string>());
  r.radius = read_small_int(j.at("radius"), "radius");
  r.window = window_from_json(j.at("window"));
  for (const json& m : j.at("members"))
    r.members.push_back(BallMember{parse_slope(m.at("slope").get<std::string>()),
                                   read_small_int(m.at("distance"), "distance")});
  return r;
}

std::string serialize_cover(const CoverReport& r) {
  json cones = json::array();
  for (const ConeSector& c : r.cones) cones.push_back(cone_to_json(c));
  json gaps = json::array();
  for (const ConeSector& g : r.gaps) gaps.push_back(cone_to_json(g));
  return dump(json{
      {"n", r.n},
      {"window", window_to_json(r.window)},
      {"cones", cones},
      {"gaps", gaps},
      {"safeCone", r.safeCone ? cone_to_json(*r.safeCone) : json(nullptr)},
      {"certificates", json{{"disjoint", r.certificates.disjoint},
                            {"coverage", r.certificates.coverage},
                            {"safety", r.certificates.safety}}}});
}

CoverReport parse_cover_json(const std::string& text) {
  json j = parse_document(text, "cover report");
  CoverReport r;
  r.n = read_small_int(j.at("n"), "n");
  r.window = window_from_json(j.at("window"));
  for (const json& c : j.at("cones")) r.cones.push_back(cone_from_json(c));
  for (const json& g : j.at("gaps")) r.gaps.push_back(cone_from_json(g));
  if (!j.at("safeCone").is_null()) r.safeCone = cone_from_json(j.at("safeCone"));
  const json& certs = j.at("certificates");
  r.certificates.disjoint = certs.at("disjoint").get<bool>();
  r.certificates.coverage = certs.at("coverage").get<bool>();
  r.certificates.safety = certs.at("safety").get<bool>();
  return r;
}

std::string serialize_safe_cone(const SafeConeResult& r) {
  return dump(json{{"n", r.n},
                   {"window", window_to_json(r.window)},
                   {"cone", cone_to_json(r.cone)},
                   {"certificate", true},
                   {"membersChecked", r.members_checked}});
}

SafeConeResult parse_safe_cone_json(const std::string& text) {
  json j = parse_document(text, "safe-cone report");
  SafeConeResult r;
  r.n = read_small_int(j.at("n"), "n");
  r.window = window_from_json(j.at("window"));
  r.cone = cone_from_json(j.at("cone"));
  r.members_checked = j.at("membersChecked").get<std::size_t>();
  return r;
}

std::string serialize_orbit(const OrbitReport& r) {
  json steps = json::array();
  for (const OrbitStep& s : r.steps)
    steps.push_back(json{{"n", s.n}, {"image", to_string(s.image)}, {"dist", s.dist}});
  return dump(json{{"matrix", format_matrix(r.matrix)},
                   {"start", to_string(r.start)},
                   {"steps", steps},
                   {"growthSlopeEstimate", format_rat(r.growthSlopeEstimate)}});
}

OrbitReport parse_orbit_json(const std::string& text) {
  json j = parse_document(text, "orbit report");
  OrbitReport r;
  r.matrix = parse_matrix(j.at("matrix").get<std::string>());
  r.start = parse_slope(j.at("start").get<std::string>());
  for (const json& s : j.at("steps"))
    r.steps.push_back(OrbitStep{read_small_int(s.at("n"), "step"),
                                parse_slope(s.at("image").get<std::string>()),
                                read_small_int(s.at("dist"), "dist")});
  r.growthSlopeEstimate = parse_rat(j.at("growthSlopeEstimate").get<std::string>());
  return r;
}

std::string serialize_eigen(const EigenDirectionReport& r) {
  json prefix = json::array();
  for (const Int& c : r.cfPrefix) prefix.push_back(json_int(c));
  json block = json::array();
  for (const Int& c : r.periodicBlock) block.push_back(json_int(c));
  return dump(json{{"trace", json_int(r.trace)},
                   {"eigenvalues", json::array({surd_to_json(r.eigenvalues[0]),
                                                surd_to_json(r.eigenvalues[1])})},
                   {"attractingDirection", surd_to_json(r.attractingDirection)},
                   {"cfPrefix", prefix},
                   {"periodicBlock", block}});
}

EigenDirectionReport parse_eigen_json(const std::string& text) {
  json j = parse_document(text, "eigen report");
  EigenDirectionReport r;
  r.trace = read_int(j.at("trace"), "trace");
  r.eigenvalues = {surd_from_json(j.at("eigenvalues").at(0)),
                   surd_from_json(j.at("eigenvalues").at(1))};
  r.attractingDirection = surd_from_json(j.at("attractingDirection"));
  for (const json& c : j.at("cfPrefix")) r.cfPrefix.push_back(read_int(c, "cfPrefix"));
  for (const json& c : j.at("periodicBlock"))
    r.periodicBlock.push_back(read_int(c, "periodicBlock"));
  return r;
}

std::string serialize_distance_result(const Slope& from, const Slope& to, int dist) {
  return dump(json{{"from", to_string(from)}, {"to", to_string(to)}, {"distance", dist}});
}

std::string serialize_error(ErrorKind kind, const std::string& message) {
  return dump(json{{"error", json{{"kind", kind == ErrorKind::kArgument ? "argument"
                                                                        : "computation"},
                                  {"message", message}}}});
}

}  // namespace farey
