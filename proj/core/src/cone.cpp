#include "farey/cone.hpp"

#include <algorithm>
#include <map>

#include "farey/oracle.hpp"

namespace farey {

namespace {

// Half-ties round toward zero so the choice is deterministic; a direction at
// k + 1/2 is never absorbed either way (absorption radius is 1/4).
Int nearest_integer(const Rat& r) {
  Int k = floor_div(numerator(r), denominator(r));
  Rat frac = r - Rat(k);
  if (frac > Rat(1, 2)) return k + 1;
  if (frac == Rat(1, 2)) return k < 0 ? Int(k + 1) : k;
  return k;
}

Rat margin(const Window& w) {
  Int a2 = Int(w.maxA) * w.maxA;
  return make_rat(1, 4 * a2);
}

// Sorted cones: the only candidate containing r is the last one with lo < r.
bool covered_by_cones(const std::vector<ConeSector>& cones, const Rat& r) {
  auto it = std::lower_bound(cones.begin(), cones.end(), r,
                             [](const ConeSector& c, const Rat& v) { return c.lo < v; });
  if (it == cones.begin()) return false;
  --it;
  return it->lo < r && r < it->hi;
}

bool cones_pairwise_disjoint(const std::vector<ConeSector>& cones) {
  for (std::size_t i = 0; i + 1 < cones.size(); ++i)
    if (!(cones[i].hi <= cones[i + 1].lo)) return false;
  return true;
}

bool member_covered(const std::vector<ConeSector>& cones, const Slope& s) {
  if (on_exceptional_line_or_point(s)) return true;
  auto dir = direction_of(s);
  return dir && covered_by_cones(cones, *dir);
}

struct GapSearch {
  std::vector<ConeSector> gaps;
  std::optional<ConeSector> safe;
};

// Gaps are computed against the cones and every finite member direction, so
// that a gap interval is genuinely free of ball points; the members on X+-
// and Y obstruct directions even though no cone covers them.
GapSearch search_gaps(const std::vector<ConeSector>& cones,
                      const std::vector<Rat>& member_dirs, const Rat& mu) {
  std::vector<std::pair<Rat, Rat>> obstructions;
  obstructions.reserve(cones.size() + member_dirs.size());
  for (const ConeSector& c : cones) obstructions.push_back({c.lo, c.hi});
  for (const Rat& d : member_dirs) obstructions.push_back({d, d});
  std::sort(obstructions.begin(), obstructions.end());

  GapSearch out;
  std::vector<std::pair<Rat, Rat>> merged;
  for (const auto& ob : obstructions) {
    if (!merged.empty() && ob.first <= merged.back().second) {
      if (ob.second > merged.back().second) merged.back().second = ob.second;
    } else {
      merged.push_back(ob);
    }
  }
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    if (merged[i].second < merged[i + 1].first)
      out.gaps.push_back(ConeSector{merged[i].second, merged[i + 1].first});

  Rat best_width = 0;
  for (const ConeSector& g : out.gaps) {
    if (g.lo < 0) continue;  // the safe cone has positive rational bounds
    Rat width = g.hi - g.lo;
    if (width <= 2 * mu) continue;
    if (width > best_width) {  // ties keep the earlier (smaller lo) gap
      best_width = width;
      out.safe = ConeSector{g.lo + mu, g.hi - mu};
    }
  }
  return out;
}

}  // namespace

std::optional<Direction> direction_of(const Slope& s) {
  if (s.a == 0) return std::nullopt;
  return make_rat(s.b, s.a);
}

ConeSector make_cone(Direction lo, Direction hi) {
  if (!(lo < hi))
    throw Error(ErrorKind::kArgument, "cone bounds must satisfy lo < hi");
  return ConeSector{std::move(lo), std::move(hi)};
}

bool cone_contains(const ConeSector& c, const Slope& s) {
  auto dir = direction_of(s);
  return dir && c.lo < *dir && *dir < c.hi;
}

bool on_exceptional_line_or_point(const Slope& s) {
  if (s == slope_infinity() || s == slope_zero()) return true;
  if (s.a == 1 || s.a == -1) return true;  // X+-
  return s.b == 1;                         // Y
}

CoverReport build_cover(int n, const Window& w) {
  if (n < 0) throw Error(ErrorKind::kArgument, "cover radius must be >= 0");
  CoverReport report;
  report.n = n;
  report.window = w;

  BallReport b = ball(slope_infinity(), n, w);
  const Rat mu = margin(w);
  const Rat tau(1, 4);  // absorption radius around integer directions

  std::map<Int, std::pair<Rat, Rat>> groups;  // k -> direction hull
  std::vector<Rat> leftover;
  std::vector<Rat> member_dirs;
  for (const BallMember& m : b.members) {
    auto dir = direction_of(m.slope);
    if (dir) member_dirs.push_back(*dir);
    if (on_exceptional_line_or_point(m.slope)) continue;
    // remaining members have |a| >= 2 and b >= 2, so a finite direction
    Int k = nearest_integer(*dir);
    Rat off = *dir - Rat(k);
    if (off < 0) off = -off;
    if (off < tau) {
      auto [it, inserted] = groups.try_emplace(k, std::make_pair(*dir, *dir));
      if (!inserted) {
        it->second.first = std::min(it->second.first, *dir);
        it->second.second = std::max(it->second.second, *dir);
      }
    } else {
      leftover.push_back(*dir);
    }
  }
  std::sort(member_dirs.begin(), member_dirs.end());

  for (const auto& [k, hull] : groups)
    report.cones.push_back(ConeSector{hull.first - mu, hull.second + mu});
  for (const Rat& d : leftover)
    report.cones.push_back(ConeSector{d - mu, d + mu});
  std::sort(report.cones.begin(), report.cones.end(),
            [](const ConeSector& x, const ConeSector& y) { return x.lo < y.lo; });

  // Distinct member directions with denominators <= maxA are at least
  // 1/maxA^2 = 4*mu apart, so the mu-padded cones cannot collide; a failure
  // here is a bug, not a valid report.
  report.certificates.disjoint = cones_pairwise_disjoint(report.cones);
  report.certificates.coverage = true;
  for (const BallMember& m : b.members) {
    if (!member_covered(report.cones, m.slope)) {
      report.certificates.coverage = false;
      break;
    }
  }
  if (!report.certificates.disjoint || !report.certificates.coverage)
    throw Error(ErrorKind::kComputation,
                "cover construction failed verification (disjoint=" +
                    std::to_string(report.certificates.disjoint) +
                    ", coverage=" + std::to_string(report.certificates.coverage) +
                    ") at n=" + std::to_string(n));

  GapSearch gs = search_gaps(report.cones, member_dirs, mu);
  report.gaps = std::move(gs.gaps);
  if (gs.safe) {
    bool empty = true;
    for (const BallMember& m : b.members) {
      if (cone_contains(*gs.safe, m.slope)) {
        empty = false;
        break;
      }
    }
    if (empty) {
      report.safeCone = gs.safe;
      report.certificates.safety = true;
    }
  }
  return report;
}

VerifyResult verify_cover(const CoverReport& r) {
  VerifyResult out;
  out.disjoint = true;
  for (std::size_t i = 0; i < r.cones.size(); ++i) {
    if (!(r.cones[i].lo < r.cones[i].hi)) out.disjoint = false;
    for (std::size_t j = i + 1; j < r.cones.size(); ++j) {
      const Rat lo = std::max(r.cones[i].lo, r.cones[j].lo);
      const Rat hi = std::min(r.cones[i].hi, r.cones[j].hi);
      if (lo < hi) out.disjoint = false;
    }
  }

  OracleGraph graph(r.window);
  std::vector<int> dist = graph.distances_from(slope_infinity());
  std::vector<ConeSector> sorted = r.cones;
  std::sort(sorted.begin(), sorted.end(),
            [](const ConeSector& x, const ConeSector& y) { return x.lo < y.lo; });
  out.covering = true;
  for (std::size_t i = 0; i < graph.vertices().size(); ++i) {
    if (dist[i] < 0 || dist[i] > r.n) continue;
    if (!member_covered(sorted, graph.vertices()[i])) {
      out.covering = false;
      break;
    }
  }
  return out;
}

SafeConeResult find_safe_cone(int n, const Window& w) {
  if (n < 1) throw Error(ErrorKind::kArgument, "safe-cone search requires n >= 1");
  CoverReport cover = build_cover(n, w);
  BallReport b = ball(slope_infinity(), n, w);
  if (!cover.safeCone) {
    std::string obstructions;
    std::size_t listed = 0;
    for (const BallMember& m : b.members) {
      if (m.slope.a <= 0) continue;  // positive-side gaps are the candidates
      if (listed++ == 8) {
        obstructions += ", ...";
        break;
      }
      if (!obstructions.empty()) obstructions += ", ";
      obstructions += to_string(m.slope);
    }
    throw Error(ErrorKind::kComputation,
                "no safe cone at this window: every positive direction gap is "
                "narrower than twice the safety margin; obstructing members: " +
                    obstructions);
  }
  SafeConeResult out;
  out.cone = *cover.safeCone;
  out.n = n;
  out.window = w;
  out.members_checked = b.members.size();
  return out;
}

}  // namespace farey
