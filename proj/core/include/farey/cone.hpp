#pragma once

#include <optional>
#include <string>
#include <vector>

#include "farey/metric.hpp"
#include "farey/slope.hpp"

namespace farey {

// Exact direction b/a of a lattice point; nullopt for the vertical ray 1/0.
// Directions are totally ordered as rationals with 1/0 conceptually maximal.
using Direction = Rat;

std::optional<Direction> direction_of(const Slope& s);

// Open angular sector of directions between two exact rationals. Membership
// of a lattice point is decided by integer cross-product sign tests only.
struct ConeSector {
  Direction lo;
  Direction hi;

  bool operator==(const ConeSector& o) const { return lo == o.lo && hi == o.hi; }
};

ConeSector make_cone(Direction lo, Direction hi);

// True iff the direction of s lies strictly between the bounds. The point
// 1/0 has no finite direction and is never a member; for cones with positive
// bounds no slope with a <= 0 can be a member.
bool cone_contains(const ConeSector& c, const Slope& s);

// The lines and points that the cover treats separately from the cones:
// X+- = {|a| = 1}, Y = {b = 1}, and the two slopes 1/0, 0/1.
struct ExceptionalSet {
  std::vector<std::string> lines{"x=1", "x=-1", "y=1"};
  std::vector<Slope> points{slope_infinity(), slope_zero()};
};

bool on_exceptional_line_or_point(const Slope& s);

struct CoverCertificates {
  bool disjoint = false;
  bool coverage = false;
  bool safety = false;

  bool operator==(const CoverCertificates& o) const {
    return disjoint == o.disjoint && coverage == o.coverage && safety == o.safety;
  }
};

struct CoverReport {
  int n = 0;
  Window window;
  std::vector<ConeSector> cones;           // sorted by lo, pairwise disjoint
  std::vector<ConeSector> gaps;            // maximal direction intervals free
                                           // of cones and member directions
  std::optional<ConeSector> safeCone;
  ExceptionalSet exceptional;
  CoverCertificates certificates;

  bool operator==(const CoverReport& o) const {
    return n == o.n && window == o.window && cones == o.cones && gaps == o.gaps &&
           safeCone == o.safeCone && certificates == o.certificates;
  }
};

// Desk-scale cover of the windowed n-ball around 1/0: strips the members on
// X+-, Y and the two special points, puts members near an integer direction k
// into one cone around k, gives every leftover member its own small cone, and
// certifies disjointness and coverage by explicit verification over the ball.
// Throws if either certificate fails (an implementation bug, not a valid
// outcome). n = 0 yields the trivial cover.
CoverReport build_cover(int n, const Window& w);

struct VerifyResult {
  bool disjoint = false;
  bool covering = false;
};

// Recomputes the ball independently (oracle BFS over the truncated graph)
// and re-checks both certificates of the report from scratch.
VerifyResult verify_cover(const CoverReport& r);

struct SafeConeResult {
  ConeSector cone;
  int n = 0;
  Window window;
  std::size_t members_checked = 0;  // ball members verified outside the cone
};

// A cone with positive rational bounds containing no member of the windowed
// n-ball around 1/0: the widest direction gap of the cover, shrunk by the
// margin 1/(4*maxA^2), with the emptiness certificate re-verified point by
// point. Throws when no usable gap exists at this window.
SafeConeResult find_safe_cone(int n, const Window& w);

}  // namespace farey
