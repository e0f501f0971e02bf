#pragma once

#include <array>
#include <vector>

#include "farey/metric.hpp"
#include "farey/slope.hpp"
#include "farey/surd.hpp"

namespace farey {

// Integer matrix (p, q; r, s) with |det| = 1 acting on column lattice
// vectors (a, b).
struct MappingClass {
  Int p, q, r, s;

  bool operator==(const MappingClass& o) const {
    return p == o.p && q == o.q && r == o.r && s == o.s;
  }
};

Int det(const MappingClass& m);
Int trace(const MappingClass& m);

MappingClass validated_mapping_class(Int p, Int q, Int r, Int s);

enum class MappingClassType { kPeriodic, kReducible, kAnosov };

// Torus trichotomy by trace; defined for orientation-preserving classes
// (det = +1) only. det = -1 matrices are still usable with act().
MappingClassType classify(const MappingClass& m);

// Canonicalized matrix-vector product; preserves intersection numbers, so it
// acts isometrically on the Farey graph.
Slope act(const MappingClass& m, const Slope& s);

MappingClass compose(const MappingClass& m1, const MappingClass& m2);

// Action of the matrix on direction values: v -> (r + s*v) / (p + q*v).
Rat act_on_direction(const MappingClass& m, const Rat& v);

struct OrbitStep {
  int n = 0;
  Slope image;
  int dist = 0;

  bool operator==(const OrbitStep& o) const {
    return n == o.n && image == o.image && dist == o.dist;
  }
};

struct OrbitReport {
  MappingClass matrix;
  Slope start;
  std::vector<OrbitStep> steps;
  // Second-half secant of dist vs n, (dist(N) - dist(ceil(N/2))) over
  // (N - ceil(N/2)); secant rather than least squares, to skip transients.
  Rat growthSlopeEstimate;

  bool operator==(const OrbitReport& o) const {
    return matrix == o.matrix && start == o.start && steps == o.steps &&
           growthSlopeEstimate == o.growthSlopeEstimate;
  }
};

// Images and exact distances of s, m(s), m^2(s), ..., m^N(s). Requires an
// Anosov class: reducible classes have bounded orbits along twist-invariant
// slopes and growth claims would be vacuous.
OrbitReport orbit_growth(const MappingClass& m, const Slope& s, int N);

struct EigenDirectionReport {
  Int trace;
  std::array<QuadraticSurd, 2> eigenvalues;  // (t + sqrt(D))/2 first
  QuadraticSurd attractingDirection;
  std::vector<Int> cfPrefix;
  std::vector<Int> periodicBlock;

  bool operator==(const EigenDirectionReport& o) const {
    return trace == o.trace && eigenvalues == o.eigenvalues &&
           attractingDirection == o.attractingDirection && cfPrefix == o.cfPrefix &&
           periodicBlock == o.periodicBlock;
  }
};

// Exact fixed directions of an Anosov class. The discriminant t^2 - 4 is
// strictly between (|t|-1)^2 and t^2, hence never a square: both directions
// are irrational and their continued fractions are eventually periodic. The
// attracting one is identified by exact comparison, as the direction whose
// convergents are pulled closer by the action. k is the requested prefix
// length of the attracting direction's continued fraction.
EigenDirectionReport eigen_directions(const MappingClass& m, int k);

}  // namespace farey
