#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "farey/numeric.hpp"

namespace farey {

// A slope on the torus: a primitive lattice point (a, b) in the closed upper
// half-plane, written b/a. Canonical sign: b > 0, or b = 0 and a = 1, so
// (0, 1) is 1/0 = infinity and (1, 0) is 0/1.
struct Slope {
  Int a;
  Int b;

  bool operator==(const Slope& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Slope& o) const { return !(*this == o); }
  // Order by (b, a); this is the ordering used for report determinism.
  bool operator<(const Slope& o) const {
    if (b != o.b) return b < o.b;
    return a < o.a;
  }
};

inline Slope slope_infinity() { return Slope{0, 1}; }
inline Slope slope_zero() { return Slope{1, 0}; }

struct SlopeHash {
  std::size_t operator()(const Slope& s) const {
    std::size_t seed = hash_int(s.a);
    hash_mix(seed, hash_int(s.b));
    return seed;
  }
};

// The unique canonical slope on the projective line through (x, y).
// Rejects (0, 0).
Slope canonicalize(Int x, Int y);

// |b_s * a_t - a_s * b_t|; zero iff s == t for canonical inputs.
Int intersection_number(const Slope& s, const Slope& t);

// Componentwise sum of an adjacent pair; adjacent to both inputs.
// Rejects pairs with intersection number != 1.
Slope mediant(const Slope& s, const Slope& t);

// Finite continued-fraction expansion. All coefficients after the first are
// >= 1. `exact` is false for truncations (e.g. prefixes of an irrational).
struct CFExpansion {
  std::vector<Int> coefficients;
  bool exact = true;

  bool operator==(const CFExpansion& o) const {
    return exact == o.exact && coefficients == o.coefficients;
  }
};

// Standard floor-based expansion of the value b/a. Rejects 1/0.
CFExpansion continued_fraction(const Slope& s);

// Folds a coefficient list back into an exact rational. Throws on lists
// whose tail folds to zero (division by zero in the reconstruction).
Rat cf_fold(const std::vector<Int>& coefficients);

// "b/a" of the canonical pair, e.g. "1/0", "2/5", "3/-7".
std::string to_string(const Slope& s);

std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace farey
