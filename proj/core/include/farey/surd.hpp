#pragma once

#include <utility>
#include <vector>

#include "farey/numeric.hpp"

namespace farey {

// Exact element p + q*sqrt(d) of a real quadratic field. All comparisons are
// integer sign tests; no floating point.
struct QuadraticSurd {
  Rat p;
  Rat q;
  Int d;

  bool operator==(const QuadraticSurd& o) const {
    return p == o.p && q == o.q && d == o.d;
  }
};

// Sign of the value, exactly (-1, 0, +1).
int surd_sign(const QuadraticSurd& s);

// Compares |x| with |y|; both must carry the same d.
int surd_abs_compare(const QuadraticSurd& x, const QuadraticSurd& y);

inline QuadraticSurd surd_sub_rat(const QuadraticSurd& s, const Rat& r) {
  return QuadraticSurd{s.p - r, s.q, s.d};
}

// Continued-fraction machine for (P + sqrt(D)) / Q with the classical
// invariant Q | (D - P^2). D must be positive and not a perfect square, so
// the expansion never terminates and is eventually periodic.
class SurdCF {
 public:
  SurdCF(Int P, Int Q, Int D);

  Int next();
  std::pair<Int, Int> state() const { return {P_, Q_}; }
  const Int& discriminant() const { return D_; }

 private:
  Int P_, Q_, D_, w_;  // w = floor(sqrt(D))
};

struct SurdCFExpansion {
  std::vector<Int> prefix;   // the first k coefficients
  std::vector<Int> period;   // repeating block, verified by state recurrence
  std::size_t preperiod = 0; // coefficients before the block first starts
};

SurdCFExpansion surd_cf_expansion(Int P, Int Q, Int D, std::size_t k);

}  // namespace farey
