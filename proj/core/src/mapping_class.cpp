#include "farey/mapping_class.hpp"

#include <string>

namespace farey {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

std::string matrix_text(const MappingClass& m) {
  return m.p.str() + "," + m.q.str() + "," + m.r.str() + "," + m.s.str();
}

// Folds a coefficient prefix into an exact convergent.
Rat fold_prefix(const std::vector<Int>& coeffs) {
  Rat x(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) x = Rat(coeffs[i]) + 1 / x;
  return x;
}

}  // namespace

Int det(const MappingClass& m) { return m.p * m.s - m.q * m.r; }
Int trace(const MappingClass& m) { return m.p + m.s; }

MappingClass validated_mapping_class(Int p, Int q, Int r, Int s) {
  MappingClass m{std::move(p), std::move(q), std::move(r), std::move(s)};
  if (abs_int(det(m)) != 1)
    throw Error(ErrorKind::kArgument,
                "matrix " + matrix_text(m) + " has determinant " + det(m).str() +
                    "; |det| = 1 required");
  return m;
}

MappingClassType classify(const MappingClass& m) {
  if (det(m) != 1)
    throw Error(ErrorKind::kArgument,
                "classification is defined for det = +1 classes; matrix " +
                    matrix_text(m) + " has det " + det(m).str());
  Int t = abs_int(trace(m));
  if (t < 2) return MappingClassType::kPeriodic;
  if (t == 2) return MappingClassType::kReducible;
  return MappingClassType::kAnosov;
}

Slope act(const MappingClass& m, const Slope& s) {
  return canonicalize(m.p * s.a + m.q * s.b, m.r * s.a + m.s * s.b);
}

MappingClass compose(const MappingClass& m1, const MappingClass& m2) {
  return MappingClass{m1.p * m2.p + m1.q * m2.r, m1.p * m2.q + m1.q * m2.s,
                      m1.r * m2.p + m1.s * m2.r, m1.r * m2.q + m1.s * m2.s};
}

Rat act_on_direction(const MappingClass& m, const Rat& v) {
  Rat den = Rat(m.p) + Rat(m.q) * v;
  if (den == 0)
    throw Error(ErrorKind::kComputation, "direction maps to 1/0 under this matrix");
  return (Rat(m.r) + Rat(m.s) * v) / den;
}

OrbitReport orbit_growth(const MappingClass& m, const Slope& s, int N) {
  if (classify(m) != MappingClassType::kAnosov)
    throw Error(ErrorKind::kArgument,
                "orbit growth requires an Anosov class (|trace| > 2); matrix " +
                    matrix_text(m) + " has trace " + trace(m).str());
  if (N < 1) throw Error(ErrorKind::kArgument, "orbit length must be >= 1");

  OrbitReport report;
  report.matrix = m;
  report.start = s;
  Slope image = s;
  for (int n = 1; n <= N; ++n) {
    image = act(m, image);
    report.steps.push_back(OrbitStep{n, image, distance(s, image)});
  }
  int mid = (N + 1) / 2;
  int dist_mid = report.steps[static_cast<std::size_t>(mid) - 1].dist;
  int dist_n = report.steps.back().dist;
  report.growthSlopeEstimate =
      (mid == N) ? make_rat(dist_n, N) : make_rat(dist_n - dist_mid, N - mid);
  return report;
}

EigenDirectionReport eigen_directions(const MappingClass& m, int k) {
  if (classify(m) != MappingClassType::kAnosov)
    throw Error(ErrorKind::kArgument,
                "eigen directions require an Anosov class; matrix " +
                    matrix_text(m) + " has trace " + trace(m).str());
  if (k < 1) throw Error(ErrorKind::kArgument, "prefix length must be >= 1");

  const Int t = trace(m);
  const Int D = t * t - 4;
  // q != 0 for Anosov: q = 0 with det 1 forces p = s = +-1 and |trace| = 2.

  // Fixed directions v of v -> (r + s*v)/(p + q*v) solve q*v^2 + (p-s)*v - r = 0:
  // v = ((s - p) +- sqrt(D)) / (2q), written as (P + sqrt(D))/Q with the sign
  // folded into (P, Q).
  struct Candidate {
    Int P, Q;
    QuadraticSurd value;
  };
  std::array<Candidate, 2> candidates{
      Candidate{m.s - m.p, 2 * m.q,
                QuadraticSurd{make_rat(m.s - m.p, 2 * m.q), make_rat(1, 2 * m.q), D}},
      Candidate{m.p - m.s, -2 * m.q,
                QuadraticSurd{make_rat(m.s - m.p, 2 * m.q), make_rat(-1, 2 * m.q), D}},
  };

  // The attracting direction pulls its convergents closer under the action.
  int attracting = -1;
  for (int c = 0; c < 2; ++c) {
    SurdCF machine(candidates[c].P, candidates[c].Q, D);
    std::vector<Int> coeffs;
    for (int depth = 0; depth < 3; ++depth) {
      for (int i = 0; i < 12; ++i) coeffs.push_back(machine.next());
      Rat conv = fold_prefix(coeffs);
      Rat image;
      try {
        image = act_on_direction(m, conv);
      } catch (const Error&) {
        continue;  // convergent hit the pole; take a deeper one
      }
      int cmp = surd_abs_compare(surd_sub_rat(candidates[c].value, image),
                                 surd_sub_rat(candidates[c].value, conv));
      if (cmp < 0) {
        if (attracting >= 0)
          throw std::logic_error("both fixed directions claim to attract");
        attracting = c;
      }
      break;
    }
  }
  if (attracting < 0)
    throw std::logic_error("no attracting fixed direction identified");

  const Candidate& a = candidates[static_cast<std::size_t>(attracting)];
  SurdCFExpansion exp =
      surd_cf_expansion(a.P, a.Q, D, static_cast<std::size_t>(k));

  EigenDirectionReport report;
  report.trace = t;
  report.eigenvalues = {QuadraticSurd{make_rat(t, 2), Rat(1, 2), D},
                        QuadraticSurd{make_rat(t, 2), Rat(-1, 2), D}};
  report.attractingDirection = a.value;
  report.cfPrefix = std::move(exp.prefix);
  report.periodicBlock = std::move(exp.period);
  return report;
}

}  // namespace farey
