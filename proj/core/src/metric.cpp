#include "farey/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace farey {

namespace {

struct ExtGcd {
  Int g, u, v;  // u*x + v*y = g
};

ExtGcd ext_gcd(Int x, Int y) {
  Int old_r = x, r = y;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u;
    old_u = u;
    u = tmp;
    tmp = old_v - q * v;
    old_v = v;
    v = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

// Unimodular change of coordinates on (a, b) pairs.
struct Mobius {
  Int m00, m01, m10, m11;

  std::pair<Int, Int> apply(const Int& a, const Int& b) const {
    return {m00 * a + m01 * b, m10 * a + m11 * b};
  }
  Mobius inverse() const { return {m11, -m01, -m10, m00}; }  // det = +1
};

// Maps s to (0, 1) = 1/0 with determinant +1.
Mobius to_infinity(const Slope& s) {
  ExtGcd e = ext_gcd(s.a, s.b);  // u*a + v*b = 1
  return {s.b, -s.a, e.u, e.v};
}

std::vector<Int> value_cf(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::vector<Int> cf;
  Int a0 = floor_div(num, den);
  cf.push_back(a0);
  Int rem = num - a0 * den;
  while (rem != 0) {
    num = den;
    den = rem;
    Int q = num / den;
    cf.push_back(q);
    rem = num - q * den;
  }
  return cf;
}

// d(1/0, [a0; a1, ..., ak]) for k >= 1.
//
// Every vertex with denominator >= 2 has exactly two neighbors of smaller
// denominator (its Stern-Brocot parents), and some geodesic to 1/0 descends
// through a parent at every step. In coefficient terms the parents of
// [a0; ...; a_{j-1}, t] are the previous convergent [a0; ...; a_{j-1}] and
// the decrement [a0; ...; a_{j-1}, t-1], with [a0; ...; a_{j-1}, 1] equal to
// [a0; ...; a_{j-1} + 1]. Tracking g_j = d(1/0, [a0..aj]) and
// h_j = d(1/0, [a0..aj + 1]) closes the recursion.
int cf_distance(const std::vector<Int>& cf) {
  Int g = 1, h = 1;  // level 0: both truncations are integers
  for (std::size_t j = 1; j < cf.size(); ++j) {
    const Int& a = cf[j];
    Int g_next = std::min(Int(1 + g), Int(a - 1 + h));
    Int h_next = std::min(Int(1 + g), Int(a + h));
    g = g_next;
    h = h_next;
  }
  return static_cast<int>(g.convert_to<long long>());
}

struct GeodesicPlan {
  std::vector<Int> cf;
  std::vector<Int> p, q;       // convergents of cf
  std::vector<Int> g, h;       // DP values per level
  std::vector<std::pair<Int, Int>> path;  // raw (a, b) pairs, infinity first

  std::pair<Int, Int> conv_raw(std::size_t j) const { return {q[j], p[j]}; }

  std::pair<Int, Int> state_raw(std::size_t j, const Int& t) const {
    // [a0; ...; a_{j-1}, t] for j >= 1
    Int pp = (j >= 2) ? p[j - 2] : Int(1);
    Int qq = (j >= 2) ? q[j - 2] : Int(0);
    return {t * q[j - 1] + qq, t * p[j - 1] + pp};
  }

  void build_g(std::size_t j) {
    if (j == 0) {
      path.push_back({0, 1});
      path.push_back({1, cf[0]});
      return;
    }
    if (g[j] == 1 + g[j - 1]) {  // prefer the previous-convergent jump on ties
      build_g(j - 1);
      path.push_back(conv_raw(j));
    } else {
      build_h(j - 1);
      for (Int t = 2; t <= cf[j]; ++t) path.push_back(state_raw(j, t));
    }
  }

  void build_h(std::size_t j) {
    if (j == 0) {
      path.push_back({0, 1});
      path.push_back({1, cf[0] + 1});
      return;
    }
    if (h[j] == 1 + g[j - 1]) {
      build_g(j - 1);
      path.push_back(state_raw(j, cf[j] + 1));
    } else {
      build_h(j - 1);
      for (Int t = 2; t <= cf[j] + 1; ++t) path.push_back(state_raw(j, t));
    }
  }
};

// Path of raw (a, b) pairs from (0, 1) to the value of cf, realizing
// cf_distance(cf).
std::vector<std::pair<Int, Int>> cf_geodesic(const std::vector<Int>& cf) {
  GeodesicPlan plan;
  plan.cf = cf;
  plan.p.resize(cf.size());
  plan.q.resize(cf.size());
  for (std::size_t j = 0; j < cf.size(); ++j) {
    Int pp = (j >= 2) ? plan.p[j - 2] : (j == 1 ? Int(1) : Int(0));
    Int qq = (j >= 2) ? plan.q[j - 2] : (j == 1 ? Int(0) : Int(1));
    if (j == 0) {
      plan.p[0] = cf[0];
      plan.q[0] = 1;
    } else {
      plan.p[j] = cf[j] * plan.p[j - 1] + pp;
      plan.q[j] = cf[j] * plan.q[j - 1] + qq;
    }
  }
  plan.g.resize(cf.size());
  plan.h.resize(cf.size());
  plan.g[0] = 1;
  plan.h[0] = 1;
  for (std::size_t j = 1; j < cf.size(); ++j) {
    plan.g[j] = std::min(Int(1 + plan.g[j - 1]), Int(cf[j] - 1 + plan.h[j - 1]));
    plan.h[j] = std::min(Int(1 + plan.g[j - 1]), Int(cf[j] + plan.h[j - 1]));
  }
  plan.build_g(cf.size() - 1);
  return plan.path;
}

// Window-clipped t-interval of one affine neighbor family.
struct TRange {
  Int lo, hi;
  bool empty = false;
};

TRange clip_axis(const Int& base, const Int& step, long long bound) {
  TRange r{0, 0, false};
  Int lo_num = -Int(bound) - base;
  Int hi_num = Int(bound) - base;
  if (step == 0) {
    if (base > bound || base < -Int(bound)) r.empty = true;
    // unconstrained otherwise; caller intersects with the other axis
    r.lo = std::numeric_limits<long long>::min();
    r.hi = std::numeric_limits<long long>::max();
    return r;
  }
  if (step > 0) {
    r.lo = ceil_div(lo_num, step);
    r.hi = floor_div(hi_num, step);
  } else {
    r.lo = ceil_div(hi_num, step);
    r.hi = floor_div(lo_num, step);
  }
  if (r.lo > r.hi) r.empty = true;
  return r;
}

void check_witness(const GeodesicWitness& w, const Slope& s, const Slope& t, int d) {
  if (w.length() != d || w.vertices.front() != s || w.vertices.back() != t)
    throw std::logic_error("geodesic reconstruction failed");
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    if (intersection_number(w.vertices[i], w.vertices[i + 1]) != 1)
      throw std::logic_error("geodesic reconstruction produced a non-edge");
}

void neighbors_in_window(const Slope& s, const Window& w, std::vector<Slope>& out) {
  ExtGcd e = ext_gcd(s.b, s.a);  // solves b*x - a*y = 1 with (x, y) = (u, -v)
  for (int eps : {1, -1}) {
    Int x0 = eps * e.u;
    Int y0 = eps * -e.v;
    TRange rx = clip_axis(x0, s.a, w.maxA);
    TRange ry = clip_axis(y0, s.b, w.maxB);
    if (rx.empty || ry.empty) continue;
    Int lo = std::max(rx.lo, ry.lo);
    Int hi = std::min(rx.hi, ry.hi);
    for (Int t = lo; t <= hi; ++t)
      out.push_back(canonicalize(x0 + t * s.a, y0 + t * s.b));
  }
}

}  // namespace

Window validated_window(long long maxA, long long maxB) {
  if (maxA < 1 || maxB < 1)
    throw Error(ErrorKind::kArgument, "window bounds must be >= 1");
  return Window{maxA, maxB};
}

bool window_contains(const Window& w, const Slope& s) {
  Int absA = s.a < 0 ? Int(-s.a) : s.a;
  return absA <= w.maxA && s.b <= w.maxB;  // canonical b >= 0
}

std::vector<Slope> window_slopes(const Window& w) {
  constexpr long long kMaxPoints = 200'000'000;
  if ((Int(2) * w.maxA + 1) * (Int(w.maxB) + 1) > kMaxPoints)
    throw Error(ErrorKind::kComputation, "window too large to enumerate");
  std::vector<Slope> out;
  out.push_back(slope_zero());  // (1, 0), the only canonical slope with b = 0
  for (long long b = 1; b <= w.maxB; ++b)
    for (long long a = -w.maxA; a <= w.maxA; ++a)
      if (std::gcd(std::llabs(a), b) == 1) out.push_back(Slope{a, b});
  return out;
}

bool are_adjacent(const Slope& s, const Slope& t) {
  return intersection_number(s, t) == 1;
}

std::vector<Slope> neighbor_family(const Slope& s, const Int& t_lo, const Int& t_hi) {
  std::vector<Slope> out;
  std::unordered_set<Slope, SlopeHash> seen;
  ExtGcd e = ext_gcd(s.b, s.a);
  for (int eps : {1, -1}) {
    Int x0 = eps * e.u;
    Int y0 = eps * -e.v;
    for (Int t = t_lo; t <= t_hi; ++t) {
      Slope n = canonicalize(x0 + t * s.a, y0 + t * s.b);
      if (seen.insert(n).second) out.push_back(n);
    }
  }
  return out;
}

int distance(const Slope& s, const Slope& t) {
  if (s == t) return 0;
  if (intersection_number(s, t) == 1) return 1;
  Mobius m = to_infinity(s);
  auto [alpha, beta] = m.apply(t.a, t.b);  // image value beta/alpha, |alpha| >= 2
  return cf_distance(value_cf(beta, alpha));
}

std::optional<int> distance_at_most(const Slope& s, const Slope& t, int limit) {
  int d = distance(s, t);
  if (d > limit) return std::nullopt;
  return d;
}

std::optional<int> distance_in_window(const Slope& s, const Slope& t, const Window& w) {
  if (!window_contains(w, s) || !window_contains(w, t)) return std::nullopt;
  if (s == t) return 0;
  std::unordered_set<Slope, SlopeHash> visited;
  std::vector<Slope> frontier{s};
  visited.insert(s);
  std::vector<Slope> scratch;
  for (int level = 1; !frontier.empty(); ++level) {
    std::vector<Slope> next;
    for (const Slope& v : frontier) {
      scratch.clear();
      neighbors_in_window(v, w, scratch);
      for (const Slope& n : scratch) {
        if (!visited.insert(n).second) continue;
        if (n == t) return level;
        next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

Window safety_window(const Slope& s, const Slope& t) {
  Int m = 1;
  for (const Int& v : {s.a, s.b, t.a, t.b}) {
    Int av = v < 0 ? Int(-v) : v;
    if (av > m) m = av;
  }
  long long bound = to_long_checked(m, "safety_window");
  return Window{bound, bound};
}

GeodesicWitness geodesic_witness(const Slope& s, const Slope& t) {
  if (s == t) return GeodesicWitness{{s}};
  int d = distance(s, t);
  if (d == 1) return GeodesicWitness{{s, t}};
  Mobius m = to_infinity(s);
  Mobius inv = m.inverse();
  auto [alpha, beta] = m.apply(t.a, t.b);
  auto raw_path = cf_geodesic(value_cf(beta, alpha));
  GeodesicWitness w;
  w.vertices.reserve(raw_path.size());
  for (const auto& [ra, rb] : raw_path) {
    auto [pa, pb] = inv.apply(ra, rb);
    w.vertices.push_back(canonicalize(pa, pb));
  }
  check_witness(w, s, t, d);
  return w;
}

BallReport ball(const Slope& center, int n, const Window& w) {
  if (n < 0) throw Error(ErrorKind::kArgument, "ball radius must be >= 0");
  BallReport report;
  report.center = center;
  report.radius = n;
  report.window = w;
  for (const Slope& v : window_slopes(w)) {
    int d = distance(center, v);
    if (d <= n) report.members.push_back(BallMember{v, d});
  }
  return report;  // window_slopes is (b, a)-sorted already
}

}  // namespace farey
