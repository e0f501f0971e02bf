#include "farey/surd.hpp"

#include <unordered_map>

namespace farey {

namespace {

int rat_sign(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace

int surd_sign(const QuadraticSurd& s) {
  int sp = rat_sign(s.p);
  int sq = rat_sign(s.q);
  if (sq == 0 || s.d == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 * d.
  Rat p2 = s.p * s.p;
  Rat q2d = s.q * s.q * Rat(s.d);
  if (p2 == q2d) return 0;
  return (p2 > q2d) ? sp : sq;
}

int surd_abs_compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d != y.d)
    throw Error(ErrorKind::kArgument, "surd comparison across different fields");
  int sx = surd_sign(x);
  int sy = surd_sign(y);
  QuadraticSurd ax{sx < 0 ? Rat(-x.p) : x.p, sx < 0 ? Rat(-x.q) : x.q, x.d};
  QuadraticSurd ay{sy < 0 ? Rat(-y.p) : y.p, sy < 0 ? Rat(-y.q) : y.q, y.d};
  return surd_sign(QuadraticSurd{ax.p - ay.p, ax.q - ay.q, x.d});
}

SurdCF::SurdCF(Int P, Int Q, Int D)
    : P_(std::move(P)), Q_(std::move(Q)), D_(std::move(D)) {
  if (Q_ == 0) throw Error(ErrorKind::kArgument, "surd CF: zero denominator");
  if (D_ <= 0 || is_perfect_square(D_))
    throw Error(ErrorKind::kArgument, "surd CF: discriminant must be a nonsquare positive integer");
  if ((D_ - P_ * P_) % Q_ != 0)
    throw Error(ErrorKind::kArgument, "surd CF: Q does not divide D - P^2");
  w_ = isqrt(D_);
}

Int SurdCF::next() {
  // floor((P + sqrt(D)) / Q), exactly: sqrt(D) is irrational, so
  // floor(P + sqrt(D)) = P + w and floor(P - sqrt(D)) = P - w - 1.
  Int a = (Q_ > 0) ? floor_div(P_ + w_, Q_) : floor_div(-P_ - w_ - 1, -Q_);
  Int P_next = a * Q_ - P_;
  Int Q_next = (D_ - P_next * P_next) / Q_;
  P_ = P_next;
  Q_ = Q_next;
  return a;
}

SurdCFExpansion surd_cf_expansion(Int P, Int Q, Int D, std::size_t k) {
  SurdCF machine(std::move(P), std::move(Q), std::move(D));
  SurdCFExpansion out;

  struct StateHash {
    std::size_t operator()(const std::pair<Int, Int>& s) const {
      std::size_t seed = hash_int(s.first);
      hash_mix(seed, hash_int(s.second));
      return seed;
    }
  };
  std::unordered_map<std::pair<Int, Int>, std::size_t, StateHash> seen;
  std::vector<Int> coeffs;
  std::size_t first = 0;
  while (true) {
    auto [it, inserted] = seen.try_emplace(machine.state(), coeffs.size());
    if (!inserted) {
      first = it->second;
      break;
    }
    coeffs.push_back(machine.next());
  }
  out.preperiod = first;
  out.period.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(first), coeffs.end());
  out.prefix = coeffs;
  while (out.prefix.size() < k)
    out.prefix.push_back(out.period[(out.prefix.size() - first) % out.period.size()]);
  out.prefix.resize(k);
  return out;
}

}  // namespace farey
