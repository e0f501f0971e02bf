#include "farey/slope.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>

namespace farey {

Slope canonicalize(Int x, Int y) {
  if (x == 0 && y == 0)
    throw Error(ErrorKind::kArgument, "canonicalize: zero vector has no slope");
  Int g = boost::multiprecision::gcd(x, y);  // gcd is nonnegative, gcd(0,k)=|k|
  x /= g;
  y /= g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  return Slope{x, y};
}

Int intersection_number(const Slope& s, const Slope& t) {
  Int cross = s.b * t.a - s.a * t.b;
  return cross < 0 ? Int(-cross) : cross;
}

Slope mediant(const Slope& s, const Slope& t) {
  if (intersection_number(s, t) != 1)
    throw Error(ErrorKind::kArgument,
                "mediant: slopes " + to_string(s) + " and " + to_string(t) +
                    " are not adjacent");
  return canonicalize(s.a + t.a, s.b + t.b);
}

CFExpansion continued_fraction(const Slope& s) {
  if (s.a == 0)
    throw Error(ErrorKind::kArgument, "continued_fraction: 1/0 has no finite value");
  Int num = s.b, den = s.a;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  CFExpansion cf;
  Int a0 = floor_div(num, den);
  cf.coefficients.push_back(a0);
  Int rem = num - a0 * den;
  while (rem != 0) {
    num = den;
    den = rem;
    Int q = num / den;  // both positive from here on
    cf.coefficients.push_back(q);
    rem = num - q * den;
  }
  cf.exact = true;
  return cf;
}

Rat cf_fold(const std::vector<Int>& coefficients) {
  if (coefficients.empty())
    throw Error(ErrorKind::kArgument, "cf_fold: empty coefficient list");
  Rat x(coefficients.back());
  for (std::size_t i = coefficients.size() - 1; i-- > 0;) {
    if (x == 0)
      throw Error(ErrorKind::kArgument, "cf_fold: tail folds to zero");
    x = Rat(coefficients[i]) + 1 / x;
  }
  return x;
}

std::string to_string(const Slope& s) { return s.b.str() + "/" + s.a.str(); }

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << to_string(s);
}

}  // namespace farey
