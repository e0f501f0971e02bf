#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace farey {

// All lattice arithmetic is exact and unbounded. Coordinates of matrix
// orbits grow like lambda^n, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  kArgument,     // bad input or violated precondition
  kComputation,  // valid request, no result (e.g. no safe cone at this window)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Rational with sign normalized into the numerator; cpp_rational rejects
// negative denominators in its two-argument constructor.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw Error(ErrorKind::kArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;  // cpp_int truncates toward zero
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& n, const Int& d) { return -floor_div(-n, d); }

// Floor of sqrt; argument must be nonnegative.
inline Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorKind::kArgument, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

inline long long to_long_checked(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw Error(ErrorKind::kComputation,
                std::string(what) + ": value exceeds 64-bit range");
  }
  return v.convert_to<long long>();
}

inline std::size_t hash_int(const Int& v) {
  boost::hash<Int> h;
  return h(v);
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}  // namespace farey
