#pragma once

#include <string>

#include "farey/mapping_class.hpp"
#include "farey/metric.hpp"
#include "farey/slope.hpp"

namespace farey {

// Slope syntax "b/a" (e.g. "1/0", "2/5", "-3/7") or the literal "inf".
// Malformed input is rejected with a position-annotated message; "0/0" is
// rejected with a distinct one. The result is canonical.
Slope parse_slope(const std::string& text);

// Matrix syntax "p,q,r,s", row-major; |det| = 1 enforced.
MappingClass parse_matrix(const std::string& text);

// Window syntax "A" or "A,B" with positive integer bounds.
Window parse_window(const std::string& text);

// Rationals serialize as "p/q" with a positive denominator, e.g. "3/1".
std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& text);

std::string format_matrix(const MappingClass& m);

}  // namespace farey
