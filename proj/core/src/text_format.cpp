#include "farey/text_format.hpp"

#include <cctype>
#include <vector>

namespace farey {

namespace {

// Strict signed integer literal starting at `pos`; advances `pos` past it.
Int scan_int(const std::string& text, std::size_t& pos, const std::string& context) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start)
    throw Error(ErrorKind::kArgument, context + " '" + text + "': expected an integer at position " +
                                          std::to_string(start));
  return Int(text.substr(start, pos - start));
}

void expect_char(const std::string& text, std::size_t& pos, char c, const std::string& context) {
  if (pos >= text.size() || text[pos] != c)
    throw Error(ErrorKind::kArgument, context + " '" + text + "': expected '" + c +
                                          "' at position " + std::to_string(pos));
  ++pos;
}

void expect_end(const std::string& text, std::size_t pos, const std::string& context) {
  if (pos != text.size())
    throw Error(ErrorKind::kArgument, context + " '" + text + "': unexpected character at position " +
                                          std::to_string(pos));
}

}  // namespace

Slope parse_slope(const std::string& text) {
  if (text == "inf") return slope_infinity();
  std::size_t pos = 0;
  Int b = scan_int(text, pos, "slope");
  expect_char(text, pos, '/', "slope");
  Int a = scan_int(text, pos, "slope");
  expect_end(text, pos, "slope");
  if (a == 0 && b == 0)
    throw Error(ErrorKind::kArgument, "slope '" + text + "': 0/0 names no direction");
  return canonicalize(a, b);
}

MappingClass parse_matrix(const std::string& text) {
  std::size_t pos = 0;
  std::vector<Int> entries;
  entries.push_back(scan_int(text, pos, "matrix"));
  for (int i = 0; i < 3; ++i) {
    expect_char(text, pos, ',', "matrix");
    entries.push_back(scan_int(text, pos, "matrix"));
  }
  expect_end(text, pos, "matrix");
  return validated_mapping_class(entries[0], entries[1], entries[2], entries[3]);
}

Window parse_window(const std::string& text) {
  std::size_t pos = 0;
  Int a = scan_int(text, pos, "window");
  Int b = a;
  if (pos < text.size()) {
    expect_char(text, pos, ',', "window");
    b = scan_int(text, pos, "window");
    expect_end(text, pos, "window");
  }
  return validated_window(to_long_checked(a, "window"), to_long_checked(b, "window"));
}

std::string format_rat(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& text) {
  std::size_t pos = 0;
  Int num = scan_int(text, pos, "rational");
  expect_char(text, pos, '/', "rational");
  Int den = scan_int(text, pos, "rational");
  expect_end(text, pos, "rational");
  return make_rat(num, den);
}

std::string format_matrix(const MappingClass& m) {
  return m.p.str() + "," + m.q.str() + "," + m.r.str() + "," + m.s.str();
}

}  // namespace farey
