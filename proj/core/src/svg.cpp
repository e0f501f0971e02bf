#include "farey/svg.hpp"

#include <array>
#include <sstream>

namespace farey {

namespace {

constexpr std::array<const char*, 6> kDistancePalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Canvas {
  long long maxA, maxB;
  long long scale;
  long long width, height;

  // x_px = (a + maxA + 1) * scale, y_px = (maxB + 1 - b) * scale.
  long long px(long long a) const { return (a + maxA + 1) * scale; }
  long long py(long long b) const { return (maxB + 1 - b) * scale; }

  long long px_rat(const Rat& a) const { return round_px((a + maxA + 1) * scale); }
  long long py_rat(const Rat& b) const { return round_px((Rat(maxB) + 1 - b) * scale); }

  static long long round_px(const Rat& v) {
    return to_long_checked(floor_div(2 * numerator(v) + denominator(v),
                                     2 * denominator(v)),
                           "svg pixel");
  }
};

Canvas make_canvas(const Window& w, int scale) {
  if (scale < 1) throw Error(ErrorKind::kArgument, "svg scale must be >= 1");
  Canvas c{w.maxA, w.maxB, scale, 0, 0};
  c.width = (2 * w.maxA + 2) * scale;
  c.height = (w.maxB + 2) * scale;
  return c;
}

void open_document(std::ostringstream& out, const Canvas& c) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- lattice (a, b) to canvas: x_px = (a + " << c.maxA + 1 << ") * " << c.scale
      << ", y_px = (" << c.maxB + 1 << " - b) * " << c.scale
      << "; y grows downward -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width << "\" height=\""
      << c.height << "\" viewBox=\"0 0 " << c.width << " " << c.height << "\">\n";
  out << "  <rect width=\"" << c.width << "\" height=\"" << c.height
      << "\" fill=\"white\"/>\n";
}

void draw_exceptional_lines(std::ostringstream& out, const Canvas& c) {
  auto vline = [&](long long a) {
    out << "  <line class=\"axis-line\" x1=\"" << c.px(a) << "\" y1=\"" << c.py(c.maxB)
        << "\" x2=\"" << c.px(a) << "\" y2=\"" << c.py(0)
        << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  };
  vline(1);
  vline(-1);
  out << "  <line class=\"axis-line\" x1=\"" << c.px(-c.maxA) << "\" y1=\"" << c.py(1)
      << "\" x2=\"" << c.px(c.maxA) << "\" y2=\"" << c.py(1)
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
}

// Sector between two direction rays, clipped to the canvas. The upper-half
// ray of direction v runs into x > 0 for v >= 0 and into x < 0 for v < 0.
void draw_sector(std::ostringstream& out, const Canvas& c, const ConeSector& cone,
                 const char* css_class, const char* fill) {
  auto ray_end = [&](const Rat& v) -> std::pair<long long, long long> {
    Rat x_limit = Rat(c.maxA) + 1;
    Rat x;
    if (v >= 0) {
      x = x_limit;
      if (v != 0 && v * x > Rat(c.maxB) + 1) x = (Rat(c.maxB) + 1) / v;
    } else {
      x = -x_limit;
      if (v * x > Rat(c.maxB) + 1) x = (Rat(c.maxB) + 1) / v;
    }
    return {c.px_rat(x), c.py_rat(v * x)};
  };
  auto [x1, y1] = ray_end(cone.lo);
  auto [x2, y2] = ray_end(cone.hi);
  out << "  <polygon class=\"" << css_class << "\" points=\"" << c.px(0) << "," << c.py(0)
      << " " << x1 << "," << y1 << " " << x2 << "," << y2 << "\" fill=\"" << fill
      << "\" fill-opacity=\"0.25\" stroke=\"" << fill << "\" stroke-width=\"1\"/>\n";
}

void close_document(std::ostringstream& out) { out << "</svg>\n"; }

}  // namespace

std::string render_svg(const BallReport& report, int scale) {
  Canvas c = make_canvas(report.window, scale);
  std::ostringstream out;
  open_document(out, c);
  draw_exceptional_lines(out, c);
  long long radius = std::max(2ll, c.scale * 3 / 8);
  for (const BallMember& m : report.members) {
    const char* fill = kDistancePalette[static_cast<std::size_t>(m.distance) %
                                        kDistancePalette.size()];
    out << "  <circle class=\"member\" cx=\""
        << c.px(to_long_checked(m.slope.a, "svg member")) << "\" cy=\""
        << c.py(to_long_checked(m.slope.b, "svg member")) << "\" r=\"" << radius
        << "\" fill=\"" << fill << "\"/>\n";
  }
  close_document(out);
  return out.str();
}

std::string render_svg(const CoverReport& report, int scale) {
  Canvas c = make_canvas(report.window, scale);
  std::ostringstream out;
  open_document(out, c);
  draw_exceptional_lines(out, c);
  for (const ConeSector& cone : report.cones)
    draw_sector(out, c, cone, "cone", "#1f77b4");
  if (report.safeCone) draw_sector(out, c, *report.safeCone, "safe-cone", "#2ca02c");
  close_document(out);
  return out.str();
}

}  // namespace farey
