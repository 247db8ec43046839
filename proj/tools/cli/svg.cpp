#include <algorithm>
#include <sstream>

#include "cli/cli.hpp"
#include "dyadic/oracle.hpp"

namespace dyadic::cli {

std::string to_decimal(const Dyadic& x) {
  if (x.is_integer()) return x.to_integer().str();
  // n / 2^k = n 5^k / 10^k
  const auto k = static_cast<std::size_t>(-x.exp());
  Integer scaled = abs(x.num());
  for (std::size_t i = 0; i < k; ++i) scaled *= 5;
  std::string digits = scaled.str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return (x.sign() < 0 ? "-" : "") + digits;
}

namespace {

// Smallest power of two >= x, for x > 0.
Dyadic power_of_two_above(const Dyadic& x) {
  const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(abs(x.num()))) + 1;
  const Dyadic p = Dyadic::pow2(x.exp() + bits - 1);
  return p >= x ? p : p.scaled(1);
}

std::string coord(const Vec2& p) { return to_decimal(p.x) + "," + to_decimal(-p.y); }

}  // namespace

std::string render_svg(const Triangle& t, int depth, const SvgOptions& options) {
  const std::vector<Vec2> points = enumerate_points(t, depth);  // validates t and depth

  const auto [xmin, xmax] = std::minmax({t[0].x, t[1].x, t[2].x});
  const auto [ymin, ymax] = std::minmax({t[0].y, t[1].y, t[2].y});
  const Dyadic extent = std::max(xmax - xmin, ymax - ymin);
  const Dyadic unit = power_of_two_above(extent).scaled(-5);
  const Dyadic radius = std::min(unit, Dyadic::pow2(-depth)).scaled(-2);
  const Dyadic stroke = unit.scaled(-3);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- dyadic triangle " << format_triangle(t) << "; grid depth " << depth << "; "
     << points.size() << " points; y axis flipped: a point (x,y) is drawn at (x,-y) -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << to_decimal(xmin - unit) << " "
     << to_decimal(-ymax - unit) << " " << to_decimal(xmax - xmin + unit.scaled(1)) << " "
     << to_decimal(ymax - ymin + unit.scaled(1)) << "\">\n";

  if (options.grid) {
    // unit grid, coarsened by powers of two to at most 64 lines per axis
    Dyadic step = 1;
    while ((xmax - xmin) > step.scaled(6) || (ymax - ymin) > step.scaled(6)) step = step.scaled(1);
    const Integer sx = step.to_integer();
    os << "<g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"" << to_decimal(stroke) << "\">\n";
    for (Integer x = ceil_integer(xmin) / sx * sx; Dyadic(x) <= xmax; x += sx) {
      if (Dyadic(x) < xmin) continue;
      os << "<line x1=\"" << x << "\" y1=\"" << to_decimal(-ymax) << "\" x2=\"" << x << "\" y2=\""
         << to_decimal(-ymin) << "\"/>\n";
    }
    for (Integer y = ceil_integer(ymin) / sx * sx; Dyadic(y) <= ymax; y += sx) {
      if (Dyadic(y) < ymin) continue;
      os << "<line x1=\"" << to_decimal(xmin) << "\" y1=\"" << to_decimal(-Dyadic(y)) << "\" x2=\""
         << to_decimal(xmax) << "\" y2=\"" << to_decimal(-Dyadic(y)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<polygon class=\"triangle\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
     << to_decimal(stroke) << "\" points=\"" << coord(t[0]) << " " << coord(t[1]) << " "
     << coord(t[2]) << "\"/>\n";

  os << "<g class=\"points\" fill=\"#c03020\">\n";
  for (const Vec2& p : points) {
    os << "<circle cx=\"" << to_decimal(p.x) << "\" cy=\"" << to_decimal(-p.y) << "\" r=\""
       << to_decimal(radius) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace dyadic::cli
