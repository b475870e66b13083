#include "folia/svg.hpp"

#include <algorithm>
#include <sstream>

#include "folia/csv.hpp"
#include "folia/error.hpp"

namespace folia::svg {

std::string render(const std::vector<Polyline>& lines,
                   const std::vector<Marker>& markers, double y_axis) {
  double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
  bool seen = false;
  auto grow = [&](const Vec2& p) {
    if (!seen) {
      minx = maxx = p.x;
      miny = maxy = p.y;
      seen = true;
    } else {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  };
  for (const Polyline& pl : lines)
    for (const Vec2& p : pl.points) grow(p);
  for (const Marker& m : markers) grow(m.at);
  if (!seen) throw ValidationError("nothing to render");
  miny = std::min(miny, y_axis);
  maxy = std::max(maxy, y_axis);
  double spanx = maxx - minx;
  double spany = maxy - miny;
  if (spanx <= 0.0) spanx = 1.0;
  if (spany <= 0.0) spany = 1.0;

  auto mapx = [&](double x) { return (x - minx) / spanx * 760.0 + 20.0; };
  auto mapy = [&](double y) {
    return 600.0 - ((y - miny) / spany * 560.0 + 20.0);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
  os << "<line x1=\"" << csv::format_double(mapx(minx)) << "\" y1=\""
     << csv::format_double(mapy(y_axis)) << "\" x2=\""
     << csv::format_double(mapx(maxx)) << "\" y2=\""
     << csv::format_double(mapy(y_axis))
     << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  for (const Polyline& pl : lines) {
    os << "<polyline fill=\"none\" stroke=\"" << pl.stroke
       << "\" stroke-width=\"" << csv::format_double(pl.width)
       << "\" points=\"";
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
      if (i) os << ' ';
      os << csv::format_double(mapx(pl.points[i].x)) << ','
         << csv::format_double(mapy(pl.points[i].y));
    }
    os << "\"/>\n";
  }
  for (const Marker& m : markers) {
    os << "<circle cx=\"" << csv::format_double(mapx(m.at.x)) << "\" cy=\""
       << csv::format_double(mapy(m.at.y)) << "\" r=\""
       << csv::format_double(m.radius) << "\" stroke=\"" << m.stroke
       << "\" stroke-width=\"1\" fill=\""
       << (m.filled ? m.stroke : std::string("none")) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace folia::svg
