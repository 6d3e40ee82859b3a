#include "core/svg.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace cyclact {

std::string render_svg(const SidePairedPolygon &p) {
  const double R = 220, cx = 260, cy = 260;
  const double pi = 3.14159265358979323846;
  int k = p.k;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
        "viewBox=\"0 0 520 520\">\n";
  os << "<rect width=\"520\" height=\"520\" fill=\"white\"/>\n";
  auto vx = [&](int i) { return cx + R * std::cos(2 * pi * i / k - pi / 2); };
  auto vy = [&](int i) { return cy + R * std::sin(2 * pi * i / k - pi / 2); };
  // one hue per letter pair
  for (int pos = 0; pos < k; ++pos) {
    int lit = p.word[pos];
    int id = lit > 0 ? lit : -lit;
    int hue = (int)((360.0 * (id - 1)) / std::max(1, p.n_letters));
    double x1 = vx(pos), y1 = vy(pos), x2 = vx(pos + 1), y2 = vy(pos + 1);
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" stroke=\"hsl(" << hue << ",70%,45%)\" stroke-width=\"3\"/>\n";
    // orientation arrow at the midpoint, flipped for inverse occurrences
    double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    double dx = x2 - x1, dy = y2 - y1;
    double ln = std::hypot(dx, dy);
    if (lit < 0) { dx = -dx; dy = -dy; }
    dx /= ln; dy /= ln;
    os << "<path d=\"M " << (mx - 6 * dx + 4 * dy) << " " << (my - 6 * dy - 4 * dx) << " L " << (mx + 6 * dx)
       << " " << (my + 6 * dy) << " L " << (mx - 6 * dx - 4 * dy) << " " << (my - 6 * dy + 4 * dx)
       << "\" fill=\"none\" stroke=\"hsl(" << hue << ",70%,30%)\" stroke-width=\"2\"/>\n";
    double lx = cx + (R + 22) * std::cos(2 * pi * (pos + 0.5) / k - pi / 2);
    double ly = cy + (R + 22) * std::sin(2 * pi * (pos + 0.5) / k - pi / 2);
    os << "<text x=\"" << lx << "\" y=\"" << ly
       << "\" font-size=\"13\" font-family=\"monospace\" text-anchor=\"middle\">"
       << letter_str(lit, p.letter_names) << "</text>\n";
  }
  i64 num = 2 * p.shift, den = k;
  i64 g = std::gcd(num, den);
  os << "<text x=\"" << cx << "\" y=\"" << cy
     << "\" font-size=\"15\" font-family=\"monospace\" text-anchor=\"middle\">rotation "
     << (num / g) << "&#960;/" << (den / g) << "</text>\n";
  os << "<path d=\"M " << (cx - 28) << " " << (cy - 18) << " A 30 30 0 1 1 " << (cx + 28) << " "
     << (cy - 18) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

} // namespace cyclact
