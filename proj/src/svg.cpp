#include "dispnet/svg.hpp"

#include <fstream>
#include <sstream>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

constexpr int kMargin = 16;

std::string scaled(const Rational& v) { return (v * kSvgSize).decimal(10); }
std::string flipped(const Rational& v) { return ((Rational(1) - v) * kSvgSize).decimal(10); }

}  // namespace

void render_svg(const GridPointSet& points, const std::optional<BoxReport>& box, std::ostream& out) {
  const int full = kSvgSize + 2 * kMargin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full << "\" viewBox=\""
      << -kMargin << ' ' << -kMargin << ' ' << full << ' ' << full << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << kSvgSize << "\" height=\"" << kSvgSize
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (box) {
    out << "  <rect class=\"box\" x=\"" << scaled(box->x_lo) << "\" y=\"" << flipped(box->y_hi) << "\" width=\""
        << scaled(box->x_hi - box->x_lo) << "\" height=\"" << scaled(box->y_hi - box->y_lo)
        << "\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
  }
  const double r = points.size() > 1024 ? 1.0 : 2.5;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << "  <circle cx=\"" << scaled(points.x(i)) << "\" cy=\"" << flipped(points.y(i)) << "\" r=\"" << r
        << "\"/>\n";
  }
  out << "</svg>\n";
}

std::string render_svg(const GridPointSet& points, const std::optional<BoxReport>& box) {
  std::ostringstream out;
  render_svg(points, box, out);
  return out.str();
}

void write_svg(const GridPointSet& points, const std::optional<BoxReport>& box, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  render_svg(points, box, out);
  if (!out) throw Error(Errc::invalid_argument, "write to '" + path + "' failed");
}

}  // namespace dispnet
