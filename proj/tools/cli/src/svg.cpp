#include "logmut/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace logmut::svg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string label_text(const Edge& e) {
  std::ostringstream os;
  os << "((" << e.vector().x << ',' << e.vector().y << "),(";
  const auto& parts = e.partition().parts();
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "))";
  return os.str();
}

bool on_segment(LatticeVec a, LatticeVec b, LatticeVec p) {
  if (sform(b - a, p - a) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

std::vector<LatticeVec> lattice_points(const LogDatum& s) {
  std::vector<LatticeVec> out;
  const auto verts = polygon(s);
  if (verts.empty()) return out;
  Int x0 = verts[0].x, x1 = x0, y0 = verts[0].y, y1 = y0;
  for (auto v : verts) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  for (Int y = y0; y <= y1; ++y)
    for (Int x = x0; x <= x1; ++x) {
      LatticeVec p{x, y};
      bool inside;
      if (s.size() == 2) {
        inside = on_segment(verts[0], verts[1], p);
      } else {
        inside = true;
        for (std::size_t i = 0; i < s.size() && inside; ++i) inside = sform(s[i].vector(), p - verts[i]) >= 0;
      }
      if (inside) out.push_back(p);
    }
  return out;
}

std::string render(const LogDatum& s, const RenderSpec& spec) {
  if (spec.scale < 1) throw Error(ErrorKind::InvalidDatum, "render scale must be >= 1");
  const auto verts = polygon(s);
  Int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (auto v : verts) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  const double margin = 2.0;
  const double scale = spec.scale;
  const double width = (static_cast<double>(x1 - x0) + 2 * margin) * scale;
  const double height = (static_cast<double>(y1 - y0) + 2 * margin) * scale;
  auto px = [&](double x) { return (x - static_cast<double>(x0) + margin) * scale; };
  auto py = [&](double y) { return (static_cast<double>(y1) - y + margin) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  os << "  <defs>\n"
     << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
        "orient=\"auto-start-reverse\">\n"
     << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
     << "    </marker>\n"
     << "  </defs>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (spec.show_lattice_points) {
    os << "  <g fill=\"black\">\n";
    for (auto p : lattice_points(s)) {
      os << "    <circle cx=\"" << fmt(px(static_cast<double>(p.x))) << "\" cy=\"" << fmt(py(static_cast<double>(p.y)))
         << "\" r=\"" << fmt(std::max(1.0, scale / 16)) << "\"/>\n";
    }
    os << "  </g>\n";
  }

  os << "  <g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    LatticeVec a = verts[i], b = verts[i] + s[i].vector();
    os << "    <line x1=\"" << fmt(px(static_cast<double>(a.x))) << "\" y1=\"" << fmt(py(static_cast<double>(a.y)))
       << "\" x2=\"" << fmt(px(static_cast<double>(b.x))) << "\" y2=\"" << fmt(py(static_cast<double>(b.y)))
       << "\" marker-end=\"url(#arrow)\"/>\n";
  }
  os << "  </g>\n";

  if (spec.label_edges) {
    os << "  <g font-family=\"monospace\" font-size=\"" << fmt(std::max(6.0, scale * 0.3))
       << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      const LatticeVec e = s[i].vector();
      const double ex = static_cast<double>(e.x), ey = static_cast<double>(e.y);
      const double len = std::hypot(ex, ey);
      // Outer normal of a counterclockwise polygon is e turned clockwise.
      double nx = ey / len, ny = -ex / len;
      if (s.size() == 2 && i == 1) {
        nx = -nx;
        ny = -ny;
      }
      const double mx = static_cast<double>(verts[i].x) + ex / 2 + 0.4 * nx;
      const double my = static_cast<double>(verts[i].y) + ey / 2 + 0.4 * ny;
      double angle = -std::atan2(ey, ex) * 180.0 / M_PI;
      if (angle > 90.0) angle -= 180.0;
      if (angle < -90.0) angle += 180.0;
      os << "    <text x=\"" << fmt(px(mx)) << "\" y=\"" << fmt(py(my)) << "\" transform=\"rotate(" << fmt(angle) << ' '
         << fmt(px(mx)) << ' ' << fmt(py(my)) << ")\">" << label_text(s[i]) << "</text>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace logmut::svg
