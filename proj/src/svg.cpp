#include "arrpair/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "arrpair/errors.hpp"

namespace arrpair {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kPad = 20.0;

struct Box {
  Rational x0, x1, y0, y1;
};

Box bounding_box(const BoundedComplex& complex) {
  Box b{-1, 1, -1, 1};
  if (!complex.vertices.empty()) {
    const auto& p0 = complex.vertices.front().point;
    b = {p0[0], p0[0], p0[1], p0[1]};
    for (const auto& v : complex.vertices) {
      b.x0 = std::min(b.x0, v.point[0]);
      b.x1 = std::max(b.x1, v.point[0]);
      b.y0 = std::min(b.y0, v.point[1]);
      b.y1 = std::max(b.y1, v.point[1]);
    }
  }
  Rational span = std::max({Rational(b.x1 - b.x0), Rational(b.y1 - b.y0), Rational(1)});
  const Rational margin = span / 5;
  b.x0 -= margin;
  b.x1 += margin;
  b.y0 -= margin;
  b.y1 += margin;
  return b;
}

// Endpoints of {b.x + psi = 0} inside the box, exact.
std::vector<QVector> clip(const Hyperplane& h, const Box& box) {
  std::vector<QVector> pts;
  const Rational& a = h.normal[0];
  const Rational& b = h.normal[1];
  if (b != 0) {
    for (const Rational& x : {box.x0, box.x1}) {
      Rational y = -(h.offset + a * x) / b;
      if (y >= box.y0 && y <= box.y1) pts.push_back({x, y});
    }
  }
  if (a != 0) {
    for (const Rational& y : {box.y0, box.y1}) {
      Rational x = -(h.offset + b * y) / a;
      if (x >= box.x0 && x <= box.x1) pts.push_back({x, y});
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > 2) pts = {pts.front(), pts.back()};
  return pts;
}

// Counter-clockwise order around an interior point, compared exactly.
void sort_around(std::vector<QVector>& pts, const QVector& center) {
  auto half = [&](const QVector& p) {
    const Rational dx = p[0] - center[0], dy = p[1] - center[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const QVector& p, const QVector& q) {
    const int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    const Rational cross = (p[0] - center[0]) * (q[1] - center[1]) - (p[1] - center[1]) * (q[0] - center[0]);
    return cross > 0;
  });
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Arrangement& arr, const BoundedComplex& complex) {
  if (arr.ambient_dim() != 2) throw PreconditionError("render supports m = 2 only");
  const Box box = bounding_box(complex);
  const double x0 = box.x0.convert_to<double>(), y1 = box.y1.convert_to<double>();
  const double scale = (kCanvas - 2 * kPad) / std::max((box.x1 - box.x0).convert_to<double>(),
                                                       (box.y1 - box.y0).convert_to<double>());
  auto sx = [&](const Rational& x) { return fmt(kPad + (x.convert_to<double>() - x0) * scale); };
  auto sy = [&](const Rational& y) { return fmt(kPad + (y1 - y.convert_to<double>()) * scale); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < complex.regions.size(); ++i) {
    const auto& face = complex.regions[i].face;
    std::vector<QVector> pts;
    for (auto id : face.vertex_ids) pts.push_back(complex.vertices[id].point);
    sort_around(pts, face.sample);
    svg << "  <polygon class=\"region\" fill=\"#cfe0f5\" stroke=\"none\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) svg << (k ? " " : "") << sx(pts[k][0]) << "," << sy(pts[k][1]);
    svg << "\"/>\n";
    QVector c(2);
    for (const auto& p : pts) {
      c[0] += p[0];
      c[1] += p[1];
    }
    c[0] /= static_cast<long>(pts.size());
    c[1] /= static_cast<long>(pts.size());
    svg << "  <text class=\"label\" x=\"" << sx(c[0]) << "\" y=\"" << sy(c[1])
        << "\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">F" << i + 1
        << "</text>\n";
  }

  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto ends = clip(arr.hyperplane(i), box);
    if (ends.size() != 2) continue;
    svg << "  <line class=\"hyperplane\" data-index=\"" << i + 1 << "\" x1=\"" << sx(ends[0][0]) << "\" y1=\""
        << sy(ends[0][1]) << "\" x2=\"" << sx(ends[1][0]) << "\" y2=\"" << sy(ends[1][1])
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  for (const auto& v : complex.vertices) {
    svg << "  <circle class=\"vertex\" cx=\"" << sx(v.point[0]) << "\" cy=\"" << sy(v.point[1])
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace arrpair
