#include "tlg/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "tlg/errors.hpp"

namespace tlg {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 20.0;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

struct Canvas {
  SvgViewport box;
  double px(const Rat& x) const { return Rat(x - Rat(box.xmin)).get_d() * kUnit + kMargin; }
  double py(const Rat& y) const { return Rat(Rat(box.ymax) - y).get_d() * kUnit + kMargin; }
  double width() const { return Rat(box.xmax - box.xmin).get_d() * kUnit + 2 * kMargin; }
  double height() const { return Rat(box.ymax - box.ymin).get_d() * kUnit + 2 * kMargin; }
};

// Exact counterclockwise comparison of directions.
bool angle_less(const RatVector& a, const RatVector& b) {
  auto half = [](const RatVector& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
  bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

// Largest t with p + t r inside the box.
Rat exit_time(const RatVector& p, const IntVector& r, const SvgViewport& box) {
  Rat t = -1;
  auto clamp = [&](const Rat& pos, const Int& dir, const Int& lo, const Int& hi) {
    if (dir == 0) return;
    Rat s = dir > 0 ? (Rat(hi) - pos) / Rat(dir) : (Rat(lo) - pos) / Rat(dir);
    if (t < 0 || s < t) t = s;
  };
  clamp(p[0], r[0], box.xmin, box.xmax);
  clamp(p[1], r[1], box.ymin, box.ymax);
  return t < 0 ? Rat(0) : t;
}

}  // namespace

SvgViewport viewport_for(const Polyhedron& P) {
  auto V = vertices_and_rays(P);
  std::vector<RatVector> pts = V.generators.points;
  pts.push_back(RatVector(2, Rat(0)));
  Rat xmin = pts[0][0], xmax = xmin, ymin = pts[0][1], ymax = ymin;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  long pad = V.generators.rays.empty() ? 1 : 2;
  return {floor(xmin) - pad, ceil(xmax) + pad, floor(ymin) - pad, ceil(ymax) + pad};
}

std::vector<RatVector> clipped_polygon(const Polyhedron& P, const SvgViewport& box) {
  std::vector<IntVector> normals = P.normals.row_list();
  RatVector offsets = P.offsets;
  normals.push_back(ints({1, 0}));
  offsets.push_back(-Rat(box.xmin));
  normals.push_back(ints({-1, 0}));
  offsets.push_back(Rat(box.xmax));
  normals.push_back(ints({0, 1}));
  offsets.push_back(-Rat(box.ymin));
  normals.push_back(ints({0, -1}));
  offsets.push_back(Rat(box.ymax));
  Polyhedron Q(IntMatrix::from_rows(normals, 2), offsets);
  std::vector<RatVector> pts = vertices_and_rays(Q).vertices();
  if (pts.empty()) return pts;
  RatVector c{Rat(0), Rat(0)};
  for (const auto& p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= Rat(static_cast<long>(pts.size()));
  c[1] /= Rat(static_cast<long>(pts.size()));
  std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
    RatVector da{a[0] - c[0], a[1] - c[1]}, db{b[0] - c[0], b[1] - c[1]};
    return angle_less(da, db);
  });
  return pts;
}

std::string render_svg(const Polyhedron& P) {
  if (P.dim() != 2) throw InputError("plot needs a 2-dimensional polyhedron, got dimension " + std::to_string(P.dim()));
  if (interior_point(P).status == InteriorStatus::Empty) throw InputError("plot: the polyhedron is empty");
  auto V = vertices_and_rays(P);
  Canvas cv{viewport_for(P)};
  auto poly = clipped_polygon(P, cv.box);

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) + "\" height=\"" + num(cv.height()) +
       "\" viewBox=\"0 0 " + num(cv.width()) + " " + num(cv.height()) + "\">\n";
  s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" "
       "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(cv.width()) + "\" height=\"" + num(cv.height()) + "\" fill=\"white\"/>\n";

  s += "<g id=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (Int x = cv.box.xmin; x <= cv.box.xmax; ++x)
    s += "<line x1=\"" + num(cv.px(Rat(x))) + "\" y1=\"" + num(cv.py(Rat(cv.box.ymin))) + "\" x2=\"" +
         num(cv.px(Rat(x))) + "\" y2=\"" + num(cv.py(Rat(cv.box.ymax))) + "\"/>\n";
  for (Int y = cv.box.ymin; y <= cv.box.ymax; ++y)
    s += "<line x1=\"" + num(cv.px(Rat(cv.box.xmin))) + "\" y1=\"" + num(cv.py(Rat(y))) + "\" x2=\"" +
         num(cv.px(Rat(cv.box.xmax))) + "\" y2=\"" + num(cv.py(Rat(y))) + "\"/>\n";
  s += "</g>\n<g id=\"lattice\" fill=\"#999999\">\n";
  for (Int x = cv.box.xmin; x <= cv.box.xmax; ++x)
    for (Int y = cv.box.ymin; y <= cv.box.ymax; ++y)
      s += "<circle cx=\"" + num(cv.px(Rat(x))) + "\" cy=\"" + num(cv.py(Rat(y))) + "\" r=\"1.500\"/>\n";
  s += "</g>\n";

  if (!poly.empty()) {
    s += "<polygon id=\"region\" fill=\"#aed6f1\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i)
      s += (i ? " " : "") + num(cv.px(poly[i][0])) + "," + num(cv.py(poly[i][1]));
    s += "\"/>\n";
  }

  // Each facet is drawn as the part of its line on the clipped boundary.
  s += "<g id=\"facets\" stroke=\"#1f4e79\" stroke-width=\"2\">\n";
  for (std::size_t f : facet_rows(P).facets) {
    std::vector<RatVector> on;
    for (const auto& p : poly)
      if (dot(P.normals.row(f), p) + P.offsets[f] == 0) on.push_back(p);
    if (on.size() < 2) continue;
    std::sort(on.begin(), on.end(), [](const RatVector& a, const RatVector& b) { return lex_compare(a, b) < 0; });
    const auto& a = on.front();
    const auto& b = on.back();
    s += "<line x1=\"" + num(cv.px(a[0])) + "\" y1=\"" + num(cv.py(a[1])) + "\" x2=\"" + num(cv.px(b[0])) +
         "\" y2=\"" + num(cv.py(b[1])) + "\"/>\n";
  }
  s += "</g>\n";

  s += "<g id=\"rays\" stroke=\"#c0392b\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\">\n";
  for (const auto& p : V.generators.points)
    for (const auto& r : V.generators.rays) {
      Rat t = exit_time(p, r, cv.box);
      if (t == 0) continue;
      s += "<line x1=\"" + num(cv.px(p[0])) + "\" y1=\"" + num(cv.py(p[1])) + "\" x2=\"" +
           num(cv.px(p[0] + t * Rat(r[0]))) + "\" y2=\"" + num(cv.py(p[1] + t * Rat(r[1]))) + "\"/>\n";
    }
  s += "</g>\n";

  s += "<circle id=\"origin\" cx=\"" + num(cv.px(Rat(0))) + "\" cy=\"" + num(cv.py(Rat(0))) +
       "\" r=\"4.000\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  s += "<g id=\"vertices\" font-family=\"monospace\" font-size=\"11\">\n";
  for (const auto& v : V.vertices()) {
    s += "<circle cx=\"" + num(cv.px(v[0])) + "\" cy=\"" + num(cv.py(v[1])) + "\" r=\"3.500\" fill=\"#1f4e79\"/>\n";
    s += "<text x=\"" + num(cv.px(v[0]) + 5) + "\" y=\"" + num(cv.py(v[1]) - 5) + "\">(" + to_string(v[0]) + "," +
         to_string(v[1]) + ")</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace tlg
