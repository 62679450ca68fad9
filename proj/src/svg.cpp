#include "figcmp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace figcmp {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Canvas {
  const RenderOptions& o;
  std::ostringstream out;

  double sx(double x) const {
    return (x - o.x0) / (o.x1 - o.x0) * o.width;
  }
  double sy(double y) const {
    return o.height - (y - o.y0) / (o.y1 - o.y0) * o.height;
  }

  void line(Vec2 a, Vec2 b, const std::string& color, bool dashed,
            double width = 1.6) {
    out << "<line x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y))
        << "\" x2=\"" << num(sx(b.x)) << "\" y2=\"" << num(sy(b.y))
        << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\"";
    if (dashed) out << " stroke-dasharray=\"6 4\"";
    out << " />\n";
  }

  void dot(Vec2 p, const std::string& color, bool filled, double r = 3.5) {
    out << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y))
        << "\" r=\"" << num(r) << "\" stroke=\"" << color << "\" fill=\""
        << (filled ? color : std::string("white")) << "\" />\n";
  }

  void circle(Vec2 c, double radius, const std::string& color, bool dashed,
              bool fill) {
    double rx = radius / (o.x1 - o.x0) * o.width;
    out << "<circle cx=\"" << num(sx(c.x)) << "\" cy=\"" << num(sy(c.y))
        << "\" r=\"" << num(rx) << "\" stroke=\"" << color << "\" fill=\""
        << (fill ? color : std::string("none")) << "\"";
    if (fill) out << " fill-opacity=\"0.15\"";
    if (dashed) out << " stroke-dasharray=\"6 4\"";
    out << " />\n";
  }

  void polygon(const std::vector<Vec2>& pts, const std::string& color) {
    if (pts.size() < 3) return;
    out << "<polygon points=\"";
    for (const Vec2& p : pts) out << num(sx(p.x)) << "," << num(sy(p.y)) << " ";
    out << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"none\" />\n";
  }

  void polyline(const std::vector<Vec2>& pts, const std::string& color,
                bool dashed) {
    if (pts.size() < 2) return;
    out << "<polyline points=\"";
    for (const Vec2& p : pts) out << num(sx(p.x)) << "," << num(sy(p.y)) << " ";
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\"";
    if (dashed) out << " stroke-dasharray=\"6 4\"";
    out << " />\n";
  }
};

// Clip the convex viewport rectangle against a half plane n.p <= c.
std::vector<Vec2> clip_half_plane(std::vector<Vec2> poly, Vec2 n, double c) {
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Vec2 a = poly[i];
    Vec2 b = poly[(i + 1) % poly.size()];
    double sa = dot(n, a) - c;
    double sb = dot(n, b) - c;
    if (sa <= 0) out.push_back(a);
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      double t = sa / (sa - sb);
      out.push_back(a + (b - a) * t);
    }
  }
  return out;
}

std::vector<Vec2> viewport_rect(const RenderOptions& o) {
  return {{o.x0, o.y0}, {o.x1, o.y0}, {o.x1, o.y1}, {o.x0, o.y1}};
}

// Clip an infinite line (through, direction) to the viewport; returns the
// endpoints if it intersects.
std::optional<std::pair<Vec2, Vec2>> clip_line(const RenderOptions& o,
                                               Vec2 through, Vec2 d,
                                               double tmin, double tmax) {
  double lo = tmin, hi = tmax;
  auto narrow = [&](double p, double q) {
    // p * t <= q
    if (std::abs(p) < 1e-15) return q >= 0;
    double t = q / p;
    if (p > 0) {
      hi = std::min(hi, t);
    } else {
      lo = std::max(lo, t);
    }
    return lo <= hi;
  };
  if (!narrow(d.x, o.x1 - through.x)) return std::nullopt;
  if (!narrow(-d.x, through.x - o.x0)) return std::nullopt;
  if (!narrow(d.y, o.y1 - through.y)) return std::nullopt;
  if (!narrow(-d.y, through.y - o.y0)) return std::nullopt;
  if (lo > hi) return std::nullopt;
  return std::make_pair(through + d * lo, through + d * hi);
}

constexpr double kFar = 1e6;

void render_node(Canvas& cv, const FigureNode& node, Geometry g,
                 const std::string& color, bool removed, long truncation);

void render_union(Canvas& cv, const UnionNode& u, Geometry g,
                  const std::string& color, bool removed, long truncation) {
  for (const auto& part : u.parts) {
    render_node(cv, *part, g, color, removed, truncation);
  }
}

Vec2 hp_to_disc_vec(Vec2 v) {
  Point p = half_plane_to_disc(Point::half_plane(v.x, v.y));
  return {p.x, p.y};
}

void render_node(Canvas& cv, const FigureNode& node, Geometry g,
                 const std::string& color, bool removed, long truncation) {
  const std::string stroke = removed ? "#999999" : color;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HalfPlanePrim>) {
          if (g == Geometry::HyperbolicHalfPlane) {
            // boundary line Re-type drawn through the model map as a sampled
            // curve in the disc
            std::vector<Vec2> curve;
            Vec2 t = perp(n.normal);
            Vec2 base = n.normal * n.offset;
            for (int i = 0; i <= 128; ++i) {
              double s = -8.0 + 16.0 * i / 128.0;
              Vec2 w = base + t * s;
              if (w.y <= 1e-6) continue;
              curve.push_back(hp_to_disc_vec(w));
            }
            cv.polyline(curve, stroke, !n.closed);
            return;
          }
          if (!removed) {
            cv.polygon(clip_half_plane(viewport_rect(cv.o), n.normal, n.offset),
                       color);
          }
          if (auto seg = clip_line(cv.o, n.normal * n.offset, perp(n.normal),
                                   -kFar, kFar)) {
            cv.line(seg->first, seg->second, stroke, !n.closed);
          }
        } else if constexpr (std::is_same_v<T, HalfLinePrim>) {
          if (auto seg = clip_line(cv.o, n.origin, n.direction, 0.0, kFar)) {
            cv.line(seg->first, seg->second, stroke, false);
          }
          cv.dot(n.origin, stroke, n.include_origin);
        } else if constexpr (std::is_same_v<T, SegmentPrim>) {
          cv.line(n.a, n.b, stroke, false);
          cv.dot(n.a, stroke, n.include_a);
          cv.dot(n.b, stroke, n.include_b);
        } else if constexpr (std::is_same_v<T, DiscPrim>) {
          cv.circle(n.center, n.radius, stroke, !n.closed, !removed);
        } else if constexpr (std::is_same_v<T, WedgePrim>) {
          if (!removed) {
            auto [h1n, h1c] = std::pair<Vec2, double>{-perp(n.dir1),
                                                      dot(-perp(n.dir1), n.vertex)};
            auto poly = clip_half_plane(viewport_rect(cv.o), h1n, h1c);
            Vec2 h2n = perp(n.dir2);
            poly = clip_half_plane(poly, h2n, dot(h2n, n.vertex));
            cv.polygon(poly, color);
          }
          for (Vec2 d : {n.dir1, n.dir2}) {
            if (auto seg = clip_line(cv.o, n.vertex, d, 0.0, kFar)) {
              cv.line(seg->first, seg->second, stroke, !n.closed);
            }
          }
          cv.dot(n.vertex, stroke, n.closed);
        } else if constexpr (std::is_same_v<T, SinglePointPrim>) {
          cv.dot(n.p.xy(), stroke, true);
        } else if constexpr (std::is_same_v<T, LinePrim>) {
          if (auto seg = clip_line(cv.o, n.through, n.direction, -kFar, kFar)) {
            cv.line(seg->first, seg->second, stroke, false);
          }
        } else if constexpr (std::is_same_v<T, ArcPrim>) {
          std::vector<Vec2> curve;
          for (int i = 0; i <= 64; ++i) {
            double th = n.theta1 + (n.theta2 - n.theta1) * i / 64.0;
            Vec2 w = n.center + Vec2{std::cos(th), std::sin(th)} * n.radius;
            if (g == Geometry::HyperbolicHalfPlane) {
              if (w.y <= 1e-9) continue;
              w = hp_to_disc_vec(w);
            }
            curve.push_back(w);
          }
          cv.polyline(curve, stroke, false);
          if (!curve.empty()) {
            cv.dot(curve.front(), stroke, n.include_ends);
            cv.dot(curve.back(), stroke, n.include_ends);
          }
        } else if constexpr (std::is_same_v<T, FiniteLeaf>) {
          for (const Point& p : n.fig.points) {
            cv.dot({p.x, p.y}, stroke, true, 2.5);
          }
        } else if constexpr (std::is_same_v<T, OrbitLeaf>) {
          // carrier circle plus the realized points
          double rr = n.orbit.radius_param;
          cv.circle({0, 0}, rr, "#cccccc", true, false);
          FiniteFigure fin = realize(n.orbit, n.orbit.truncation.value_or(truncation));
          for (const Point& p : fin.points) {
            cv.dot({p.x, p.y}, stroke, true, 2.5);
          }
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          render_union(cv, n, g, color, removed, truncation);
        } else if constexpr (std::is_same_v<T, DifferenceNode>) {
          render_node(cv, *n.a, g, color, removed, truncation);
          render_node(cv, *n.b, g, color, true, truncation);
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          // draw the boundary of the complemented set, dashed
          render_node(cv, *n.a, g, color, true, truncation);
        }
      },
      node.v);
}

}  // namespace

std::string render_svg(const std::vector<SymbolicFigure>& figures,
                       const RenderOptions& opts) {
  Canvas cv{opts, {}};
  cv.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  cv.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
         << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width
         << " " << opts.height << "\">\n";
  cv.out << "<rect width=\"" << opts.width << "\" height=\"" << opts.height
         << "\" fill=\"white\" />\n";

  bool model_circle = false;
  for (const auto& f : figures) {
    if (f.geometry() == Geometry::HyperbolicDisc ||
        f.geometry() == Geometry::HyperbolicHalfPlane ||
        f.geometry() == Geometry::Elliptic) {
      model_circle = true;
    }
  }
  if (model_circle) cv.circle({0, 0}, 1.0, "#888888", false, false);

  std::size_t idx = 0;
  for (const auto& f : figures) {
    const std::string color = kPalette[idx % 6];
    render_node(cv, f.root(), f.geometry(), color, false, opts.truncation);
    ++idx;
  }

  if (opts.witness && !figures.empty()) {
    const SymbolicFigure& first = figures.front();
    if (first.geometry() == opts.witness->geometry()) {
      std::vector<Point> pts = sample_points(first, 8);
      for (const Point& p : pts) {
        Point q = apply(*opts.witness, p);
        Vec2 a = {p.x, p.y}, b = {q.x, q.y};
        if (first.geometry() == Geometry::HyperbolicHalfPlane) {
          a = hp_to_disc_vec(a);
          b = hp_to_disc_vec(b);
        }
        cv.line(a, b, "#444444", false, 1.0);
        // arrowhead
        Vec2 d = b - a;
        double len = norm(d);
        if (len > 1e-9) {
          Vec2 u = normalized(d) * (0.03 * (opts.x1 - opts.x0));
          Vec2 l = perp(u) * 0.5;
          cv.line(b, b - u + l, "#444444", false, 1.0);
          cv.line(b, b - u - l, "#444444", false, 1.0);
        }
      }
    }
  }

  cv.out << "</svg>\n";
  return cv.out.str();
}

}  // namespace figcmp
