#include "figcmp/figure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace figcmp {

namespace {

constexpr double kDedupEps = 1e-12;
constexpr double kDirEps = 1e-12;
// Strict inequalities get a fixed guard band: a point within 1e-12 of the
// boundary never counts as inside an open set, so open/closed distinctions
// stay stable under the fp noise of transported coordinates.
constexpr double kStrictEps = 1e-12;
constexpr long kOrbitProbe = 512;
constexpr long kMaxRotationShift = 512;
constexpr double kThinWitnessGap = 1e-6;

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string to_string(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    case Ternary::unknown: return "unknown";
  }
  return "?";
}

// ----- finite figures --------------------------------------------------

FiniteFigure::FiniteFigure(Geometry g, std::vector<Point> pts) : geometry(g) {
  points.reserve(pts.size());
  for (const Point& p : pts) {
    require_same_geometry(g, p.geometry, "FiniteFigure");
    bool dup = false;
    for (const Point& q : points) {
      if (dist(p, q) <= kDedupEps) {
        dup = true;
        break;
      }
    }
    if (!dup) points.push_back(p);
  }
}

FiniteFigure image(const FiniteFigure& f, const Isometry& iso) {
  require_same_geometry(f.geometry, iso.geometry(), "image");
  std::vector<Point> out;
  out.reserve(f.points.size());
  for (const Point& p : f.points) out.push_back(apply(iso, p));
  return FiniteFigure(f.geometry, std::move(out));
}

bool contains(const FiniteFigure& f, const Point& p, Tolerance tol) {
  require_same_geometry(f.geometry, p.geometry, "contains");
  for (const Point& q : f.points) {
    if (dist(p, q) <= tol.eps) return true;
  }
  return false;
}

// ----- orbits -----------------------------------------------------------

double OmegaSpec::value() const {
  if (kind == Kind::pi_sqrt2) return M_PI * std::sqrt(2.0);
  return numeric_value;
}

std::string OmegaSpec::token() const {
  if (kind == Kind::pi_sqrt2) return "pi*sqrt2";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", numeric_value);
  return buf;
}

void OrbitFigure::normalize() {
  std::sort(exclude.begin(), exclude.end());
  exclude.erase(std::unique(exclude.begin(), exclude.end()), exclude.end());
  exclude.erase(
      std::remove_if(exclude.begin(), exclude.end(),
                     [&](long e) { return e < index_from; }),
      exclude.end());
}

bool OrbitFigure::index_in_set(long k) const {
  if (k < index_from) return false;
  return !std::binary_search(exclude.begin(), exclude.end(), k);
}

Point OrbitFigure::point_at(long k) const {
  double w = omega.value();
  double c = std::cos(k * w), s = std::sin(k * w);
  switch (geometry) {
    case Geometry::Euclidean:
      return Point::euclidean(radius_param * c, radius_param * s);
    case Geometry::HyperbolicDisc:
      return Point::disc(radius_param * c, radius_param * s);
    case Geometry::Elliptic: {
      double z = std::sqrt(std::max(0.0, 1.0 - radius_param * radius_param));
      return Point::elliptic(radius_param * c, radius_param * s, z);
    }
    default:
      throw geom_error("orbit figures exist in euclidean, disc and elliptic models");
  }
}

bool OrbitFigure::same_parameters(const OrbitFigure& o) const {
  if (geometry != o.geometry) return false;
  if (omega.kind != o.omega.kind) return false;
  if (omega.kind == OmegaSpec::Kind::numeric &&
      std::abs(omega.numeric_value - o.omega.numeric_value) > 1e-15) {
    return false;
  }
  return std::abs(radius_param - o.radius_param) <= 1e-12;
}

Ternary OrbitFigure::subset_of(const OrbitFigure& other) const {
  if (!same_parameters(other)) return Ternary::unknown;
  if (index_from < other.index_from) return Ternary::no;
  for (long e : other.exclude) {
    if (e >= index_from && index_in_set(e)) return Ternary::no;
  }
  return Ternary::yes;
}

FiniteFigure realize(const OrbitFigure& orbit, long n) {
  if (n < 1) throw degenerate_input_error("realize: truncation must be >= 1");
  std::vector<Point> pts;
  for (long k = std::max<long>(0, orbit.index_from); k < n; ++k) {
    if (orbit.index_in_set(k)) pts.push_back(orbit.point_at(k));
  }
  // Realized points must be pairwise distinct; a collision would mean the
  // rotation angle is rationally related to pi.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (dist(pts[i], pts[j]) <= kDedupEps) {
        throw degenerate_input_error("realize: orbit points collide at this truncation");
      }
    }
  }
  return FiniteFigure(orbit.geometry, std::move(pts));
}

// ----- symbolic figure construction -------------------------------------

SymbolicFigure::SymbolicFigure(Geometry g, FigureNodePtr root)
    : geometry_(g), root_(std::move(root)) {
  if (!root_) throw geom_error("SymbolicFigure: null node");
}

namespace {
SymbolicFigure make(Geometry g, FigureNode node) {
  return SymbolicFigure(g, std::make_shared<const FigureNode>(std::move(node)));
}
}  // namespace

SymbolicFigure SymbolicFigure::half_plane(Geometry g, Vec2 normal,
                                          double offset, bool closed) {
  if (g != Geometry::Euclidean && g != Geometry::HyperbolicHalfPlane) {
    throw geom_error("half_plane allowed in euclidean or half-plane model coordinates");
  }
  return make(g, FigureNode{HalfPlanePrim{normalized(normal), offset, closed}});
}

SymbolicFigure SymbolicFigure::half_line(Vec2 origin, Vec2 direction,
                                         bool include_origin) {
  return make(Geometry::Euclidean,
              FigureNode{HalfLinePrim{origin, normalized(direction), include_origin}});
}

SymbolicFigure SymbolicFigure::segment(Vec2 a, Vec2 b, bool include_a,
                                       bool include_b) {
  if (norm(b - a) <= kDirEps) {
    throw degenerate_input_error("segment endpoints coincide");
  }
  return make(Geometry::Euclidean, FigureNode{SegmentPrim{a, b, include_a, include_b}});
}

SymbolicFigure SymbolicFigure::disc(Vec2 center, double radius, bool closed) {
  if (!(radius > 0.0)) throw degenerate_input_error("disc radius must be positive");
  return make(Geometry::Euclidean, FigureNode{DiscPrim{center, radius, closed}});
}

SymbolicFigure SymbolicFigure::wedge(Vec2 vertex, Vec2 dir1, Vec2 dir2,
                                     bool closed) {
  Vec2 d1 = normalized(dir1), d2 = normalized(dir2);
  double c = cross(d1, d2), d = dot(d1, d2);
  if (c < -kDirEps) throw degenerate_input_error("wedge angle must be in (0, pi]");
  if (c <= kDirEps && d > 0.0) {
    throw degenerate_input_error("wedge angle must be positive");
  }
  return make(Geometry::Euclidean, FigureNode{WedgePrim{vertex, d1, d2, closed}});
}

SymbolicFigure SymbolicFigure::single_point(const Point& p) {
  return make(p.geometry, FigureNode{SinglePointPrim{p}});
}

SymbolicFigure SymbolicFigure::line(Vec2 through, Vec2 direction) {
  return make(Geometry::Euclidean, FigureNode{LinePrim{through, normalized(direction)}});
}

SymbolicFigure SymbolicFigure::arc(Geometry g, Vec2 center, double radius,
                                   double theta1, double theta2,
                                   bool include_ends) {
  if (g != Geometry::Euclidean && g != Geometry::HyperbolicHalfPlane) {
    throw geom_error("arc allowed in euclidean or half-plane model coordinates");
  }
  if (!(radius > 0.0)) throw degenerate_input_error("arc radius must be positive");
  if (!(theta1 < theta2) || theta2 - theta1 > 2.0 * M_PI + kDirEps) {
    throw degenerate_input_error("arc needs theta1 < theta2 <= theta1 + 2*pi");
  }
  return make(g, FigureNode{ArcPrim{center, radius, theta1, theta2, include_ends}});
}

SymbolicFigure SymbolicFigure::finite(FiniteFigure f) {
  Geometry g = f.geometry;
  return make(g, FigureNode{FiniteLeaf{std::move(f)}});
}

SymbolicFigure SymbolicFigure::orbit(OrbitFigure o) {
  Geometry g = o.geometry;
  if (g == Geometry::HyperbolicHalfPlane) {
    throw geom_error("orbit figures exist in euclidean, disc and elliptic models");
  }
  if (g == Geometry::HyperbolicDisc &&
      !(o.radius_param > 0.0 && o.radius_param < 1.0)) {
    throw degenerate_input_error("disc orbit requires radius in (0,1)");
  }
  if (g == Geometry::Elliptic &&
      !(o.radius_param > 0.0 && o.radius_param < 1.0)) {
    throw degenerate_input_error("elliptic orbit requires equatorial radius in (0,1)");
  }
  if (o.index_from < 0) throw degenerate_input_error("orbit indices are nonnegative");
  o.normalize();
  return make(g, FigureNode{OrbitLeaf{std::move(o)}});
}

SymbolicFigure union_of(std::vector<SymbolicFigure> parts) {
  if (parts.empty()) throw geom_error("union_of: needs at least one part");
  Geometry g = parts[0].geometry();
  UnionNode u;
  for (const auto& p : parts) {
    require_same_geometry(g, p.geometry(), "union_of");
    u.parts.push_back(p.root_ptr());
  }
  return SymbolicFigure(g, std::make_shared<const FigureNode>(FigureNode{std::move(u)}));
}

SymbolicFigure difference(const SymbolicFigure& a, const SymbolicFigure& b) {
  require_same_geometry(a.geometry(), b.geometry(), "difference");
  return SymbolicFigure(a.geometry(),
                        std::make_shared<const FigureNode>(
                            FigureNode{DifferenceNode{a.root_ptr(), b.root_ptr()}}));
}

SymbolicFigure complement(const SymbolicFigure& a) {
  return SymbolicFigure(a.geometry(), std::make_shared<const FigureNode>(
                                          FigureNode{ComplementNode{a.root_ptr()}}));
}

SymbolicFigure intersection(const SymbolicFigure& a, const SymbolicFigure& b) {
  return difference(a, complement(b));
}

// ----- membership --------------------------------------------------------

namespace {

Ternary contains_node(const FigureNode& node, Geometry geom, const Point& p,
                      Tolerance tol);

Ternary bool_t(bool b) { return b ? Ternary::yes : Ternary::no; }

Ternary contains_prim(const HalfPlanePrim& h, Vec2 v, Tolerance tol) {
  double s = dot(h.normal, v) - h.offset;
  return bool_t(h.closed ? s <= tol.eps : s < -kStrictEps);
}

Ternary contains_prim(const HalfLinePrim& h, Vec2 v, Tolerance tol) {
  Vec2 u = v - h.origin;
  if (std::abs(cross(h.direction, u)) > tol.eps) return Ternary::no;
  double t = dot(u, h.direction);
  return bool_t(h.include_origin ? t >= -tol.eps : t > kStrictEps);
}

Ternary contains_prim(const SegmentPrim& sp, Vec2 v, Tolerance tol) {
  Vec2 d = normalized(sp.b - sp.a);
  double len = norm(sp.b - sp.a);
  Vec2 u = v - sp.a;
  if (std::abs(cross(d, u)) > tol.eps) return Ternary::no;
  double t = dot(u, d);
  bool lo = sp.include_a ? t >= -tol.eps : t > kStrictEps;
  bool hi = sp.include_b ? t <= len + tol.eps : t < len - kStrictEps;
  return bool_t(lo && hi);
}

Ternary contains_prim(const DiscPrim& dp, Vec2 v, Tolerance tol) {
  double d = norm(v - dp.center);
  return bool_t(dp.closed ? d <= dp.radius + tol.eps : d < dp.radius - kStrictEps);
}

Ternary contains_prim(const WedgePrim& w, Vec2 v, Tolerance tol) {
  Vec2 u = v - w.vertex;
  double c1 = cross(w.dir1, u), c2 = cross(u, w.dir2);
  if (w.closed) return bool_t(c1 >= -tol.eps && c2 >= -tol.eps);
  return bool_t(c1 > kStrictEps && c2 > kStrictEps);
}

Ternary contains_prim(const LinePrim& l, Vec2 v, Tolerance tol) {
  return bool_t(std::abs(cross(l.direction, v - l.through)) <= tol.eps);
}

Ternary contains_prim(const ArcPrim& a, Vec2 v, Tolerance tol) {
  Vec2 u = v - a.center;
  if (std::abs(norm(u) - a.radius) > tol.eps) return Ternary::no;
  double ang_tol = tol.eps / a.radius;
  double th = std::atan2(u.y, u.x);
  // Bring th into [theta1 - pi, theta1 + pi) plus wraps covering the range.
  while (th < a.theta1 - ang_tol) th += 2.0 * M_PI;
  if (a.include_ends) return bool_t(th <= a.theta2 + ang_tol);
  double strict = kStrictEps / a.radius;
  return bool_t(th > a.theta1 + strict && th < a.theta2 - strict);
}

Ternary contains_orbit(const OrbitLeaf& leaf, const Point& p, Tolerance tol) {
  const OrbitFigure& o = leaf.orbit;
  if (o.truncation) {
    return bool_t(contains(realize(o, *o.truncation), p, tol));
  }
  long probe_to = std::max<long>(o.index_from, 0) + kOrbitProbe;
  for (long k = std::max<long>(o.index_from, 0); k < probe_to; ++k) {
    if (!o.index_in_set(k)) continue;
    if (dist(o.point_at(k), p) <= tol.eps) return Ternary::yes;
  }
  return Ternary::unknown;  // cannot rule out a higher index
}

Ternary contains_node(const FigureNode& node, Geometry geom, const Point& p,
                      Tolerance tol) {
  Vec2 v = p.xy();
  return std::visit(
      overloaded{
          [&](const HalfPlanePrim& n) { return contains_prim(n, v, tol); },
          [&](const HalfLinePrim& n) { return contains_prim(n, v, tol); },
          [&](const SegmentPrim& n) { return contains_prim(n, v, tol); },
          [&](const DiscPrim& n) { return contains_prim(n, v, tol); },
          [&](const WedgePrim& n) { return contains_prim(n, v, tol); },
          [&](const LinePrim& n) { return contains_prim(n, v, tol); },
          [&](const ArcPrim& n) { return contains_prim(n, v, tol); },
          [&](const SinglePointPrim& n) {
            return bool_t(same_point(n.p, p, tol.eps));
          },
          [&](const FiniteLeaf& n) { return bool_t(contains(n.fig, p, tol)); },
          [&](const OrbitLeaf& n) { return contains_orbit(n, p, tol); },
          [&](const UnionNode& n) {
            bool unknown = false;
            for (const auto& part : n.parts) {
              Ternary t = contains_node(*part, geom, p, tol);
              if (t == Ternary::yes) return Ternary::yes;
              if (t == Ternary::unknown) unknown = true;
            }
            return unknown ? Ternary::unknown : Ternary::no;
          },
          [&](const DifferenceNode& n) {
            Ternary ta = contains_node(*n.a, geom, p, tol);
            if (ta == Ternary::no) return Ternary::no;
            Ternary tb = contains_node(*n.b, geom, p, tol);
            if (tb == Ternary::yes) return Ternary::no;
            if (ta == Ternary::yes && tb == Ternary::no) return Ternary::yes;
            return Ternary::unknown;
          },
          [&](const ComplementNode& n) {
            return ternary_not(contains_node(*n.a, geom, p, tol));
          },
      },
      node.v);
}

}  // namespace

Ternary contains(const SymbolicFigure& f, const Point& p, Tolerance tol) {
  require_same_geometry(f.geometry(), p.geometry, "contains");
  return contains_node(f.root(), f.geometry(), p, tol);
}

// ----- images -------------------------------------------------------------

namespace {

struct EuclideanAffine {
  // v |-> L v + t with L orthogonal; det = +1 unless reflect.
  const EuclideanIsometry& e;
  Vec2 map(Vec2 v) const {
    if (e.reflect) v.y = -v.y;
    double c = std::cos(e.angle), s = std::sin(e.angle);
    return Vec2{c * v.x - s * v.y, s * v.x + c * v.y} + e.translation;
  }
  Vec2 linear(Vec2 v) const {
    if (e.reflect) v.y = -v.y;
    double c = std::cos(e.angle), s = std::sin(e.angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
};

// Detects whether iso is rotation by 2*m*omega about the model center and
// returns the index shift 2*m.
std::optional<long> orbit_rotation_shift(const OrbitFigure& o,
                                         const Isometry& iso) {
  double w = o.omega.value();
  double angle = 0.0;
  if (iso.is<EuclideanIsometry>()) {
    const auto& e = iso.as<EuclideanIsometry>();
    if (e.reflect || norm(e.translation) > 1e-9) return std::nullopt;
    angle = e.angle;
  } else if (iso.is<MobiusIsometry>()) {
    const auto& m = iso.as<MobiusIsometry>();
    if (m.conjugate || std::abs(m.b) > 1e-9) return std::nullopt;
    angle = 2.0 * std::arg(m.a);
  } else if (iso.is<EllipticIsometry>()) {
    const auto& m = iso.as<EllipticIsometry>().m;
    double sign = m[8] >= 0.0 ? 1.0 : -1.0;  // -M acts identically
    double c = sign * m[0], s = sign * m[3];
    std::array<double, 9> expect{c, -s, 0, s, c, 0, 0, 0, 1};
    for (int i = 0; i < 9; ++i) {
      if (std::abs(sign * m[i] - expect[i]) > 1e-9) return std::nullopt;
    }
    angle = std::atan2(s, c);
  } else {
    return std::nullopt;
  }
  for (long mshift = -kMaxRotationShift; mshift <= kMaxRotationShift; ++mshift) {
    if (std::abs(wrap_angle(angle - 2.0 * mshift * w)) <= 1e-9) {
      return 2 * mshift;
    }
  }
  return std::nullopt;
}

FigureNodePtr node_ptr(FigureNode n) {
  return std::make_shared<const FigureNode>(std::move(n));
}

FigureNodePtr image_node(const FigureNode& node, Geometry geom,
                         const Isometry& iso);

FigureNodePtr image_orbit(const OrbitLeaf& leaf, const Isometry& iso) {
  const OrbitFigure& o = leaf.orbit;
  if (auto shift = orbit_rotation_shift(o, iso)) {
    OrbitFigure out = o;
    out.index_from += *shift;
    for (long& e : out.exclude) e += *shift;
    if (out.index_from >= 0) {
      out.normalize();
      return node_ptr(FigureNode{OrbitLeaf{std::move(out)}});
    }
  }
  if (o.truncation) {
    return node_ptr(FigureNode{FiniteLeaf{image(realize(o, *o.truncation), iso)}});
  }
  throw unsupported_image_error(
      "orbit images support only powers of the model rotation; truncate first");
}

FigureNodePtr image_node_euclidean(const FigureNode& node, const Isometry& iso) {
  EuclideanAffine aff{iso.as<EuclideanIsometry>()};
  bool reflect = aff.e.reflect;
  return std::visit(
      overloaded{
          [&](const HalfPlanePrim& h) {
            Vec2 n = aff.linear(h.normal);
            return node_ptr(FigureNode{
                HalfPlanePrim{n, h.offset + dot(n, aff.e.translation), h.closed}});
          },
          [&](const HalfLinePrim& h) {
            return node_ptr(FigureNode{HalfLinePrim{
                aff.map(h.origin), aff.linear(h.direction), h.include_origin}});
          },
          [&](const SegmentPrim& s) {
            return node_ptr(FigureNode{SegmentPrim{aff.map(s.a), aff.map(s.b),
                                                   s.include_a, s.include_b}});
          },
          [&](const DiscPrim& d) {
            return node_ptr(FigureNode{DiscPrim{aff.map(d.center), d.radius, d.closed}});
          },
          [&](const WedgePrim& w) {
            Vec2 d1 = aff.linear(w.dir1), d2 = aff.linear(w.dir2);
            if (reflect) std::swap(d1, d2);  // reversal flips the sweep order
            return node_ptr(FigureNode{WedgePrim{aff.map(w.vertex), d1, d2, w.closed}});
          },
          [&](const SinglePointPrim& sp) {
            return node_ptr(FigureNode{SinglePointPrim{apply(iso, sp.p)}});
          },
          [&](const LinePrim& l) {
            return node_ptr(
                FigureNode{LinePrim{aff.map(l.through), aff.linear(l.direction)}});
          },
          [&](const ArcPrim& a) {
            double t1 = a.theta1 + aff.e.angle, t2 = a.theta2 + aff.e.angle;
            if (reflect) {
              t1 = aff.e.angle - a.theta2;
              t2 = aff.e.angle - a.theta1;
            }
            return node_ptr(FigureNode{
                ArcPrim{aff.map(a.center), a.radius, t1, t2, a.include_ends}});
          },
          [&](const FiniteLeaf& f) {
            return node_ptr(FigureNode{FiniteLeaf{image(f.fig, iso)}});
          },
          [&](const OrbitLeaf& o) { return image_orbit(o, iso); },
          [&](const UnionNode&) -> FigureNodePtr {
            throw geom_error("image_node_euclidean: combinator");
          },
          [&](const DifferenceNode&) -> FigureNodePtr {
            throw geom_error("image_node_euclidean: combinator");
          },
          [&](const ComplementNode&) -> FigureNodePtr {
            throw geom_error("image_node_euclidean: combinator");
          },
      },
      node.v);
}

FigureNodePtr image_node_half_plane(const FigureNode& node, const Isometry& iso) {
  const auto& h = iso.as<HalfPlaneIsometry>();
  // Affine subgroup z |-> lambda z + mu (plus the reflection sigma) keeps
  // model-coordinate half planes and arcs in closed form.
  bool affine = std::abs(h.c) <= 1e-12;
  double lambda = 0.0, mu = 0.0;
  if (affine) {
    lambda = h.a / h.d;
    mu = h.b / h.d;
  }
  auto map_vec = [&](Vec2 v) {
    if (h.reflect) v.x = -v.x;
    return Vec2{lambda * v.x + mu, lambda * v.y};
  };
  return std::visit(
      overloaded{
          [&](const HalfPlanePrim& hp) -> FigureNodePtr {
            if (!affine) {
              throw unsupported_image_error(
                  "half-plane-model half planes map in closed form only under "
                  "affine isometries");
            }
            Vec2 n = h.reflect ? Vec2{-hp.normal.x, hp.normal.y} : hp.normal;
            double off = lambda * hp.offset + n.x * mu;
            return node_ptr(FigureNode{HalfPlanePrim{n, off, hp.closed}});
          },
          [&](const ArcPrim& a) -> FigureNodePtr {
            if (!affine) {
              throw unsupported_image_error(
                  "half-plane-model arcs map in closed form only under affine "
                  "isometries");
            }
            double t1 = a.theta1, t2 = a.theta2;
            if (h.reflect) {
              t1 = M_PI - a.theta2;
              t2 = M_PI - a.theta1;
            }
            return node_ptr(FigureNode{ArcPrim{map_vec(a.center), lambda * a.radius,
                                               t1, t2, a.include_ends}});
          },
          [&](const SinglePointPrim& sp) -> FigureNodePtr {
            return node_ptr(FigureNode{SinglePointPrim{apply(iso, sp.p)}});
          },
          [&](const FiniteLeaf& f) -> FigureNodePtr {
            return node_ptr(FigureNode{FiniteLeaf{image(f.fig, iso)}});
          },
          [&](const auto&) -> FigureNodePtr {
            throw unsupported_image_error(
                "unsupported primitive for half-plane-model images");
          },
      },
      node.v);
}

FigureNodePtr image_node_pointwise(const FigureNode& node, const Isometry& iso) {
  // Disc and elliptic models: only point-like primitives and orbits.
  return std::visit(
      overloaded{
          [&](const SinglePointPrim& sp) -> FigureNodePtr {
            return node_ptr(FigureNode{SinglePointPrim{apply(iso, sp.p)}});
          },
          [&](const FiniteLeaf& f) -> FigureNodePtr {
            return node_ptr(FigureNode{FiniteLeaf{image(f.fig, iso)}});
          },
          [&](const OrbitLeaf& o) -> FigureNodePtr {
            return image_orbit(o, iso);
          },
          [&](const auto&) -> FigureNodePtr {
            throw unsupported_image_error("unsupported primitive for this model's images");
          },
      },
      node.v);
}

FigureNodePtr image_node(const FigureNode& node, Geometry geom,
                         const Isometry& iso) {
  if (const auto* u = std::get_if<UnionNode>(&node.v)) {
    UnionNode out;
    for (const auto& p : u->parts) out.parts.push_back(image_node(*p, geom, iso));
    return node_ptr(FigureNode{std::move(out)});
  }
  if (const auto* d = std::get_if<DifferenceNode>(&node.v)) {
    return node_ptr(FigureNode{
        DifferenceNode{image_node(*d->a, geom, iso), image_node(*d->b, geom, iso)}});
  }
  if (const auto* c = std::get_if<ComplementNode>(&node.v)) {
    return node_ptr(FigureNode{ComplementNode{image_node(*c->a, geom, iso)}});
  }
  switch (geom) {
    case Geometry::Euclidean: return image_node_euclidean(node, iso);
    case Geometry::HyperbolicHalfPlane: return image_node_half_plane(node, iso);
    default: return image_node_pointwise(node, iso);
  }
}

}  // namespace

SymbolicFigure image(const SymbolicFigure& f, const Isometry& iso) {
  require_same_geometry(f.geometry(), iso.geometry(), "image");
  return SymbolicFigure(f.geometry(), image_node(f.root(), f.geometry(), iso));
}

// ----- structural properties ----------------------------------------------

namespace {

Ternary t_and(Ternary a, Ternary b) {
  if (a == Ternary::no || b == Ternary::no) return Ternary::no;
  if (a == Ternary::yes && b == Ternary::yes) return Ternary::yes;
  return Ternary::unknown;
}

// Ternary "has empty interior" (true for the listed primitives' closures too).
Ternary empty_interior(const FigureNode& node) {
  return std::visit(
      overloaded{
          [&](const HalfPlanePrim&) { return Ternary::no; },
          [&](const DiscPrim&) { return Ternary::no; },
          [&](const WedgePrim&) { return Ternary::no; },
          [&](const HalfLinePrim&) { return Ternary::yes; },
          [&](const SegmentPrim&) { return Ternary::yes; },
          [&](const SinglePointPrim&) { return Ternary::yes; },
          [&](const LinePrim&) { return Ternary::yes; },
          [&](const ArcPrim&) { return Ternary::yes; },
          [&](const FiniteLeaf&) { return Ternary::yes; },
          [&](const OrbitLeaf&) { return Ternary::yes; },
          [&](const UnionNode& u) {
            Ternary r = Ternary::yes;
            for (const auto& p : u.parts) r = t_and(r, empty_interior(*p));
            return r;
          },
          [&](const DifferenceNode& d) {
            Ternary a = empty_interior(*d.a);
            if (a == Ternary::yes) return Ternary::yes;
            if (a == Ternary::no && empty_interior(*d.b) == Ternary::yes) {
              return Ternary::no;  // open interior minus a nowhere-dense curve
            }
            return Ternary::unknown;
          },
          [&](const ComplementNode&) { return Ternary::unknown; },
      },
      node.v);
}

Ternary node_nonempty(const FigureNode& node) {
  return std::visit(
      overloaded{
          [&](const FiniteLeaf& f) { return bool_t(f.fig.size() > 0); },
          [&](const UnionNode& u) {
            Ternary r = Ternary::no;
            for (const auto& p : u.parts) {
              Ternary t = node_nonempty(*p);
              if (t == Ternary::yes) return Ternary::yes;
              if (t == Ternary::unknown) r = Ternary::unknown;
            }
            return r;
          },
          [&](const DifferenceNode&) { return Ternary::unknown; },
          [&](const ComplementNode&) { return Ternary::unknown; },
          [&](const auto&) { return Ternary::yes; },  // primitives are nonempty
      },
      node.v);
}

// Points that are limits of the node's members but excluded from it, used to
// refute closedness.  Only produced where the limit property holds by
// construction, so a witness propagates soundly through unions.
void limit_witnesses(const FigureNode& node, std::vector<Vec2>& out) {
  std::visit(
      overloaded{
          [&](const HalfPlanePrim& h) {
            if (h.closed) return;
            Vec2 base = h.normal * h.offset;
            Vec2 t = perp(h.normal);
            for (double s : {0.0, 1.0, -1.0, 3.0}) out.push_back(base + t * s);
          },
          [&](const HalfLinePrim& h) {
            if (!h.include_origin) out.push_back(h.origin);
          },
          [&](const SegmentPrim& s) {
            if (!s.include_a) out.push_back(s.a);
            if (!s.include_b) out.push_back(s.b);
          },
          [&](const DiscPrim& d) {
            if (d.closed) return;
            for (int i = 0; i < 8; ++i) {
              double th = 2.0 * M_PI * i / 8.0;
              out.push_back(d.center + Vec2{std::cos(th), std::sin(th)} * d.radius);
            }
          },
          [&](const WedgePrim& w) {
            if (w.closed) return;
            out.push_back(w.vertex);
            for (double t : {1.0, 3.0}) {
              out.push_back(w.vertex + w.dir1 * t);
              out.push_back(w.vertex + w.dir2 * t);
            }
          },
          [&](const ArcPrim& a) {
            if (a.include_ends) return;
            out.push_back(a.center +
                          Vec2{std::cos(a.theta1), std::sin(a.theta1)} * a.radius);
            out.push_back(a.center +
                          Vec2{std::cos(a.theta2), std::sin(a.theta2)} * a.radius);
          },
          [&](const UnionNode& u) {
            for (const auto& p : u.parts) limit_witnesses(*p, out);
          },
          [&](const auto&) {},  // no sound witness through other nodes
      },
      node.v);
}

// Lower bound on the distance from v to any part of the node that can carry
// interior (euclidean coordinates only).
double fat_dist_lower(const FigureNode& node, Vec2 v) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  return std::visit(
      overloaded{
          [&](const HalfPlanePrim& h) {
            return std::max(0.0, dot(h.normal, v) - h.offset);
          },
          [&](const DiscPrim& d) {
            return std::max(0.0, norm(v - d.center) - d.radius);
          },
          [&](const WedgePrim& w) {
            Vec2 u = v - w.vertex;
            if (cross(w.dir1, u) >= 0.0 && cross(u, w.dir2) >= 0.0) return 0.0;
            auto ray_dist = [&](Vec2 d) {
              double t = std::max(0.0, dot(u, d));
              return norm(u - d * t);
            };
            return std::min(ray_dist(w.dir1), ray_dist(w.dir2));
          },
          [&](const UnionNode& un) {
            double r = kInf;
            for (const auto& p : un.parts) r = std::min(r, fat_dist_lower(*p, v));
            return r;
          },
          [&](const DifferenceNode& d) { return fat_dist_lower(*d.a, v); },
          [&](const ComplementNode&) { return 0.0; },
          [&](const auto&) { return kInf; },  // thin primitives
      },
      node.v);
}

// Sample members of thin primitives, used as regular-closedness witnesses.
void thin_samples(const FigureNode& node, std::vector<Vec2>& out) {
  std::visit(
      overloaded{
          [&](const HalfLinePrim& h) {
            if (h.include_origin) out.push_back(h.origin);
            for (double t : {0.5, 1.0, 3.0}) out.push_back(h.origin + h.direction * t);
          },
          [&](const SegmentPrim& s) {
            if (s.include_a) out.push_back(s.a);
            if (s.include_b) out.push_back(s.b);
            out.push_back((s.a + s.b) * 0.5);
            out.push_back(s.a + (s.b - s.a) * 0.25);
            out.push_back(s.a + (s.b - s.a) * 0.75);
          },
          [&](const SinglePointPrim& p) {
            if (p.p.geometry == Geometry::Euclidean) out.push_back(p.p.xy());
          },
          [&](const LinePrim& l) {
            for (double t : {0.0, 1.0, -1.0, 4.0}) out.push_back(l.through + l.direction * t);
          },
          [&](const ArcPrim& a) {
            for (int i = 1; i < 4; ++i) {
              double th = a.theta1 + (a.theta2 - a.theta1) * i / 4.0;
              out.push_back(a.center + Vec2{std::cos(th), std::sin(th)} * a.radius);
            }
          },
          [&](const FiniteLeaf& f) {
            std::size_t n = std::min<std::size_t>(f.fig.size(), 16);
            for (std::size_t i = 0; i < n; ++i) {
              if (f.fig.geometry == Geometry::Euclidean)
                out.push_back(f.fig.points[i].xy());
            }
          },
          [&](const UnionNode& u) {
            for (const auto& p : u.parts) thin_samples(*p, out);
          },
          [&](const auto&) {},
      },
      node.v);
}

struct NodeProps {
  Ternary closed = Ternary::unknown;
  Ternary open = Ternary::unknown;
  Ternary bounded = Ternary::unknown;
  Ternary regular_closed = Ternary::unknown;
  Ternary convex = Ternary::unknown;
};

NodeProps node_props(const FigureNode& node, Geometry geom);

NodeProps prim_props(Ternary closed, Ternary open, Ternary bounded,
                     Ternary regular_closed, Ternary convex) {
  return {closed, open, bounded, regular_closed, convex};
}

NodeProps node_props(const FigureNode& node, Geometry geom) {
  const Ternary Y = Ternary::yes, N = Ternary::no, U = Ternary::unknown;
  return std::visit(
      overloaded{
          [&](const HalfPlanePrim& h) {
            return prim_props(bool_t(h.closed), bool_t(!h.closed), N,
                              h.closed ? Y : N, Y);
          },
          [&](const HalfLinePrim& h) {
            return prim_props(bool_t(h.include_origin), N, N, N, Y);
          },
          [&](const SegmentPrim& s) {
            return prim_props(bool_t(s.include_a && s.include_b), N, Y, N, Y);
          },
          [&](const DiscPrim& d) {
            return prim_props(bool_t(d.closed), bool_t(!d.closed), Y,
                              d.closed ? Y : N, Y);
          },
          [&](const WedgePrim& w) {
            return prim_props(bool_t(w.closed), bool_t(!w.closed), N,
                              w.closed ? Y : N, Y);
          },
          [&](const SinglePointPrim&) { return prim_props(Y, N, Y, N, Y); },
          [&](const LinePrim&) { return prim_props(Y, N, N, N, Y); },
          [&](const ArcPrim& a) {
            // A proper circular arc is never convex.
            return prim_props(bool_t(a.include_ends), N, Y, N, N);
          },
          [&](const FiniteLeaf& f) {
            bool empty = f.fig.size() == 0;
            return prim_props(Y, bool_t(empty), Y, bool_t(empty),
                              bool_t(f.fig.size() <= 1));
          },
          [&](const OrbitLeaf& o) {
            if (o.orbit.truncation) {
              long count = 0;
              for (long k = std::max<long>(0, o.orbit.index_from);
                   k < *o.orbit.truncation; ++k) {
                if (o.orbit.index_in_set(k)) ++count;
              }
              return prim_props(Y, bool_t(count == 0), Y, bool_t(count == 0),
                                bool_t(count <= 1));
            }
            // Closedness of the full orbit depends on the irrationality
            // assumption; left unknown.  Two consecutive points are distinct
            // whenever cos(omega) != 1, which rules out convexity.
            Ternary convex =
                std::abs(1.0 - std::cos(o.orbit.omega.value())) > 1e-12 ? N : U;
            return prim_props(U, N, Y, N, convex);
          },
          [&](const UnionNode& u) {
            NodeProps r{Y, Y, Y, Y, U};
            for (const auto& p : u.parts) {
              NodeProps c = node_props(*p, geom);
              r.closed = t_and(r.closed, c.closed);
              r.open = t_and(r.open, c.open);
              r.bounded = t_and(r.bounded, c.bounded);
              r.regular_closed = t_and(r.regular_closed, c.regular_closed);
              if (c.bounded == N) r.bounded = N;
            }
            if (r.closed != Y) r.closed = U;
            if (r.open != Y) {
              r.open = (empty_interior(node) == Y && node_nonempty(node) == Y) ? N : U;
            }
            if (r.regular_closed != Y) r.regular_closed = U;
            return r;
          },
          [&](const DifferenceNode& d) {
            NodeProps a = node_props(*d.a, geom);
            NodeProps b = node_props(*d.b, geom);
            NodeProps r;
            if (a.closed == Y && b.open == Y) r.closed = Y;
            if (a.open == Y && b.closed == Y) r.open = Y;
            if (a.bounded == Y) r.bounded = Y;
            if (a.bounded == N && b.bounded == Y) r.bounded = N;
            return r;
          },
          [&](const ComplementNode& c) {
            NodeProps a = node_props(*c.a, geom);
            NodeProps r;
            r.closed = a.open;
            r.open = a.closed;
            if (a.bounded == Y) r.bounded = N;
            return r;
          },
      },
      node.v);
}

}  // namespace

StructuralProps structural_props(const SymbolicFigure& f) {
  NodeProps np = node_props(f.root(), f.geometry());
  StructuralProps sp{np.closed, np.open, np.bounded, np.regular_closed, np.convex};
  Tolerance tol;

  if (f.geometry() == Geometry::Euclidean ||
      f.geometry() == Geometry::HyperbolicHalfPlane) {
    bool model_ok = f.geometry() == Geometry::Euclidean;
    // Refute closedness with a verified limit witness.
    if (sp.is_closed == Ternary::unknown) {
      std::vector<Vec2> wits;
      limit_witnesses(f.root(), wits);
      for (Vec2 w : wits) {
        Point p = model_ok ? Point::euclidean(w)
                           : (w.y > 0 ? Point::half_plane(w.x, w.y) : Point{});
        if (!model_ok && !(w.y > 0)) continue;
        if (contains(f, p, tol) == Ternary::no) {
          sp.is_closed = Ternary::no;
          break;
        }
      }
    }
    // Refute regular-closedness with a member of a thin part that is far
    // from everything able to carry interior.
    if (sp.is_regular_closed == Ternary::unknown && model_ok) {
      std::vector<Vec2> samples;
      thin_samples(f.root(), samples);
      for (Vec2 s : samples) {
        if (contains(f, Point::euclidean(s), tol) != Ternary::yes) continue;
        if (fat_dist_lower(f.root(), s) >= kThinWitnessGap) {
          sp.is_regular_closed = Ternary::no;
          break;
        }
      }
    }
  }
  return sp;
}

// ----- neighbor signatures --------------------------------------------------

std::vector<int> neighbor_signature(const FiniteFigure& f, double r,
                                    Tolerance tol) {
  if (!(r > 0.0)) throw degenerate_input_error("neighbor_signature: r must be positive");
  std::vector<int> counts(f.points.size(), 0);
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    for (std::size_t j = 0; j < f.points.size(); ++j) {
      if (i == j) continue;
      if (std::abs(dist(f.points[i], f.points[j]) - r) <= tol.eps) ++counts[i];
    }
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

// ----- deterministic sampling -------------------------------------------------

namespace {

void node_samples(const FigureNode& node, Geometry geom, std::vector<Vec2>& out);

void push_sweep(const FigureNode& node, Geometry geom, std::vector<Vec2>& out) {
  static const double kT[] = {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 3.5, 5.0, 8.0, 13.0};
  std::visit(
      overloaded{
          [&](const HalfPlanePrim& h) {
            Vec2 base = h.normal * h.offset;
            Vec2 tang = perp(h.normal);
            for (double s : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
              if (s == 0.0 && !h.closed) continue;
              for (double t : {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0}) {
                out.push_back(base - h.normal * s + tang * t);
              }
            }
          },
          [&](const HalfLinePrim& h) {
            for (double t : kT) {
              if (t == 0.0 && !h.include_origin) continue;
              out.push_back(h.origin + h.direction * t);
            }
          },
          [&](const SegmentPrim& s) {
            for (double t : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
              if (t == 0.0 && !s.include_a) continue;
              if (t == 1.0 && !s.include_b) continue;
              out.push_back(s.a + (s.b - s.a) * t);
            }
          },
          [&](const DiscPrim& d) {
            out.push_back(d.center);
            for (double rr : {0.25, 0.5, 0.9, 1.0}) {
              if (rr == 1.0 && !d.closed) continue;
              for (int i = 0; i < 8; ++i) {
                double th = 2.0 * M_PI * i / 8.0;
                out.push_back(d.center +
                              Vec2{std::cos(th), std::sin(th)} * (d.radius * rr));
              }
            }
          },
          [&](const WedgePrim& w) {
            double span = std::atan2(cross(w.dir1, w.dir2), dot(w.dir1, w.dir2));
            if (span <= 0.0) span += 2.0 * M_PI;
            double base = std::atan2(w.dir1.y, w.dir1.x);
            if (w.closed) out.push_back(w.vertex);
            for (int i = 0; i <= 4; ++i) {
              if (!w.closed && (i == 0 || i == 4)) continue;
              double th = base + span * i / 4.0;
              Vec2 d{std::cos(th), std::sin(th)};
              for (double t : {0.5, 1.0, 2.0, 5.0}) out.push_back(w.vertex + d * t);
            }
          },
          [&](const SinglePointPrim& p) { out.push_back(p.p.xy()); },
          [&](const LinePrim& l) {
            for (double t : {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0, 10.0, -10.0}) {
              out.push_back(l.through + l.direction * t);
            }
          },
          [&](const ArcPrim& a) {
            for (int i = 0; i <= 8; ++i) {
              if (!a.include_ends && (i == 0 || i == 8)) continue;
              double th = a.theta1 + (a.theta2 - a.theta1) * i / 8.0;
              out.push_back(a.center + Vec2{std::cos(th), std::sin(th)} * a.radius);
            }
          },
          [&](const FiniteLeaf& f) {
            for (const Point& p : f.fig.points) out.push_back(p.xy());
          },
          [&](const OrbitLeaf& o) {
            long n = o.orbit.truncation.value_or(64);
            FiniteFigure fin = realize(o.orbit, n);
            for (const Point& p : fin.points) out.push_back(p.xy());
          },
          [&](const UnionNode& u) {
            for (const auto& p : u.parts) node_samples(*p, geom, out);
          },
          [&](const DifferenceNode& d) { node_samples(*d.a, geom, out); },
          [&](const ComplementNode&) {
            for (int i = -6; i <= 6; ++i) {
              for (int j = -6; j <= 6; ++j) {
                out.push_back({i * 1.75, j * 1.75});
              }
            }
          },
      },
      node.v);
}

void node_samples(const FigureNode& node, Geometry geom, std::vector<Vec2>& out) {
  push_sweep(node, geom, out);
}

}  // namespace

std::vector<Point> sample_points(const SymbolicFigure& f, std::size_t max_n) {
  std::vector<Vec2> raw;
  node_samples(f.root(), f.geometry(), raw);
  std::vector<Point> out;
  Tolerance tol;
  for (Vec2 v : raw) {
    if (out.size() >= max_n) break;
    Point p;
    switch (f.geometry()) {
      case Geometry::Euclidean: p = Point::euclidean(v); break;
      case Geometry::HyperbolicDisc:
        if (v.x * v.x + v.y * v.y >= 1.0) continue;
        p = Point::disc(v.x, v.y);
        break;
      case Geometry::HyperbolicHalfPlane:
        if (!(v.y > 0.0)) continue;
        p = Point::half_plane(v.x, v.y);
        break;
      case Geometry::Elliptic:
        continue;  // elliptic symbolic figures are orbit/finite; handled below
    }
    if (contains(f, p, tol) == Ternary::yes) out.push_back(p);
  }
  if (f.geometry() == Geometry::Elliptic) {
    if (const OrbitFigure* o = as_orbit(f)) {
      FiniteFigure fin = realize(*o, o->truncation.value_or(64));
      for (const Point& p : fin.points) {
        if (out.size() >= max_n) break;
        out.push_back(p);
      }
    } else if (const FiniteFigure* fin = as_finite(f)) {
      for (const Point& p : fin->points) {
        if (out.size() >= max_n) break;
        out.push_back(p);
      }
    }
  }
  return out;
}

const FiniteFigure* as_finite(const SymbolicFigure& f) {
  if (const auto* leaf = std::get_if<FiniteLeaf>(&f.root().v)) return &leaf->fig;
  return nullptr;
}

const OrbitFigure* as_orbit(const SymbolicFigure& f) {
  if (const auto* leaf = std::get_if<OrbitLeaf>(&f.root().v)) return &leaf->orbit;
  return nullptr;
}

FiniteFigure realize_figure(const SymbolicFigure& f, long truncation) {
  if (const FiniteFigure* fin = as_finite(f)) return *fin;
  if (const OrbitFigure* o = as_orbit(f)) {
    return realize(*o, o->truncation.value_or(truncation));
  }
  throw unsupported_image_error(
      "only finite point lists and orbit figures realize to finite figures");
}

}  // namespace figcmp
