#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "figcmp/geometry.hpp"
#include "figcmp/isometry.hpp"

namespace figcmp {

/// Three-valued answer used for membership and structural properties.
/// `unknown` is an honest "no rule applies", never a guess.
enum class Ternary { yes, no, unknown };

inline Ternary ternary_not(Ternary t) {
  if (t == Ternary::yes) return Ternary::no;
  if (t == Ternary::no) return Ternary::yes;
  return Ternary::unknown;
}
std::string to_string(Ternary t);

/// A finite point list, deduplicated at 1e-12 (elliptic points compare as
/// identified points).
struct FiniteFigure {
  Geometry geometry = Geometry::Euclidean;
  std::vector<Point> points;

  FiniteFigure() = default;
  FiniteFigure(Geometry g, std::vector<Point> pts);

  std::size_t size() const { return points.size(); }
};

FiniteFigure image(const FiniteFigure& f, const Isometry& iso);
bool contains(const FiniteFigure& f, const Point& p, Tolerance tol);

/// The rotation angle of an orbit sequence; kept symbolic so documents stay
/// exact ("pi*sqrt2" is the only token in v1, arbitrary numeric values are
/// accepted with the irrationality assumption shifted to the caller).
struct OmegaSpec {
  enum class Kind { pi_sqrt2, numeric };
  Kind kind = Kind::pi_sqrt2;
  double numeric_value = 0.0;

  double value() const;
  std::string token() const;
  static OmegaSpec pi_sqrt2() { return {}; }
  static OmegaSpec numeric(double v) { return {Kind::numeric, v}; }
};

/// The orbit {a_k} of repeated rotation by omega, with an exact index set
/// "all k >= index_from except the listed exclusions".  The model rotation
/// T advances indices by two.
struct OrbitFigure {
  Geometry geometry = Geometry::Euclidean;
  OmegaSpec omega;
  // Euclidean: radius of the carrier circle (1 in the catalog);
  // disc model: b in (0,1); elliptic: equatorial radius (z = sqrt(1-rp^2)).
  double radius_param = 1.0;
  long index_from = 0;
  std::vector<long> exclude;  // kept sorted, deduped, >= index_from
  std::optional<long> truncation;

  bool index_in_set(long k) const;
  Point point_at(long k) const;
  void normalize();
  /// Exact index-set containment (this subset of other, same parameters).
  Ternary subset_of(const OrbitFigure& other) const;
  bool same_parameters(const OrbitFigure& other) const;
};

/// Realizes indices in the index set intersected with [0, n); asserts the
/// realized points are pairwise distinct.
FiniteFigure realize(const OrbitFigure& orbit, long n);

// ----- symbolic figure expression tree --------------------------------

struct FigureNode;
using FigureNodePtr = std::shared_ptr<const FigureNode>;

struct HalfPlanePrim {  // { p : dot(normal, p) <= offset }, strict when open
  Vec2 normal;
  double offset = 0.0;
  bool closed = true;
};
struct HalfLinePrim {  // { origin + t*direction : t >= 0 }, t > 0 when open
  Vec2 origin;
  Vec2 direction;
  bool include_origin = true;
};
struct SegmentPrim {
  Vec2 a, b;
  bool include_a = true, include_b = true;
};
struct DiscPrim {
  Vec2 center;
  double radius = 1.0;
  bool closed = true;
};
struct WedgePrim {  // points swept counterclockwise from dir1 to dir2, angle in (0, pi]
  Vec2 vertex;
  Vec2 dir1, dir2;
  bool closed = true;
};
struct SinglePointPrim {
  Point p;
};
struct LinePrim {
  Vec2 through;
  Vec2 direction;
};
struct ArcPrim {  // model-coordinate circular arc, theta1 < theta2
  Vec2 center;
  double radius = 1.0;
  double theta1 = 0.0, theta2 = 0.0;
  bool include_ends = true;
};
struct FiniteLeaf {
  FiniteFigure fig;
};
struct OrbitLeaf {
  OrbitFigure orbit;
};
struct UnionNode {
  std::vector<FigureNodePtr> parts;
};
struct DifferenceNode {
  FigureNodePtr a, b;
};
struct ComplementNode {
  FigureNodePtr a;
};

struct FigureNode {
  std::variant<HalfPlanePrim, HalfLinePrim, SegmentPrim, DiscPrim, WedgePrim,
               SinglePointPrim, LinePrim, ArcPrim, FiniteLeaf, OrbitLeaf,
               UnionNode, DifferenceNode, ComplementNode>
      v;
};

/// Immutable figure: a geometry tag plus an expression tree.  Primitives
/// other than half planes, arcs, points, orbits and finite lists are
/// Euclidean-only; half planes and arcs are also allowed in half-plane
/// model coordinates.
class SymbolicFigure {
 public:
  SymbolicFigure() = default;
  SymbolicFigure(Geometry g, FigureNodePtr root);

  Geometry geometry() const { return geometry_; }
  const FigureNode& root() const { return *root_; }
  FigureNodePtr root_ptr() const { return root_; }

  static SymbolicFigure half_plane(Geometry g, Vec2 normal, double offset,
                                   bool closed);
  static SymbolicFigure half_line(Vec2 origin, Vec2 direction,
                                  bool include_origin);
  static SymbolicFigure segment(Vec2 a, Vec2 b, bool include_a,
                                bool include_b);
  static SymbolicFigure disc(Vec2 center, double radius, bool closed);
  static SymbolicFigure wedge(Vec2 vertex, Vec2 dir1, Vec2 dir2, bool closed);
  static SymbolicFigure single_point(const Point& p);
  static SymbolicFigure line(Vec2 through, Vec2 direction);
  static SymbolicFigure arc(Geometry g, Vec2 center, double radius,
                            double theta1, double theta2, bool include_ends);
  static SymbolicFigure finite(FiniteFigure f);
  static SymbolicFigure orbit(OrbitFigure o);

 private:
  Geometry geometry_ = Geometry::Euclidean;
  FigureNodePtr root_;
};

using Figure = SymbolicFigure;

SymbolicFigure union_of(std::vector<SymbolicFigure> parts);
SymbolicFigure difference(const SymbolicFigure& a, const SymbolicFigure& b);
SymbolicFigure complement(const SymbolicFigure& a);
/// a minus the complement of b; membership equals "in a and in b".
SymbolicFigure intersection(const SymbolicFigure& a, const SymbolicFigure& b);

/// Membership.  Strict inequalities are evaluated strictly; tolerance is
/// applied only to equality comparisons.  Untruncated orbits answer `yes`
/// when the point matches a probed index and `unknown` otherwise.
Ternary contains(const SymbolicFigure& f, const Point& p, Tolerance tol);

/// Closed-form image.  Primitives map to primitives; orbit leaves accept
/// only powers of the model rotation unless truncated.  Throws
/// unsupported_image_error otherwise.
SymbolicFigure image(const SymbolicFigure& f, const Isometry& iso);

struct StructuralProps {
  Ternary is_closed = Ternary::unknown;
  Ternary is_open = Ternary::unknown;
  Ternary is_bounded = Ternary::unknown;
  Ternary is_regular_closed = Ternary::unknown;
  Ternary is_convex = Ternary::unknown;
};

/// Sound structural rules on the expression tree; `unknown` when no rule
/// applies.
StructuralProps structural_props(const SymbolicFigure& f);

/// Per-point counts of other points at distance within tol of r, as a
/// sorted multiset.  Isometry-invariant.
std::vector<int> neighbor_signature(const FiniteFigure& f, double r,
                                    Tolerance tol);

/// Deterministic sample points of the figure (all with membership yes),
/// used by refutation sampling and rendering.  At most max_n points.
std::vector<Point> sample_points(const SymbolicFigure& f, std::size_t max_n);

/// True if the root is a single finite leaf / orbit leaf.
const FiniteFigure* as_finite(const SymbolicFigure& f);
const OrbitFigure* as_orbit(const SymbolicFigure& f);

/// Realizes a figure to a finite point list: finite leaves pass through,
/// orbit leaves realize at `truncation` (their own truncation wins).
/// Throws unsupported_image_error for general symbolic trees.
FiniteFigure realize_figure(const SymbolicFigure& f, long truncation);

}  // namespace figcmp
