#include "figcmp/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace figcmp {

namespace {

constexpr double kGapFloor = 1e-6;
const double kSqrt3Half = std::sqrt(3.0) / 2.0;

std::string ternary_value(Ternary t) { return to_string(t); }

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// ---- local circle counting (the example 2.2 distinguisher) -----------------

struct LocalCount {
  bool infinite = false;
  long count = 0;
};

LocalCount add(LocalCount a, LocalCount b) {
  if (a.infinite || b.infinite) return {true, 0};
  return {false, a.count + b.count};
}

// Euclidean center/radius of the metric circle of radius rho about probe.
void metric_circle(Geometry g, const Point& probe, double rho, Vec2& center,
                   double& radius) {
  if (g == Geometry::Euclidean) {
    center = probe.xy();
    radius = rho;
    return;
  }
  if (g == Geometry::HyperbolicHalfPlane) {
    center = {probe.x, probe.y * std::cosh(rho)};
    radius = probe.y * std::sinh(rho);
    return;
  }
  throw geom_error("local_count: unsupported model");
}

LocalCount local_count_node(const FigureNode& node, Geometry g,
                            const Point& probe, double rho) {
  Vec2 ec;
  double er = 0.0;
  metric_circle(g, probe, rho, ec, er);
  return std::visit(
      [&](const auto& n) -> LocalCount {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HalfPlanePrim>) {
          double mid = dot(n.normal, ec) - n.offset;
          double lo = mid - er, hi = mid + er;
          if (lo > 1e-12) return {false, 0};          // circle fully outside
          if (hi < -1e-12) return {true, 0};          // circle fully inside
          if (lo >= -1e-12) return {false, n.closed ? 1 : 0};  // outer tangency
          return {true, 0};                           // crossing or inner tangency
        } else if constexpr (std::is_same_v<T, ArcPrim>) {
          // scan for solutions of d(probe, arc(theta)) == rho
          const int kGrid = 4096;
          long crossings = 0;
          double prev = 0.0;
          bool have_prev = false;
          for (int i = 0; i <= kGrid; ++i) {
            double th = n.theta1 + (n.theta2 - n.theta1) * i / kGrid;
            Vec2 v = n.center + Vec2{std::cos(th), std::sin(th)} * n.radius;
            if (g == Geometry::HyperbolicHalfPlane && !(v.y > 0)) continue;
            Point p = g == Geometry::Euclidean ? Point::euclidean(v)
                                               : Point::half_plane(v.x, v.y);
            double val = dist(probe, p) - rho;
            if (have_prev && ((prev < 0 && val >= 0) || (prev >= 0 && val < 0))) {
              ++crossings;
            }
            prev = val;
            have_prev = true;
          }
          return {false, crossings};
        } else if constexpr (std::is_same_v<T, SinglePointPrim>) {
          return {false, std::abs(dist(n.p, probe) - rho) <= 1e-9 ? 1 : 0};
        } else if constexpr (std::is_same_v<T, FiniteLeaf>) {
          long c = 0;
          for (const Point& p : n.fig.points) {
            if (std::abs(dist(p, probe) - rho) <= 1e-9) ++c;
          }
          return {false, c};
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          LocalCount total{};
          for (const auto& part : n.parts) {
            total = add(total, local_count_node(*part, g, probe, rho));
          }
          return total;
        } else {
          throw geom_error("local_count: unsupported figure node");
        }
      },
      node.v);
}

std::string local_count_value(const SymbolicFigure& fig, const Point& probe,
                              double rho) {
  LocalCount c = local_count_node(fig.root(), fig.geometry(), probe, rho);
  return c.infinite ? "infinite" : std::to_string(c.count);
}

// ---- entry constructions ----------------------------------------------------

SymbolicFigure closed_half_line() {
  return SymbolicFigure::half_line({0, 0}, {1, 0}, true);
}
SymbolicFigure open_half_line() {
  return SymbolicFigure::half_line({0, 0}, {1, 0}, false);
}

OrbitFigure base_orbit(Geometry g, double radius) {
  OrbitFigure o;
  o.geometry = g;
  o.radius_param = radius;
  o.index_from = 0;
  return o;
}

OrbitFigure orbit_without_a1(Geometry g, double radius) {
  OrbitFigure o = base_orbit(g, radius);
  o.exclude = {1};
  o.normalize();
  return o;
}

SymbolicFigure figure_L() {
  return union_of({closed_half_line(),
                   SymbolicFigure::single_point(Point::euclidean(0, 1))});
}

SymbolicFigure figure_M() {
  return union_of({closed_half_line(),
                   SymbolicFigure::half_line({0, 1}, {-1, 0}, false)});
}

std::vector<std::pair<std::string, Isometry>> euclidean_probe_seeds() {
  auto refl = [](double angle, bool reflect, Vec2 t) {
    return Isometry(EuclideanIsometry{angle, reflect, t});
  };
  return {
      {"identity", Isometry::identity(Geometry::Euclidean)},
      {"translate(+1,0)", Isometry::euclidean_translation({1, 0})},
      {"translate(+2.5,0)", Isometry::euclidean_translation({2.5, 0})},
      {"translate(-1,0)", Isometry::euclidean_translation({-1, 0})},
      {"translate(0,+1)", Isometry::euclidean_translation({0, 1})},
      {"translate(0,-1)", Isometry::euclidean_translation({0, -1})},
      {"translate(+1,+1)", Isometry::euclidean_translation({1, 1})},
      {"rotate(pi/2)", Isometry::euclidean_rotation(M_PI / 2)},
      {"rotate(pi)", Isometry::euclidean_rotation(M_PI)},
      {"rotate(-pi/2)", Isometry::euclidean_rotation(-M_PI / 2)},
      {"rotate(pi) about (0,1/2)", Isometry::euclidean_rotation(M_PI, {0, 0.5})},
      {"rotate(pi) about (2.5,1/2)", Isometry::euclidean_rotation(M_PI, {2.5, 0.5})},
      {"reflect x-axis", refl(0.0, true, {0, 0})},
      {"reflect y-axis", refl(M_PI, true, {0, 0})},
      {"reflect y=1/2", refl(0.0, true, {0, 1})},
      {"glide (x+1, 1-y)", refl(0.0, true, {1, 1})},
  };
}

CatalogEntry make_ex11() {
  CatalogEntry e;
  e.id = "ex1.1";
  e.geometry = Geometry::Euclidean;
  e.summary = "closed vs open half line: both embeddings hold, closedness differs";
  e.A = closed_half_line();
  e.B = open_half_line();
  e.f_AtoB = Isometry::euclidean_translation({1, 0});
  e.g_BtoA = Isometry::identity(Geometry::Euclidean);
  Distinguisher d;
  d.kind = Distinguisher::Kind::closedness;
  d.expected_a = "yes";
  d.expected_b = "no";
  e.distinguisher = d;
  return e;
}

CatalogEntry make_ex12() {
  CatalogEntry e;
  e.id = "ex1.2";
  e.geometry = Geometry::Euclidean;
  e.summary = "half plane with attached segment vs larger half plane";
  e.A = union_of({SymbolicFigure::half_plane(Geometry::Euclidean, {1, 0}, 0.0, true),
                  SymbolicFigure::segment({0, 2}, {1, 2}, true, true)});
  e.B = SymbolicFigure::half_plane(Geometry::Euclidean, {1, 0}, 2.0, true);
  e.f_AtoB = Isometry::identity(Geometry::Euclidean);  // A is a subset of B
  e.g_BtoA = Isometry::euclidean_translation({-3, 0});
  Distinguisher d;
  d.kind = Distinguisher::Kind::regular_closedness;
  d.expected_a = "no";
  d.expected_b = "yes";
  e.distinguisher = d;
  return e;
}

CatalogEntry make_ex13() {
  CatalogEntry e;
  e.id = "ex1.3";
  e.geometry = Geometry::Euclidean;
  e.summary = "right angle vs the angle with the triangle interior removed";
  e.A = SymbolicFigure::wedge({0, 0}, {1, 0}, {0, 1}, true);
  double isq = 1.0 / std::sqrt(2.0);
  SymbolicFigure interior = intersection(
      intersection(
          SymbolicFigure::half_plane(Geometry::Euclidean, {-1, 0}, 0.0, false),
          SymbolicFigure::half_plane(Geometry::Euclidean, {0, -1}, 0.0, false)),
      SymbolicFigure::half_plane(Geometry::Euclidean, {isq, isq}, isq, false));
  e.B = difference(e.A, interior);
  e.f_AtoB = Isometry::euclidean_translation({2, 0});
  e.g_BtoA = Isometry::identity(Geometry::Euclidean);
  Distinguisher d;
  d.kind = Distinguisher::Kind::convexity;
  d.witness_a = {0.9, 0.0};
  d.witness_b = {0.0, 0.9};
  d.expected_a = "yes";
  d.expected_b = "no";
  e.distinguisher = d;
  e.assumptions = {
      "the removed set is the open triangle interior {x>0, y>0, x+y<1}; the "
      "legs of the angle stay in B"};
  return e;
}

CatalogEntry make_orbit_entry(const std::string& id, Geometry g, double radius,
                              double consecutive_r, const Isometry& T,
                              const std::string& summary) {
  CatalogEntry e;
  e.id = id;
  e.geometry = g;
  e.summary = summary;
  e.A = SymbolicFigure::orbit(base_orbit(g, radius));
  e.B = SymbolicFigure::orbit(orbit_without_a1(g, radius));
  e.f_AtoB = T;
  e.g_BtoA = Isometry::identity(g);
  Distinguisher d;
  d.kind = Distinguisher::Kind::neighbor_signature;
  d.r = consecutive_r;
  d.sig_tol = 1e-6;
  d.expected_a = "min_count=1";
  d.expected_b = "min_count=0";
  e.distinguisher = d;
  e.default_truncation = 40;
  e.assumptions = {
      "omega/pi is irrational (omega = pi*sqrt2): orbit points are pairwise "
      "distinct",
      "r-neighbor uniqueness: no other index pair realizes the consecutive "
      "distance (checked numerically at the truncation)"};
  return e;
}

CatalogEntry make_ex15() {
  CatalogEntry e;
  e.id = "ex1.5";
  e.geometry = Geometry::Euclidean;
  e.summary = "L and M are strongly good; their intersection is not good";
  e.kind = CatalogEntry::Kind::intersection_regression;
  e.aux_L = figure_L();
  e.aux_M = figure_M();
  e.A = closed_half_line();  // L meet M
  e.B = open_half_line();
  e.f_AtoB = Isometry::euclidean_translation({1, 0});
  e.g_BtoA = Isometry::identity(Geometry::Euclidean);
  Distinguisher d;
  d.kind = Distinguisher::Kind::closedness;
  d.expected_a = "yes";
  d.expected_b = "no";
  e.distinguisher = d;
  e.probe_seeds = euclidean_probe_seeds();
  return e;
}

CatalogEntry make_ex16() {
  CatalogEntry e;
  e.id = "ex1.6";
  e.geometry = Geometry::Euclidean;
  e.summary = "line with closed half line vs line with open half line";
  e.A = union_of({SymbolicFigure::line({0, 0}, {1, 0}),
                  SymbolicFigure::half_line({0, 1}, {1, 0}, true)});
  e.B = union_of({SymbolicFigure::line({0, 0}, {1, 0}),
                  SymbolicFigure::half_line({0, 1}, {1, 0}, false)});
  e.f_AtoB = Isometry::euclidean_translation({1, 0});  // h(G) inside V
  e.g_BtoA = Isometry::identity(Geometry::Euclidean);  // V inside G
  Distinguisher d;
  d.kind = Distinguisher::Kind::closedness;
  d.expected_a = "yes";
  d.expected_b = "no";
  e.distinguisher = d;
  return e;
}

CatalogEntry make_claim(const std::string& id, const SymbolicFigure& fig,
                        const std::string& summary) {
  CatalogEntry e;
  e.id = id;
  e.geometry = Geometry::Euclidean;
  e.summary = summary;
  e.kind = CatalogEntry::Kind::strongly_good_claim;
  e.A = fig;
  e.B = fig;
  e.probe_seeds = euclidean_probe_seeds();
  return e;
}

CatalogEntry make_ex22() {
  CatalogEntry e;
  e.id = "ex2.2";
  e.geometry = Geometry::HyperbolicHalfPlane;
  e.summary = "half-plane model: region with arc vs sub-half-plane";
  // A = {Re >= 0} together with the unit-circle arc {Re <= 0, Im >= 1/2}.
  SymbolicFigure right =
      SymbolicFigure::half_plane(Geometry::HyperbolicHalfPlane, {-1, 0}, 0.0, true);
  SymbolicFigure arc = SymbolicFigure::arc(Geometry::HyperbolicHalfPlane, {0, 0},
                                           1.0, M_PI / 2.0, 5.0 * M_PI / 6.0, true);
  e.A = union_of({right, arc});
  e.B = SymbolicFigure::half_plane(Geometry::HyperbolicHalfPlane, {-1, 0}, -1.0,
                                   true);  // Re >= 1
  // A <= B:   A is inside g_H(B) = {Re >= -2}, i.e. (z+3)(A) is inside B.
  e.f_AtoB = Isometry::half_plane_translation(3.0);
  // B <= A:   B is a subset of A.
  e.g_BtoA = Isometry::identity(Geometry::HyperbolicHalfPlane);
  Distinguisher d;
  d.kind = Distinguisher::Kind::local_finiteness;
  d.radius = 0.05;
  d.probe_a = Point::half_plane(-kSqrt3Half, 0.5);  // the arc endpoint
  d.probe_b = Point::half_plane(2.0, 1.0);
  d.expected_a = "1";
  d.expected_b = "infinite";
  e.distinguisher = d;
  e.assumptions = {
      "the paper's probe point -1 + i/2 is read as the arc endpoint "
      "-sqrt(3)/2 + i/2 (the printed value is not on the figure)",
      "every point of B has infinitely many points of B at distance rho "
      "(region homogeneity; spot-checked at interior and boundary samples)",
      "witness direction: the paper exhibits g_H(z) = z - 3 with A inside "
      "g_H(B); the stored A<=B witness is its inverse z + 3"};
  return e;
}

// ---- probes -----------------------------------------------------------------

Clause run_strongly_good_probe(
    const std::string& label, const SymbolicFigure& X,
    const std::vector<std::pair<std::string, Isometry>>& seeds) {
  Clause c;
  c.name = label;
  long fixed = 0, rejected = 0;
  std::string violation;
  std::string undecided;
  for (const auto& [name, f] : seeds) {
    SubsetResult fwd = check_leq_symbolic(X, X, f);
    if (fwd.verdict == SubsetVerdict::refuted) {
      ++rejected;
      continue;
    }
    if (fwd.verdict == SubsetVerdict::unknown) {
      undecided = name;
      break;
    }
    SubsetResult back = check_leq_symbolic(X, X, inverse(f));
    if (back.verdict == SubsetVerdict::proved) {
      ++fixed;  // f(X) inside X and X inside f(X): the figure is fixed
    } else {
      violation = name;
      break;
    }
  }
  if (!violation.empty()) {
    c.pass = false;
    c.evidence = "seed '" + violation + "' embeds the figure strictly into itself";
  } else if (!undecided.empty()) {
    c.pass = false;
    c.evidence = "seed '" + undecided + "' could not be decided";
  } else {
    c.pass = true;
    std::ostringstream os;
    os << seeds.size() << " seeded isometries: " << fixed
       << " fix the figure, " << rejected << " fail to embed";
    c.evidence = os.str();
  }
  return c;
}

// ---- assumption spot checks ---------------------------------------------------

Clause orbit_gap_clause(const CatalogEntry& e, long truncation) {
  Clause c;
  c.name = "assumption check: consecutive-distance uniqueness gap";
  const OrbitFigure* o = as_orbit(e.A);
  if (!o || !e.distinguisher) {
    c.pass = false;
    c.evidence = "entry is not orbit-based";
    return c;
  }
  double r = e.distinguisher->r;
  double gap = std::numeric_limits<double>::infinity();
  for (long n = 2; n <= 2 * truncation; ++n) {
    gap = std::min(gap, std::abs(dist(o->point_at(0), o->point_at(n)) - r));
  }
  double min_pair = std::numeric_limits<double>::infinity();
  FiniteFigure fin = realize(*o, truncation);
  for (std::size_t i = 0; i < fin.size(); ++i) {
    for (std::size_t j = i + 1; j < fin.size(); ++j) {
      min_pair = std::min(min_pair, dist(fin.points[i], fin.points[j]));
    }
  }
  c.pass = gap > kGapFloor && min_pair > kGapFloor;
  c.evidence = "uniqueness gap " + fmt(gap) + ", min pairwise distance " +
               fmt(min_pair) + " (floor " + fmt(kGapFloor) + ")";
  return c;
}

}  // namespace

std::string to_string(Distinguisher::Kind k) {
  switch (k) {
    case Distinguisher::Kind::closedness: return "closedness";
    case Distinguisher::Kind::regular_closedness: return "regular_closedness";
    case Distinguisher::Kind::convexity: return "convexity";
    case Distinguisher::Kind::neighbor_signature: return "neighbor_signature";
    case Distinguisher::Kind::local_finiteness: return "local_finiteness";
  }
  return "?";
}

std::string evaluate_distinguisher(const Distinguisher& d,
                                   const SymbolicFigure& fig, int which,
                                   const std::optional<Isometry>& transport,
                                   long truncation) {
  Tolerance tol;
  switch (d.kind) {
    case Distinguisher::Kind::closedness:
      return ternary_value(structural_props(fig).is_closed);
    case Distinguisher::Kind::regular_closedness:
      return ternary_value(structural_props(fig).is_regular_closed);
    case Distinguisher::Kind::convexity: {
      Ternary t = structural_props(fig).is_convex;
      if (t != Ternary::unknown) return ternary_value(t);
      Point wa = Point::euclidean(d.witness_a);
      Point wb = Point::euclidean(d.witness_b);
      if (transport) {
        wa = apply(*transport, wa);
        wb = apply(*transport, wb);
      }
      Point mid = Point::euclidean((wa.x + wb.x) / 2.0, (wa.y + wb.y) / 2.0);
      if (contains(fig, wa, tol) == Ternary::yes &&
          contains(fig, wb, tol) == Ternary::yes &&
          contains(fig, mid, tol) == Ternary::no) {
        return "no";
      }
      return "unknown";
    }
    case Distinguisher::Kind::neighbor_signature: {
      FiniteFigure fin = realize_figure(fig, truncation);
      std::vector<int> sig = neighbor_signature(fin, d.r, Tolerance{d.sig_tol});
      if (sig.empty()) return "min_count=none";
      return "min_count=" + std::to_string(sig.front());
    }
    case Distinguisher::Kind::local_finiteness: {
      std::optional<Point> probe = which == 0 ? d.probe_a : d.probe_b;
      if (!probe) return "unknown";
      Point p = *probe;
      if (transport) p = apply(*transport, p);
      return local_count_value(fig, p, d.radius);
    }
  }
  return "unknown";
}

CatalogEntry build_entry(const std::string& id) {
  if (id == "ex1.1") return make_ex11();
  if (id == "ex1.2") return make_ex12();
  if (id == "ex1.3") return make_ex13();
  if (id == "ex1.4") {
    return make_orbit_entry(
        "ex1.4", Geometry::Euclidean, 1.0, 1.5913864031349617439,
        Isometry::euclidean_rotation(2.0 * M_PI * std::sqrt(2.0)),
        "unit-circle orbit vs the orbit without a_1");
  }
  if (id == "ex1.5") return make_ex15();
  if (id == "ex1.6") return make_ex16();
  if (id == "claim1") {
    return make_claim("claim1", figure_L(),
                      "half line with a detached point is strongly good");
  }
  if (id == "claim2") {
    return make_claim("claim2", figure_M(),
                      "two opposite half lines at height 0 and 1 are strongly good");
  }
  if (id == "ex2.1") {
    return make_orbit_entry(
        "ex2.1", Geometry::HyperbolicDisc, 0.5, 1.8476083998962526025,
        Isometry::disc_rotation(2.0 * M_PI * std::sqrt(2.0)),
        "disc-model orbit at b = 1/2 vs the orbit without a_1");
  }
  if (id == "ex2.2") return make_ex22();
  if (id == "ex2.3") {
    return make_orbit_entry(
        "ex2.3", Geometry::Elliptic, 0.5, 0.81833699231198396660,
        Isometry::elliptic_z_rotation(2.0 * M_PI * std::sqrt(2.0)),
        "hemisphere orbit at z = sqrt(3)/2 vs the orbit without a_1");
  }
  throw unknown_entry_error("unknown catalog entry: " + id);
}

const std::vector<std::string>& entry_ids() {
  static const std::vector<std::string> ids = {
      "ex1.1", "ex1.2", "ex1.3", "ex1.4", "ex1.5", "ex1.6",
      "claim1", "claim2", "ex2.1", "ex2.2", "ex2.3"};
  return ids;
}

namespace {

void verify_paradox_pair(const CatalogEntry& e, long truncation,
                         ExampleReport& report) {
  {
    Clause c;
    c.name = "A<=B: stored witness maps A into B";
    SubsetResult r = check_leq_symbolic(e.A, e.B, *e.f_AtoB);
    c.pass = r.verdict == SubsetVerdict::proved;
    c.evidence = to_string(r.verdict) + " (" + r.detail + ")";
    report.clauses.push_back(c);
  }
  {
    Clause c;
    c.name = "B<=A: stored witness maps B into A";
    SubsetResult r = check_leq_symbolic(e.B, e.A, *e.g_BtoA);
    c.pass = r.verdict == SubsetVerdict::proved;
    c.evidence = to_string(r.verdict) + " (" + r.detail + ")";
    report.clauses.push_back(c);
  }
  if (e.distinguisher) {
    Clause c;
    c.name = "distinguisher(" + to_string(e.distinguisher->kind) + ") separates A from B";
    std::string va =
        evaluate_distinguisher(*e.distinguisher, e.A, 0, std::nullopt, truncation);
    std::string vb =
        evaluate_distinguisher(*e.distinguisher, e.B, 1, std::nullopt, truncation);
    c.pass = va == e.distinguisher->expected_a &&
             vb == e.distinguisher->expected_b && va != vb && va != "unknown" &&
             vb != "unknown";
    c.evidence = "A: " + va + ", B: " + vb + " (expected " +
                 e.distinguisher->expected_a + " vs " +
                 e.distinguisher->expected_b + ")";
    report.clauses.push_back(c);
  }
  if (as_orbit(e.A)) {
    report.clauses.push_back(orbit_gap_clause(e, truncation));
    // Finite search cross-check at the truncation: the shifted image needs a
    // slightly deeper target realization.
    Clause c;
    c.name = "finite search cross-check at truncation";
    const OrbitFigure* oa = as_orbit(e.A);
    const OrbitFigure* ob = as_orbit(e.B);
    FiniteFigure a_fin = realize(*oa, truncation);
    FiniteFigure b_deep = realize(*ob, truncation + 4);
    FiniteFigure b_fin = realize(*ob, truncation);
    FiniteFigure a_same = realize(*oa, truncation);
    ComparisonVerdict fwd = leq_finite(a_fin, b_deep, Tolerance{});
    ComparisonVerdict bwd = leq_finite(b_fin, a_same, Tolerance{});
    ComparisonVerdict eq = equal_finite(a_fin, b_fin, Tolerance{});
    c.pass = fwd.yes && bwd.yes && !eq.yes;
    c.evidence = std::string("A-trunc embeds in deeper B-trunc: ") +
                 (fwd.yes ? "yes" : "no") + "; B-trunc embeds in A-trunc: " +
                 (bwd.yes ? "yes" : "no") +
                 "; truncations not congruent: " + to_string(eq.certificate);
    report.clauses.push_back(c);
  }
  if (e.id == "ex2.2") {
    // The conformal transport of the whole configuration to the disc model.
    Clause c;
    c.name = "model transport: g_H conjugates to a disc isometry";
    try {
      Isometry gH = inverse(*e.f_AtoB);  // z - 3, the paper's map
      Isometry gD = disc_from_half_plane(gH);
      bool ok = true;
      for (int i = 0; i < 32; ++i) {
        double x = -3.0 + 0.4 * i, y = 0.3 + 0.11 * i;
        Point z = Point::half_plane(x, y);
        Point lhs = apply(gD, half_plane_to_disc(z));
        Point rhs = half_plane_to_disc(apply(gH, z));
        if (dist(lhs, rhs) > 1e-9) ok = false;
      }
      c.pass = ok;
      c.evidence = ok ? "h . g_H . h^-1 acts identically on 32 samples"
                      : "transport mismatch";
    } catch (const geom_error& ex) {
      c.pass = false;
      c.evidence = ex.what();
    }
    report.clauses.push_back(c);

    Clause hom;
    hom.name = "assumption check: every sampled point of B has infinite local count";
    bool ok = true;
    for (Vec2 v : {Vec2{1.0, 1.0}, Vec2{1.0, 0.2}, Vec2{2.0, 1.0}, Vec2{5.0, 3.0},
                   Vec2{1.0, 5.0}}) {
      if (local_count_value(e.B, Point::half_plane(v.x, v.y),
                            e.distinguisher->radius) != "infinite") {
        ok = false;
      }
    }
    hom.pass = ok;
    hom.evidence = ok ? "5 samples (including boundary points) all infinite"
                      : "a sample had a finite count";
    report.clauses.push_back(hom);
  }
}

void verify_strongly_good_claim(const CatalogEntry& e, ExampleReport& report) {
  report.clauses.push_back(run_strongly_good_probe(
      "self-embedding probe: every embedding seed fixes the figure", e.A,
      e.probe_seeds));
  // positive control: the identity embeds and fixes.
  Clause c;
  c.name = "identity embeds and fixes the figure";
  SubsetResult r =
      check_leq_symbolic(e.A, e.A, Isometry::identity(e.geometry));
  c.pass = r.verdict == SubsetVerdict::proved;
  c.evidence = to_string(r.verdict);
  report.clauses.push_back(c);
}

void verify_intersection_regression(const CatalogEntry& e, long truncation,
                                    ExampleReport& report) {
  report.clauses.push_back(run_strongly_good_probe(
      "L passes the strongly-good probe", *e.aux_L, e.probe_seeds));
  report.clauses.push_back(run_strongly_good_probe(
      "M passes the strongly-good probe", *e.aux_M, e.probe_seeds));
  {
    Clause c;
    c.name = "L meet M realizes the closed half line";
    SymbolicFigure inter = intersection(*e.aux_L, *e.aux_M);
    bool ok = true;
    const Vec2 samples[] = {{0, 0},   {1, 0},   {2.5, 0}, {100, 0}, {-1, 0},
                            {-0.25, 0}, {0, 1},  {1, 1},   {-2, 1},  {0.5, 0.5},
                            {3, -2}};
    for (Vec2 v : samples) {
      Point p = Point::euclidean(v);
      Ternary lhs = contains(inter, p, Tolerance{});
      Ternary rhs = contains(e.A, p, Tolerance{});
      if (lhs != rhs || lhs == Ternary::unknown) ok = false;
    }
    c.pass = ok;
    c.evidence = ok ? "membership agrees on all structured samples"
                    : "membership mismatch between L meet M and the half line";
    report.clauses.push_back(c);
  }
  verify_paradox_pair(e, truncation, report);
}

}  // namespace

ExampleReport verify_entry(const CatalogEntry& entry,
                           std::optional<long> truncation) {
  ExampleReport report;
  report.entry = entry.id;
  report.assumptions = entry.assumptions;
  long trunc = truncation.value_or(entry.default_truncation.value_or(40));
  switch (entry.kind) {
    case CatalogEntry::Kind::paradox_pair:
      verify_paradox_pair(entry, trunc, report);
      break;
    case CatalogEntry::Kind::strongly_good_claim:
      verify_strongly_good_claim(entry, report);
      break;
    case CatalogEntry::Kind::intersection_regression:
      verify_intersection_regression(entry, trunc, report);
      break;
  }
  report.pass = !report.clauses.empty();
  for (const Clause& c : report.clauses) {
    if (!c.pass) report.pass = false;
  }
  return report;
}

Catalog::Catalog() {
  for (const std::string& id : entry_ids()) {
    entries_.push_back(build_entry(id));
    status_[id] = "unverified";
  }
}

const CatalogEntry& Catalog::entry(const std::string& id) const {
  for (const CatalogEntry& e : entries_) {
    if (e.id == id) return e;
  }
  throw unknown_entry_error("unknown catalog entry: " + id);
}

ExampleReport Catalog::verify(const std::string& id,
                              std::optional<long> truncation) {
  ExampleReport r = verify_entry(entry(id), truncation);
  status_[id] = r.pass ? "PASS" : "FAIL";
  return r;
}

std::vector<ExampleReport> Catalog::verify_all(std::optional<long> truncation) {
  std::vector<ExampleReport> out;
  for (const std::string& id : entry_ids()) out.push_back(verify(id, truncation));
  return out;
}

std::vector<Catalog::Listing> Catalog::list() const {
  std::vector<Listing> out;
  for (const CatalogEntry& e : entries_) {
    out.push_back({e.id, e.geometry, e.summary, status_.at(e.id)});
  }
  return out;
}

}  // namespace figcmp
