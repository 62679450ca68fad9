#include "figcmp/comparator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

namespace figcmp {

namespace {

constexpr double kAnchorEps = 1e-12;

std::string to_string_size(std::size_t n) { return std::to_string(n); }

// Rotation of the hemisphere taking the identified point [p] to [q].
Isometry elliptic_point_to_point(const Point& p, const Point& q) {
  if (dist(p, q) <= kAnchorEps) return Isometry::identity(Geometry::Elliptic);
  double ax = p.y * q.z - p.z * q.y;
  double ay = p.z * q.x - p.x * q.z;
  double az = p.x * q.y - p.y * q.x;
  double an = std::sqrt(ax * ax + ay * ay + az * az);
  if (an < 1e-15) return Isometry::identity(Geometry::Elliptic);
  ax /= an;
  ay /= an;
  az /= an;
  double c = std::clamp(p.x * q.x + p.y * q.y + p.z * q.z, -1.0, 1.0);
  double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  double C = 1.0 - c;
  EllipticIsometry m{{c + ax * ax * C, ax * ay * C - az * s, ax * az * C + ay * s,
                      ay * ax * C + az * s, c + ay * ay * C, ay * az * C - ax * s,
                      az * ax * C - ay * s, az * ay * C + ax * s, c + az * az * C}};
  return Isometry(m);
}

Isometry point_to_point(const Point& p, const Point& q) {
  switch (p.geometry) {
    case Geometry::Euclidean:
      return Isometry::euclidean_translation(q.xy() - p.xy());
    case Geometry::HyperbolicDisc:
      return compose(inverse(Isometry::disc_translation_to_origin(q.to_complex())),
                     Isometry::disc_translation_to_origin(p.to_complex()));
    case Geometry::HyperbolicHalfPlane:
      return half_plane_from_disc(
          point_to_point(half_plane_to_disc(p), half_plane_to_disc(q)));
    case Geometry::Elliptic:
      return elliptic_point_to_point(p, q);
  }
  throw geom_error("point_to_point: bad geometry tag");
}

// Candidate isometries mapping (p1, p2) onto (u, v), all chiralities.
template <typename Fn>
void for_each_candidate(const Point& p1, const Point& p2, const Point& u,
                        const Point& v, double pair_tol, Fn&& fn) {
  switch (p1.geometry) {
    case Geometry::Euclidean:
      for (bool reflect : {false, true}) {
        try {
          if (fn(euclid_from_pairs(p1, p2, u, v, reflect, pair_tol))) return;
        } catch (const geom_error&) {
        }
      }
      return;
    case Geometry::HyperbolicDisc:
      for (bool reflect : {false, true}) {
        try {
          if (fn(hyperbolic_from_pairs(p1, p2, u, v, reflect, pair_tol))) return;
        } catch (const geom_error&) {
        }
      }
      return;
    case Geometry::HyperbolicHalfPlane: {
      Point p1d = half_plane_to_disc(p1), p2d = half_plane_to_disc(p2);
      Point ud = half_plane_to_disc(u), vd = half_plane_to_disc(v);
      for (bool reflect : {false, true}) {
        try {
          Isometry fd = hyperbolic_from_pairs(p1d, p2d, ud, vd, reflect, pair_tol);
          if (fn(half_plane_from_disc(fd))) return;
        } catch (const geom_error&) {
        }
      }
      return;
    }
    case Geometry::Elliptic:
      for (bool reflect : {false, true}) {
        try {
          for (const Isometry& iso :
               elliptic_from_frames(p1, p2, u, v, reflect, pair_tol)) {
            if (fn(iso)) return;
          }
        } catch (const geom_error&) {
        }
      }
      return;
  }
}

std::pair<std::size_t, std::size_t> anchor_pair(const FiniteFigure& A) {
  std::size_t bi = 0, bj = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      if (i == j) continue;
      double d = dist(A.points[i], A.points[j]);
      if (d > best + kAnchorEps) {
        best = d;
        bi = i;
        bj = j;
      } else if (std::abs(d - best) <= kAnchorEps) {
        auto key = [&](std::size_t a, std::size_t b) {
          return std::array<double, 6>{A.points[a].x, A.points[a].y, A.points[a].z,
                                       A.points[b].x, A.points[b].y, A.points[b].z};
        };
        if (key(i, j) < key(bi, bj)) {
          bi = i;
          bj = j;
        }
      }
    }
  }
  return {bi, bj};
}

struct DistanceIndex {
  // (distance to the reference point, index into B), sorted by distance.
  std::vector<std::pair<double, std::size_t>> entries;

  DistanceIndex(const FiniteFigure& B, const Point& ref) {
    entries.reserve(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      entries.emplace_back(dist(B.points[i], ref), i);
    }
    std::sort(entries.begin(), entries.end());
  }

  template <typename Fn>
  void for_band(double center, double band, Fn&& fn) const {
    auto lo = std::lower_bound(entries.begin(), entries.end(),
                               std::make_pair(center - band, std::size_t{0}));
    for (auto it = lo; it != entries.end() && it->first <= center + band; ++it) {
      if (fn(it->second)) return;
    }
  }
};

// Per-point containment of the image of A under iso, via the distance index
// anchored at u = iso(p1).  Optionally returns the hit lists for a bijection
// check.
bool image_contained(const FiniteFigure& A, const FiniteFigure& B,
                     const Isometry& iso, const Point& p1,
                     const DistanceIndex& index, Tolerance tol,
                     std::vector<std::vector<std::size_t>>* hits) {
  double band = tol.eps + 1e-9;
  if (hits) hits->assign(A.size(), {});
  for (std::size_t i = 0; i < A.size(); ++i) {
    Point fa = apply(iso, A.points[i]);
    double da = dist(A.points[i], p1);
    bool found = false;
    index.for_band(da, band, [&](std::size_t bidx) {
      if (dist(fa, B.points[bidx]) <= tol.eps) {
        found = true;
        if (hits) {
          (*hits)[i].push_back(bidx);
          return false;  // keep collecting for the matching
        }
        return true;
      }
      return false;
    });
    if (!found) return false;
  }
  return true;
}

// Kuhn's augmenting-path bipartite matching; true if every A point can be
// assigned a distinct B point from its hit list.
bool perfect_matching(const std::vector<std::vector<std::size_t>>& hits,
                      std::size_t b_size) {
  std::vector<long> match_b(b_size, -1);
  std::vector<char> used;
  std::function<bool(std::size_t)> try_kuhn = [&](std::size_t a) -> bool {
    for (std::size_t b : hits[a]) {
      if (used[b]) continue;
      used[b] = 1;
      if (match_b[b] < 0 || try_kuhn(static_cast<std::size_t>(match_b[b]))) {
        match_b[b] = static_cast<long>(a);
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < hits.size(); ++a) {
    used.assign(b_size, 0);
    if (!try_kuhn(a)) return false;
  }
  return true;
}

// Plain double-loop containment pass, independent of the index path.
bool verify_witness(const FiniteFigure& A, const FiniteFigure& B,
                    const Isometry& iso, Tolerance tol) {
  for (const Point& a : A.points) {
    Point fa = apply(iso, a);
    bool ok = false;
    for (const Point& b : B.points) {
      if (dist(fa, b) <= tol.eps) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<double> pairwise_distances(const FiniteFigure& F) {
  std::vector<double> d;
  d.reserve(F.size() * (F.size() - 1) / 2);
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      d.push_back(dist(F.points[i], F.points[j]));
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Greedy interval matching: every distance of A must match a distinct
// distance of B within band.
bool distance_submultiset(const std::vector<double>& da,
                          const std::vector<double>& db, double band,
                          double* missing) {
  std::size_t j = 0;
  for (double d : da) {
    while (j < db.size() && db[j] < d - band) ++j;
    if (j >= db.size() || db[j] > d + band) {
      if (missing) *missing = d;
      return false;
    }
    ++j;
  }
  return true;
}

double min_pairwise(const FiniteFigure& F) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      m = std::min(m, dist(F.points[i], F.points[j]));
    }
  }
  return m;
}

void check_inputs(const FiniteFigure& A, const FiniteFigure& B, Tolerance tol,
                  const SearchConfig& cfg) {
  require_same_geometry(A.geometry, B.geometry, "comparison");
  if (tol.eps < 0.0) throw degenerate_input_error("tolerance must be nonnegative");
  if (A.size() > cfg.size_cap || B.size() > cfg.size_cap) {
    throw size_cap_error("figure size exceeds the configured cap of " +
                         to_string_size(cfg.size_cap));
  }
}

// Core anchor-pair search.  on_witness returns true to stop the search.
template <typename Fn>
void anchor_search(const FiniteFigure& A, const FiniteFigure& B, Tolerance tol,
                   Fn&& on_witness) {
  auto [i1, i2] = anchor_pair(A);
  const Point& p1 = A.points[i1];
  const Point& p2 = A.points[i2];
  double d0 = dist(p1, p2);
  double pair_band = 2.0 * tol.eps + 1e-12;
  for (std::size_t bu = 0; bu < B.size(); ++bu) {
    DistanceIndex index(B, B.points[bu]);
    for (std::size_t bv = 0; bv < B.size(); ++bv) {
      if (bu == bv) continue;
      if (std::abs(dist(B.points[bu], B.points[bv]) - d0) > pair_band) continue;
      bool stop = false;
      for_each_candidate(p1, p2, B.points[bu], B.points[bv], pair_band,
                         [&](const Isometry& iso) {
                           stop = on_witness(iso, p1, index, bu);
                           return stop;
                         });
      if (stop) return;
    }
  }
}

}  // namespace

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::none: return "none";
    case Certificate::distance_multiset: return "distance_multiset";
    case Certificate::search_exhausted: return "search_exhausted";
    case Certificate::cardinality: return "cardinality";
  }
  return "?";
}

std::string to_string(LambdaRelation r) {
  switch (r) {
    case LambdaRelation::equal: return "equal";
    case LambdaRelation::strictly_less: return "strictly_less";
    case LambdaRelation::strictly_greater: return "strictly_greater";
    case LambdaRelation::incomparable: return "incomparable";
  }
  return "?";
}

ComparisonVerdict leq_finite(const FiniteFigure& A, const FiniteFigure& B,
                             Tolerance tol, const SearchConfig& cfg) {
  check_inputs(A, B, tol, cfg);
  ComparisonVerdict v;
  if (A.size() == 0) {
    v.yes = true;
    v.witness = Isometry::identity(A.geometry);
    v.detail = "empty figure embeds trivially";
    return v;
  }
  if (B.size() == 0) {
    v.certificate = Certificate::cardinality;
    v.detail = "target figure is empty";
    return v;
  }
  if (A.size() == 1) {
    v.yes = true;
    v.witness = point_to_point(A.points[0], B.points[0]);
    v.detail = "single point maps onto any target point";
    return v;
  }
  double minA = min_pairwise(A);
  if (A.size() > B.size() && minA > 2.0 * tol.eps) {
    v.certificate = Certificate::cardinality;
    v.detail = "|A| = " + to_string_size(A.size()) + " exceeds |B| = " +
               to_string_size(B.size());
    return v;
  }
  if (minA > 2.0 * tol.eps) {
    double missing = 0.0;
    if (!distance_submultiset(pairwise_distances(A), pairwise_distances(B),
                              2.0 * tol.eps, &missing)) {
      v.certificate = Certificate::distance_multiset;
      char buf[96];
      std::snprintf(buf, sizeof(buf),
                    "pairwise distance %.12g of A has no match in B", missing);
      v.detail = buf;
      return v;
    }
  }
  anchor_search(A, B, tol,
                [&](const Isometry& iso, const Point& p1,
                    const DistanceIndex& index, std::size_t) {
                  if (!image_contained(A, B, iso, p1, index, tol, nullptr)) {
                    return false;
                  }
                  if (!verify_witness(A, B, iso, tol)) return false;
                  v.yes = true;
                  v.witness = iso;
                  v.detail = "witness found by anchor-pair search";
                  return true;
                });
  if (!v.yes) {
    v.certificate = Certificate::search_exhausted;
    v.detail = "all anchor-pair candidates fail containment";
  }
  return v;
}

ComparisonVerdict equal_finite(const FiniteFigure& A, const FiniteFigure& B,
                               Tolerance tol, const SearchConfig& cfg) {
  check_inputs(A, B, tol, cfg);
  ComparisonVerdict v;
  if (A.size() != B.size()) {
    v.certificate = Certificate::cardinality;
    v.detail = "|A| = " + to_string_size(A.size()) + " vs |B| = " +
               to_string_size(B.size());
    return v;
  }
  if (A.size() == 0) {
    v.yes = true;
    v.witness = Isometry::identity(A.geometry);
    v.detail = "both empty";
    return v;
  }
  if (A.size() == 1) {
    v.yes = true;
    v.witness = point_to_point(A.points[0], B.points[0]);
    v.detail = "singletons are congruent";
    return v;
  }
  {
    std::vector<double> da = pairwise_distances(A), db = pairwise_distances(B);
    for (std::size_t i = 0; i < da.size(); ++i) {
      if (std::abs(da[i] - db[i]) > 2.0 * tol.eps) {
        v.certificate = Certificate::distance_multiset;
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "sorted distance #%zu differs: %.12g vs %.12g", i, da[i],
                      db[i]);
        v.detail = buf;
        return v;
      }
    }
  }
  anchor_search(A, B, tol,
                [&](const Isometry& iso, const Point& p1,
                    const DistanceIndex& index, std::size_t) {
                  std::vector<std::vector<std::size_t>> hits;
                  if (!image_contained(A, B, iso, p1, index, tol, &hits)) {
                    return false;
                  }
                  if (!perfect_matching(hits, B.size())) return false;
                  if (!verify_witness(A, B, iso, tol)) return false;
                  v.yes = true;
                  v.witness = iso;
                  v.detail = "bijective witness found by anchor-pair search";
                  return true;
                });
  if (!v.yes) {
    v.certificate = Certificate::search_exhausted;
    v.detail = "no bijective witness among anchor-pair candidates";
  }
  return v;
}

LambdaVerdict lambda_compare(const FiniteFigure& A, const FiniteFigure& B,
                             Tolerance tol, const SearchConfig& cfg) {
  LambdaVerdict lv;
  ComparisonVerdict eq = equal_finite(A, B, tol, cfg);
  if (eq.yes) {
    lv.relation = LambdaRelation::equal;
    lv.witness = eq.witness;
    lv.detail = "geometrically equal";
    return lv;
  }
  ComparisonVerdict ab = leq_finite(A, B, tol, cfg);
  ComparisonVerdict ba = leq_finite(B, A, tol, cfg);
  if (ab.yes && !ba.yes) {
    lv.relation = LambdaRelation::strictly_less;
    lv.witness = ab.witness;
    lv.detail = "A embeds into B; B does not embed into A";
  } else if (ba.yes && !ab.yes) {
    lv.relation = LambdaRelation::strictly_greater;
    lv.witness = ba.witness;
    lv.detail = "B embeds into A; A does not embed into B";
  } else {
    lv.relation = LambdaRelation::incomparable;
    lv.detail = ab.yes ? "both embeddings hold but the figures are not equal"
                       : "neither figure embeds into the other";
  }
  return lv;
}

std::vector<Isometry> find_embeddings(const FiniteFigure& A,
                                      const FiniteFigure& B, Tolerance tol,
                                      std::size_t limit,
                                      const SearchConfig& cfg) {
  check_inputs(A, B, tol, cfg);
  std::vector<Isometry> out;
  if (A.size() == 0) {
    out.push_back(Isometry::identity(A.geometry));
    return out;
  }
  if (A.size() == 1) {
    for (const Point& b : B.points) {
      if (out.size() >= limit) break;
      out.push_back(point_to_point(A.points[0], b));
    }
    return out;
  }
  auto same_action = [&](const Isometry& f, const Isometry& g) {
    for (const Point& a : A.points) {
      if (dist(apply(f, a), apply(g, a)) > 1e-9) return false;
    }
    return true;
  };
  anchor_search(A, B, tol,
                [&](const Isometry& iso, const Point& p1,
                    const DistanceIndex& index, std::size_t) {
                  if (!image_contained(A, B, iso, p1, index, tol, nullptr)) {
                    return false;
                  }
                  if (!verify_witness(A, B, iso, tol)) return false;
                  for (const Isometry& seen : out) {
                    if (same_action(iso, seen)) return false;
                  }
                  out.push_back(iso);
                  return out.size() >= limit;
                });
  return out;
}

StronglyGoodReport strongly_good_finite(const FiniteFigure& A, Tolerance tol) {
  StronglyGoodReport r;
  r.value = true;
  r.explanation =
      "an injective self-map of a finite set into itself is onto "
      "(cardinality argument)";
  std::vector<Isometry> embeddings = find_embeddings(A, A, tol, 64);
  r.self_embeddings_found = embeddings.size();
  for (const Isometry& f : embeddings) {
    // The image must be all of A: check the reverse containment too.
    FiniteFigure img = image(A, f);
    bool onto = true;
    for (const Point& a : A.points) {
      if (!contains(img, a, tol)) {
        onto = false;
        break;
      }
    }
    if (!onto) {
      r.all_fix_figure = false;
      break;
    }
  }
  return r;
}

}  // namespace figcmp
