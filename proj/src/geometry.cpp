#include "figcmp/geometry.hpp"

#include <algorithm>
#include <limits>

namespace figcmp {

namespace {
constexpr double kConstructEps = 1e-12;
}

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Euclidean: return "euclidean";
    case Geometry::HyperbolicDisc: return "hyperbolic_disc";
    case Geometry::HyperbolicHalfPlane: return "hyperbolic_half_plane";
    case Geometry::Elliptic: return "elliptic";
  }
  return "?";
}

Vec2 normalized(Vec2 a) {
  double n = norm(a);
  if (n < 1e-15) throw degenerate_input_error("cannot normalize near-zero vector");
  return {a.x / n, a.y / n};
}

void require_same_geometry(Geometry a, Geometry b, const char* what) {
  if (a != b) {
    throw model_mismatch_error(std::string(what) + ": " + to_string(a) +
                               " vs " + to_string(b));
  }
}

Point Point::euclidean(double x, double y) {
  return Point{Geometry::Euclidean, x, y, 0.0};
}

Point Point::disc(double re, double im) {
  if (re * re + im * im >= 1.0) {
    throw degenerate_input_error("disc point must satisfy |z| < 1");
  }
  return Point{Geometry::HyperbolicDisc, re, im, 0.0};
}

Point Point::half_plane(double re, double im) {
  if (!(im > 0.0)) {
    throw degenerate_input_error("half-plane point must satisfy Im(z) > 0");
  }
  return Point{Geometry::HyperbolicHalfPlane, re, im, 0.0};
}

Point elliptic_canonicalize(double x, double y, double z) {
  double n = std::sqrt(x * x + y * y + z * z);
  if (n < 1e-9) throw degenerate_input_error("elliptic point from near-zero vector");
  if (std::abs(n - 1.0) > 4e-16) {  // keep canonicalization exactly idempotent
    x /= n;
    y /= n;
    z /= n;
  }
  if (z < 0.0) {
    x = -x;
    y = -y;
    z = -z;
  }
  // Equator identification: pick the representative with x > 0, or x = 0
  // and y > 0.
  if (std::abs(z) <= kConstructEps) {
    z = 0.0;
    double m = std::hypot(x, y);
    x /= m;
    y /= m;
    if (x < 0.0 || (x == 0.0 && y < 0.0)) {
      x = -x;
      y = -y;
    }
    if (std::abs(x) <= kConstructEps && y < 0.0) {
      x = 0.0;
      y = -y;
    }
  }
  return Point{Geometry::Elliptic, x, y, z};
}

Point Point::elliptic(double x, double y, double z) {
  double n = std::sqrt(x * x + y * y + z * z);
  if (std::abs(n - 1.0) > 1e-9) {
    throw degenerate_input_error("elliptic point must be a unit vector");
  }
  return elliptic_canonicalize(x, y, z);
}

double artanh_guarded(double t) {
  if (t >= 1.0 - 1e-15) return std::numeric_limits<double>::infinity();
  return 0.5 * std::log((1.0 + t) / (1.0 - t));
}

double dist(const Point& p, const Point& q) {
  require_same_geometry(p.geometry, q.geometry, "dist");
  switch (p.geometry) {
    case Geometry::Euclidean:
      return std::hypot(q.x - p.x, q.y - p.y);
    case Geometry::HyperbolicDisc: {
      std::complex<double> z1 = p.to_complex(), z2 = q.to_complex();
      double t = std::abs(z2 - z1) / std::abs(1.0 - std::conj(z1) * z2);
      return 2.0 * artanh_guarded(t);
    }
    case Geometry::HyperbolicHalfPlane: {
      std::complex<double> z1 = p.to_complex(), z2 = q.to_complex();
      double t = std::abs(z2 - z1) / std::abs(std::conj(z2) - z1);
      return 2.0 * artanh_guarded(t);
    }
    case Geometry::Elliptic: {
      // arccos|a.b| in the numerically stable atan2 form: exact at zero
      // distance, well conditioned for nearby points.
      double d = p.x * q.x + p.y * q.y + p.z * q.z;
      double cx = p.y * q.z - p.z * q.y;
      double cy = p.z * q.x - p.x * q.z;
      double cz = p.x * q.y - p.y * q.x;
      double s = std::sqrt(cx * cx + cy * cy + cz * cz);
      return std::atan2(s, std::abs(d));
    }
  }
  throw geom_error("dist: bad geometry tag");
}

Point half_plane_to_disc(const Point& p) {
  require_same_geometry(p.geometry, Geometry::HyperbolicHalfPlane,
                        "half_plane_to_disc");
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> z = p.to_complex();
  std::complex<double> w = (z - i) / (z + i);
  return Point::disc(w);
}

bool same_point(const Point& p, const Point& q, double eps) {
  return dist(p, q) <= eps;
}

}  // namespace figcmp
