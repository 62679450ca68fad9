#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace figcmp {

/// The four plane models the library works in.
enum class Geometry {
  Euclidean,
  HyperbolicDisc,
  HyperbolicHalfPlane,
  Elliptic,
};

std::string to_string(Geometry g);

struct geom_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct model_mismatch_error : geom_error {
  using geom_error::geom_error;
};
struct degenerate_input_error : geom_error {
  using geom_error::geom_error;
};
struct no_isometry_error : geom_error {
  using geom_error::geom_error;
};
struct unsupported_image_error : geom_error {
  using geom_error::geom_error;
};
struct size_cap_error : geom_error {
  using geom_error::geom_error;
};
struct unknown_entry_error : geom_error {
  using geom_error::geom_error;
};

/// Absolute tolerance, in the units of the ambient metric.
struct Tolerance {
  double eps = 1e-9;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
Vec2 normalized(Vec2 a);
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// A point of one of the four models. Euclidean and the two hyperbolic
/// models use (x, y); the elliptic model uses the unit vector (x, y, z)
/// with z >= 0, stored in canonical form (equator antipodes identified,
/// tie broken toward x > 0, then y > 0).
struct Point {
  Geometry geometry = Geometry::Euclidean;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Point euclidean(double x, double y);
  static Point euclidean(Vec2 v) { return euclidean(v.x, v.y); }
  static Point disc(double re, double im);
  static Point disc(std::complex<double> z) { return disc(z.real(), z.imag()); }
  static Point half_plane(double re, double im);
  static Point half_plane(std::complex<double> z) {
    return half_plane(z.real(), z.imag());
  }
  static Point elliptic(double x, double y, double z);

  std::complex<double> to_complex() const { return {x, y}; }
  Vec2 xy() const { return {x, y}; }
};

/// Renormalizes v to the canonical upper-hemisphere representative.
/// Throws degenerate_input_error for near-zero vectors.
Point elliptic_canonicalize(double x, double y, double z);

/// Model metric. Euclidean distance, the hyperbolic metrics with the
/// factor-2 convention (so the half-plane -> disc map is an isometry),
/// and the elliptic metric arccos|a.b|.
double dist(const Point& p, const Point& q);

/// The model isomorphism h(z) = (z - i)/(z + i) from the half plane
/// onto the disc.
Point half_plane_to_disc(const Point& p);

/// 0.5*ln((1+t)/(1-t)); returns +infinity for t >= 1 - 1e-15.
double artanh_guarded(double t);

/// dist(p, q) <= eps, model-aware (elliptic points compare as identified
/// points because dist already does).
bool same_point(const Point& p, const Point& q, double eps);

void require_same_geometry(Geometry a, Geometry b, const char* what);

}  // namespace figcmp
