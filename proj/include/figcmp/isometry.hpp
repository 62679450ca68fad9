#pragma once

#include <array>
#include <complex>
#include <variant>
#include <vector>

#include "figcmp/geometry.hpp"

namespace figcmp {

/// Rigid motion of the Euclidean plane: p |-> R(angle) * (reflect ? mirror(p) : p) + t,
/// mirror being (x, -y).
struct EuclideanIsometry {
  double angle = 0.0;
  bool reflect = false;
  Vec2 translation{0.0, 0.0};
};

/// Isometry of the Poincare disc.  Direct maps act as
///   z |-> (a z + b) / (conj(b) z + conj(a)),   a conj(a) - b conj(b) = 1,
/// orientation-reversing maps pre-conjugate the argument (z |-> direct(conj(z))).
struct MobiusIsometry {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};
  bool conjugate = false;
};

/// Isometry of the half-plane model: a real Moebius map
///   z |-> (a z + b) / (c z + d),   ad - bc = 1,
/// applied to -conj(z) instead of z when reflect is set.
struct HalfPlaneIsometry {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  bool reflect = false;
};

/// Isometry of the elliptic plane: an orthogonal 3x3 matrix acting on
/// hemisphere representatives, followed by canonicalization.  M and -M act
/// identically on identified points.
struct EllipticIsometry {
  // Row-major.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

/// Isometry of the real line: x |-> (negate ? -x : x) + c.
struct Isometry1D {
  bool negate = false;
  double c = 0.0;
};

enum class Isometry1DForm { identity, negation, negation_plus_c, translation_c };

class Isometry {
 public:
  Isometry() : rep_(EuclideanIsometry{}) {}
  explicit Isometry(EuclideanIsometry e) : rep_(e) {}
  explicit Isometry(MobiusIsometry m) : rep_(normalize(m)) {}
  explicit Isometry(HalfPlaneIsometry h) : rep_(normalize(h)) {}
  explicit Isometry(EllipticIsometry e) : rep_(e) {}

  Geometry geometry() const;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(rep_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(rep_);
  }

  static Isometry identity(Geometry g);
  static Isometry euclidean_translation(Vec2 t);
  static Isometry euclidean_rotation(double angle, Vec2 center = {0.0, 0.0});
  static Isometry euclidean_reflection_x_axis();
  /// Rotation of the disc about 0 by `angle`: z |-> e^{i angle} z.
  static Isometry disc_rotation(double angle);
  /// Disc translation z |-> (z - w)/(1 - conj(w) z), sending w to 0.
  static Isometry disc_translation_to_origin(std::complex<double> w);
  /// Half-plane translation z |-> z + c, real c.
  static Isometry half_plane_translation(double c);
  /// Rotation about the z axis by `angle`, as an elliptic isometry.
  static Isometry elliptic_z_rotation(double angle);

 private:
  static MobiusIsometry normalize(MobiusIsometry m);
  static HalfPlaneIsometry normalize(HalfPlaneIsometry h);

  std::variant<EuclideanIsometry, MobiusIsometry, HalfPlaneIsometry,
               EllipticIsometry>
      rep_;
};

Point apply(const Isometry& f, const Point& p);
Isometry compose(const Isometry& f, const Isometry& g);  // f after g
Isometry inverse(const Isometry& f);
bool is_identity(const Isometry& f, double eps = 1e-12);

/// The unique Euclidean isometry of the requested chirality with
/// p1 -> q1, p2 -> q2.  Requires dist(p1,p2) == dist(q1,q2) within tol.
Isometry euclid_from_pairs(const Point& p1, const Point& p2, const Point& q1,
                           const Point& q2, bool reflect, double tol);

/// Same for the disc model, built from disc translations and a rotation.
Isometry hyperbolic_from_pairs(const Point& p1, const Point& p2,
                               const Point& q1, const Point& q2, bool reflect,
                               double tol);

/// Orthogonal maps sending the identified points [p1] -> [q1], [p2] -> [q2]
/// with the requested chirality: one candidate per lifted-sign choice that
/// matches the frame angle, up to four.  Built by frame alignment.
std::vector<Isometry> elliptic_from_frames(const Point& p1, const Point& p2,
                                           const Point& q1, const Point& q2,
                                           bool reflect, double tol);

/// Builds a disc isometry from an arbitrary 2x2 complex matrix that
/// represents one (e.g. a conjugated half-plane map).  Throws
/// no_isometry_error if the matrix is not of the disc-preserving form.
Isometry mobius_from_matrix(std::complex<double> m00, std::complex<double> m01,
                            std::complex<double> m10, std::complex<double> m11,
                            bool conjugate = false);

/// Conjugation by the model map h(z) = (z-i)/(z+i): turns a half-plane
/// isometry into the disc isometry h.f.h^-1, and back.
Isometry disc_from_half_plane(const Isometry& f);
Isometry half_plane_from_disc(const Isometry& f);

double apply_1d(const Isometry1D& f, double x);
Isometry1D compose_1d(const Isometry1D& f, const Isometry1D& g);
Isometry1D inverse_1d(const Isometry1D& f);
Isometry1DForm classify_1d(const Isometry1D& f);
std::string to_string(Isometry1DForm form);

}  // namespace figcmp
