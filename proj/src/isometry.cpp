#include "figcmp/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace figcmp {

namespace {

using cplx = std::complex<double>;

Vec2 rotate(Vec2 v, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Vec2 linear_part(const EuclideanIsometry& e, Vec2 v) {
  if (e.reflect) v.y = -v.y;
  return rotate(v, e.angle);
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

cplx mobius_value(const MobiusIsometry& m, cplx z) {
  cplx w = m.conjugate ? std::conj(z) : z;
  return (m.a * w + m.b) / (std::conj(m.b) * w + std::conj(m.a));
}

// sigma(z) = -conj(z); sigma . M = sigma_conj(M) . sigma for real M.
HalfPlaneIsometry sigma_conj(const HalfPlaneIsometry& h) {
  return {h.a, -h.b, -h.c, h.d, h.reflect};
}

std::array<double, 3> mat_apply(const std::array<double, 9>& m, double x,
                                double y, double z) {
  return {m[0] * x + m[1] * y + m[2] * z, m[3] * x + m[4] * y + m[5] * z,
          m[6] * x + m[7] * y + m[8] * z};
}

std::array<double, 9> mat_mul(const std::array<double, 9>& a,
                              const std::array<double, 9>& b) {
  std::array<double, 9> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return r;
}

std::array<double, 9> mat_transpose(const std::array<double, 9>& m) {
  return {m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]};
}

struct Vec3 {
  double x, y, z;
};
Vec3 v3(const Point& p) { return {p.x, p.y, p.z}; }
double dot3(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross3(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm3(Vec3 a) { return std::sqrt(dot3(a, a)); }
Vec3 scale3(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
Vec3 sub3(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

}  // namespace

MobiusIsometry Isometry::normalize(MobiusIsometry m) {
  double det = std::norm(m.a) - std::norm(m.b);
  if (det <= 1e-300) {
    throw no_isometry_error("Moebius parameters do not preserve the disc");
  }
  double s = 1.0 / std::sqrt(det);
  m.a *= s;
  m.b *= s;
  return m;
}

HalfPlaneIsometry Isometry::normalize(HalfPlaneIsometry h) {
  double det = h.a * h.d - h.b * h.c;
  if (det <= 1e-300) {
    throw no_isometry_error("half-plane Moebius map must have positive determinant");
  }
  double s = 1.0 / std::sqrt(det);
  h.a *= s;
  h.b *= s;
  h.c *= s;
  h.d *= s;
  return h;
}

Geometry Isometry::geometry() const {
  if (is<EuclideanIsometry>()) return Geometry::Euclidean;
  if (is<MobiusIsometry>()) return Geometry::HyperbolicDisc;
  if (is<HalfPlaneIsometry>()) return Geometry::HyperbolicHalfPlane;
  return Geometry::Elliptic;
}

Isometry Isometry::identity(Geometry g) {
  switch (g) {
    case Geometry::Euclidean: return Isometry(EuclideanIsometry{});
    case Geometry::HyperbolicDisc: return Isometry(MobiusIsometry{});
    case Geometry::HyperbolicHalfPlane: return Isometry(HalfPlaneIsometry{});
    case Geometry::Elliptic: return Isometry(EllipticIsometry{});
  }
  throw geom_error("identity: bad geometry tag");
}

Isometry Isometry::euclidean_translation(Vec2 t) {
  return Isometry(EuclideanIsometry{0.0, false, t});
}

Isometry Isometry::euclidean_rotation(double angle, Vec2 center) {
  // p |-> R(p - c) + c
  Vec2 t = center - rotate(center, angle);
  return Isometry(EuclideanIsometry{wrap_angle(angle), false, t});
}

Isometry Isometry::euclidean_reflection_x_axis() {
  return Isometry(EuclideanIsometry{0.0, true, {0.0, 0.0}});
}

Isometry Isometry::disc_rotation(double angle) {
  cplx a = std::polar(1.0, angle / 2.0);
  return Isometry(MobiusIsometry{a, 0.0, false});
}

Isometry Isometry::disc_translation_to_origin(cplx w) {
  // z |-> (z - w)/(1 - conj(w) z); det = 1 - |w|^2 > 0 inside the disc.
  return Isometry(MobiusIsometry{1.0, -w, false});
}

Isometry Isometry::half_plane_translation(double c) {
  return Isometry(HalfPlaneIsometry{1.0, c, 0.0, 1.0, false});
}

Isometry Isometry::elliptic_z_rotation(double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return Isometry(EllipticIsometry{{c, -s, 0, s, c, 0, 0, 0, 1}});
}

Point apply(const Isometry& f, const Point& p) {
  require_same_geometry(f.geometry(), p.geometry, "apply");
  switch (p.geometry) {
    case Geometry::Euclidean: {
      const auto& e = f.as<EuclideanIsometry>();
      Vec2 v = linear_part(e, p.xy()) + e.translation;
      return Point::euclidean(v);
    }
    case Geometry::HyperbolicDisc:
      return Point::disc(mobius_value(f.as<MobiusIsometry>(), p.to_complex()));
    case Geometry::HyperbolicHalfPlane: {
      const auto& h = f.as<HalfPlaneIsometry>();
      cplx w = h.reflect ? -std::conj(p.to_complex()) : p.to_complex();
      return Point::half_plane((h.a * w + h.b) / (h.c * w + h.d));
    }
    case Geometry::Elliptic: {
      auto v = mat_apply(f.as<EllipticIsometry>().m, p.x, p.y, p.z);
      return elliptic_canonicalize(v[0], v[1], v[2]);
    }
  }
  throw geom_error("apply: bad geometry tag");
}

Isometry compose(const Isometry& f, const Isometry& g) {
  require_same_geometry(f.geometry(), g.geometry(), "compose");
  if (f.is<EuclideanIsometry>()) {
    const auto& a = f.as<EuclideanIsometry>();
    const auto& b = g.as<EuclideanIsometry>();
    EuclideanIsometry r;
    r.reflect = a.reflect != b.reflect;
    r.angle = wrap_angle(a.angle + (a.reflect ? -b.angle : b.angle));
    r.translation = linear_part(a, b.translation) + a.translation;
    return Isometry(r);
  }
  if (f.is<MobiusIsometry>()) {
    const auto& a = f.as<MobiusIsometry>();
    MobiusIsometry b = g.as<MobiusIsometry>();
    if (a.conjugate) {
      b.a = std::conj(b.a);
      b.b = std::conj(b.b);
    }
    MobiusIsometry r;
    r.a = a.a * b.a + a.b * std::conj(b.b);
    r.b = a.a * b.b + a.b * std::conj(b.a);
    r.conjugate = a.conjugate != b.conjugate;
    return Isometry(r);
  }
  if (f.is<HalfPlaneIsometry>()) {
    const auto& a = f.as<HalfPlaneIsometry>();
    HalfPlaneIsometry b = g.as<HalfPlaneIsometry>();
    bool reflect = a.reflect != b.reflect;
    if (a.reflect) b = sigma_conj(b);
    HalfPlaneIsometry r{a.a * b.a + a.b * b.c, a.a * b.b + a.b * b.d,
                        a.c * b.a + a.d * b.c, a.c * b.b + a.d * b.d, reflect};
    return Isometry(r);
  }
  EllipticIsometry r{
      mat_mul(f.as<EllipticIsometry>().m, g.as<EllipticIsometry>().m)};
  return Isometry(r);
}

Isometry inverse(const Isometry& f) {
  if (f.is<EuclideanIsometry>()) {
    const auto& e = f.as<EuclideanIsometry>();
    EuclideanIsometry r;
    r.reflect = e.reflect;
    r.angle = e.reflect ? e.angle : wrap_angle(-e.angle);
    r.translation = -linear_part(r, e.translation);
    return Isometry(r);
  }
  if (f.is<MobiusIsometry>()) {
    const auto& m = f.as<MobiusIsometry>();
    MobiusIsometry r;
    r.conjugate = m.conjugate;
    if (!m.conjugate) {
      r.a = std::conj(m.a);
      r.b = -m.b;
    } else {
      r.a = m.a;
      r.b = -std::conj(m.b);
    }
    return Isometry(r);
  }
  if (f.is<HalfPlaneIsometry>()) {
    const auto& h = f.as<HalfPlaneIsometry>();
    HalfPlaneIsometry inv{h.d, -h.b, -h.c, h.a, h.reflect};
    if (h.reflect) inv = sigma_conj(inv);
    return Isometry(inv);
  }
  EllipticIsometry r{mat_transpose(f.as<EllipticIsometry>().m)};
  return Isometry(r);
}

bool is_identity(const Isometry& f, double eps) {
  if (f.is<EuclideanIsometry>()) {
    const auto& e = f.as<EuclideanIsometry>();
    return !e.reflect && std::abs(wrap_angle(e.angle)) <= eps &&
           norm(e.translation) <= eps;
  }
  if (f.is<MobiusIsometry>()) {
    const auto& m = f.as<MobiusIsometry>();
    return !m.conjugate && std::abs(m.a.imag()) <= eps && std::abs(m.b) <= eps;
  }
  if (f.is<HalfPlaneIsometry>()) {
    const auto& h = f.as<HalfPlaneIsometry>();
    return !h.reflect && std::abs(h.b) <= eps && std::abs(h.c) <= eps &&
           std::abs(h.a - h.d) <= eps;
  }
  const auto& m = f.as<EllipticIsometry>().m;
  static const std::array<double, 9> ident{1, 0, 0, 0, 1, 0, 0, 0, 1};
  double dp = 0.0, dm = 0.0;
  for (int i = 0; i < 9; ++i) {
    dp = std::max(dp, std::abs(m[i] - ident[i]));
    dm = std::max(dm, std::abs(m[i] + ident[i]));
  }
  return dp <= eps || dm <= eps;  // -I acts as the identity on identified points
}

Isometry euclid_from_pairs(const Point& p1, const Point& p2, const Point& q1,
                           const Point& q2, bool reflect, double tol) {
  require_same_geometry(p1.geometry, Geometry::Euclidean, "euclid_from_pairs");
  double d1 = dist(p1, p2), d2 = dist(q1, q2);
  if (d1 <= 1e-15) throw degenerate_input_error("euclid_from_pairs: coincident anchors");
  if (std::abs(d1 - d2) > tol) {
    throw no_isometry_error("euclid_from_pairs: anchor distances differ");
  }
  double alpha = std::atan2(p2.y - p1.y, p2.x - p1.x);
  double beta = std::atan2(q2.y - q1.y, q2.x - q1.x);
  EuclideanIsometry e;
  e.reflect = reflect;
  e.angle = wrap_angle(reflect ? alpha + beta : beta - alpha);
  e.translation = q1.xy() - linear_part(e, p1.xy());
  return Isometry(e);
}

Isometry hyperbolic_from_pairs(const Point& p1, const Point& p2,
                               const Point& q1, const Point& q2, bool reflect,
                               double tol) {
  require_same_geometry(p1.geometry, Geometry::HyperbolicDisc,
                        "hyperbolic_from_pairs");
  double d1 = dist(p1, p2), d2 = dist(q1, q2);
  if (d1 <= 1e-15) throw degenerate_input_error("hyperbolic_from_pairs: coincident anchors");
  if (std::abs(d1 - d2) > tol) {
    throw no_isometry_error("hyperbolic_from_pairs: anchor distances differ");
  }
  Isometry t1 = Isometry::disc_translation_to_origin(p1.to_complex());
  Isometry t2 = Isometry::disc_translation_to_origin(q1.to_complex());
  cplx u = mobius_value(t1.as<MobiusIsometry>(), p2.to_complex());
  cplx v = mobius_value(t2.as<MobiusIsometry>(), q2.to_complex());
  Isometry middle = reflect
      ? compose(Isometry::disc_rotation(std::arg(v) + std::arg(u)),
                Isometry(MobiusIsometry{1.0, 0.0, true}))
      : Isometry::disc_rotation(std::arg(v) - std::arg(u));
  return compose(inverse(t2), compose(middle, t1));
}

std::vector<Isometry> elliptic_from_frames(const Point& p1, const Point& p2,
                                           const Point& q1, const Point& q2,
                                           bool reflect, double tol) {
  require_same_geometry(p1.geometry, Geometry::Elliptic, "elliptic_from_frames");
  double d1 = dist(p1, p2), d2 = dist(q1, q2);
  if (d1 <= 1e-12) throw degenerate_input_error("elliptic_from_frames: coincident anchors");
  if (std::abs(d1 - d2) > tol) {
    throw no_isometry_error("elliptic_from_frames: anchor distances differ");
  }
  Vec3 e1 = v3(p1);
  Vec3 raw = sub3(v3(p2), scale3(e1, dot3(v3(p2), e1)));
  double rn = norm3(raw);
  if (rn < 1e-12) throw degenerate_input_error("elliptic_from_frames: degenerate frame");
  Vec3 e2 = scale3(raw, 1.0 / rn);
  Vec3 e3 = cross3(e1, e2);

  double dotp = dot3(v3(p1), v3(p2));
  double dotq = dot3(v3(q1), v3(q2));
  double band = std::max(4.0 * tol, 1e-12);

  std::vector<Isometry> out;
  for (int s1 : {+1, -1}) {
    for (int s2 : {+1, -1}) {
      if (std::abs(dotp - s1 * s2 * dotq) > band) continue;
      Vec3 f1 = scale3(v3(q1), s1);
      Vec3 fraw = sub3(scale3(v3(q2), s2), scale3(f1, dot3(scale3(v3(q2), s2), f1)));
      double fn = norm3(fraw);
      if (fn < 1e-12) continue;
      Vec3 f2 = scale3(fraw, 1.0 / fn);
      Vec3 f3 = cross3(f1, f2);
      if (reflect) f3 = scale3(f3, -1.0);
      // M = F E^T maps e_i to f_i.
      std::array<double, 9> F{f1.x, f2.x, f3.x, f1.y, f2.y,
                              f3.y, f1.z, f2.z, f3.z};
      std::array<double, 9> E{e1.x, e2.x, e3.x, e1.y, e2.y,
                              e3.y, e1.z, e2.z, e3.z};
      out.push_back(Isometry(EllipticIsometry{mat_mul(F, mat_transpose(E))}));
    }
  }
  return out;
}

Isometry mobius_from_matrix(cplx m00, cplx m01, cplx m10, cplx m11,
                            bool conjugate) {
  double scale = std::max({std::abs(m00), std::abs(m01), std::abs(m10),
                           std::abs(m11)});
  if (scale < 1e-300) throw no_isometry_error("mobius_from_matrix: zero matrix");
  // Find a unimodular factor turning the matrix into [[a, b], [conj b, conj a]].
  cplx ratio;
  if (std::abs(m11) >= std::abs(m10)) {
    ratio = std::conj(m00) / m11;
  } else {
    ratio = std::conj(m01) / m10;
  }
  if (std::abs(std::abs(ratio) - 1.0) > 1e-6) {
    throw no_isometry_error("mobius_from_matrix: matrix is not disc-preserving");
  }
  cplx mu = std::polar(1.0, std::arg(ratio) / 2.0);
  cplx a = mu * m00, b = mu * m01, c = mu * m10, d = mu * m11;
  double err = std::max(std::abs(std::conj(a) - d), std::abs(std::conj(b) - c));
  if (err > 1e-9 * scale) {
    throw no_isometry_error("mobius_from_matrix: matrix is not disc-preserving");
  }
  return Isometry(MobiusIsometry{a, b, conjugate});
}

namespace {

struct Mat2c {
  cplx m00, m01, m10, m11;
};

Mat2c mul(const Mat2c& a, const Mat2c& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

const Mat2c kH{1.0, cplx(0.0, -1.0), 1.0, cplx(0.0, 1.0)};
// Inverse of kH up to scale.
const Mat2c kHinv{cplx(0.0, 1.0), cplx(0.0, 1.0), -1.0, 1.0};

}  // namespace

Isometry disc_from_half_plane(const Isometry& f) {
  const auto& h = f.as<HalfPlaneIsometry>();
  Mat2c m{h.a, h.b, h.c, h.d};
  Mat2c r = mul(mul(kH, m), kHinv);
  // sigma on H corresponds to plain conjugation on D under h.
  return mobius_from_matrix(r.m00, r.m01, r.m10, r.m11, h.reflect);
}

Isometry half_plane_from_disc(const Isometry& f) {
  const auto& m = f.as<MobiusIsometry>();
  Mat2c d{m.a, m.b, std::conj(m.b), std::conj(m.a)};
  Mat2c r = mul(mul(kHinv, d), kH);
  double scale = std::max({std::abs(r.m00), std::abs(r.m01), std::abs(r.m10),
                           std::abs(r.m11)});
  // A disc isometry conjugated back to H has a real matrix up to phase.
  cplx big = r.m00;
  for (cplx e : {r.m01, r.m10, r.m11}) {
    if (std::abs(e) > std::abs(big)) big = e;
  }
  cplx mu = std::conj(big) / std::abs(big);
  cplx a = mu * r.m00, b = mu * r.m01, c = mu * r.m10, dd = mu * r.m11;
  double imag_err = std::max({std::abs(a.imag()), std::abs(b.imag()),
                              std::abs(c.imag()), std::abs(dd.imag())});
  if (imag_err > 1e-9 * scale) {
    throw no_isometry_error("half_plane_from_disc: conjugate is not a real Moebius map");
  }
  return Isometry(HalfPlaneIsometry{a.real(), b.real(), c.real(), dd.real(),
                                    m.conjugate});
}

double apply_1d(const Isometry1D& f, double x) {
  return (f.negate ? -x : x) + f.c;
}

Isometry1D compose_1d(const Isometry1D& f, const Isometry1D& g) {
  // f(g(x)) = s_f (s_g x + c_g) + c_f
  Isometry1D r;
  r.negate = f.negate != g.negate;
  r.c = (f.negate ? -g.c : g.c) + f.c;
  return r;
}

Isometry1D inverse_1d(const Isometry1D& f) {
  return f.negate ? Isometry1D{true, f.c} : Isometry1D{false, -f.c};
}

Isometry1DForm classify_1d(const Isometry1D& f) {
  if (f.negate) {
    return f.c == 0.0 ? Isometry1DForm::negation : Isometry1DForm::negation_plus_c;
  }
  return f.c == 0.0 ? Isometry1DForm::identity : Isometry1DForm::translation_c;
}

std::string to_string(Isometry1DForm form) {
  switch (form) {
    case Isometry1DForm::identity: return "identity";
    case Isometry1DForm::negation: return "negation";
    case Isometry1DForm::negation_plus_c: return "negation_plus_c";
    case Isometry1DForm::translation_c: return "translation_c";
  }
  return "?";
}

}  // namespace figcmp
