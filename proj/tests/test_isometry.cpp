#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace figcmp;
using namespace figcmp::test;

namespace {
const Geometry kAll[] = {Geometry::Euclidean, Geometry::HyperbolicDisc,
                         Geometry::HyperbolicHalfPlane, Geometry::Elliptic};
}

TEST_CASE("euclidean translation acts as expected") {
  Isometry f = Isometry::euclidean_translation({1, 0});
  Point q = apply(f, Point::euclidean(0, 0));
  CHECK(q.x == doctest::Approx(1.0));
  CHECK(q.y == doctest::Approx(0.0));
}

TEST_CASE("moebius rotation doubles the parameter angle") {
  // a = e^{i w}, b = 0 acts as z -> e^{2iw} z.
  double w = 0.7;
  Isometry f = Isometry(MobiusIsometry{std::polar(1.0, w), 0.0, false});
  Point p = Point::disc(0.3, 0.1);
  Point q = apply(f, p);
  std::complex<double> expect = std::polar(1.0, 2.0 * w) * p.to_complex();
  CHECK(std::abs(q.to_complex() - expect) <= 1e-14);
}

TEST_CASE("elliptic z rotation advances the example orbit by two") {
  OrbitFigure orbit;
  orbit.geometry = Geometry::Elliptic;
  orbit.radius_param = 0.5;
  Isometry T = Isometry::elliptic_z_rotation(2.0 * kOmega);
  for (long k = 0; k < 8; ++k) {
    Point ak = orbit.point_at(k);
    Point expect = orbit.point_at(k + 2);
    CHECK(dist(apply(T, ak), expect) <= 1e-9);
  }
}

TEST_CASE("distance preservation across all isometry types") {
  for (Geometry g : kAll) {
    CAPTURE(to_string(g));
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      Isometry f = random_isometry(g);
      Point p = random_point(g), q = random_point(g);
      worst = std::max(worst, std::abs(dist(apply(f, p), apply(f, q)) - dist(p, q)));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("group laws: identity, inverse round trip, associativity") {
  for (Geometry g : kAll) {
    CAPTURE(to_string(g));
    for (int i = 0; i < 100; ++i) {
      Isometry f = random_isometry(g);
      Isometry gg = random_isometry(g);
      Isometry h = random_isometry(g);
      Point p = random_point(g);

      CHECK(dist(apply(compose(f, Isometry::identity(g)), p), apply(f, p)) <= 1e-12);
      CHECK(dist(apply(compose(f, inverse(f)), p), p) <= 1e-9);
      CHECK(dist(apply(inverse(f), apply(f, p)), p) <= 1e-9);

      Point lhs = apply(compose(compose(f, gg), h), p);
      Point rhs = apply(compose(f, compose(gg, h)), p);
      CHECK(dist(lhs, rhs) <= 1e-9);

      CHECK(dist(apply(compose(f, gg), p), apply(f, apply(gg, p))) <= 1e-9);
    }
  }
}

TEST_CASE("two euclidean rotations about the origin compose by angle addition") {
  Isometry r1 = Isometry::euclidean_rotation(0.4);
  Isometry r2 = Isometry::euclidean_rotation(1.1);
  Isometry c = compose(r1, r2);
  const auto& e = c.as<EuclideanIsometry>();
  CHECK(e.angle == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(!e.reflect);
  CHECK(norm(e.translation) <= 1e-15);
}

TEST_CASE("moebius composition matches pointwise action and stays normalized") {
  for (int i = 0; i < 100; ++i) {
    Isometry f = random_isometry(Geometry::HyperbolicDisc);
    Isometry g = random_isometry(Geometry::HyperbolicDisc);
    Isometry c = compose(f, g);
    const auto& m = c.as<MobiusIsometry>();
    CHECK(std::abs(std::norm(m.a) - std::norm(m.b) - 1.0) <= 1e-12);
    Point p = random_point(Geometry::HyperbolicDisc);
    CHECK(dist(apply(c, p), apply(f, apply(g, p))) <= 1e-12);
  }
}

TEST_CASE("inverse of a direct moebius map is (conj a, -b)") {
  MobiusIsometry m{std::polar(1.0, 0.3) * 1.2, std::complex<double>(0.4, -0.2), false};
  Isometry f{m};
  Isometry fi = inverse(f);
  const auto& n = fi.as<MobiusIsometry>();
  const auto& mm = f.as<MobiusIsometry>();
  CHECK(std::abs(n.a - std::conj(mm.a)) <= 1e-12);
  CHECK(std::abs(n.b + mm.b) <= 1e-12);
}

TEST_CASE("inverse of a translation is the opposite translation") {
  Isometry f = Isometry::euclidean_translation({3, 0});
  Isometry fi = inverse(f);
  const auto& e = fi.as<EuclideanIsometry>();
  CHECK(e.translation.x == doctest::Approx(-3.0));
  CHECK(e.translation.y == doctest::Approx(0.0));
}

TEST_CASE("euclid_from_pairs: rotation and translation cases") {
  Isometry rot = euclid_from_pairs(Point::euclidean(0, 0), Point::euclidean(1, 0),
                                   Point::euclidean(0, 0), Point::euclidean(0, 1),
                                   false, 1e-9);
  const auto& e = rot.as<EuclideanIsometry>();
  CHECK(e.angle == doctest::Approx(M_PI / 2));
  CHECK(norm(e.translation) <= 1e-12);

  Isometry tr = euclid_from_pairs(Point::euclidean(0, 0), Point::euclidean(1, 0),
                                  Point::euclidean(5, 0), Point::euclidean(6, 0),
                                  false, 1e-9);
  const auto& t = tr.as<EuclideanIsometry>();
  CHECK(std::abs(t.angle) <= 1e-12);
  CHECK(t.translation.x == doctest::Approx(5.0));
}

TEST_CASE("from_pairs anchors map exactly, both chiralities, all models") {
  for (Geometry g : {Geometry::Euclidean, Geometry::HyperbolicDisc}) {
    CAPTURE(to_string(g));
    for (int i = 0; i < 200; ++i) {
      Point p1 = random_point(g), p2 = random_point(g);
      if (dist(p1, p2) < 1e-3) continue;
      Isometry f = random_isometry(g);
      Point q1 = apply(f, p1), q2 = apply(f, p2);
      for (bool reflect : {false, true}) {
        Isometry c = g == Geometry::Euclidean
                         ? euclid_from_pairs(p1, p2, q1, q2, reflect, 1e-9)
                         : hyperbolic_from_pairs(p1, p2, q1, q2, reflect, 1e-9);
        CHECK(dist(apply(c, p1), q1) <= 1e-12);
        CHECK(dist(apply(c, p2), q2) <= 1e-10);
      }
    }
  }
}

TEST_CASE("from_pairs rejects mismatched distances and coincident anchors") {
  CHECK_THROWS_AS(euclid_from_pairs(Point::euclidean(0, 0), Point::euclidean(1, 0),
                                    Point::euclidean(0, 0), Point::euclidean(3, 0),
                                    false, 1e-9),
                  no_isometry_error);
  CHECK_THROWS_AS(euclid_from_pairs(Point::euclidean(0, 0), Point::euclidean(0, 0),
                                    Point::euclidean(1, 1), Point::euclidean(1, 1),
                                    false, 1e-9),
                  degenerate_input_error);
}

TEST_CASE("chirality flips the signed area of a test triangle") {
  Point p1 = Point::euclidean(0, 0), p2 = Point::euclidean(2, 1);
  Point q1 = Point::euclidean(3, -1), q2 = Point::euclidean(1, -2);
  Point probe = Point::euclidean(0.5, 1.5);
  auto signed_area = [](const Point& a, const Point& b, const Point& c) {
    return cross(b.xy() - a.xy(), c.xy() - a.xy());
  };
  double base = signed_area(p1, p2, probe);
  for (bool reflect : {false, true}) {
    Isometry f = euclid_from_pairs(p1, p2, q1, q2, reflect, 1e-9);
    double img = signed_area(apply(f, p1), apply(f, p2), apply(f, probe));
    if (reflect) {
      CHECK(img == doctest::Approx(-base));
    } else {
      CHECK(img == doctest::Approx(base));
    }
  }
}

TEST_CASE("hyperbolic_from_pairs: rotation case and reflect case") {
  Point p1 = Point::disc(0, 0), p2 = Point::disc(0.5, 0);
  Point q1 = Point::disc(0, 0), q2 = Point::disc(0, 0.5);
  Isometry f = hyperbolic_from_pairs(p1, p2, q1, q2, false, 1e-9);
  Point probe = Point::disc(0.2, 0.1);
  std::complex<double> expect = std::complex<double>(0, 1) * probe.to_complex();
  CHECK(std::abs(apply(f, probe).to_complex() - expect) <= 1e-12);

  // The reflected construction maps a third point to the mirrored position
  // of the direct construction.
  Isometry fr = hyperbolic_from_pairs(p1, p2, q1, q2, true, 1e-9);
  Point direct_img = apply(f, probe);
  Point mirror_img = apply(fr, probe);
  // Mirroring across the geodesic through q1=0 and q2 (the imaginary axis):
  // z -> -conj(z).
  std::complex<double> mirrored = -std::conj(direct_img.to_complex());
  CHECK(std::abs(mirror_img.to_complex() - mirrored) <= 1e-12);
}

TEST_CASE("elliptic_from_frames candidates are orthogonal and map anchors") {
  int produced = 0;
  for (int i = 0; i < 200; ++i) {
    Point p1 = random_point(Geometry::Elliptic), p2 = random_point(Geometry::Elliptic);
    if (dist(p1, p2) < 1e-3) continue;
    Isometry f = random_isometry(Geometry::Elliptic);
    Point q1 = apply(f, p1), q2 = apply(f, p2);
    for (bool reflect : {false, true}) {
      auto cands = elliptic_from_frames(p1, p2, q1, q2, reflect, 1e-9);
      CHECK(!cands.empty());
      for (const Isometry& c : cands) {
        ++produced;
        const auto& m = c.as<EllipticIsometry>().m;
        for (int r = 0; r < 3; ++r) {
          for (int s = 0; s < 3; ++s) {
            double dotv = m[3 * r] * m[3 * s] + m[3 * r + 1] * m[3 * s + 1] +
                          m[3 * r + 2] * m[3 * s + 2];
            CHECK(std::abs(dotv - (r == s ? 1.0 : 0.0)) <= 1e-12);
          }
        }
        CHECK(dist(apply(c, p1), q1) <= 1e-9);
        CHECK(dist(apply(c, p2), q2) <= 1e-9);
      }
    }
  }
  CHECK(produced > 0);
}

TEST_CASE("elliptic identity request includes the identity") {
  Point p1 = Point::elliptic(1, 0, 0), p2 = Point::elliptic(0.5, 0, std::sqrt(3) / 2);
  auto cands = elliptic_from_frames(p1, p2, p1, p2, false, 1e-9);
  bool has_identity = false;
  for (const Isometry& c : cands) {
    if (is_identity(c, 1e-9)) has_identity = true;
  }
  CHECK(has_identity);
}

TEST_CASE("the z-axis rotation pair construction recovers the 2w rotation") {
  OrbitFigure orbit;
  orbit.geometry = Geometry::Elliptic;
  orbit.radius_param = 0.5;
  Point a0 = orbit.point_at(0), a1 = orbit.point_at(1);
  Point a2 = orbit.point_at(2), a3 = orbit.point_at(3);
  auto cands = elliptic_from_frames(a0, a1, a2, a3, false, 1e-9);
  Isometry T = Isometry::elliptic_z_rotation(2.0 * kOmega);
  bool found = false;
  for (const Isometry& c : cands) {
    bool same = true;
    for (long k = 0; k < 6; ++k) {
      if (dist(apply(c, orbit.point_at(k)), apply(T, orbit.point_at(k))) > 1e-9) {
        same = false;
      }
    }
    if (same) found = true;
  }
  CHECK(found);
}

TEST_CASE("mobius_from_matrix recovers the transported half-plane translation") {
  // h . (z - 3) . h^-1 has normalized parameters a = (-2 + 3i)/2, b = -3i/2.
  Isometry gD = disc_from_half_plane(Isometry::half_plane_translation(-3.0));
  const auto& m = gD.as<MobiusIsometry>();
  std::complex<double> ea(-1.0, 1.5), eb(0.0, -1.5);
  bool matches = (std::abs(m.a - ea) <= 1e-12 && std::abs(m.b - eb) <= 1e-12) ||
                 (std::abs(m.a + ea) <= 1e-12 && std::abs(m.b + eb) <= 1e-12);
  CHECK(matches);
  // Pointwise: g_D(h(z)) == h(z - 3).
  for (int i = 0; i < 50; ++i) {
    Point z = random_point(Geometry::HyperbolicHalfPlane);
    Point lhs = apply(gD, half_plane_to_disc(z));
    Point rhs = half_plane_to_disc(Point::half_plane(z.x - 3.0, z.y));
    CHECK(dist(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("half-plane/disc transport round trips") {
  for (int i = 0; i < 100; ++i) {
    Isometry f = random_isometry(Geometry::HyperbolicHalfPlane);
    Isometry fd = disc_from_half_plane(f);
    Isometry back = half_plane_from_disc(fd);
    Point p = random_point(Geometry::HyperbolicHalfPlane);
    CHECK(dist(apply(back, p), apply(f, p)) <= 1e-9);
    CHECK(dist(apply(fd, half_plane_to_disc(p)), half_plane_to_disc(apply(f, p))) <= 1e-9);
  }
}

TEST_CASE("1d isometry classification") {
  CHECK(classify_1d({false, 0.0}) == Isometry1DForm::identity);
  CHECK(classify_1d({true, 0.0}) == Isometry1DForm::negation);
  CHECK(classify_1d({true, 2.0}) == Isometry1DForm::negation_plus_c);
  CHECK(classify_1d({false, 1.0}) == Isometry1DForm::translation_c);

  // f(x) = -x + 2 squares to the identity.
  Isometry1D f{true, 2.0};
  CHECK(classify_1d(compose_1d(f, f)) == Isometry1DForm::identity);
  CHECK(apply_1d(f, 0.5) == doctest::Approx(1.5));

  // orbit of 0 under x + 1 is strictly monotone.
  Isometry1D t{false, 1.0};
  double x = 0.0;
  for (int i = 0; i < 10; ++i) {
    double next = apply_1d(t, x);
    CHECK(next > x);
    x = next;
  }
  CHECK(apply_1d(inverse_1d(t), 1.0) == doctest::Approx(0.0));
}

TEST_CASE("1d appendix lemma shape: the half line translate drops the origin") {
  // A = [0, inf), f(x) = x + 1: f(A) = [1, inf) is inside A minus a
  // neighborhood of 0; the translation-form case of the lemma.
  Isometry1D f{false, 1.0};
  CHECK(classify_1d(f) == Isometry1DForm::translation_c);
  auto in_A = [](double v) { return v >= 0.0; };
  for (double v : {0.0, 0.25, 1.0, 7.5}) {
    CHECK(in_A(apply_1d(f, v)));
  }
  CHECK(apply_1d(f, 0.0) == doctest::Approx(1.0));  // 0 is no longer attained
}
