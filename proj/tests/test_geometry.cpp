#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace figcmp;
using namespace figcmp::test;

TEST_CASE("euclidean distance: 3-4-5 triangle") {
  CHECK(dist(Point::euclidean(0, 0), Point::euclidean(3, 4)) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("disc metric at the origin equals 2 arctanh") {
  double d = dist(Point::disc(0, 0), Point::disc(0.5, 0));
  CHECK(std::abs(d - kLn3) <= 1e-12);
}

TEST_CASE("elliptic distance of north pole and equator point") {
  Point n = Point::elliptic(0, 0, 1);
  Point e = Point::elliptic(1, 0, 0);
  CHECK(dist(n, e) == doctest::Approx(M_PI / 2).epsilon(1e-14));
}

TEST_CASE("model mismatch raises") {
  CHECK_THROWS_AS(dist(Point::euclidean(0, 0), Point::disc(0, 0)),
                  model_mismatch_error);
}

TEST_CASE("half plane to disc: i -> 0 and 2i -> 1/3") {
  Point h0 = half_plane_to_disc(Point::half_plane(0, 1));
  CHECK(std::abs(h0.x) <= 1e-15);
  CHECK(std::abs(h0.y) <= 1e-15);
  Point h1 = half_plane_to_disc(Point::half_plane(0, 2));
  CHECK(h1.x == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(h1.y) <= 1e-15);
}

TEST_CASE("half plane to disc is an isometry under the factor-2 convention") {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Point z1 = random_point(Geometry::HyperbolicHalfPlane);
    Point z2 = random_point(Geometry::HyperbolicHalfPlane);
    double dh = dist(z1, z2);
    double dd = dist(half_plane_to_disc(z1), half_plane_to_disc(z2));
    worst = std::max(worst, std::abs(dh - dd));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("without the factor 2 the model map is measurably not an isometry") {
  // The bare arctanh half-plane distance differs from the disc metric by a
  // factor of two.
  auto d_h_bare = [](const Point& p, const Point& q) {
    std::complex<double> z1 = p.to_complex(), z2 = q.to_complex();
    double t = std::abs(z2 - z1) / std::abs(std::conj(z2) - z1);
    return artanh_guarded(t);
  };
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Point z1 = random_point(Geometry::HyperbolicHalfPlane);
    Point z2 = random_point(Geometry::HyperbolicHalfPlane);
    double dd = dist(half_plane_to_disc(z1), half_plane_to_disc(z2));
    worst = std::max(worst, std::abs(d_h_bare(z1, z2) - dd));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("elliptic canonicalization") {
  Point p = elliptic_canonicalize(0, 0, -1);
  CHECK(p.z == doctest::Approx(1.0));
  Point q = elliptic_canonicalize(-1, 0, 0);
  CHECK(q.x == doctest::Approx(1.0));
  Point r = elliptic_canonicalize(0.6, 0, -0.8);
  CHECK(r.x == doctest::Approx(-0.6).epsilon(1e-14));
  CHECK(r.z == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z) == doctest::Approx(1.0));
  CHECK_THROWS_AS(elliptic_canonicalize(1e-12, 0, 0), degenerate_input_error);
}

TEST_CASE("elliptic distance is representative independent") {
  for (int i = 0; i < 200; ++i) {
    Point v = random_point(Geometry::Elliptic);
    Point w = random_point(Geometry::Elliptic);
    Point v_anti = elliptic_canonicalize(-v.x, -v.y, -v.z);
    CHECK(dist(v, w) == dist(v_anti, w));  // canonical forms are identical
  }
}

TEST_CASE("metric axioms hold in all four models") {
  for (Geometry g : {Geometry::Euclidean, Geometry::HyperbolicDisc,
                     Geometry::HyperbolicHalfPlane, Geometry::Elliptic}) {
    CAPTURE(to_string(g));
    for (int i = 0; i < 300; ++i) {
      Point a = random_point(g), b = random_point(g), c = random_point(g);
      double dab = dist(a, b), dba = dist(b, a);
      CHECK(std::abs(dab - dba) <= 1e-9);
      CHECK(dist(a, a) <= 1e-12);
      CHECK(dab + dist(b, c) >= dist(a, c) - 1e-9);
      CHECK(dab >= 0.0);
    }
  }
}

TEST_CASE("euclidean and disc metrics agree on convergence inside radius 0.9") {
  // spot check of metric equivalence: a sequence converges hyperbolically
  // iff it converges euclideanly.
  Point limit = Point::disc(0.4, -0.3);
  for (int k = 1; k <= 12; ++k) {
    double step = std::pow(0.5, k);
    Point zk = Point::disc(0.4 + step * 0.6, -0.3 + step * 0.2);
    double rho = std::hypot(zk.x - limit.x, zk.y - limit.y);
    double dp = dist(zk, limit);
    CHECK(dp <= 10.0 * rho);   // comparable on the compact part
    CHECK(rho <= 10.0 * dp);
  }
}

TEST_CASE("arctanh guard near the boundary") {
  CHECK(std::isinf(artanh_guarded(1.0)));
  CHECK(std::isinf(artanh_guarded(1.0 - 1e-16)));
  CHECK(artanh_guarded(0.5) == doctest::Approx(0.5 * std::log(3.0)));
}

TEST_CASE("point constructors validate the model membership") {
  CHECK_THROWS_AS(Point::disc(1.0, 0.2), degenerate_input_error);
  CHECK_THROWS_AS(Point::half_plane(0.0, 0.0), degenerate_input_error);
  CHECK_THROWS_AS(Point::elliptic(0.5, 0.5, 0.5), degenerate_input_error);
}
