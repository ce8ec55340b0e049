#include <doctest.h>

#include <cmath>

#include "uncrossed/bounds.hpp"
#include "uncrossed/construction.hpp"
#include "uncrossed/embedding.hpp"
#include "uncrossed/error.hpp"
#include "uncrossed/oracle.hpp"

using namespace uncrossed;
using doctest::Approx;

namespace {

// Barycentric coordinates all strictly positive.
bool strictly_inside(const Point& p, const Point& a, const Point& b, const Point& c) {
  auto cross = [](const Point& u, const Point& v, const Point& w) {
    return (v - u).x() * (w - u).y() - (v - u).y() * (w - u).x();
  };
  const double d1 = cross(a, b, p);
  const double d2 = cross(b, c, p);
  const double d3 = cross(c, a, p);
  return (d1 > 1e-12 && d2 > 1e-12 && d3 > 1e-12) || (d1 < -1e-12 && d2 < -1e-12 && d3 < -1e-12);
}

}  // namespace

TEST_CASE("choose_x") {
  const XChoice a = choose_x(Rational(3, 10), 20);
  CHECK(a.x == 14);
  CHECK(a.x0 == Approx(14.0));
  const XChoice b = choose_x(Rational(9, 20), 10);
  CHECK(b.x == 9);
  CHECK(b.x0 == Approx(9.0));
  CHECK_THROWS_AS(choose_x(Rational(3, 10), 9), NotApplicable);
  CHECK_THROWS_AS(choose_x(Rational(0), 20), NotApplicable);
  CHECK_THROWS_AS(choose_x(Rational(1, 2), 20), NotApplicable);
}

TEST_CASE("build_construction at the documented points") {
  const ConstructionRecord r = build_construction(14, 20);
  CHECK(r.stats.m == 120);
  CHECK(r.stats.m_prime == 43);
  CHECK(r.stats.t == 24);
  CHECK(r.stats.f == 25);

  const ConstructionRecord k4 = build_construction(3, 4);
  CHECK(k4.graph == make_complete(4));
  CHECK(k4.stats.m_prime == 6);
  CHECK(k4.crossed_edges.empty());

  const ConstructionRecord k10 = build_construction(9, 10);
  CHECK(k10.graph == make_complete(10));
  CHECK(k10.stats.m_prime == 18);

  CHECK_THROWS_AS(build_construction(2, 10), InvalidParameter);
  CHECK_THROWS_AS(build_construction(10, 10), InvalidParameter);
}

TEST_CASE("identities hold over every small (x, n)") {
  for (int n = 4; n <= 50; ++n) {
    for (int x = 3; x <= n - 1; ++x) {
      const ConstructionRecord r = build_construction(x, n);
      REQUIRE(r.graph.m() == 3 * n - 3 + x * (x - 5) / 2);
      REQUIRE(is_connected(r.graph));
      REQUIRE(verify_certificate(r.certificate));
      REQUIRE(r.stats.t == 2 * n - 2 - x);
      const FaceProfile p = face_profile(trace_faces(r.certificate.rotation));
      REQUIRE(p.euler_sum() == 2 * n - 4);
      REQUIRE(p.count(3) == r.stats.t + (x == 3 ? 1 : 0));
      REQUIRE(std::sqrt(2.0 * r.stats.m) >= x - 1e-9);
      if (x == n - 1) REQUIRE(r.graph == make_complete(n));
    }
  }
}

TEST_CASE("tightness checks and a tampered record") {
  ConstructionRecord r = build_construction(Rational(3, 10), 20);
  const TightnessReport rep = check_tightness(r);
  CHECK(rep.lower == Approx(57 - std::sqrt(240.0)));
  CHECK(rep.density == Rational(3, 10));
  CHECK(rep.upper == Approx(h_upper(20, 120)));

  const ConstructionRecord edge = build_construction(Rational(9, 20), 10);
  CHECK(check_tightness(edge).density == Rational(9, 20));

  r.stats.m_prime -= 1;
  CHECK_THROWS_AS(check_tightness(r), ConstructionIntegrityError);
  CHECK_THROWS_AS(check_tightness(build_construction(5, 10)), InvalidParameter);
}

TEST_CASE("density window over the sweep") {
  for (int num = 3; num <= 9; ++num) {
    const Rational eps(num, 20);
    for (int n : {20, 40, 80}) {
      const ConstructionRecord r = build_construction(eps, n);
      const Rational d(r.stats.m, static_cast<std::int64_t>(n) * n);
      CHECK(eps <= d);
      CHECK(d <= eps + Rational(1, n) + Rational(1, 2 * n * n));
      CHECK_NOTHROW(check_tightness(r));
    }
  }
}

TEST_CASE("layout") {
  const ConstructionRecord w = build_construction(4, 5);
  CHECK(w.coordinates[0].norm() == Approx(0.0));
  for (int i = 1; i <= 4; ++i) CHECK(w.coordinates[i].norm() == Approx(1.0));

  const ConstructionRecord r = build_construction(14, 20);
  REQUIRE(r.hosts.size() == 5);
  for (std::size_t i = 0; i < r.hosts.size(); ++i) {
    const auto& h = r.hosts[i];
    CHECK(strictly_inside(r.coordinates[15 + i], r.coordinates[h[0]], r.coordinates[h[1]],
                          r.coordinates[h[2]]));
  }
  CHECK(layout_coordinates(r) == r.coordinates);
}
