#include <doctest.h>

#include <cmath>
#include <random>

#include "uncrossed/bounds.hpp"
#include "uncrossed/error.hpp"

using namespace uncrossed;
using doctest::Approx;

TEST_CASE("lower bounds on unc at small inputs") {
  CHECK(unc_lower_old(8, 28) == 2);
  CHECK(unc_lower_new(8, 28) == 2);
  CHECK(unc_lower_old(5, 0) == 0);
  CHECK(unc_lower_new(10, 9) == 1);
  CHECK(unc_lower_old(100, 4950) <= 25);
  CHECK(unc_lower_new(100, 4950) <= 25);
  CHECK_THROWS_AS(unc_lower_old(3, 5), NotApplicable);
}

TEST_CASE("unc_from_h") {
  CHECK(unc_from_h(10, 8) == 2);
  CHECK(unc_from_h(12, 12) == 1);
  CHECK(unc_from_h(28, 14) == 2);
  CHECK_THROWS_AS(unc_from_h(10, 0), InvalidParameter);
}

TEST_CASE("h_upper") {
  for (int n = 3; n < 200; n += 7) CHECK(h_upper(n, 3 * n - 6) == Approx(3 * n - 6).epsilon(1e-12));
  CHECK(h_upper(8, 28) == Approx(16.5167).epsilon(1e-4));
  CHECK(h_upper(20, 120) == Approx(48.9004).epsilon(1e-5));
}

TEST_CASE("triangle-free variants") {
  CHECK(h_upper_triangle_free(make_complete_bipartite(3, 3)) == Approx(9.0410).epsilon(1e-4));
  CHECK_THROWS_AS(h_upper_triangle_free(make_complete(3)), NotApplicable);
  CHECK(unc_lower_triangle_free(make_complete_bipartite(1, 9)) == 1);
  CHECK_THROWS_AS(h_upper_triangle_free(6, 10), NotApplicable);
  CHECK_THROWS_AS(h_upper_triangle_free(Graph(4, {{0, 1}, {2, 3}})), UnsupportedInput);
}

TEST_CASE("simple bound") {
  CHECK(simple_bound(9, FaceCounts{3, {}}) == Approx(21));
  CHECK(simple_bound(6, FaceCounts{4, {8}}) == Approx(12));
  CHECK(simple_bound(6, FaceCounts{4, {0}}) == Approx(8));
}

TEST_CASE("complex bound") {
  const ComplexBound a = complex_bound(8, 28, FaceCounts{3, {}});
  CHECK(a.delta == Approx(249));
  CHECK(a.b_plus == Approx((19 + std::sqrt(249.0)) / 2));
  CHECK(a.feasible);
  for (int n : {5, 12, 40}) {
    const ComplexBound b = complex_bound(n, 3 * n - 6, FaceCounts{3, {}});
    CHECK(b.delta == Approx((3.0 * n - 7) * (3.0 * n - 7)));
    CHECK(b.b_minus == Approx(1));
    CHECK(b.b_plus == Approx(3 * n - 6));
  }
  const ComplexBound c = complex_bound(20, 120, FaceCounts{4, {36}});
  CHECK(c.delta == Approx(-263));
  CHECK_FALSE(c.feasible);
  CHECK(std::isnan(c.b_minus));
  CHECK_THROWS_AS(complex_bound(2, 1, FaceCounts{3, {}}), InvalidParameter);
}

TEST_CASE("combined bound") {
  CHECK(combined_bound(20, 120, 3) == 54);
  CHECK(combined_bound(20, 120, 4) == Approx(48.0).epsilon(1e-12));
  CHECK(combined_bound(20, 120, 5) == Approx(47.3903).epsilon(1e-5));
  CHECK_THROWS_AS(combined_bound(20, 120, 8), NotApplicable);
  const BoundReport best = best_combined_bound(20, 120);
  CHECK(best.params.at("k") == 5);
  CHECK(*best.value <= h_upper(20, 120));
  CHECK(*best_combined_bound(10, 9).value == 24);
  const double k8 = *best_combined_bound(8, 28).value;
  CHECK(k8 <= 16.52);
  CHECK(k8 >= 14);
}

TEST_CASE("alpha bound") {
  CHECK(alpha_bound(20, 120, std::sqrt(0.45)) == Approx(h_upper(20, 120)).epsilon(1e-12));
  CHECK_THROWS_AS(alpha_bound(20, 120, 0.5), NotApplicable);
  const BoundReport r = alpha_bound_report(20, 20, 2.0);
  CHECK(*r.value == 54);
  CHECK(alpha_k(0.5) == 6);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = 4 + static_cast<std::int64_t>(rng() % 500);
    const std::int64_t m = n - 1 + static_cast<std::int64_t>(rng() % (n * (n - 1) / 2 - n + 2));
    const double a = std::sqrt(static_cast<double>(3 * n - 6) / static_cast<double>(m));
    CHECK(std::abs(alpha_bound(n, m, a) - h_upper(n, m)) <= 1e-9);
  }
}

TEST_CASE("exact formulas for complete families") {
  CHECK(exact_h_complete(5) == 8);
  CHECK(exact_h_complete(8) == 14);
  CHECK_THROWS_AS(exact_h_complete(3), NotApplicable);
  CHECK(exact_h_complete_bipartite(3, 3) == 7);
  CHECK(exact_h_complete_bipartite(4, 3) == 9);
  CHECK(exact_h_complete_bipartite(3, 6) == 12);
  CHECK_THROWS_AS(exact_h_complete_bipartite(2, 5), NotApplicable);
  CHECK(exact_unc_complete(9) == 2);
  CHECK(exact_unc_complete(100) == 25);
  CHECK_THROWS_AS(exact_unc_complete(7), NotApplicable);
  for (int n = 8; n <= 12; ++n) {
    const std::int64_t m = n * (n - 1) / 2;
    CHECK(unc_lower_old(n, m) <= exact_unc_complete(n));
    CHECK(unc_lower_new(n, m) <= exact_unc_complete(n));
  }
}

TEST_CASE("reports carry reasons instead of values when a gate fails") {
  const BoundReport r = report_exact_unc_complete(5);
  CHECK_FALSE(r.applicable());
  CHECK_FALSE(r.reason.empty());
  CHECK(report_unc_lower_new(8, 28).integral);
  CHECK_FALSE(report_h_upper(8, 28).integral);
}

TEST_CASE("truncated profiles") {
  const FaceCounts fc = truncate_profile({{3, 4}, {5, 2}, {7, 1}}, 6);
  CHECK(fc.s == std::vector<std::int64_t>{4, 0, 2});
  CHECK(fc.at(7) == 0);
}
