#include "uncrossed/bounds.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "uncrossed/error.hpp"

namespace uncrossed {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_n3(std::int64_t n, const char* who) {
  if (n < 3) throw InvalidParameter(std::string(who) + ": requires n >= 3");
}

void require_m(std::int64_t m, const char* who) {
  if (m < 0) throw InvalidParameter(std::string(who) + ": requires m >= 0");
}

double sqrt_i(std::int64_t v) { return std::sqrt(static_cast<double>(v)); }

BoundReport make_report(std::string name, std::map<std::string, double> params, bool integral,
                        const std::function<double()>& eval) {
  BoundReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.integral = integral;
  try {
    r.value = eval();
  } catch (const NotApplicable& e) {
    r.reason = e.what();
  }
  return r;
}

std::map<std::string, double> nm(std::int64_t n, std::int64_t m) {
  return {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}};
}

}  // namespace

FaceCounts truncate_profile(const std::map<int, std::int64_t>& s, int k) {
  if (k < 3) throw InvalidParameter("face counts need k >= 3");
  FaceCounts fc;
  fc.k = k;
  fc.s.assign(k - 3, 0);
  for (const auto& [len, count] : s) {
    if (len >= 3 && len < k) fc.s[len - 3] = count;
  }
  return fc;
}

std::int64_t unc_lower_old(std::int64_t n, std::int64_t m) {
  require_n3(n, "unc_lower_old");
  require_m(m, "unc_lower_old");
  const std::int64_t disc = (3 * n - 5) * (3 * n - 5) - 4 * m;
  if (disc < 0) throw NotApplicable("unc_lower_old: (3n-5)^2 - 4m < 0");
  const double denom = (static_cast<double>(3 * n - 5) + sqrt_i(disc)) / 2.0;
  return guarded_ceil(static_cast<double>(m) / denom);
}

std::int64_t unc_lower_new(std::int64_t n, std::int64_t m) {
  require_n3(n, "unc_lower_new");
  require_m(m, "unc_lower_new");
  const double denom = h_upper(n, m);
  if (denom <= 0.0) throw NotApplicable("unc_lower_new: denominator <= 0");
  return guarded_ceil(static_cast<double>(m) / denom);
}

std::int64_t unc_from_h(std::int64_t m, double h) {
  if (!(h > 0.0)) throw InvalidParameter("unc_from_h: h must be positive");
  require_m(m, "unc_from_h");
  return guarded_ceil(static_cast<double>(m) / h);
}

double h_upper(std::int64_t n, std::int64_t m) {
  require_n3(n, "h_upper");
  require_m(m, "h_upper");
  // Differences first, so m = 3n-6 cancels exactly.
  return static_cast<double>(3 * n - 6) + (sqrt_i(6 * (n - 2)) - sqrt_i(2 * m));
}

double h_upper_triangle_free(std::int64_t n, std::int64_t m) {
  require_n3(n, "h_upper_triangle_free");
  require_m(m, "h_upper_triangle_free");
  if (4 * m > n * n) {
    throw NotApplicable("triangle-free bound: m > n^2/4, so the graph must contain a triangle");
  }
  return static_cast<double>(2 * n - 4) - std::sqrt(static_cast<double>(m) / 2.0) +
         std::sqrt(2.5 * static_cast<double>(n - 2));
}

std::int64_t unc_lower_triangle_free(std::int64_t n, std::int64_t m) {
  const double denom = h_upper_triangle_free(n, m);
  if (denom <= 0.0) throw NotApplicable("unc_lower_triangle_free: denominator <= 0");
  return guarded_ceil(static_cast<double>(m) / denom);
}

void require_bound_input(const Graph& g) {
  if (g.n() < 3) throw UnsupportedInput("bounds need n >= 3");
  if (!is_connected(g)) throw UnsupportedInput("bounds need a connected graph");
}

double h_upper_triangle_free(const Graph& g) {
  require_bound_input(g);
  if (!is_triangle_free(g)) throw NotApplicable("triangle-free bound: graph contains a triangle");
  return h_upper_triangle_free(g.n(), g.m());
}

std::int64_t unc_lower_triangle_free(const Graph& g) {
  require_bound_input(g);
  if (!is_triangle_free(g)) throw NotApplicable("triangle-free bound: graph contains a triangle");
  return unc_lower_triangle_free(g.n(), g.m());
}

double simple_bound(std::int64_t n, const FaceCounts& fc) {
  const int k = fc.k;
  if (k < 3) throw InvalidParameter("simple_bound: k must be >= 3");
  if (static_cast<int>(fc.s.size()) > k - 3) {
    throw InvalidParameter("simple_bound: face counts beyond length k-1");
  }
  const double kd = k;
  double value = kd / (kd - 2) * static_cast<double>(n) - 2 * kd / (kd - 2);
  for (int len = 3; len < k; ++len) {
    value += (kd - len) / (kd - 2) * static_cast<double>(fc.at(len));
  }
  return value;
}

ComplexBound complex_bound(std::int64_t n, std::int64_t m, const FaceCounts& fc) {
  if (n < 3 || m < n - 1 || fc.k < 3) {
    throw InvalidParameter("complex_bound: requires n >= 3, m >= n-1, k >= 3");
  }
  if (static_cast<int>(fc.s.size()) > fc.k - 3) {
    throw InvalidParameter("complex_bound: face counts beyond length k-1");
  }
  std::int64_t weighted = 0;  // Σ (ℓ-2) s_ℓ
  std::int64_t pairs = 0;     // Σ (ℓ-2)(ℓ-3)/2 s_ℓ
  std::int64_t shift2 = 0;    // 2 Σ (3 - ℓ/2) s_ℓ
  for (int len = 3; len < fc.k; ++len) {
    const std::int64_t s = fc.at(len);
    weighted += (len - 2) * s;
    pairs += (len - 2) * (len - 3) / 2 * s;
    shift2 += (6 - len) * s;
  }
  // 4 Δ_k, exact in integers.
  const std::int64_t lead = 6 * n - 14 - 3 * weighted;
  const std::int64_t delta4 = lead * lead - 16 * (m - 3 * n + 6 - pairs);
  ComplexBound out;
  out.delta = static_cast<double>(delta4) / 4.0;
  out.feasible = delta4 >= 0;
  const double centre = static_cast<double>(3 * n - 5) + static_cast<double>(shift2) / 2.0;
  if (out.feasible) {
    const double root = std::sqrt(out.delta);
    out.b_minus = (centre - root) / 2.0;
    out.b_plus = (centre + root) / 2.0;
  } else {
    out.b_minus = kNaN;
    out.b_plus = kNaN;
  }
  return out;
}

double combined_bound(std::int64_t n, std::int64_t m, int k) {
  require_n3(n, "combined_bound");
  require_m(m, "combined_bound");
  if (k < 3) throw InvalidParameter("combined_bound: k must be >= 3");
  if (k == 3) return static_cast<double>(3 * n - 6);
  const std::int64_t excess = m - (n - 2) * (k - 1);
  if (excess <= 0) throw NotApplicable("combined_bound: requires m > (k-1)(n-2)");
  const double kd = k;
  const double radicand = 2.0 * static_cast<double>(excess) / (kd * (kd - 3)) + 1.0 / (kd * kd);
  return static_cast<double>(3 * n - 7) + 3.0 / kd - (kd - 3) * std::sqrt(radicand);
}

BoundReport best_combined_bound(std::int64_t n, std::int64_t m) {
  BoundReport r;
  r.name = "best_combined";
  r.params = nm(n, m);
  if (n < 3 || m < n - 1) {
    r.reason = "best_combined: requires n >= 3 and m >= n-1";
    return r;
  }
  int best_k = 3;
  double best = combined_bound(n, m, 3);
  for (int k = 4; m > (n - 2) * static_cast<std::int64_t>(k - 1); ++k) {
    const double v = combined_bound(n, m, k);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  r.value = best;
  r.params["k"] = best_k;
  return r;
}

int alpha_k(double alpha) {
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
  return static_cast<int>(guarded_ceil(3.0 / alpha));
}

double alpha_bound(std::int64_t n, std::int64_t m, double alpha) {
  require_n3(n, "alpha_bound");
  require_m(m, "alpha_bound");
  if (!(alpha > 0.0)) throw InvalidParameter("alpha_bound: alpha must be positive");
  const double threshold = static_cast<double>(3 * n - 6) / (alpha * alpha);
  // Relative slack so that alpha = sqrt((3n-6)/m) lands on m itself.
  if (static_cast<double>(m) < threshold * (1.0 - 1e-12)) {
    throw NotApplicable("alpha_bound: requires m >= (3n-6)/alpha^2");
  }
  return static_cast<double>(3 * n - 6) - (1.0 - alpha) * sqrt_i(2 * m);
}

BoundReport alpha_bound_report(std::int64_t n, std::int64_t m, double alpha) {
  auto params = nm(n, m);
  params["alpha"] = alpha;
  BoundReport r = make_report("alpha_bound", params, false, [&] {
    return std::min(alpha_bound(n, m, alpha), static_cast<double>(3 * n - 6));
  });
  if (r.applicable()) r.params["k"] = alpha_k(alpha);
  return r;
}

std::int64_t exact_h_complete(std::int64_t n) {
  if (n < 4) throw NotApplicable("exact_h_complete: formula stated for n >= 4");
  return 2 * n - 2;
}

std::int64_t exact_h_complete_bipartite(std::int64_t a, std::int64_t b) {
  if (a > b) std::swap(a, b);
  if (a < 3) {
    throw NotApplicable(
        "exact_h_complete_bipartite: the printed formula undercounts planar K_{a,b} with "
        "a < 3; refused");
  }
  if (a == b) return 2 * a + b - 2;
  if (b < 2 * a) return 2 * a + b - 1;
  return 2 * a + b;
}

std::int64_t exact_unc_complete(std::int64_t n) {
  if (n <= 7) throw NotApplicable("exact_unc_complete: formula stated for n > 7");
  return (n - 1 + 3) / 4;
}

BoundReport report_unc_lower_old(std::int64_t n, std::int64_t m) {
  return make_report("unc_lower_old", nm(n, m), true,
                     [&] { return static_cast<double>(unc_lower_old(n, m)); });
}

BoundReport report_unc_lower_new(std::int64_t n, std::int64_t m) {
  return make_report("unc_lower_new", nm(n, m), true,
                     [&] { return static_cast<double>(unc_lower_new(n, m)); });
}

BoundReport report_h_upper(std::int64_t n, std::int64_t m) {
  return make_report("h_upper", nm(n, m), false, [&] { return h_upper(n, m); });
}

BoundReport report_h_upper_triangle_free(const Graph& g) {
  return make_report("h_upper_triangle_free", nm(g.n(), g.m()), false,
                     [&] { return h_upper_triangle_free(g); });
}

BoundReport report_unc_lower_triangle_free(const Graph& g) {
  return make_report("unc_lower_triangle_free", nm(g.n(), g.m()), true,
                     [&] { return static_cast<double>(unc_lower_triangle_free(g)); });
}

BoundReport report_exact_h_complete(std::int64_t n) {
  return make_report("exact_h_complete", {{"n", static_cast<double>(n)}}, true,
                     [&] { return static_cast<double>(exact_h_complete(n)); });
}

BoundReport report_exact_h_complete_bipartite(std::int64_t a, std::int64_t b) {
  return make_report("exact_h_complete_bipartite",
                     {{"a", static_cast<double>(a)}, {"b", static_cast<double>(b)}}, true,
                     [&] { return static_cast<double>(exact_h_complete_bipartite(a, b)); });
}

BoundReport report_exact_unc_complete(std::int64_t n) {
  return make_report("exact_unc_complete", {{"n", static_cast<double>(n)}}, true,
                     [&] { return static_cast<double>(exact_unc_complete(n)); });
}

}  // namespace uncrossed
