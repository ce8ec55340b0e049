#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uncrossed/graph.hpp"

namespace uncrossed {

// Outcome of evaluating one bound for one input. `value` is present iff the
// bound's hypotheses hold; otherwise `reason` says which one failed.
struct BoundReport {
  std::string name;
  std::optional<double> value;
  bool integral = false;  // ceiled lower bounds on unc and exact integer formulas
  std::string reason;
  std::map<std::string, double> params;

  bool applicable() const noexcept { return value.has_value(); }
};

// Face counts s_3 .. s_{k-1} of a plane embedding, truncated at k.
struct FaceCounts {
  int k = 3;
  std::vector<std::int64_t> s;  // s[i] is the count of faces of length 3 + i

  std::int64_t at(int length) const {
    const int i = length - 3;
    return i >= 0 && i < static_cast<int>(s.size()) ? s[i] : 0;
  }
};

// Truncates a full length -> count map to s_3 .. s_{k-1}.
FaceCounts truncate_profile(const std::map<int, std::int64_t>& s, int k);

// ---- lower bounds on unc ------------------------------------------------

// ceil(m / ((3n-5 + sqrt((3n-5)^2 - 4m)) / 2)); NotApplicable when the
// discriminant is negative.
std::int64_t unc_lower_old(std::int64_t n, std::int64_t m);
// ceil(m / (3n-6 - sqrt(2m) + sqrt(6(n-2)))).
std::int64_t unc_lower_new(std::int64_t n, std::int64_t m);
// ceil(m / h); InvalidParameter when h <= 0.
std::int64_t unc_from_h(std::int64_t m, double h);

// ---- upper bounds on h ---------------------------------------------------

double h_upper(std::int64_t n, std::int64_t m);

// Triangle-free variants. A triangle-free graph has m <= n^2/4, so larger m
// is rejected as NotApplicable.
double h_upper_triangle_free(std::int64_t n, std::int64_t m);
std::int64_t unc_lower_triangle_free(std::int64_t n, std::int64_t m);
// Graph wrappers: NotApplicable on a graph with a triangle, UnsupportedInput
// on a disconnected one.
double h_upper_triangle_free(const Graph& g);
std::int64_t unc_lower_triangle_free(const Graph& g);

// (k/(k-2)) n - 2k/(k-2) + Σ_{ℓ=3}^{k-1} ((k-ℓ)/(k-2)) s_ℓ.
double simple_bound(std::int64_t n, const FaceCounts& fc);

struct ComplexBound {
  double delta = 0.0;
  double b_minus = 0.0;  // NaN when infeasible
  double b_plus = 0.0;   // NaN when infeasible
  bool feasible = false; // delta >= 0
};

// Both roots of the quadratic constraint on the uncrossed edge count given
// the truncated face counts. Which root constrains what is left to the
// caller.
ComplexBound complex_bound(std::int64_t n, std::int64_t m, const FaceCounts& fc);

// 3n-6 for k = 3; for k >= 4 and m > (k-1)(n-2):
// 3n-7+3/k - (k-3) sqrt(2(m-(n-2)(k-1))/(k(k-3)) + 1/k^2).
double combined_bound(std::int64_t n, std::int64_t m, int k);
// Minimum of combined_bound over every valid k; params carry "k".
BoundReport best_combined_bound(std::int64_t n, std::int64_t m);

// 3n-6-(1-alpha) sqrt(2m), valid for m >= (3n-6)/alpha^2. The raw formula is
// returned even for alpha >= 1, where it is weaker than 3n-6.
double alpha_bound(std::int64_t n, std::int64_t m, double alpha);
// k = ceil(3/alpha) used by the underlying combined bound.
int alpha_k(double alpha);
// Report form: clamps to 3n-6 when alpha >= 1 and records k.
BoundReport alpha_bound_report(std::int64_t n, std::int64_t m, double alpha);

// ---- exact values for complete families -----------------------------------

std::int64_t exact_h_complete(std::int64_t n);                          // n >= 4
std::int64_t exact_h_complete_bipartite(std::int64_t a, std::int64_t b); // 3 <= min(a,b)
std::int64_t exact_unc_complete(std::int64_t n);                         // n > 7

// ---- report helpers ----------------------------------------------------------

BoundReport report_unc_lower_old(std::int64_t n, std::int64_t m);
BoundReport report_unc_lower_new(std::int64_t n, std::int64_t m);
BoundReport report_h_upper(std::int64_t n, std::int64_t m);
BoundReport report_h_upper_triangle_free(const Graph& g);
BoundReport report_unc_lower_triangle_free(const Graph& g);
BoundReport report_exact_h_complete(std::int64_t n);
BoundReport report_exact_h_complete_bipartite(std::int64_t a, std::int64_t b);
BoundReport report_exact_unc_complete(std::int64_t n);

// Throws UnsupportedInput unless g is connected with n >= 3.
void require_bound_input(const Graph& g);

}  // namespace uncrossed
