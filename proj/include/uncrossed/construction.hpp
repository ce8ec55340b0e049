#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "uncrossed/graph.hpp"
#include "uncrossed/numeric.hpp"
#include "uncrossed/oracle.hpp"

namespace uncrossed {

using Point = Eigen::Vector2d;

struct XChoice {
  int x = 0;
  double x0 = 0.0;  // real root of 3n-3 + x(x-5)/2 = εn²
};

// x = ceil(x0), computed exactly: the smallest integer x with
// 3n-3 + x(x-5)/2 >= εn². Throws NotApplicable naming the violated gate
// (ε > 0, n >= 3/ε, ε <= (n-1)/(2n)).
XChoice choose_x(const Rational& epsilon, int n);

struct ConstructionStats {
  int m = 0;
  int m_prime = 0;  // uncrossed edges
  int t = 0;        // interior triangles of the uncrossed part
  int f = 0;        // faces of the uncrossed part, outer face included
  Rational density; // m / n²
};

// The dense graph G_{x,n}: a wheel on hub 0 and rim 1..x, vertices
// x+1..n-1 stacked into interior triangles, plus every rim chord drawn
// crossed in the outer face.
struct ConstructionRecord {
  std::optional<Rational> epsilon_target;
  int n = 0;
  int x = 0;
  std::optional<double> x0;
  Graph graph;
  SubdrawingCertificate certificate;
  std::vector<Edge> crossed_edges;
  // Host triangle (sorted corners) of stacked vertex x+1+i.
  std::vector<std::array<Vertex, 3>> hosts;
  std::vector<Point> coordinates;
  ConstructionStats stats;
};

// Throws InvalidParameter unless 3 <= x <= n-1. Stacking always uses the
// interior triangle with the lexicographically smallest corner triple.
ConstructionRecord build_construction(int x, int n);
// choose_x followed by build_construction, recording ε and x0.
ConstructionRecord build_construction(const Rational& epsilon, int n);

struct TightnessReport {
  double lower = 0.0;        // 3n-3-sqrt(2m)
  double upper = 0.0;        // h_upper(n, m)
  double gap = 0.0;          // upper - lower
  double gap_witness = 0.0;  // upper - m'
  double gap_limit = 0.0;    // sqrt(6(n-2)) - 3
  Rational density;
  Rational density_ceiling;  // ε + 1/n + 1/(2n²)
};

// Recomputes every identity from the graph and certificate and checks the
// two tightness properties (density window in exact arithmetic). Throws
// ConstructionIntegrityError on the first violation, InvalidParameter if the
// record carries no target ε.
TightnessReport check_tightness(const ConstructionRecord& rec);

// Hub at the origin, rim on the unit circle, stacked vertices at the
// centroid of their host triangle.
std::vector<Point> layout_coordinates(const ConstructionRecord& rec);

}  // namespace uncrossed
