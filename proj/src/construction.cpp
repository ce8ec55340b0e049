#include "uncrossed/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uncrossed/bounds.hpp"
#include "uncrossed/embedding.hpp"
#include "uncrossed/error.hpp"

namespace uncrossed {

XChoice choose_x(const Rational& epsilon, int n) {
  if (epsilon <= 0) throw NotApplicable("epsilon must be > 0");
  if (n < 4) throw NotApplicable("n must be >= 4");
  if (epsilon * n < 3) throw NotApplicable("n < 3/epsilon");
  if (epsilon > Rational(n - 1, 2 * static_cast<std::int64_t>(n))) {
    throw NotApplicable("epsilon > (n-1)/(2n)");
  }
  const Rational target = epsilon * n * n;  // εn²
  XChoice out;
  out.x0 = 2.5 + std::sqrt(6.25 + 2.0 * (to_double(target) - 3.0 * (n - 1)));

  // m(x) = 3n-3 + x(x-5)/2 is increasing for x >= 3, so the first x reaching
  // the target is ceil(x0).
  auto edges = [&](std::int64_t x) { return Rational(6 * (n - 1) + x * (x - 5), 2); };
  std::int64_t x = std::max<std::int64_t>(3, static_cast<std::int64_t>(std::floor(out.x0)) - 1);
  while (edges(x) < target) ++x;
  while (x > 3 && edges(x - 1) >= target) --x;
  if (x > n - 1) throw Error("choose_x: x exceeds n-1 despite the density gate");
  out.x = static_cast<int>(x);
  return out;
}

namespace {

// Inserts `w` right after `after` in the cyclic order `cyc`.
void insert_after(std::vector<Vertex>& cyc, Vertex after, Vertex w) {
  auto it = std::find(cyc.begin(), cyc.end(), after);
  cyc.insert(it + 1, w);
}

RotationSystem rotation_of(int n, const std::vector<std::vector<Vertex>>& order) {
  return RotationSystem::from_orders(n, order);
}

// Index of the rim face: length x, vertices exactly {1..x}.
int outer_face_index(const FaceSet& faces, int x) {
  for (int i = 0; i < faces.size(); ++i) {
    const auto& vs = faces[i].vertices;
    if (faces[i].length() == x && static_cast<int>(vs.size()) == x && vs.front() == 1 &&
        vs.back() == x) {
      return i;
    }
  }
  throw ConstructionIntegrityError("rim face not found in the wheel embedding");
}

}  // namespace

ConstructionRecord build_construction(int x, int n) {
  if (x < 3 || x > n - 1) {
    throw InvalidParameter("build_construction: requires 3 <= x <= n-1 (x=" + std::to_string(x) +
                           ", n=" + std::to_string(n) + ")");
  }
  ConstructionRecord rec;
  rec.n = n;
  rec.x = x;

  // Wheel W_{x+1}: hub 0 sees the rim in order, rim vertex i sees
  // (i+1, hub, i-1).
  std::vector<std::vector<Vertex>> order(n);
  auto next = [&](int i) { return i == x ? 1 : i + 1; };
  auto prev = [&](int i) { return i == 1 ? x : i - 1; };
  for (int i = 1; i <= x; ++i) {
    order[0].push_back(i);
    order[i] = {next(i), 0, prev(i)};
  }

  // Stacked vertices on the still-empty ids x+1..n-1; vertices not yet
  // inserted have empty orders and stay out of the face trace.
  for (Vertex w = x + 1; w < n; ++w) {
    std::vector<std::vector<Vertex>> partial(order.begin(), order.begin() + w);
    const FaceSet faces = trace_faces(rotation_of(w, partial));
    const int outer = outer_face_index(faces, x);
    int best = -1;
    std::array<Vertex, 3> best_key{};
    for (int i = 0; i < faces.size(); ++i) {
      if (i == outer || faces[i].length() != 3) continue;
      std::array<Vertex, 3> key{faces[i].vertices[0], faces[i].vertices[1], faces[i].vertices[2]};
      if (best < 0 || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    if (best < 0) throw ConstructionIntegrityError("no interior triangle to stack into");
    // Walk p->q->r->p: w goes after p at q, after q at r, after r at p, and
    // sees (p, r, q) itself, which splits the face into three triangles.
    const auto& walk = faces[best].walk;
    const Vertex p = walk[0].from;
    const Vertex q = walk[1].from;
    const Vertex r = walk[2].from;
    insert_after(order[q], p, w);
    insert_after(order[r], q, w);
    insert_after(order[p], r, w);
    order[w] = {p, r, q};
    rec.hosts.push_back(best_key);
  }

  RotationSystem rotation = rotation_of(n, order);
  std::vector<Edge> uncrossed(rotation.graph().edges().begin(), rotation.graph().edges().end());
  for (int i = 1; i <= x; ++i) {
    for (int j = i + 2; j <= x; ++j) {
      if (i == 1 && j == x) continue;
      rec.crossed_edges.push_back({i, j});
    }
  }
  std::vector<Edge> all = uncrossed;
  all.insert(all.end(), rec.crossed_edges.begin(), rec.crossed_edges.end());
  rec.graph = Graph(n, std::move(all));

  const FaceSet faces = trace_faces(rotation);
  const int outer = outer_face_index(faces, x);
  rec.certificate = SubdrawingCertificate{rec.graph, uncrossed, rotation, {}};
  for (const auto& e : rec.crossed_edges) rec.certificate.face_assignment.emplace(e, outer);

  rec.stats.m = rec.graph.m();
  rec.stats.m_prime = static_cast<int>(uncrossed.size());
  rec.stats.f = faces.size();
  rec.stats.t = 0;
  for (int i = 0; i < faces.size(); ++i) {
    if (i != outer && faces[i].length() == 3) ++rec.stats.t;
  }
  rec.stats.density = Rational(rec.stats.m, static_cast<std::int64_t>(n) * n);

  const int expected_m = 3 * n - 3 + x * (x - 5) / 2;
  if (rec.stats.m != expected_m || rec.stats.m_prime != 3 * n - 3 - x ||
      rec.stats.t != 2 * n - 2 - x || rec.stats.f != rec.stats.t + 1 ||
      static_cast<int>(rec.crossed_edges.size()) != x * (x - 3) / 2) {
    throw ConstructionIntegrityError("construction counts disagree with the closed forms");
  }
  rec.coordinates = layout_coordinates(rec);
  return rec;
}

ConstructionRecord build_construction(const Rational& epsilon, int n) {
  const XChoice choice = choose_x(epsilon, n);
  ConstructionRecord rec = build_construction(choice.x, n);
  rec.epsilon_target = epsilon;
  rec.x0 = choice.x0;
  return rec;
}

TightnessReport check_tightness(const ConstructionRecord& rec) {
  if (!rec.epsilon_target) throw InvalidParameter("check_tightness: record has no target epsilon");
  const int n = rec.n;
  const int x = rec.x;
  const Rational eps = *rec.epsilon_target;
  auto fail = [](const std::string& what) { throw ConstructionIntegrityError(what); };

  if (rec.graph.n() != n) fail("vertex count differs from n");
  if (rec.stats.m != rec.graph.m()) fail("recorded m differs from the graph");
  if (rec.stats.m_prime != static_cast<int>(rec.certificate.uncrossed.size())) {
    fail("recorded m' differs from the certificate");
  }
  if (rec.stats.m != 3 * n - 3 + x * (x - 5) / 2) fail("m != 3n-3+x(x-5)/2");
  if (rec.stats.m_prime != 3 * n - 3 - x) fail("m' != 3n-3-x");
  if (rec.stats.t != 2 * n - 2 - x) fail("t != 2n-2-x");
  if (rec.stats.f != rec.stats.t + 1) fail("f != t+1");
  if (static_cast<int>(rec.crossed_edges.size()) != x * (x - 3) / 2) fail("chord count != x(x-3)/2");
  if (!(rec.certificate.graph == rec.graph) || !verify_certificate(rec.certificate)) {
    fail("certificate does not verify");
  }

  const auto m = static_cast<std::int64_t>(rec.stats.m);
  TightnessReport rep;
  rep.lower = static_cast<double>(3 * n - 3) - std::sqrt(2.0 * static_cast<double>(m));
  rep.upper = h_upper(n, m);
  rep.gap = rep.upper - rep.lower;
  rep.gap_witness = rep.upper - rec.stats.m_prime;
  rep.gap_limit = std::sqrt(6.0 * (n - 2)) - 3.0;
  rep.density = Rational(m, static_cast<std::int64_t>(n) * n);
  rep.density_ceiling = eps + Rational(1, n) + Rational(1, 2 * static_cast<std::int64_t>(n) * n);

  if (std::sqrt(2.0 * static_cast<double>(m)) < x - 1e-9) fail("sqrt(2m) < x");
  if (rec.stats.m_prime < rep.lower - 1e-9) fail("property 1: m' < 3n-3-sqrt(2m)");
  if (rep.density < eps) fail("property 2: m/n^2 < epsilon");
  if (rep.density > rep.density_ceiling) fail("property 2: m/n^2 > epsilon + 1/n + 1/(2n^2)");
  if (rec.stats.m_prime > rep.upper + 1e-9) fail("m' exceeds h_upper(n, m)");
  if (rep.gap > rep.gap_limit + 1e-9) fail("bound gap exceeds sqrt(6(n-2)) - 3");
  return rep;
}

std::vector<Point> layout_coordinates(const ConstructionRecord& rec) {
  std::vector<Point> pts(rec.n, Point::Zero());
  for (int i = 1; i <= rec.x; ++i) {
    const double angle = 2.0 * std::numbers::pi * (i - 1) / rec.x;
    pts[i] = Point(std::cos(angle), std::sin(angle));
  }
  for (std::size_t i = 0; i < rec.hosts.size(); ++i) {
    const auto& tri = rec.hosts[i];
    pts[rec.x + 1 + i] = (pts[tri[0]] + pts[tri[1]] + pts[tri[2]]) / 3.0;
  }
  return pts;
}

}  // namespace uncrossed
