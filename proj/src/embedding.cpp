#include "uncrossed/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "uncrossed/error.hpp"

namespace uncrossed {
namespace {

void rotate_to_pinned(std::vector<Vertex>& cyc) {
  if (cyc.empty()) return;
  auto smallest = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), smallest, cyc.end());
}

}  // namespace

RotationSystem::RotationSystem(Graph g, std::vector<std::vector<Vertex>> order)
    : graph_(std::move(g)), order_(std::move(order)) {
  if (static_cast<int>(order_.size()) != graph_.n()) {
    throw InvalidParameter("rotation system has " + std::to_string(order_.size()) +
                           " vertex orders for n=" + std::to_string(graph_.n()));
  }
  for (int v = 0; v < graph_.n(); ++v) {
    auto sorted = order_[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw InvalidParameter("order at vertex " + std::to_string(v) +
                             " is not a permutation of its neighbours");
    }
    rotate_to_pinned(order_[v]);
  }
}

RotationSystem RotationSystem::from_orders(int n, std::vector<std::vector<Vertex>> order) {
  if (static_cast<int>(order.size()) != n) {
    throw InvalidParameter("rotation system needs one order per vertex");
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (Vertex u : order[v]) {
      if (u < 0 || u >= n || u == v) {
        throw InvalidParameter("invalid neighbour " + std::to_string(u) + " at vertex " +
                               std::to_string(v));
      }
      if (std::find(order[u].begin(), order[u].end(), v) == order[u].end()) {
        throw InvalidParameter("asymmetric rotation: " + std::to_string(u) + " listed at " +
                               std::to_string(v) + " but not vice versa");
      }
      if (v < u) edges.push_back({v, u});
    }
  }
  return RotationSystem(Graph(n, std::move(edges)), std::move(order));
}

Vertex RotationSystem::successor(Vertex v, Vertex u) const {
  const auto& cyc = order_[v];
  auto it = std::find(cyc.begin(), cyc.end(), u);
  if (it == cyc.end()) {
    throw InvalidParameter(std::to_string(u) + " is not a neighbour of " + std::to_string(v));
  }
  ++it;
  return it == cyc.end() ? cyc.front() : *it;
}

FaceSet::FaceSet(std::vector<Face> faces, int n) : faces_(std::move(faces)), n_(n) {}

std::int64_t FaceSet::total_length() const {
  std::int64_t total = 0;
  for (const auto& f : faces_) total += f.length();
  return total;
}

bool FaceSet::contains(int face, Vertex v) const {
  const auto& vs = faces_[face].vertices;
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::int64_t FaceProfile::euler_sum() const {
  std::int64_t sum = 0;
  for (const auto& [len, count] : s) sum += static_cast<std::int64_t>(len - 2) * count;
  return sum;
}

FaceSet trace_faces(const RotationSystem& r) {
  const Graph& g = r.graph();
  // Darts are visited in lexicographic order, so each face starts at its
  // smallest dart and faces come out ordered by that dart.
  std::vector<std::vector<char>> used(g.n());
  for (int v = 0; v < g.n(); ++v) used[v].assign(g.degree(v), 0);
  auto slot = [&](Vertex from, Vertex to) {
    auto nb = g.neighbors(from);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), to) - nb.begin());
  };

  std::vector<Face> faces;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nb = g.neighbors(u);
    for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
      if (used[u][i]) continue;
      Face face;
      Dart d{u, nb[i]};
      while (!used[d.from][slot(d.from, d.to)]) {
        used[d.from][slot(d.from, d.to)] = 1;
        face.walk.push_back(d);
        face.vertices.push_back(d.from);
        d = Dart{d.to, r.successor(d.to, d.from)};
      }
      std::sort(face.vertices.begin(), face.vertices.end());
      face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()),
                          face.vertices.end());
      faces.push_back(std::move(face));
    }
  }
  return FaceSet(std::move(faces), g.n());
}

int genus(const RotationSystem& r) { return genus(r, trace_faces(r)); }

int genus(const RotationSystem& r, const FaceSet& faces) {
  const Graph& g = r.graph();
  if (!is_connected(g)) throw UnsupportedInput("genus is only defined for connected graphs");
  const int f = g.m() == 0 ? 1 : faces.size();
  const int twice = 2 - g.n() + g.m() - f;
  if (twice < 0 || twice % 2 != 0) {
    throw UnsupportedInput("face count inconsistent with an orientable embedding");
  }
  return twice / 2;
}

FaceProfile face_profile(const FaceSet& fs) {
  FaceProfile p;
  for (const auto& face : fs.faces()) {
    if (face.length() < 3) {
      throw UnsupportedInput("facial walk of length " + std::to_string(face.length()) +
                             " cannot occur on a simple connected graph with >= 3 vertices");
    }
    ++p.s[face.length()];
    ++p.f;
  }
  return p;
}

bool cofacial(const FaceSet& fs, Vertex u, Vertex v) {
  if (u == v) throw InvalidParameter("cofacial: u and v must differ");
  for (int i = 0; i < fs.size(); ++i) {
    if (fs.contains(i, u) && fs.contains(i, v)) return true;
  }
  return false;
}

double rotation_count(const Graph& g) {
  double product = 1.0;
  for (int v = 0; v < g.n(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) product *= k;
  }
  return product;
}

RotationEnumerator::RotationEnumerator(const Graph& g, double budget) : graph_(g) {
  if (!is_connected(g)) throw UnsupportedInput("rotation enumeration needs a connected graph");
  const double product = rotation_count(g);
  if (product > budget) {
    throw SearchBudgetError("rotation systems: product of (deg-1)! is " +
                                std::to_string(static_cast<long double>(product)) +
                                ", budget " + std::to_string(budget),
                            product);
  }
  total_ = static_cast<std::uint64_t>(std::llround(product));
  std::vector<std::vector<Vertex>> order(g.n());
  tails_.resize(g.n());
  radix_.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    order[v].assign(nb.begin(), nb.end());
    if (!nb.empty()) tails_[v].assign(nb.begin() + 1, nb.end());
    std::uint64_t r = 1;
    for (std::uint64_t k = 2; k < nb.size(); ++k) r *= k;
    radix_[v] = r;
  }
  current_ = RotationSystem(graph_, std::move(order));
}

RotationSystem RotationEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw InvalidParameter("rotation index out of range");
  std::vector<std::vector<Vertex>> order(graph_.n());
  for (int v = graph_.n() - 1; v >= 0; --v) {
    std::uint64_t rank = index % radix_[v];
    index /= radix_[v];
    // Lehmer decode of `rank` over the sorted tail.
    std::vector<Vertex> pool = tails_[v];
    auto nb = graph_.neighbors(v);
    if (!nb.empty()) order[v].push_back(nb[0]);
    std::uint64_t fact = 1;
    for (std::uint64_t k = 2; k < pool.size(); ++k) fact *= k;
    while (!pool.empty()) {
      std::uint64_t pick = pool.size() > 1 ? rank / fact : 0;
      if (pool.size() > 1) {
        rank %= fact;
        fact /= std::max<std::uint64_t>(pool.size() - 1, 1);
      }
      order[v].push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }
  return RotationSystem(graph_, std::move(order));
}

bool RotationEnumerator::advance() {
  for (int v = graph_.n() - 1; v >= 0; --v) {
    auto& cyc = current_.order_[v];
    if (cyc.size() < 3) continue;
    if (std::next_permutation(cyc.begin() + 1, cyc.end())) return true;
    // next_permutation wrapped the tail back to ascending; carry left.
  }
  return false;
}

}  // namespace uncrossed
