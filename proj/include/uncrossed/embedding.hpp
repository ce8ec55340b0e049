#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "uncrossed/graph.hpp"

namespace uncrossed {

// Directed edge u -> v.
struct Dart {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Dart&) const = default;
};

// Cyclic order of neighbours around every vertex. Each cyclic sequence is
// stored starting at the vertex's smallest neighbour (the pinned one), so two
// systems describing the same embedding compare equal.
class RotationSystem {
 public:
  RotationSystem() = default;
  // `order[v]` must be a permutation of g.neighbors(v); any cyclic shift is
  // accepted. Throws InvalidParameter otherwise.
  RotationSystem(Graph g, std::vector<std::vector<Vertex>> order);
  // Rebuilds the graph from the orders themselves; every u in order[v] needs
  // the matching v in order[u].
  static RotationSystem from_orders(int n, std::vector<std::vector<Vertex>> order);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& order(Vertex v) const { return order_[v]; }
  const std::vector<std::vector<Vertex>>& orders() const noexcept { return order_; }
  // Neighbour following `u` in the cyclic order at `v`.
  Vertex successor(Vertex v, Vertex u) const;

  bool operator==(const RotationSystem& o) const { return order_ == o.order_ && graph_ == o.graph_; }

 private:
  friend class RotationEnumerator;

  Graph graph_;
  std::vector<std::vector<Vertex>> order_;
};

struct Face {
  std::vector<Dart> walk;        // closed facial walk, starting at its smallest dart
  std::vector<Vertex> vertices;  // distinct vertices on the walk, ascending

  int length() const noexcept { return static_cast<int>(walk.size()); }
};

// Facial walks of a rotation system. Faces are indexed in lexicographic
// order of their smallest dart; certificates refer to faces by this index.
class FaceSet {
 public:
  explicit FaceSet(std::vector<Face> faces, int n);

  const std::vector<Face>& faces() const noexcept { return faces_; }
  int size() const noexcept { return static_cast<int>(faces_.size()); }
  const Face& operator[](int i) const { return faces_[i]; }
  // Sum of walk lengths; equals 2m.
  std::int64_t total_length() const;
  bool contains(int face, Vertex v) const;

 private:
  std::vector<Face> faces_;
  int n_;
};

struct FaceProfile {
  std::map<int, std::int64_t> s;  // face length -> number of faces
  std::int64_t f = 0;

  std::int64_t count(int length) const {
    auto it = s.find(length);
    return it == s.end() ? 0 : it->second;
  }
  // Σ (ℓ-2) s_ℓ, which is 2n-4 for a connected plane embedding.
  std::int64_t euler_sum() const;
  int max_length() const { return s.empty() ? 0 : s.rbegin()->first; }
};

// Next dart after (u->v) is (v->w), w the successor of u at v.
FaceSet trace_faces(const RotationSystem& r);

// g with n - m + f = 2 - 2g. An edgeless single vertex counts as one face.
// Throws UnsupportedInput on a disconnected graph.
int genus(const RotationSystem& r);
int genus(const RotationSystem& r, const FaceSet& faces);

// Throws UnsupportedInput on walks shorter than 3, which only arise for
// graphs with fewer than 3 vertices.
FaceProfile face_profile(const FaceSet& fs);

// True iff some face has both u and v among its vertices.
bool cofacial(const FaceSet& fs, Vertex u, Vertex v);

// Π_v (deg(v)-1)!, as a double so huge products stay representable.
double rotation_count(const Graph& g);

// Walks every rotation system of g exactly once in lexicographic order of
// the per-vertex sequences (vertex 0 most significant), each sequence
// starting at the pinned smallest neighbour.
class RotationEnumerator {
 public:
  static constexpr double kDefaultBudget = 1e7;

  // Throws UnsupportedInput if g is disconnected and SearchBudgetError if
  // rotation_count(g) exceeds `budget`.
  explicit RotationEnumerator(const Graph& g, double budget = kDefaultBudget);

  std::uint64_t size() const noexcept { return total_; }
  // Random access for workers splitting the stream into disjoint ranges.
  RotationSystem at(std::uint64_t index) const;

  const RotationSystem& current() const noexcept { return current_; }
  // Moves to the next system; false once the stream is exhausted.
  bool advance();

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> tails_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t total_ = 1;
  RotationSystem current_;
};

}  // namespace uncrossed
