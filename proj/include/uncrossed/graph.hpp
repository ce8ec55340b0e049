#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uncrossed/numeric.hpp"

namespace uncrossed {

using Vertex = int;

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Canonical edge for the pair {a, b}.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 0..n-1. Edges are kept in ascending
// canonical order and adjacency lists are sorted, so every traversal is
// deterministic. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidParameter on n < 1, self-loops, duplicates or endpoints
  // out of range.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const;
  // Position of {a, b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct GraphStats {
  int n = 0;
  int m = 0;
  Rational density;  // exactly m / n^2
  bool connected = false;
  bool triangle_free = true;
};

Graph make_complete(int n);
// Parts are {0..a-1} and {a..a+b-1}.
Graph make_complete_bipartite(int a, int b);
// Vertex 0 is the hub, 1..n-1 the rim cycle.
Graph make_wheel(int n);
Graph make_path(int n);
Graph make_cycle(int n);
// 3-cube Q_3 on 8 vertices (bit patterns, edges join patterns one bit apart).
Graph make_cube();
// Uniform simple graph with exactly m edges, a pure function of (n, m, seed)
// on every platform.
Graph make_random_gnm(int n, int m, std::uint64_t seed);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
GraphStats analyze(const Graph& g);

// Subgraph on the same vertex set keeping only `edges` (each must be an edge
// of g).
Graph spanning_subgraph(const Graph& g, std::span<const Edge> edges);

// Edge-list text: header "n m", then m lines "u v" (0-based). Errors name
// the offending line.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace uncrossed
