#pragma once

// Every connected simple graph on n <= 6 vertices, one per isomorphism
// class, found by brute force: each edge bitmask is reduced to the minimum
// over all vertex relabellings.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "uncrossed/graph.hpp"

namespace corpus {

inline std::vector<uncrossed::Graph> connected_graphs(int n) {
  using uncrossed::Edge;
  std::vector<Edge> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      index[u][v] = index[v][u] = static_cast<int>(pairs.size());
      pairs.push_back({u, v});
    }
  }
  const int p = static_cast<int>(pairs.size());

  // Bit image of each pair under every permutation.
  std::vector<std::vector<int>> images;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> img(p);
    for (int i = 0; i < p; ++i) img[i] = index[perm[pairs[i].u]][perm[pairs[i].v]];
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto canonical = [&](std::uint32_t mask) {
    std::uint32_t best = mask;
    for (const auto& img : images) {
      std::uint32_t t = 0;
      for (int i = 0; i < p; ++i) {
        if (mask >> i & 1u) t |= 1u << img[i];
      }
      best = std::min(best, t);
    }
    return best;
  };

  std::set<std::uint32_t> seen;
  std::vector<uncrossed::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i) {
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    }
    uncrossed::Graph g(n, edges);
    if (!uncrossed::is_connected(g)) continue;
    if (seen.insert(canonical(mask)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace corpus
