#include "uncrossed/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <limits>
#include <random>
#include <set>
#include <unordered_set>

#include "uncrossed/error.hpp"

namespace uncrossed {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidParameter("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw InvalidParameter("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} out of range for n=" + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InvalidParameter("duplicate edge {" + std::to_string(dup->u) + "," +
                           std::to_string(dup->v) + "}");
  }
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Graph make_complete(int n) {
  if (n < 1) throw InvalidParameter("make_complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidParameter("make_complete_bipartite: both parts must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph(a + b, std::move(edges));
}

Graph make_wheel(int n) {
  if (n < 4) throw InvalidParameter("make_wheel: n must be >= 4");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({0, i});
    edges.push_back(make_edge(i, i == n - 1 ? 1 : i + 1));
  }
  return Graph(n, std::move(edges));
}

Graph make_path(int n) {
  if (n < 1) throw InvalidParameter("make_path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw InvalidParameter("make_cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph make_cube() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) edges.push_back({v, v | bit});
  return Graph(8, std::move(edges));
}

namespace {

// Unbiased draw from [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined and would break cross-platform determinism.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

Graph make_random_gnm(int n, int m, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("make_random_gnm: n must be >= 1");
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) {
    throw InvalidParameter("make_random_gnm: m=" + std::to_string(m) + " outside [0, " +
                           std::to_string(pairs) + "]");
  }
  // Floyd's sampling of an m-subset of pair indices.
  std::mt19937_64 rng(seed);
  std::unordered_set<std::int64_t> chosen;
  std::vector<std::int64_t> picked;
  for (std::int64_t j = pairs - m; j < pairs; ++j) {
    auto t = static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(j + 1)));
    if (!chosen.insert(t).second) {
      chosen.insert(j);
      picked.push_back(j);
    } else {
      picked.push_back(t);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(picked.size());
  for (std::int64_t idx : picked) {
    // Row-major decode of idx into u < v.
    int u = 0;
    std::int64_t row = n - 1;
    while (idx >= row) {
      idx -= row;
      ++u;
      --row;
    }
    edges.push_back({u, u + 1 + static_cast<int>(idx)});
  }
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == g.n();
}

bool is_triangle_free(const Graph& g) {
  for (const auto& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    // Sorted adjacency: any common neighbour closes a triangle.
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return false;
      if (*i < *j) ++i;
      else ++j;
    }
  }
  return true;
}

GraphStats analyze(const Graph& g) {
  GraphStats s;
  s.n = g.n();
  s.m = g.m();
  s.density = Rational(g.m(), static_cast<std::int64_t>(g.n()) * g.n());
  s.connected = is_connected(g);
  s.triangle_free = is_triangle_free(g);
  return s;
}

Graph spanning_subgraph(const Graph& g, std::span<const Edge> edges) {
  for (const auto& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw InvalidParameter("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} is not in the graph");
    }
  }
  return Graph(g.n(), std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

// Parses exactly "<int> <int>" with a single separating space.
bool parse_pair(std::string_view line, std::int64_t& a, std::int64_t& b) {
  auto space = line.find(' ');
  if (space == std::string_view::npos) return false;
  auto first = line.substr(0, space);
  auto second = line.substr(space + 1);
  auto read = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  return read(first, a) && read(second, b);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // A single trailing newline (or several) is tolerated.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");

  std::int64_t n = 0;
  std::int64_t m = 0;
  if (!parse_pair(lines[0], n, m)) throw ParseError(1, "malformed header, expected 'n m'");
  if (n < 1 || n > (1 << 20)) throw ParseError(1, "vertex count must be in [1, 2^20]");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError(1, "edge count out of range for n");
  if (static_cast<std::int64_t>(lines.size()) - 1 < m) {
    throw ParseError(lines.size() + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                           std::to_string(lines.size() - 1));
  }
  if (static_cast<std::int64_t>(lines.size()) - 1 > m) {
    throw ParseError(static_cast<std::size_t>(m) + 2, "unexpected line after the last edge");
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::int64_t u = 0;
    std::int64_t v = 0;
    if (!parse_pair(lines[i], u, v)) throw ParseError(i + 1, "malformed edge, expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(i + 1, "endpoint >= n");
    if (u == v) throw ParseError(i + 1, "self-loop");
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(i + 1, "duplicate edge");
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace uncrossed
