#include "uncrossed/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "uncrossed/error.hpp"

namespace uncrossed {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr int kMaxOracleEdges = 64;

class Deadline {
 public:
  explicit Deadline(const SearchLimits& limits) {
    if (limits.time_budget_seconds) {
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(*limits.time_budget_seconds));
    }
  }
  void check() const {
    if (end_ && Clock::now() > *end_) throw SearchBudgetError("time budget exhausted");
  }

 private:
  std::optional<Clock::time_point> end_;
};

// Smallest union-find over at most 64 vertices.
bool spans_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : edges) {
    int a = find(e.u);
    int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      if (--components == 1) return true;
    }
  }
  return components == 1;
}

bool has_triangle(int n, std::span<const Edge> edges) {
  std::vector<Mask> adj(n, 0);
  for (const auto& e : edges) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  for (const auto& e : edges) {
    if (adj[e.u] & adj[e.v]) return true;
  }
  return false;
}

// Euler-count rejections that need no embedding: |H| <= 3n-6, and
// |H| <= 2n-4 when H has no triangle (every face then has length >= 4).
bool passes_euler_counts(int n, std::span<const Edge> edges) {
  const int mh = static_cast<int>(edges.size());
  if (n < 3) return true;
  if (mh > 3 * n - 6) return false;
  if (mh > 2 * n - 4 && !has_triangle(n, edges)) return false;
  return true;
}

// Enumerates the rotation systems of H over flat dart arrays, in the same
// lexicographic order as RotationEnumerator, stopping at the first planar
// one under which every pending edge joins two vertices of a common face.
class PlanarCofacialSearch {
 public:
  PlanarCofacialSearch(const Graph& h, std::span<const Edge> pending, const Deadline& deadline)
      : n_(h.n()), m_(h.m()), deadline_(deadline) {
    offset_.resize(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + h.degree(v);
    tail_.resize(2 * m_);
    rev_.resize(2 * m_);
    succ_.resize(2 * m_);
    visit_.assign(2 * m_, 0);
    for (int v = 0; v < n_; ++v) {
      auto nb = h.neighbors(v);
      for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
        const int d = offset_[v] + i;
        tail_[d] = v;
        auto back = h.neighbors(nb[i]);
        rev_[d] = offset_[nb[i]] +
                  static_cast<int>(std::lower_bound(back.begin(), back.end(), v) - back.begin());
      }
    }
    perm_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      perm_[v].resize(h.degree(v));
      std::iota(perm_[v].begin(), perm_[v].end(), 0);
      apply(v);
      if (h.degree(v) >= 3) varying_.push_back(v);
    }
    for (const auto& e : pending) pending_.push_back((Mask{1} << e.u) | (Mask{1} << e.v));
    target_faces_ = m_ - n_ + 2;
    face_masks_.resize(std::max(target_faces_, 1));
  }

  // Runs the enumeration; on success the current permutation holds the
  // witness rotation.
  bool run() {
    std::uint64_t ticks = 0;
    do {
      if ((++ticks & 0xFFFF) == 0) deadline_.check();
      if (evaluate()) return true;
    } while (advance());
    return false;
  }

  std::vector<std::vector<Vertex>> orders(const Graph& h) const {
    std::vector<std::vector<Vertex>> out(n_);
    for (int v = 0; v < n_; ++v) {
      auto nb = h.neighbors(v);
      for (int slot : perm_[v]) out[v].push_back(nb[slot]);
    }
    return out;
  }

 private:
  void apply(int v) {
    const auto& p = perm_[v];
    const int deg = static_cast<int>(p.size());
    for (int i = 0; i < deg; ++i) {
      succ_[offset_[v] + p[i]] = offset_[v] + p[(i + 1) % deg];
    }
  }

  bool advance() {
    for (auto it = varying_.rbegin(); it != varying_.rend(); ++it) {
      auto& p = perm_[*it];
      const bool more = std::next_permutation(p.begin() + 1, p.end());
      apply(*it);
      if (more) return true;
    }
    return false;
  }

  bool evaluate() {
    ++stamp_;
    int faces = 0;
    int remaining = 2 * m_;
    for (int d = 0; d < 2 * m_; ++d) {
      if (visit_[d] == stamp_) continue;
      Mask mask = 0;
      int len = 0;
      int e = d;
      do {
        visit_[e] = stamp_;
        mask |= Mask{1} << tail_[e];
        e = succ_[rev_[e]];
        ++len;
      } while (e != d);
      if (faces >= target_faces_) return false;
      face_masks_[faces++] = mask;
      remaining -= len;
      // Every facial walk of a simple graph on >= 3 vertices has length >= 3.
      if (faces + remaining / 3 < target_faces_) return false;
    }
    if (faces != target_faces_) return false;
    for (Mask pair : pending_) {
      bool ok = false;
      for (int f = 0; f < faces && !ok; ++f) ok = (face_masks_[f] & pair) == pair;
      if (!ok) return false;
    }
    return true;
  }

  int n_;
  int m_;
  const Deadline& deadline_;
  std::vector<int> offset_;
  std::vector<int> tail_;
  std::vector<int> rev_;
  std::vector<int> succ_;
  std::vector<std::uint32_t> visit_;
  std::uint32_t stamp_ = 0;
  std::vector<std::vector<int>> perm_;
  std::vector<int> varying_;
  std::vector<Mask> pending_;
  int target_faces_ = 0;
  std::vector<Mask> face_masks_;
};

void check_oracle_graph(const Graph& g, const SearchLimits& limits) {
  if (!is_connected(g)) throw UnsupportedInput("oracle requires a connected graph");
  if (g.n() > limits.max_n) {
    throw SearchBudgetError("n=" + std::to_string(g.n()) + " exceeds max_n=" +
                            std::to_string(limits.max_n));
  }
  if (g.n() > 64 || g.m() > kMaxOracleEdges) {
    throw SearchBudgetError("oracle supports at most 64 vertices and 64 edges");
  }
}

std::vector<Edge> edges_of(const Graph& g, Mask mask) {
  std::vector<Edge> out;
  auto all = g.edges();
  while (mask) {
    const int i = std::countr_zero(mask);
    out.push_back(all[i]);
    mask &= mask - 1;
  }
  return out;
}

SubdrawingCertificate make_certificate(const Graph& g, std::vector<Edge> uncrossed,
                                       RotationSystem rotation) {
  SubdrawingCertificate c{g, std::move(uncrossed), std::move(rotation), {}};
  const FaceSet faces = trace_faces(c.rotation);
  for (const auto& e : g.edges()) {
    if (std::binary_search(c.uncrossed.begin(), c.uncrossed.end(), e)) continue;
    for (int f = 0; f < faces.size(); ++f) {
      if (faces.contains(f, e.u) && faces.contains(f, e.v)) {
        c.face_assignment.emplace(e, f);
        break;
      }
    }
  }
  return c;
}

// Core feasibility test without the public-entry validation.
std::optional<SubdrawingCertificate> feasible_unchecked(const Graph& g,
                                                        std::vector<Edge> uncrossed,
                                                        const SearchLimits& limits,
                                                        const Deadline& deadline) {
  if (!spans_connected(g.n(), uncrossed)) return std::nullopt;
  if (!passes_euler_counts(g.n(), uncrossed)) return std::nullopt;
  Graph h(g.n(), uncrossed);
  const double product = rotation_count(h);
  if (product > limits.max_rotation_budget) {
    throw SearchBudgetError("candidate needs " + std::to_string(product) +
                                " rotation systems, budget " +
                                std::to_string(limits.max_rotation_budget),
                            product);
  }
  std::vector<Edge> pending;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(uncrossed.begin(), uncrossed.end(), e)) pending.push_back(e);
  }
  if (g.n() == 2) {
    // K_2: a single edge, nothing pending.
    return make_certificate(g, std::move(uncrossed), RotationSystem(h, {{1}, {0}}));
  }
  PlanarCofacialSearch search(h, pending, deadline);
  if (!search.run()) return std::nullopt;
  RotationSystem rotation(h, search.orders(h));
  return make_certificate(g, std::move(uncrossed), std::move(rotation));
}

// Visits size-k index combinations of {0..m-1} in lexicographic order.
template <typename Fn>
bool for_each_combination(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Mask mask_of(const Graph& g, std::span<const Edge> edges) {
  Mask mask = 0;
  for (const auto& e : edges) mask |= Mask{1} << *g.edge_index(e.u, e.v);
  return mask;
}

}  // namespace

bool verify_certificate(const SubdrawingCertificate& c) {
  const Graph& g = c.graph;
  std::vector<Edge> h = c.uncrossed;
  std::sort(h.begin(), h.end());
  if (std::adjacent_find(h.begin(), h.end()) != h.end()) {
    throw MalformedCertificate("duplicate uncrossed edge");
  }
  for (const auto& e : h) {
    if (!g.has_edge(e.u, e.v)) {
      throw MalformedCertificate("uncrossed edge {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "} is not in the graph");
    }
  }
  if (c.rotation.graph().n() != g.n() ||
      !std::equal(h.begin(), h.end(), c.rotation.graph().edges().begin(),
                  c.rotation.graph().edges().end())) {
    throw MalformedCertificate("rotation system does not embed exactly the uncrossed edges");
  }
  const FaceSet faces = trace_faces(c.rotation);
  for (const auto& [e, face] : c.face_assignment) {
    if (!g.has_edge(e.u, e.v)) {
      throw MalformedCertificate("assigned edge {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "} is not in the graph");
    }
    if (std::binary_search(h.begin(), h.end(), e)) {
      throw MalformedCertificate("uncrossed edge also carries a face assignment");
    }
    if (face < 0 || face >= faces.size()) {
      throw MalformedCertificate("dangling face index " + std::to_string(face));
    }
  }

  bool ok = true;
  // Connected and spanning: (V(G), H) reaches every vertex.
  ok = ok && spans_connected(g.n(), h);
  ok = ok && (g.n() < 3 || static_cast<int>(h.size()) <= 3 * g.n() - 6);
  ok = ok && genus(c.rotation, faces) == 0;
  for (const auto& e : g.edges()) {
    if (!ok) break;
    if (std::binary_search(h.begin(), h.end(), e)) continue;
    auto it = c.face_assignment.find(e);
    ok = it != c.face_assignment.end() && faces.contains(it->second, e.u) &&
         faces.contains(it->second, e.v);
  }
  return ok;
}

std::optional<SubdrawingCertificate> feasible(const Graph& g, std::span<const Edge> uncrossed,
                                              const SearchLimits& limits) {
  if (!is_connected(g)) throw UnsupportedInput("feasible: graph must be connected");
  std::vector<Edge> h(uncrossed.begin(), uncrossed.end());
  for (auto& e : h) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
      throw InvalidParameter("feasible: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} is not an edge of the graph");
    }
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (g.n() > 64) throw SearchBudgetError("oracle supports at most 64 vertices");
  Deadline deadline(limits);
  return feasible_unchecked(g, std::move(h), limits, deadline);
}

HResult exact_h(const Graph& g, const SearchLimits& limits) {
  if (g.n() < 2) throw InvalidParameter("exact_h: requires n >= 2");
  check_oracle_graph(g, limits);
  Deadline deadline(limits);
  const int top = g.n() >= 3 ? std::min(g.m(), 3 * g.n() - 6) : g.m();
  auto all = g.edges();
  for (int size = top; size >= g.n() - 1; --size) {
    std::optional<SubdrawingCertificate> found;
    std::vector<Edge> subset(size);
    for_each_combination(g.m(), size, [&](const std::vector<int>& idx) {
      for (int i = 0; i < size; ++i) subset[i] = all[idx[i]];
      if (!spans_connected(g.n(), subset)) return false;
      deadline.check();
      found = feasible_unchecked(g, subset, limits, deadline);
      return found.has_value();
    });
    if (found) return {size, std::move(*found)};
  }
  // Unreachable for connected g: every spanning tree is feasible.
  throw Error("exact_h: no feasible spanning tree found");
}

std::vector<std::vector<Edge>> maximal_feasible_sets(const Graph& g, const SearchLimits& limits) {
  check_oracle_graph(g, limits);
  Deadline deadline(limits);
  const int m = g.m();
  const int n = g.n();
  auto all = g.edges();

  auto connected_mask = [&](Mask mask) { return spans_connected(n, edges_of(g, mask)); };
  auto feasible_mask = [&](Mask mask) {
    deadline.check();
    return feasible_unchecked(g, edges_of(g, mask), limits, deadline).has_value();
  };

  // Level n-1: spanning trees, all feasible (one face holds every vertex).
  std::vector<Mask> level;
  {
    std::vector<Edge> subset(n - 1);
    for_each_combination(m, n - 1, [&](const std::vector<int>& idx) {
      for (int i = 0; i < n - 1; ++i) subset[i] = all[idx[i]];
      if (spans_connected(n, subset)) {
        Mask mask = 0;
        for (int i : idx) mask |= Mask{1} << i;
        level.push_back(mask);
      }
      return false;
    });
  }

  // Feasibility is closed under deleting an edge that keeps H connected, so
  // feasible sets grow one edge at a time and a feasible set is maximal iff
  // no single-edge extension is feasible.
  std::vector<Mask> maximal;
  while (!level.empty()) {
    std::unordered_set<Mask> current(level.begin(), level.end());
    std::unordered_set<Mask> tried;
    std::vector<Mask> next;
    for (Mask base : level) {
      for (int e = 0; e < m; ++e) {
        const Mask bit = Mask{1} << e;
        if (base & bit) continue;
        const Mask cand = base | bit;
        if (!tried.insert(cand).second) continue;
        // Every connected one-edge-smaller subset must itself be feasible.
        bool viable = true;
        for (Mask rest = cand; rest && viable; rest &= rest - 1) {
          const Mask drop = cand & ~(rest & (~rest + 1));
          if (!current.count(drop) && connected_mask(drop)) viable = false;
        }
        if (viable && feasible_mask(cand)) next.push_back(cand);
      }
    }
    std::unordered_set<Mask> extended;
    for (Mask c : next) {
      for (Mask rest = c; rest; rest &= rest - 1) extended.insert(c & ~(rest & (~rest + 1)));
    }
    for (Mask base : level) {
      if (!extended.count(base)) maximal.push_back(base);
    }
    level = std::move(next);
  }

  std::sort(maximal.begin(), maximal.end(), [&](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    return edges_of(g, a) < edges_of(g, b);
  });
  std::vector<std::vector<Edge>> out;
  out.reserve(maximal.size());
  for (Mask mask : maximal) out.push_back(edges_of(g, mask));
  return out;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> sets, Mask universe, int lower_bound, const Deadline& deadline)
      : sets_(std::move(sets)), universe_(universe), lower_(lower_bound), deadline_(deadline) {
    max_size_ = 0;
    for (Mask s : sets_) max_size_ = std::max(max_size_, std::popcount(s));
    best_size_ = static_cast<int>(sets_.size()) + 1;
  }

  std::vector<int> solve() {
    std::vector<int> chosen;
    recurse(universe_, chosen);
    return best_;
  }

 private:
  void recurse(Mask uncovered, std::vector<int>& chosen) {
    if (done_) return;
    deadline_.check();
    if (uncovered == 0) {
      if (static_cast<int>(chosen.size()) < best_size_) {
        best_size_ = static_cast<int>(chosen.size());
        best_ = chosen;
        done_ = best_size_ <= lower_;
      }
      return;
    }
    const int remaining = std::popcount(uncovered);
    const int need = (remaining + max_size_ - 1) / max_size_;
    if (static_cast<int>(chosen.size()) + need >= best_size_) return;

    // Branch on the uncovered edge with the fewest covering sets.
    int pivot = -1;
    int fewest = static_cast<int>(sets_.size()) + 1;
    for (Mask rest = uncovered; rest; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      int count = 0;
      for (Mask s : sets_) count += (s & bit) ? 1 : 0;
      if (count < fewest) {
        fewest = count;
        pivot = std::countr_zero(bit);
      }
    }
    const Mask pivot_bit = Mask{1} << pivot;
    for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
      if (!(sets_[i] & pivot_bit)) continue;
      chosen.push_back(i);
      recurse(uncovered & ~sets_[i], chosen);
      chosen.pop_back();
      if (done_) return;
    }
  }

  std::vector<Mask> sets_;
  Mask universe_;
  int lower_;
  const Deadline& deadline_;
  int max_size_ = 1;
  int best_size_ = 0;
  std::vector<int> best_;
  bool done_ = false;
};

}  // namespace

UncResult exact_unc(const Graph& g, const SearchLimits& limits) {
  check_oracle_graph(g, limits);
  if (g.m() == 0) return {0, {}};
  const auto maximal = maximal_feasible_sets(g, limits);
  std::vector<Mask> sets;
  for (const auto& s : maximal) sets.push_back(mask_of(g, s));
  const int h = static_cast<int>(maximal.front().size());
  const int lower = (g.m() + h - 1) / h;
  const Mask universe = g.m() == 64 ? ~Mask{0} : (Mask{1} << g.m()) - 1;

  Deadline deadline(limits);
  CoverSearch search(sets, universe, lower, deadline);
  const auto picked = search.solve();

  UncResult result;
  result.unc = static_cast<int>(picked.size());
  for (int i : picked) {
    auto cert = feasible_unchecked(g, maximal[i], limits, deadline);
    if (!cert) throw Error("exact_unc: maximal set lost its certificate");
    result.cover.push_back(std::move(*cert));
  }
  return result;
}

}  // namespace uncrossed
