#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "uncrossed/embedding.hpp"
#include "uncrossed/graph.hpp"

namespace uncrossed {

// Witness that h(G) >= |uncrossed|: a connected spanning plane embedding of
// the uncrossed edges in which every other edge of G has both endpoints on
// the face it is assigned to. Such an edge can be drawn inside that face,
// crossing at most other assigned edges, so the uncrossed edges stay
// uncrossed in a drawing of G.
struct SubdrawingCertificate {
  Graph graph;                      // G
  std::vector<Edge> uncrossed;      // H, ascending
  RotationSystem rotation;          // embedding of (V(G), H)
  std::map<Edge, int> face_assignment;  // E(G) \ H -> index into trace_faces(rotation)
};

struct SearchLimits {
  int max_n = 8;
  double max_rotation_budget = 1e7;       // cap on Π (deg-1)! per candidate
  std::optional<double> time_budget_seconds;

  static SearchLimits for_unc() {
    SearchLimits l;
    l.max_n = 6;
    return l;
  }
};

// Checks each invariant independently: H connected and spanning, genus 0,
// |H| <= 3n-6, every non-H edge assigned to a face holding both endpoints.
// Throws MalformedCertificate on edges outside G, a rotation that does not
// embed H, or a dangling face index.
bool verify_certificate(const SubdrawingCertificate& c);

// Searches the rotation systems of (V, H) in lexicographic order and returns
// a certificate built from the first one that is planar with every edge of
// E \ H co-facial.
std::optional<SubdrawingCertificate> feasible(const Graph& g, std::span<const Edge> uncrossed,
                                              const SearchLimits& limits = {});

struct HResult {
  int h = 0;
  SubdrawingCertificate witness;
};

// Exact h(G). Sizes are tried from min(m, 3n-6) downward, subsets of a size
// in lexicographic order; the first feasible one is the witness.
HResult exact_h(const Graph& g, const SearchLimits& limits = {});

// All inclusion-maximal feasible edge sets, ordered by size (descending)
// then lexicographically.
std::vector<std::vector<Edge>> maximal_feasible_sets(const Graph& g,
                                                     const SearchLimits& limits = SearchLimits::for_unc());

struct UncResult {
  int unc = 0;
  std::vector<SubdrawingCertificate> cover;
};

// Exact unc(G): smallest family of maximal feasible sets covering E(G).
UncResult exact_unc(const Graph& g, const SearchLimits& limits = SearchLimits::for_unc());

}  // namespace uncrossed
