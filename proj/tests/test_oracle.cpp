#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/corpus.hpp"
#include "uncrossed/embedding.hpp"
#include "uncrossed/error.hpp"
#include "uncrossed/oracle.hpp"

using namespace uncrossed;

namespace {

// Reference route: walk every rotation system of (V, H) with the plain
// enumerator and test genus and co-faciality face by face.
std::optional<RotationSystem> reference_feasible(const Graph& g, const std::vector<Edge>& h) {
  const Graph sub = spanning_subgraph(g, h);
  if (!is_connected(sub)) return std::nullopt;
  RotationEnumerator it(sub);
  do {
    const FaceSet fs = trace_faces(it.current());
    if (genus(it.current(), fs) != 0) continue;
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!std::binary_search(h.begin(), h.end(), e) && !cofacial(fs, e.u, e.v)) {
        ok = false;
        break;
      }
    }
    if (ok) return it.current();
  } while (it.advance());
  return std::nullopt;
}

std::vector<Edge> random_subset(const Graph& g, std::mt19937_64& rng, int size) {
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("engine and reference enumerator agree, down to the chosen rotation") {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs{make_complete(5), make_complete_bipartite(3, 3), make_complete(6),
                            make_wheel(6)};
  for (int i = 0; i < 6; ++i) graphs.push_back(make_random_gnm(6, 9 + i, 100 + i));
  int feasible_seen = 0;
  for (const Graph& g : graphs) {
    if (!is_connected(g)) continue;
    for (int trial = 0; trial < 40; ++trial) {
      const int size = g.n() - 1 + static_cast<int>(rng() % (std::min(g.m(), 3 * g.n() - 6) - g.n() + 2));
      const auto h = random_subset(g, rng, size);
      const auto expected = reference_feasible(g, h);
      const auto got = feasible(g, h);
      REQUIRE(expected.has_value() == got.has_value());
      if (got) {
        ++feasible_seen;
        CHECK(got->rotation == *expected);
        CHECK(verify_certificate(*got));
      }
    }
  }
  CHECK(feasible_seen > 20);
}

TEST_CASE("certificate verification") {
  const Graph k5 = make_complete(5);
  const HResult r = exact_h(k5);
  REQUIRE(verify_certificate(r.witness));

  SubdrawingCertificate bad_face = r.witness;
  bad_face.face_assignment.begin()->second = 99;
  CHECK_THROWS_AS(verify_certificate(bad_face), MalformedCertificate);

  SubdrawingCertificate missing = r.witness;
  missing.face_assignment.erase(missing.face_assignment.begin());
  CHECK_FALSE(verify_certificate(missing));

  SubdrawingCertificate foreign = r.witness;
  foreign.uncrossed.push_back({0, 7});
  CHECK_THROWS_AS(verify_certificate(foreign), MalformedCertificate);

  // Reassign an edge to a face that misses one of its endpoints.
  SubdrawingCertificate wrong = r.witness;
  const FaceSet fs = trace_faces(wrong.rotation);
  auto& [edge, face] = *wrong.face_assignment.begin();
  for (int f = 0; f < fs.size(); ++f) {
    if (!fs.contains(f, edge.u) || !fs.contains(f, edge.v)) {
      face = f;
      break;
    }
  }
  CHECK_FALSE(verify_certificate(wrong));
}

TEST_CASE("exact h on the complete families") {
  CHECK(exact_h(make_complete(4)).h == 6);
  CHECK(exact_h(make_complete(5)).h == 8);
  CHECK(exact_h(make_complete_bipartite(3, 3)).h == 7);
  CHECK(exact_h(make_cube()).h == 12);
}

TEST_CASE("planar graphs keep every edge") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      if (g.n() == 5 && g.m() == 10) continue;
      const HResult r = exact_h(g);
      CHECK(r.h == g.m());
      CHECK(verify_certificate(r.witness));
    }
  }
}

TEST_CASE("maximal feasible sets") {
  const auto planar = maximal_feasible_sets(make_wheel(6));
  REQUIRE(planar.size() == 1);
  CHECK(planar[0].size() == 10);
  CHECK(maximal_feasible_sets(make_path(5)).size() == 1);

  const Graph k5 = make_complete(5);
  const auto sets = maximal_feasible_sets(k5);
  CHECK(sets.front().size() == 8);
  for (const auto& s : sets) CHECK(s.size() <= 8);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()));
    }
  }
}

TEST_CASE("feasibility is closed under dropping edges that keep H connected") {
  std::mt19937_64 rng(9);
  const Graph g = make_complete(5);
  for (const auto& s : maximal_feasible_sets(g)) {
    std::vector<Edge> h = s;
    while (h.size() > 4) {
      h.erase(h.begin() + static_cast<long>(rng() % h.size()));
      if (!is_connected(spanning_subgraph(g, h))) break;
      CHECK(feasible(g, h).has_value());
    }
  }
}

TEST_CASE("exact unc") {
  CHECK(exact_unc(make_wheel(6)).unc == 1);
  CHECK(exact_unc(make_path(4)).unc == 1);
  const UncResult k5 = exact_unc(make_complete(5));
  CHECK(k5.unc == 2);
  std::set<Edge> covered;
  for (const auto& c : k5.cover) {
    CHECK(verify_certificate(c));
    covered.insert(c.uncrossed.begin(), c.uncrossed.end());
  }
  CHECK(covered.size() == 10);
  CHECK(exact_unc(make_complete_bipartite(3, 3)).unc == 2);
}

TEST_CASE("limits and gates") {
  CHECK_THROWS_AS(exact_h(make_complete(9)), SearchBudgetError);
  CHECK_THROWS_AS(exact_unc(make_complete(7)), SearchBudgetError);
  CHECK_THROWS_AS(exact_h(Graph(4, {{0, 1}, {2, 3}})), UnsupportedInput);
  SearchLimits tight;
  tight.max_rotation_budget = 2;
  CHECK_THROWS_AS(exact_h(make_complete(5), tight), SearchBudgetError);
  SearchLimits quick;
  quick.time_budget_seconds = 0.0;
  CHECK_THROWS_AS(exact_h(make_complete(6), quick), SearchBudgetError);
}

TEST_CASE("results are deterministic") {
  const Graph g = make_random_gnm(6, 11, 42);
  const HResult a = exact_h(g);
  const HResult b = exact_h(g);
  CHECK(a.h == b.h);
  CHECK(a.witness.uncrossed == b.witness.uncrossed);
  CHECK(a.witness.rotation == b.witness.rotation);
  CHECK(a.witness.face_assignment == b.witness.face_assignment);
}
