#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "uncrossed/embedding.hpp"
#include "uncrossed/error.hpp"

using namespace uncrossed;

namespace {

RotationSystem random_rotation(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> order(g.n());
  for (int v = 0; v < g.n(); ++v) {
    order[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::shuffle(order[v].begin(), order[v].end(), rng);
  }
  return RotationSystem(g, order);
}

}  // namespace

TEST_CASE("rotation orders are pinned at the smallest neighbour") {
  const Graph g = make_complete(4);
  RotationSystem r(g, {{2, 3, 1}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  CHECK(r.order(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(r.successor(0, 3) == 1);
  CHECK_THROWS_AS(RotationSystem(g, {{1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), InvalidParameter);
  CHECK(RotationSystem::from_orders(4, r.orders()) == r);
}

TEST_CASE("planar K4 has four triangles") {
  const Graph g = make_complete(4);
  RotationSystem r(g, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  const FaceSet fs = trace_faces(r);
  CHECK(fs.size() == 4);
  CHECK(fs.total_length() == 12);
  CHECK(genus(r) == 0);
  const FaceProfile p = face_profile(fs);
  CHECK(p.count(3) == 4);
  CHECK(p.euler_sum() == 2 * 4 - 4);
  CHECK(cofacial(fs, 0, 1));
  CHECK_THROWS_AS(cofacial(fs, 1, 1), InvalidParameter);
}

TEST_CASE("faces are indexed by their smallest dart") {
  const Graph g = make_cycle(4);
  const FaceSet fs = trace_faces(RotationSystem(g, {{1, 3}, {0, 2}, {1, 3}, {0, 2}}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].walk.front() == Dart{0, 1});
  CHECK(fs[1].walk.front() == Dart{0, 3});
  for (const auto& f : fs.faces()) {
    CHECK(std::min_element(f.walk.begin(), f.walk.end()) == f.walk.begin());
  }
}

TEST_CASE("trees have one face and genus zero") {
  const RotationSystem r(make_path(5), {{1}, {0, 2}, {1, 3}, {2, 4}, {3}});
  const FaceSet fs = trace_faces(r);
  CHECK(fs.size() == 1);
  CHECK(fs[0].length() == 8);
  CHECK(genus(r) == 0);
  const RotationSystem single(Graph(1, {}), {{}});
  CHECK(genus(single) == 0);
}

TEST_CASE("genus rejects disconnected graphs") {
  const RotationSystem r(Graph(4, {{0, 1}, {2, 3}}), {{1}, {0}, {3}, {2}});
  CHECK_THROWS_AS(genus(r), UnsupportedInput);
}

TEST_CASE("face profile rejects digons") {
  const RotationSystem r(make_path(2), {{1}, {0}});
  CHECK_THROWS_AS(face_profile(trace_faces(r)), UnsupportedInput);
}

TEST_CASE("K5 never embeds in the plane; K4 sometimes does") {
  for (auto [n, planar_expected] : {std::pair{4, true}, std::pair{5, false}}) {
    RotationEnumerator it(make_complete(n));
    bool any_planar = false;
    int seen = 0;
    do {
      ++seen;
      any_planar |= genus(it.current()) == 0;
    } while (it.advance());
    CHECK(seen == static_cast<int>(it.size()));
    CHECK(any_planar == planar_expected);
  }
}

TEST_CASE("enumerator visits each system once, in order, with random access") {
  const Graph g = make_wheel(5);
  RotationEnumerator it(g);
  CHECK(it.size() == static_cast<std::uint64_t>(rotation_count(g)));
  std::set<std::vector<std::vector<Vertex>>> seen;
  std::vector<std::vector<Vertex>> prev;
  std::uint64_t i = 0;
  do {
    const auto& o = it.current().orders();
    CHECK(seen.insert(o).second);
    if (i > 0) CHECK(prev < o);
    CHECK(it.at(i) == it.current());
    prev = o;
    ++i;
  } while (it.advance());
  CHECK(i == it.size());
}

TEST_CASE("enumerator budget and connectivity gates") {
  CHECK_THROWS_AS(RotationEnumerator(make_complete(8)), SearchBudgetError);
  CHECK_THROWS_AS(RotationEnumerator(Graph(3, {{0, 1}})), UnsupportedInput);
}

TEST_CASE("random rotation systems obey the handshake and Euler parity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int max_m = n * (n - 1) / 2;
    const int m = n - 1 + static_cast<int>(rng() % (max_m - n + 2));
    const Graph g = make_random_gnm(n, m, rng());
    if (!is_connected(g)) continue;
    const RotationSystem r = random_rotation(g, rng);
    const FaceSet fs = trace_faces(r);
    CHECK(fs.total_length() == 2 * m);
    CHECK(genus(r) >= 0);
    std::set<Dart> darts;
    for (const auto& f : fs.faces()) darts.insert(f.walk.begin(), f.walk.end());
    CHECK(darts.size() == static_cast<std::size_t>(2 * m));
  }
}
