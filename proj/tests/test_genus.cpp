#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "genus_oracle.hpp"
#include "kura/errors.hpp"
#include "kura/generators.hpp"
#include "kura/genus.hpp"
#include "kura/graph.hpp"
#include "kura/planarity.hpp"

using namespace kura;

namespace {

// Oracle rotations list incident edge ids; the library wants darts.
EmbeddingScheme to_scheme(const Graph& g,
                          const std::vector<std::vector<int>>& rot_edges,
                          std::vector<int> sig) {
  EmbeddingScheme s;
  s.rotation.resize(g.n());
  for (int v = 0; v < g.n(); v++)
    for (int e : rot_edges[v])
      s.rotation[v].push_back(2 * e + (g.edges()[e].first == v ? 0 : 1));
  s.signature = std::move(sig);
  return s;
}

Graph random_connected(int n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (components(g).size() == 1) return g;
  }
}

SurfaceSpec spec_of(std::vector<std::pair<bool, int>> comps) {
  SurfaceSpec s;
  for (auto [o, g] : comps) s.components.push_back({o, g});
  return s;
}

}  // namespace

// Uses a graph no other test touches, so the in-process genus cache cannot
// satisfy the call without searching.
TEST_CASE("tiny budget aborts the genus search") {
  CHECK_THROWS_AS(euler_genus_exact(complete_bipartite(3, 4), 3),
                  budget_error);
  // a fresh call with a real budget still succeeds
  CHECK(euler_genus_exact(complete_bipartite(3, 4)) == 1);
}

TEST_CASE("face tracing on forced rotations") {
  Graph k2 = path_graph(2);
  CHECK(trace_faces(k2, {{{0}, {1}}, {1}}) == 1);

  Graph one(1, {});
  CHECK(trace_faces(one, {{{}}, {}}) == 1);

  // triangle: edges (0,1) (0,2) (1,2); degree-2 rotations are forced
  Graph c3 = cycle_graph(3);
  EmbeddingScheme flat{{{0, 2}, {1, 4}, {3, 5}}, {1, 1, 1}};
  CHECK(trace_faces(c3, flat) == 2);
  EmbeddingScheme twisted{{{0, 2}, {1, 4}, {3, 5}}, {-1, 1, 1}};
  CHECK(trace_faces(c3, twisted) == 1);

  Graph c6 = cycle_graph(6);
  EmbeddingScheme hex;
  hex.rotation.resize(6);
  for (int e = 0; e < 6; e++) {
    auto [a, b] = c6.edges()[e];
    hex.rotation[a].push_back(2 * e);
    hex.rotation[b].push_back(2 * e + 1);
  }
  hex.signature.assign(6, 1);
  CHECK(trace_faces(c6, hex) == 2);
}

TEST_CASE("a planar rotation of K4 has four faces") {
  Graph k4 = complete_graph(4);
  EmbeddingScheme s{{{0, 4, 2}, {1, 6, 8}, {3, 10, 7}, {5, 9, 11}},
                    {1, 1, 1, 1, 1, 1}};
  CHECK(trace_faces(k4, s) == 4);
}

TEST_CASE("a one-crosscap scheme for K6") {
  // 10 faces on 6 vertices and 15 edges leaves 2-6+15-10 = 1 crosscap
  Graph k6 = complete_graph(6);
  std::vector<std::vector<int>> rot{{0, 8, 6, 4, 2},    {1, 10, 14, 12, 16},
                                    {3, 18, 22, 20, 11}, {5, 24, 13, 26, 19},
                                    {7, 28, 21, 15, 25}, {9, 17, 27, 23, 29}};
  std::vector<int> sig{1, 1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1, 1};
  CHECK(trace_faces(k6, {rot, sig}) == 10);

  // the independent reference walker agrees, and the signature really is
  // non-orientable (a contribution of 1 would be impossible otherwise)
  std::vector<std::vector<int>> rot_edges(6);
  for (int v = 0; v < 6; v++)
    for (int d : rot[v]) rot_edges[v].push_back(d / 2);
  auto pos = genus_oracle::edge_positions(k6, rot_edges);
  CHECK(genus_oracle::ref_face_count(k6, rot_edges, sig, pos) == 10);
  CHECK_FALSE(genus_oracle::ref_orientable(k6, sig));
}

TEST_CASE("scheme validation rejects malformed input") {
  Graph k2 = path_graph(2);
  Graph two(2, {});
  CHECK_THROWS_AS(trace_faces(two, {{{}, {}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_faces(k2, {{{0}}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_faces(k2, {{{0}, {1}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_faces(k2, {{{0}, {1}}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_faces(k2, {{{1}, {0}}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_faces(k2, {{{0, 1}, {}}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(trace_faces(k2, {{{5}, {1}}, {1}}), std::invalid_argument);
}

TEST_CASE("tracer agrees with the reference walker on random schemes") {
  Rng rng(404);
  int checked = 0;
  for (int trial = 0; trial < 60; trial++) {
    Graph g = random_connected(3 + (int)rng.next_int(0, 3), 0.55, rng);
    std::vector<std::vector<int>> rot_edges(g.n());
    for (int v = 0; v < g.n(); v++) {
      for (int w : g.neighbors(v)) rot_edges[v].push_back(g.edge_index(v, w));
      rng.shuffle(rot_edges[v]);
    }
    std::vector<int> sig(g.m());
    for (int e = 0; e < g.m(); e++) sig[e] = rng.next_bool(0.5) ? -1 : 1;
    auto pos = genus_oracle::edge_positions(g, rot_edges);
    int want = genus_oracle::ref_face_count(g, rot_edges, sig, pos);
    CHECK(trace_faces(g, to_scheme(g, rot_edges, sig)) == want);
    // Euler contribution of any scheme is a valid surface genus
    int c = 2 - g.n() + g.m() - want;
    CHECK(c >= 0);
    if (genus_oracle::ref_orientable(g, sig)) CHECK(c % 2 == 0);
    checked++;
  }
  CHECK(checked == 60);
}

TEST_CASE("search minima equal the exhaustive scheme minima") {
  struct Case {
    const char* name;
    Graph g;
  };
  std::vector<Case> cases{{"K4", complete_graph(4)},
                          {"C6", cycle_graph(6)},
                          {"K33", complete_bipartite(3, 3)},
                          {"K5", complete_graph(5)}};
  for (const auto& [name, g] : cases) {
    CAPTURE(name);
    auto mins = genus_oracle::enumerate_schemes(g);
    auto rep = genus_report(g);
    CHECK(rep.euler_genus == mins.overall);
    CHECK(mins.orientable % 2 == 0);
    CHECK(rep.orientable_genus == mins.orientable / 2);
    // crosscap number via single non-orientable surfaces
    CHECK(can_draw(g, spec_of({{false, mins.nonorientable}})));
    if (mins.nonorientable > 1)
      CHECK_FALSE(can_draw(g, spec_of({{false, mins.nonorientable - 1}})));
  }
}

TEST_CASE("search matches the exhaustive reference on random graphs") {
  Rng rng(77);
  int done = 0;
  while (done < 8) {
    Graph g = random_connected(4 + (int)rng.next_int(0, 2), 0.6, rng);
    if (genus_oracle::scheme_space(g) > 300000) continue;
    auto mins = genus_oracle::enumerate_schemes(g);
    auto rep = genus_report(g);
    CAPTURE(done);
    CHECK(rep.euler_genus == mins.overall);
    CHECK(rep.orientable_genus == mins.orientable / 2);
    done++;
  }
}

TEST_CASE("the classical torus rotation certifies the genus of K7") {
  Graph k7 = complete_graph(7);
  std::vector<std::vector<int>> rot_edges(7);
  for (int i = 0; i < 7; i++)
    for (int step : {1, 3, 2, 6, 4, 5}) {
      int j = (i + step) % 7;
      rot_edges[i].push_back(k7.edge_index(i, j));
    }
  std::vector<int> sig(21, 1);
  CHECK(trace_faces(k7, to_scheme(k7, rot_edges, sig)) == 14);  // 2-7+21-14 = 2

  auto rep = genus_report(k7);
  CHECK(rep.orientable_genus == 1);
  CHECK(rep.euler_genus == 2);
  // K7 fits one torus but not one Klein bottle: its two-sided drawings need
  // an orientable surface even though the genus budget matches
  CHECK(can_draw(k7, spec_of({{true, 1}})));
  CHECK_FALSE(can_draw(k7, spec_of({{false, 2}})));
  CHECK(can_draw(k7, spec_of({{false, 3}})));
}

TEST_CASE("frozen genus values for the named graphs") {
  auto both = [](const Graph& g) {
    auto r = genus_report(g);
    return std::pair<int, int>{r.euler_genus, r.orientable_genus};
  };
  CHECK(both(complete_graph(4)) == std::pair<int, int>{0, 0});
  CHECK(both(cycle_graph(6)) == std::pair<int, int>{0, 0});
  CHECK(both(complete_graph(5)) == std::pair<int, int>{1, 1});
  CHECK(both(complete_bipartite(3, 3)) == std::pair<int, int>{1, 1});
  CHECK(both(complete_graph(6)) == std::pair<int, int>{1, 1});
  CHECK(both(complete_graph(7)) == std::pair<int, int>{2, 1});
  CHECK(both(petersen_graph()) == std::pair<int, int>{1, 1});
}

TEST_CASE("genus adds over disjoint unions") {
  Graph g = disjoint_union(complete_graph(5), complete_bipartite(3, 3));
  auto r = genus_report(g);
  CHECK(r.euler_genus == 2);
  CHECK(r.orientable_genus == 2);
  REQUIRE(r.per_component.size() == 2);
  CHECK(r.per_component[0].euler == 1);
  CHECK(r.per_component[0].orientable == 1);
  CHECK(r.per_component[1].euler == 1);
  CHECK(r.per_component[1].orientable == 1);

  Graph mix = disjoint_union(disjoint_union(complete_graph(5), cycle_graph(6)),
                             complete_graph(4));
  auto rm = genus_report(mix);
  CHECK(rm.euler_genus == 1);
  CHECK(rm.orientable_genus == 1);
  REQUIRE(rm.per_component.size() == 3);
  CHECK(rm.per_component[1].euler == 0);
  CHECK(rm.per_component[2].orientable == 0);

  Graph triple = disjoint_union(
      disjoint_union(complete_graph(5), complete_graph(5)), complete_graph(5));
  CHECK(euler_genus_exact(triple) == 3);
  CHECK(orientable_genus_exact(triple) == 3);

  CHECK(euler_genus_exact(Graph(0, {})) == 0);
  CHECK(genus_report(Graph(0, {})).per_component.empty());
}

TEST_CASE("deleting a vertex never raises genus") {
  Rng rng(1309);
  std::vector<Graph> pool{complete_graph(7), petersen_graph(),
                          complete_bipartite(3, 3)};
  for (int i = 0; i < 3; i++) pool.push_back(random_connected(6, 0.7, rng));
  for (const auto& g : pool) {
    auto before = genus_report(g);
    int v = (int)rng.next_int(0, g.n() - 1);
    auto after = genus_report(delete_vertices(g, {v}).graph);
    CHECK(after.euler_genus <= before.euler_genus);
    CHECK(after.orientable_genus <= before.orientable_genus);
  }
}

TEST_CASE("drawability on surface specs") {
  Graph empty(0, {});
  Graph k5 = complete_graph(5);
  Graph k33 = complete_bipartite(3, 3);
  Graph pair = disjoint_union(k5, k33);

  CHECK(can_draw(empty, spec_of({})));
  CHECK(can_draw(empty, spec_of({{true, 1}})));
  CHECK_FALSE(can_draw(path_graph(1), spec_of({})));

  CHECK(can_draw(k5, spec_of({{true, 1}})));
  CHECK_FALSE(can_draw(k5, spec_of({{true, 0}})));
  CHECK(can_draw(k5, spec_of({{false, 1}})));
  CHECK(can_draw(k5, spec_of({{true, 0}, {true, 1}})));

  CHECK_FALSE(can_draw(pair, spec_of({{true, 1}})));
  CHECK_FALSE(can_draw(pair, spec_of({{false, 1}})));
  CHECK(can_draw(pair, spec_of({{true, 1}, {true, 1}})));
  CHECK(can_draw(pair, spec_of({{true, 1}, {false, 1}})));
  CHECK(can_draw(pair, spec_of({{false, 1}, {false, 1}})));
  CHECK(can_draw(pair, spec_of({{true, 2}})));
  CHECK(can_draw(pair, spec_of({{false, 2}})));
  CHECK_FALSE(can_draw(pair, spec_of({{true, 0}, {false, 1}})));

  // planar components never constrain the drawing
  Graph with_planar = disjoint_union(k5, cycle_graph(6));
  CHECK(can_draw(with_planar, spec_of({{true, 1}})));
  CHECK(can_draw(cycle_graph(6), spec_of({{true, 0}})));
  CHECK(can_draw(cycle_graph(6), spec_of({{false, 1}})));

  CHECK_THROWS_AS(can_draw(k5, spec_of({{false, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(can_draw(k5, spec_of({{true, -1}})), std::invalid_argument);
}

TEST_CASE("kuratowski drawability dichotomy") {
  for (int k = 0; k <= 3; k++) {
    auto chk = verify_kuratowski_genus(k);
    CAPTURE(k);
    CAPTURE(chk.counterexample);
    CHECK(chk.pass);
    CHECK(chk.k == k);
    CHECK(chk.multisets_checked == k + 1);
    CHECK(chk.counterexample.empty());
  }
  auto two = verify_kuratowski_genus(2);
  CHECK(two.specs_checked == 33);
  CHECK_THROWS_AS(verify_kuratowski_genus(4), std::invalid_argument);
  CHECK_THROWS_AS(verify_kuratowski_genus(-1), std::invalid_argument);
}
