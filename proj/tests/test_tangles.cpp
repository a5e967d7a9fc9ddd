#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kura/errors.hpp"
#include "kura/generators.hpp"
#include "kura/graph.hpp"
#include "kura/json_io.hpp"
#include "kura/planarity.hpp"
#include "kura/tangles.hpp"

using namespace kura;

namespace {

// Independent reference: sweep all edge bipartitions with the first edge
// pinned left, derive the reduced vertex sets directly.
std::vector<Separation> brute_separations(const Graph& g, int theta) {
  std::vector<Separation> out;
  if (theta == 0) return out;
  long masks = g.m() == 0 ? 1 : (1L << (g.m() - 1));
  for (long mask = 0; mask < masks; mask++) {
    std::vector<int> side(g.m(), 0);
    for (int e = 1; e < g.m(); e++) side[e] = (mask >> (e - 1)) & 1;
    std::vector<char> left(g.n(), 0), right(g.n(), 0);
    for (int e = 0; e < g.m(); e++) {
      auto [u, v] = g.edges()[e];
      (side[e] ? right : left)[u] = 1;
      (side[e] ? right : left)[v] = 1;
    }
    int order = 0;
    for (int v = 0; v < g.n(); v++) order += (left[v] && right[v]);
    if (order >= theta) continue;
    Separation s;
    for (int v = 0; v < g.n(); v++) {
      if (left[v] || g.degree(v) == 0) s.left_vertices.push_back(v);
      if (right[v]) s.right_vertices.push_back(v);
    }
    s.edge_side = std::move(side);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> separation_corpus() {
  std::vector<std::pair<std::string, Graph>> corpus;
  corpus.emplace_back("K2", complete_graph(2));
  corpus.emplace_back("K3", complete_graph(3));
  corpus.emplace_back("P5", path_graph(5));
  corpus.emplace_back("C6", cycle_graph(6));
  corpus.emplace_back("star", Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
  corpus.emplace_back("K4", complete_graph(4));
  corpus.emplace_back("K5", complete_graph(5));
  corpus.emplace_back("K23", complete_bipartite(2, 3));
  corpus.emplace_back("K33", complete_bipartite(3, 3));
  corpus.emplace_back("K6", complete_graph(6));
  corpus.emplace_back("petersen", petersen_graph());
  corpus.emplace_back("isolated", Graph(5, {{0, 1}, {2, 3}}));
  Rng rng(7070);
  for (int i = 0; i < 10; i++) {
    int n = rng.next_int(4, 8);
    Graph g = random_graph(n, 0.25 + 0.5 * rng.next_unit(), rng);
    if (g.m() <= 18) corpus.emplace_back("random", std::move(g));
  }
  return corpus;
}

// Count tangle members grouped by how many edges their left side holds.
std::map<int, int> left_size_histogram(const Tangle& t) {
  std::map<int, int> hist;
  for (const Separation& m : t.members) {
    int e = 0;
    for (int b : m.edge_side) e += (b == 0);
    hist[e]++;
  }
  return hist;
}

}  // namespace

TEST_CASE("separation validity, reversal, order") {
  Graph k4 = complete_graph(4);
  auto seps = enumerate_separations(k4, 4);
  REQUIRE(!seps.empty());
  for (const Separation& s : seps) {
    std::string why;
    CHECK_MESSAGE(separation_ok(k4, s, &why), why);
    CHECK(separation_order(s) < 4);
    Separation rev = reverse_separation(k4, s);
    CHECK(separation_ok(k4, rev));
    CHECK(separation_order(rev) == separation_order(s));
    CHECK(reverse_separation(k4, rev) == s);
    CHECK(s.edge_side[0] == 0);  // canonical orientation pins edge 0 left
  }

  Separation bad;
  bad.left_vertices = {0, 1};
  bad.right_vertices = {2, 3};
  bad.edge_side = {0, 0, 0, 0, 0, 0};
  CHECK_FALSE(separation_ok(k4, bad));  // edges reach outside the left side

  Separation wrong_len;
  wrong_len.left_vertices = {0, 1, 2, 3};
  wrong_len.right_vertices = {};
  wrong_len.edge_side = {0, 0};
  CHECK_FALSE(separation_ok(k4, wrong_len));

  Separation uncovered;
  uncovered.left_vertices = {0, 1};
  uncovered.right_vertices = {1, 2};
  uncovered.edge_side = {0, 0, 1, 1, 1, 1};
  CHECK_FALSE(separation_ok(k4, uncovered));  // vertex 3 on neither side
}

TEST_CASE("separation enumeration matches a brute-force bipartition sweep") {
  for (const auto& [name, g] : separation_corpus()) {
    for (int theta = 0; theta <= 4; theta++) {
      auto fast = enumerate_separations(g, theta);
      auto slow = brute_separations(g, theta);
      std::set<Separation> fs(fast.begin(), fast.end());
      std::set<Separation> ss(slow.begin(), slow.end());
      CHECK_MESSAGE(fast.size() == slow.size(), name << " theta=" << theta);
      CHECK_MESSAGE(fs == ss, name << " theta=" << theta);
      CHECK(std::is_sorted(fast.begin(), fast.end()));
      for (const Separation& s : fast) CHECK(separation_ok(g, s));
    }
  }
}

TEST_CASE("separation enumeration on the stated instances") {
  auto k2 = enumerate_separations(complete_graph(2), 1);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].left_vertices == std::vector<int>{0, 1});
  CHECK(k2[0].right_vertices.empty());
  CHECK(separation_order(k2[0]) == 0);

  // The whole-graph split is the only order-0 separation of a triangle;
  // its two orientations are one unordered pair.
  auto k3 = enumerate_separations(complete_graph(3), 1);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].left_vertices == std::vector<int>{0, 1, 2});
  CHECK(k3[0].right_vertices.empty());

  CHECK(enumerate_separations(complete_graph(4), 0).empty());
  CHECK(enumerate_separations(petersen_graph(), 0).empty());
}

TEST_CASE("separation enumeration refuses beyond its exactness caps") {
  CHECK_THROWS_AS(enumerate_separations(complete_graph(4), 5), budget_error);
  Graph big = complete_graph(8);              // 28 edges
  big = delete_edge(big, 0, 1);
  big = delete_edge(big, 2, 3);
  big = delete_edge(big, 4, 5);               // 25 edges, above the cap
  CHECK_THROWS_AS(enumerate_separations(big, 1), budget_error);
  CHECK(enumerate_separations(big, 0).empty());
}

TEST_CASE("planar graphs never carry a planar-side tangle") {
  for (auto [g, theta] : {std::pair{complete_graph(4), 1},
                          {complete_graph(4), 2},
                          {path_graph(5), 2},
                          {cycle_graph(6), 3},
                          {Graph(3, {}), 1}}) {
    TangleResult r = planar_side_tangle(g, theta);
    REQUIRE(r.outcome == TangleOutcome::axiom_violation);
    CHECK(r.check.axiom == "axiom3");
    REQUIRE(r.check.witness.size() == 1);
    // the offending member keeps every vertex on its left side
    CHECK(static_cast<int>(r.check.witness[0].left_vertices.size()) == g.n());
    CHECK(is_planar(separation_side(g, r.check.witness[0], 0)));
    CHECK_FALSE(r.tangle.has_value());
  }
}

TEST_CASE("a both-sides-nonplanar separation is found when one exists") {
  Graph two_k5 = disjoint_union(complete_graph(5), complete_graph(5));
  for (int theta : {1, 2, 3}) {
    TangleResult r = planar_side_tangle(two_k5, theta);
    REQUIRE(r.outcome == TangleOutcome::both_sides_nonplanar);
    REQUIRE(r.both_nonplanar.has_value());
    const Separation& s = *r.both_nonplanar;
    CHECK(separation_ok(two_k5, s));
    CHECK(separation_order(s) < theta);
    CHECK_FALSE(is_planar(separation_side(two_k5, s, 0)));
    CHECK_FALSE(is_planar(separation_side(two_k5, s, 1)));
  }
}

TEST_CASE("K6 carries a matted order-4 tangle with 96 members") {
  Graph k6 = complete_graph(6);
  TangleResult r = planar_side_tangle(k6, 4);
  REQUIRE(r.outcome == TangleOutcome::tangle);
  REQUIRE(r.tangle.has_value());
  CHECK(r.check.pass);
  CHECK(r.check.matted);
  CHECK(r.tangle->order == 4);
  CHECK(r.tangle->members.size() == 96);

  // Left sides: the empty graph, one edge (15), two adjacent edges (6*10),
  // or a triangle (20) — every bounded side of an order-<4 split of K6.
  std::map<int, int> hist = left_size_histogram(*r.tangle);
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 15}, {2, 60}, {3, 20}});

  TangleCheck again = verify_tangle_axioms(k6, *r.tangle);
  CHECK(again.pass);
  CHECK(again.matted);
}

TEST_CASE("tangles of small order on the singly nonplanar graphs") {
  for (Graph g : {complete_graph(5), complete_bipartite(3, 3)}) {
    for (int theta : {1, 2}) {
      TangleResult r = planar_side_tangle(g, theta);
      REQUIRE(r.outcome == TangleOutcome::tangle);
      CHECK(r.check.matted);
      REQUIRE(r.tangle->members.size() == 1);
      // sole member: empty left side against the whole graph
      CHECK(r.tangle->members[0].left_vertices.empty());
      CHECK(static_cast<int>(r.tangle->members[0].right_vertices.size()) ==
            g.n());
    }
    // One edge removed leaves these graphs planar, so at theta 3 the
    // near-spanning planar side violates the all-vertices axiom.
    TangleResult r3 = planar_side_tangle(g, 3);
    REQUIRE(r3.outcome == TangleOutcome::axiom_violation);
    CHECK(r3.check.axiom == "axiom3");
    const Separation& w = r3.check.witness[0];
    CHECK(static_cast<int>(w.left_vertices.size()) == g.n());
    int right_edges = 0;
    for (int b : w.edge_side) right_edges += b;
    CHECK(right_edges == 1);
  }
}

TEST_CASE("the Petersen graph carries a matted order-4 tangle") {
  TangleResult r = planar_side_tangle(petersen_graph(), 4);
  REQUIRE(r.outcome == TangleOutcome::tangle);
  CHECK(r.check.matted);
  CHECK(r.tangle->members.size() == 56);
  std::map<int, int> hist = left_size_histogram(*r.tangle);
  // empty, one edge, two adjacent edges, a full vertex star
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 15}, {2, 30}, {3, 10}});
}

TEST_CASE("planar-side outcomes are consistent on a seeded corpus") {
  Rng rng(6161);
  int tangles = 0, splits = 0, violations = 0;
  for (int iter = 0; iter < 40; iter++) {
    int n = rng.next_int(4, 7);
    Graph g = random_graph(n, 0.3 + 0.5 * rng.next_unit(), rng);
    if (g.m() > 18 || g.m() == 0) continue;
    for (int theta = 1; theta <= 3; theta++) {
      TangleResult r = planar_side_tangle(g, theta);
      bool split_exists = false;
      for (const Separation& p : enumerate_separations(g, theta))
        if (!is_planar(separation_side(g, p, 0)) &&
            !is_planar(separation_side(g, p, 1)))
          split_exists = true;
      CHECK((r.outcome == TangleOutcome::both_sides_nonplanar) ==
            split_exists);
      if (r.outcome == TangleOutcome::tangle) {
        tangles++;
        CHECK(r.check.pass);
        CHECK(r.check.matted);
        for (const Separation& m : r.tangle->members)
          CHECK(is_planar(separation_side(g, m, 0)));
      } else if (r.outcome == TangleOutcome::both_sides_nonplanar) {
        splits++;
      } else {
        violations++;
        if (r.check.axiom == "axiom2") {
          REQUIRE(r.check.witness.size() == 3);
          std::set<int> vcover;
          std::set<int> ecover;
          for (const Separation& w : r.check.witness) {
            for (int v : w.left_vertices) vcover.insert(v);
            for (int e = 0; e < g.m(); e++)
              if (w.edge_side[e] == 0) ecover.insert(e);
          }
          CHECK(static_cast<int>(vcover.size()) == g.n());
          CHECK(static_cast<int>(ecover.size()) == g.m());
        } else if (r.check.axiom == "axiom3") {
          CHECK(static_cast<int>(r.check.witness[0].left_vertices.size()) ==
                g.n());
        }
      }
    }
  }
  CHECK(tangles > 0);
  CHECK(violations > 0);
}

TEST_CASE("hand-damaged tangles fail the named axiom") {
  Graph k6 = complete_graph(6);
  Tangle good = *planar_side_tangle(k6, 4).tangle;

  Tangle missing = good;
  Separation removed = missing.members.front();  // whole graph on the right
  missing.members.erase(missing.members.begin());
  TangleCheck c1 = verify_tangle_axioms(k6, missing);
  CHECK_FALSE(c1.pass);
  CHECK(c1.axiom == "axiom1");
  REQUIRE(c1.witness.size() == 1);
  CHECK(reverse_separation(k6, c1.witness[0]) == removed);

  Tangle spanning = good;
  Separation whole;
  whole.left_vertices = {0, 1, 2, 3, 4, 5};
  whole.edge_side.assign(k6.m(), 0);
  spanning.members.push_back(whole);
  TangleCheck c3 = verify_tangle_axioms(k6, spanning);
  CHECK_FALSE(c3.pass);
  CHECK(c3.axiom == "axiom3");
  CHECK(c3.witness[0] == whole);

  // Two arcs of a path jointly covering it: the union axiom bites.
  Graph p3 = path_graph(3);
  Separation all_right;
  all_right.right_vertices = {0, 1, 2};
  all_right.edge_side = {1, 1};
  Separation first_edge;
  first_edge.left_vertices = {0, 1};
  first_edge.right_vertices = {1, 2};
  first_edge.edge_side = {0, 1};
  Separation second_edge;
  second_edge.left_vertices = {1, 2};
  second_edge.right_vertices = {0, 1};
  second_edge.edge_side = {1, 0};
  Tangle covering;
  covering.order = 2;
  covering.members = {all_right, first_edge, second_edge};
  TangleCheck c2 = verify_tangle_axioms(p3, covering);
  CHECK_FALSE(c2.pass);
  CHECK(c2.axiom == "axiom2");
  CHECK(c2.witness.size() == 3);
  CHECK(c2.matted);
}

TEST_CASE("malformed tangle members are rejected") {
  Graph k6 = complete_graph(6);
  Tangle good = *planar_side_tangle(k6, 4).tangle;

  Tangle fattened = good;
  fattened.members[1].left_vertices = {0, 1, 2, 3, 4, 5};  // padded, unreduced
  CHECK_THROWS_AS(verify_tangle_axioms(k6, fattened), std::invalid_argument);

  Tangle duplicated = good;
  duplicated.members.push_back(duplicated.members[0]);
  CHECK_THROWS_AS(verify_tangle_axioms(k6, duplicated), std::invalid_argument);

  Tangle overflowing = good;
  overflowing.order = 2;  // members of order 2 and 3 now exceed the order
  CHECK_THROWS_AS(verify_tangle_axioms(k6, overflowing),
                  std::invalid_argument);

  Tangle ragged = good;
  ragged.members[0].edge_side.pop_back();
  CHECK_THROWS_AS(verify_tangle_axioms(k6, ragged), std::invalid_argument);
}

TEST_CASE("deleting one vertex leaves a tangle one order lower") {
  Graph k6 = complete_graph(6);
  Tangle t = *planar_side_tangle(k6, 4).tangle;
  for (int v = 0; v < 6; v++) {
    Tangle smaller = tangle_delete(k6, t, {v});
    CHECK(smaller.order == 3);
    CHECK(smaller.members.size() == 11);  // whole-graph split + 10 edges
    VertexDeletion del = delete_vertices(k6, {v});
    TangleCheck check = verify_tangle_axioms(del.graph, smaller);
    CHECK(check.pass);
    CHECK(check.matted);
  }

  Graph k5 = complete_graph(5);
  Tangle t5 = *planar_side_tangle(k5, 2).tangle;
  for (int v = 0; v < 5; v++) {
    Tangle smaller = tangle_delete(k5, t5, {v});
    CHECK(smaller.order == 1);
    VertexDeletion del = delete_vertices(k5, {v});
    CHECK(verify_tangle_axioms(del.graph, smaller).pass);
  }

  // Deleting nothing keeps the tangle intact (up to member order).
  Tangle same = tangle_delete(k6, t, {});
  CHECK(same.order == 4);
  std::set<Separation> a(t.members.begin(), t.members.end());
  std::set<Separation> b(same.members.begin(), same.members.end());
  CHECK(a == b);

  CHECK_THROWS_AS(tangle_delete(k6, t, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tangle_delete(k6, t, {9}), std::invalid_argument);
  CHECK_THROWS_AS(tangle_delete(k6, t, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("tangle serialization round trips") {
  Graph k6 = complete_graph(6);
  TangleResult r = planar_side_tangle(k6, 4);
  nlohmann::json jt = tangle_to_json(*r.tangle);
  Tangle back = tangle_from_json(jt);
  CHECK(back.order == r.tangle->order);
  CHECK(back.members == r.tangle->members);
  CHECK(tangle_to_json(back).dump() == jt.dump());

  nlohmann::json jr = tangle_result_to_json(r);
  CHECK(jr.at("outcome") == "tangle");
  CHECK(jr.at("matted") == true);

  Graph two_k5 = disjoint_union(complete_graph(5), complete_graph(5));
  nlohmann::json js =
      tangle_result_to_json(planar_side_tangle(two_k5, 1));
  CHECK(js.at("outcome") == "both_sides_nonplanar");
  CHECK(js.contains("separation"));

  nlohmann::json jv =
      tangle_result_to_json(planar_side_tangle(complete_graph(4), 2));
  CHECK(jv.at("outcome") == "axiom_violation");
  CHECK(jv.at("axiom") == "axiom3");

  const Separation& s = r.tangle->members[5];
  nlohmann::json jsep = separation_to_json(s);
  CHECK(separation_from_json(jsep) == s);
  nlohmann::json inconsistent = jsep;
  inconsistent["interface"] = std::vector<int>{0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(separation_from_json(inconsistent), std::invalid_argument);
}
