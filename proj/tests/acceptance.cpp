// End-to-end gate: eight independent checks over the whole library, each
// printed as a single pass/fail line with its wall time. Exits nonzero if
// any check fails or overruns its time allowance.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kura/generators.hpp"
#include "kura/genus.hpp"
#include "kura/graph.hpp"
#include "kura/hypergraph.hpp"
#include "kura/kuratowski.hpp"
#include "kura/packing.hpp"
#include "kura/planarity.hpp"
#include "kura/society.hpp"
#include "kura/tangles.hpp"
#include "oracles.hpp"

using namespace kura;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += msg;
}

// 1. Every 1- and 2-component Kuratowski multiset draws at total genus k and
//    at no smaller total, over the full surface catalog.
Outcome kuratowski_genus_dichotomy() {
  Outcome o;
  for (int k = 1; k <= 2; k++) {
    KuratowskiGenusCheck c = verify_kuratowski_genus(k);
    if (!c.pass) fail(o, "k=" + std::to_string(k) + ": " + c.counterexample);
    if (c.multisets_checked <= 0 || c.specs_checked <= 0)
      fail(o, "k=" + std::to_string(k) + ": nothing checked");
  }
  return o;
}

// 2. Orientable and Euler genus are additive over disjoint unions drawn from
//    a pool of small standard graphs and edge-deleted Petersen graphs.
Outcome genus_additivity() {
  Outcome o;
  Rng rng(20602);
  for (int iter = 0; iter < 50; iter++) {
    int parts = rng.next_int(2, 4);
    Graph u;
    int sum_euler = 0, sum_orient = 0;
    for (int p = 0; p < parts; p++) {
      Graph part;
      switch (rng.next_int(0, 4)) {
        case 0: part = complete_graph(4); break;
        case 1: part = complete_graph(5); break;
        case 2: part = complete_bipartite(3, 3); break;
        case 3: part = cycle_graph(6); break;
        default: {
          part = petersen_graph();
          int removals = rng.next_int(1, 4);
          for (int r = 0; r < removals; r++) {
            int idx = rng.next_int(0, part.m() - 1);
            auto e = part.edges()[idx];
            part = delete_edge(part, e.first, e.second);
          }
        }
      }
      GenusReport rep = genus_report(part);
      sum_euler += rep.euler_genus;
      sum_orient += rep.orientable_genus;
      u = p == 0 ? part : disjoint_union(u, part);
    }
    GenusReport whole = genus_report(u);
    if (whole.euler_genus != sum_euler || whole.orientable_genus != sum_orient) {
      fail(o, "iteration " + std::to_string(iter) + ": union reported (" +
                  std::to_string(whole.euler_genus) + "," +
                  std::to_string(whole.orientable_genus) + "), parts sum to (" +
                  std::to_string(sum_euler) + "," + std::to_string(sum_orient) +
                  ")");
      break;
    }
  }
  return o;
}

// 3. The packing-covering inequality holds on 200 random hypergraphs with
//    exhaustively computed metrics, and the triangle edge family hits its
//    known values exactly.
Outcome hypergraph_bound() {
  Outcome o;
  Rng rng(30603);
  for (int iter = 0; iter < 200; iter++) {
    int n = rng.next_int(1, 8);
    int m = rng.next_int(1, 8);
    int max_edge = rng.next_int(1, n);
    Hypergraph h = random_hypergraph(n, m, max_edge, rng);
    DingCheck c = verify_ding_bound(h);
    if (!c.pass) {
      fail(o, "iteration " + std::to_string(iter) + ": tau " +
                  std::to_string(c.metrics.tau) + " exceeds bound " +
                  c.metrics.ding_bound.get_str());
      break;
    }
  }
  Hypergraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  DingCheck c = verify_ding_bound(tri);
  if (c.metrics.tau != 2 || c.metrics.nu != 1 || c.metrics.lambda != 3 ||
      c.metrics.ding_bound != 11088 || !c.pass)
    fail(o, "triangle family gave (tau,nu,lambda,bound)=(" +
                std::to_string(c.metrics.tau) + "," +
                std::to_string(c.metrics.nu) + "," +
                std::to_string(c.metrics.lambda) + "," +
                c.metrics.ding_bound.get_str() + ")");
  return o;
}

// 4. On random societies, a cross exists exactly when the society is not
//    drawable in a disc.
Outcome cross_rural_dichotomy() {
  Outcome o;
  Rng rng(40604);
  int disagreements = 0;
  for (int iter = 0; iter < 500; iter++) {
    int n = rng.next_int(4, 10);
    int bs = rng.next_int(4, std::min(6, n));
    Society s = random_society(n, bs, rng);
    auto cross = find_cross(s);
    bool rural = is_rural(s);
    if (cross.has_value() == rural) disagreements++;
    std::string why;
    if (cross && !cross_ok(s, *cross, &why))
      fail(o, "iteration " + std::to_string(iter) + ": bad cross: " + why);
  }
  if (disagreements != 0)
    fail(o, std::to_string(disagreements) + " cross/rural disagreements");
  return o;
}

// 5. Every hypothesis-satisfying disc-plus-cross configuration is nonplanar,
//    including the minimum-size instance.
Outcome cross_config_nonplanarity() {
  Outcome o;
  Rng rng(50605);
  for (int iter = 0; iter < 100; iter++) {
    CrossConfig cfg = random_cross_config(rng);
    try {
      if (verify_cross_config_nonplanar(cfg))
        fail(o, "iteration " + std::to_string(iter) + ": planar union");
    } catch (const std::exception& e) {
      fail(o, "iteration " + std::to_string(iter) + ": " + e.what());
      break;
    }
  }
  CrossConfig ext = extremal_cross_config();
  if (ext.t != 8) fail(o, "extremal instance has t=" + std::to_string(ext.t));
  if (verify_cross_config_nonplanar(ext))
    fail(o, "extremal instance is planar");
  return o;
}

// 6. Planarity answers and extracted witnesses agree with a brute-force
//    subdivision search over every isomorphism class on up to 7 vertices.
Outcome planarity_soundness() {
  Outcome o;
  if (oracle::iso_classes(7).size() != 1044) {
    fail(o, "expected 1044 classes on 7 vertices, got " +
                std::to_string(oracle::iso_classes(7).size()));
    return o;
  }
  long checked = 0;
  for (int n = 1; n <= 7 && o.pass; n++) {
    for (uint32_t mask : oracle::iso_classes(n)) {
      Graph g = oracle::graph_of_mask(mask, n);
      bool planar = is_planar(g);
      bool oracle_planar = !oracle::ref_has_kuratowski_subdivision(g);
      auto w = kuratowski_witness(g);
      if (planar != oracle_planar || w.has_value() != !planar) {
        fail(o, "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
        break;
      }
      std::string why;
      if (w && !kgraph_witness_ok(g, *w, &why)) {
        fail(o, "n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                    ": bad witness: " + why);
        break;
      }
      checked++;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " classes";
  return o;
}

// 7. The planar-side orientation yields a matted tangle on K6 at order 4,
//    refuses planar graphs with an axiom violation, and reports the
//    two-nonplanar-sides obstruction on K5 + K5 at order 1.
Outcome tangle_outcomes() {
  Outcome o;
  TangleResult k6 = planar_side_tangle(complete_graph(6), 4);
  if (k6.outcome != TangleOutcome::tangle || !k6.tangle.has_value())
    fail(o, "K6 order 4 did not produce a tangle");
  else {
    TangleCheck c = verify_tangle_axioms(complete_graph(6), *k6.tangle);
    if (!c.pass) fail(o, "K6 tangle breaks " + c.axiom);
    if (!c.matted) fail(o, "K6 tangle is not matted");
    if (k6.tangle->order != 4) fail(o, "K6 tangle has wrong order");
  }

  Rng rng(70607);
  std::vector<Graph> planars = {complete_graph(4), cycle_graph(6),
                                path_graph(5), complete_bipartite(2, 3)};
  for (int i = 0; i < 4; i++) {
    int pn = rng.next_int(5, 8);
    planars.push_back(random_planar_graph(pn, 0.3, rng));
  }
  for (size_t i = 0; i < planars.size(); i++) {
    for (int theta = 1; theta <= 3; theta++) {
      TangleResult r = planar_side_tangle(planars[i], theta);
      if (r.outcome != TangleOutcome::axiom_violation) {
        fail(o, "planar graph " + std::to_string(i) + " at order " +
                    std::to_string(theta) + " did not report a violation");
        break;
      }
    }
  }

  TangleResult two = planar_side_tangle(kuratowski_union({"K5", "K5"}), 1);
  if (two.outcome != TangleOutcome::both_sides_nonplanar)
    fail(o, "K5+K5 at order 1 missed the two-nonplanar-sides obstruction");
  return o;
}

// 8. On a seeded corpus, every instance gets the certificate its packing
//    number dictates, certificates re-verify, and the packing number never
//    exceeds the planar deletion number.
Outcome duality_survey() {
  Outcome o;
  Rng rng(80608);
  std::vector<Graph> corpus = {
      complete_graph(4),
      complete_graph(5),
      complete_graph(6),
      complete_bipartite(3, 3),
      delete_edge(complete_graph(5), 0, 1),
      petersen_graph(),
      cycle_graph(6),
      kuratowski_union({"K5", "K33"}),
      kuratowski_union({"K5", "K5"}),
      kuratowski_union({"K33", "K33"}),
  };
  for (int i = 0; i < 40; i++) {
    int n = rng.next_int(4, 9);
    double p = 0.2 + 0.5 * rng.next_unit();
    corpus.push_back(random_graph(n, p, rng));
  }
  for (int i = 0; i < 15; i++) {
    int n = rng.next_int(10, 12);
    double p = 0.12 + 0.13 * rng.next_unit();
    corpus.push_back(random_graph(n, p, rng));
  }
  for (int i = 0; i < 20; i++) {
    int base = rng.next_int(5, 8);
    int apexes = rng.next_int(0, base <= 6 ? 2 : 1);
    corpus.push_back(random_apex_planar(base, apexes, rng));
  }
  for (int i = 0; i < 15; i++) {
    int n = rng.next_int(6, 12);
    double drop = 0.1 + 0.2 * rng.next_unit();
    corpus.push_back(random_planar_graph(n, drop, rng));
  }
  if (corpus.size() != 100) {
    fail(o, "corpus has " + std::to_string(corpus.size()) + " graphs");
    return o;
  }

  for (size_t i = 0; i < corpus.size() && o.pass; i++) {
    const Graph& g = corpus[i];
    auto [kn, cert] = k_number(g);
    std::string tag = "instance " + std::to_string(i);
    std::string why;
    if (!packing_certificate_ok(g, cert, &why) ||
        static_cast<int>(cert.witnesses.size()) != kn) {
      fail(o, tag + ": packing-number certificate: " + why);
      break;
    }
    DeletionSet del = planar_deletion_set(g);
    if (kn > static_cast<int>(del.vertices.size())) {
      fail(o, tag + ": packing number " + std::to_string(kn) +
                  " exceeds deletion set size " +
                  std::to_string(del.vertices.size()));
      break;
    }
    for (int k = 0; k <= 1 && o.pass; k++) {
      DualityReport rep = duality_report(g, k);
      std::string ktag = tag + " k=" + std::to_string(k);
      if (kn <= k) {
        if (rep.outcome != DualityOutcome::apex || !rep.apex.has_value()) {
          fail(o, ktag + ": expected an apex certificate");
        } else if (rep.apex->target_genus != k ||
                   !apex_certificate_ok(g, *rep.apex, default_genus_budget,
                                        &why)) {
          fail(o, ktag + ": apex certificate: " + why);
        }
      } else {
        if (rep.outcome != DualityOutcome::packing ||
            !rep.packing.has_value()) {
          fail(o, ktag + ": expected a packing certificate");
        } else if (static_cast<int>(rep.packing->witnesses.size()) != k + 1 ||
                   !packing_certificate_ok(g, *rep.packing, &why)) {
          fail(o, ktag + ": packing certificate: " + why);
        }
      }
    }
  }
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"kuratowski genus dichotomy (k=1,2)", 300, kuratowski_genus_dichotomy},
      {"genus additivity over 50 disjoint unions", 600, genus_additivity},
      {"packing-covering bound on 200 hypergraphs", 60, hypergraph_bound},
      {"cross/rural dichotomy on 500 societies", 300, cross_rural_dichotomy},
      {"100 cross configurations all nonplanar", 300, cross_config_nonplanarity},
      {"planarity vs brute force on <=7 vertices", 300, planarity_soundness},
      {"tangle outcomes on K6, planar, K5+K5", 120, tangle_outcomes},
      {"duality certificates on 100-graph corpus", 900, duality_survey},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); i++) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (o.pass && secs > criteria[i].limit_seconds) {
      o.pass = false;
      o.detail = "over time limit";
    }
    if (!o.pass) failures++;
    std::printf("criterion %zu: %s (%.1fs) %s%s%s\n", i + 1,
                o.pass ? "pass" : "FAIL", secs, criteria[i].name,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
