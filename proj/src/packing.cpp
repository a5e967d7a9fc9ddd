#include "kura/packing.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kura/errors.hpp"
#include "kura/planarity.hpp"

namespace kura {
namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

uint64_t to_mask(const std::vector<int>& verts) {
  uint64_t m = 0;
  for (int v : verts) m |= bit(v);
  return m;
}

void require_small(const Graph& g, const char* fn) {
  if (g.n() > 64)
    throw std::invalid_argument(std::string(fn) +
                                ": supports at most 64 vertices");
}

bool induced_nonplanar(const Graph& g, const std::vector<int>& verts) {
  return !is_planar(induced_subgraph(g, verts));
}

// Shrinks a set with nonplanar induced subgraph to a minimal one: drop the
// first vertex whose removal keeps it nonplanar, repeat to fixpoint.
std::vector<int> minimize_nonplanar_set(const Graph& g, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < s.size(); i++) {
      std::vector<int> t = s;
      t.erase(t.begin() + i);
      if (induced_nonplanar(g, t)) {
        s = std::move(t);
        changed = true;
        break;
      }
    }
  }
  return s;
}

// Witness spanning the minimal set s, relabeled to host vertices. The
// relabeling is monotone, so the witness ordering conventions survive it.
KGraphWitness host_witness_for_set(const Graph& g, const std::vector<int>& s) {
  std::vector<int> old_of_new;
  Graph h = induced_subgraph(g, s, &old_of_new);
  auto w = kuratowski_witness(h);
  if (!w)
    throw std::logic_error("host_witness_for_set: induced subgraph is planar");
  for (int& v : w->branch_vertices) v = old_of_new[v];
  for (auto& path : w->paths)
    for (int& v : path) v = old_of_new[v];
  verify_kgraph_witness(g, *w);
  return *w;
}

// Complete enumeration of minimal K-graph vertex sets: extract a witness,
// shrink to a minimal set, branch on deleting each of its vertices. Any
// other minimal set misses some vertex of the found one, so it survives one
// branch; visited masks keep the tree from re-expanding states.
struct MinimalEnumerator {
  const Graph& g;
  size_t cap;
  uint64_t nodes_left = 250'000;
  bool exhaustive = true;
  bool stopped = false;
  std::set<std::vector<int>> sets{};
  std::set<uint64_t> visited{};

  void rec(uint64_t removed) {
    if (stopped || !visited.insert(removed).second) return;
    if (nodes_left == 0) {
      exhaustive = false;
      stopped = true;
      return;
    }
    nodes_left--;
    std::vector<int> kept;
    for (int v = 0; v < g.n(); v++)
      if (!(removed & bit(v))) kept.push_back(v);
    std::vector<int> old_of_new;
    Graph h = induced_subgraph(g, kept, &old_of_new);
    if (is_planar(h)) return;
    auto w = kuratowski_witness(h);
    std::vector<int> s;
    for (const auto& path : w->paths)
      for (int v : path) s.push_back(old_of_new[v]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    s = minimize_nonplanar_set(g, s);
    if (!sets.count(s)) {
      if (sets.size() == cap) {
        exhaustive = false;
        stopped = true;
        return;
      }
      sets.insert(s);
    }
    for (int v : s) {
      rec(removed | bit(v));
      if (stopped) return;
    }
  }
};

// Sorted size-s subsets of {0..n-1} in (size fixed) lexicographic order;
// stops early when fn returns true.
bool for_each_combination(int n, int s,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  if (s < 0 || s > n) return false;
  std::vector<int> comb(s);
  for (int i = 0; i < s; i++) comb[i] = i;
  while (true) {
    if (fn(comb)) return true;
    int i = s - 1;
    while (i >= 0 && comb[i] == n - s + i) i--;
    if (i < 0) return false;
    comb[i]++;
    for (int j = i + 1; j < s; j++) comb[j] = comb[j - 1] + 1;
  }
}

// Lexicographically first pairwise-disjoint index family of exactly `target`
// masks, exploring indices ascending with include-before-exclude.
std::optional<std::vector<int>> first_packing_of_size(
    const std::vector<uint64_t>& masks, int target) {
  std::optional<std::vector<int>> found;
  std::vector<int> cur;
  std::function<void(size_t, uint64_t)> dfs = [&](size_t i, uint64_t used) {
    if (found) return;
    if (static_cast<int>(cur.size()) == target) {
      found = cur;
      return;
    }
    if (cur.size() + (masks.size() - i) < static_cast<size_t>(target)) return;
    if (!(masks[i] & used)) {
      cur.push_back(static_cast<int>(i));
      dfs(i + 1, used | masks[i]);
      cur.pop_back();
    }
    dfs(i + 1, used);
  };
  dfs(0, 0);
  return found;
}

}  // namespace

std::vector<int> witness_vertices(const KGraphWitness& w) {
  std::vector<int> s;
  for (const auto& path : w.paths)
    for (int v : path) s.push_back(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool packing_certificate_ok(const Graph& g, const PackingCertificate& c,
                            std::string* why) {
  std::vector<uint64_t> masks;
  for (size_t i = 0; i < c.witnesses.size(); i++) {
    std::string sub;
    if (!kgraph_witness_ok(g, c.witnesses[i], &sub)) {
      if (why) *why = "witness " + std::to_string(i) + ": " + sub;
      return false;
    }
    masks.push_back(to_mask(witness_vertices(c.witnesses[i])));
  }
  for (size_t i = 0; i < masks.size(); i++)
    for (size_t j = i + 1; j < masks.size(); j++)
      if (masks[i] & masks[j]) {
        if (why)
          *why = "witnesses " + std::to_string(i) + " and " +
                 std::to_string(j) + " share a vertex";
        return false;
      }
  return true;
}

MinimalKGraphs enumerate_minimal_kgraphs(const Graph& g, int cap) {
  require_small(g, "enumerate_minimal_kgraphs");
  if (cap < 0)
    throw std::invalid_argument("enumerate_minimal_kgraphs: cap must be >= 0");
  MinimalEnumerator en{g, static_cast<size_t>(cap)};
  en.rec(0);
  std::vector<std::vector<int>> ordered(en.sets.begin(), en.sets.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  MinimalKGraphs out;
  out.exhaustive = en.exhaustive;
  for (const auto& s : ordered) out.witnesses.push_back(host_witness_for_set(g, s));
  return out;
}

std::pair<int, PackingCertificate> k_number(const Graph& g, KNumberMode mode,
                                            int cap) {
  MinimalKGraphs mk = enumerate_minimal_kgraphs(g, cap);
  if (mode == KNumberMode::exact && !mk.exhaustive)
    throw budget_error(
        "k_number: minimal K-graph enumeration truncated at cap " +
        std::to_string(cap) + "; raise the cap or use lower mode");
  std::vector<uint64_t> masks;
  for (const auto& w : mk.witnesses) masks.push_back(to_mask(witness_vertices(w)));

  std::vector<int> best;
  if (mode == KNumberMode::lower) {
    uint64_t used = 0;
    for (size_t i = 0; i < masks.size(); i++)
      if (!(masks[i] & used)) {
        best.push_back(static_cast<int>(i));
        used |= masks[i];
      }
  } else {
    uint64_t nodes_left = 10'000'000;
    std::vector<int> cur;
    std::function<void(size_t, uint64_t)> dfs = [&](size_t i, uint64_t used) {
      if (nodes_left-- == 0)
        throw budget_error("k_number: packing search budget exhausted");
      if (cur.size() + (masks.size() - i) <= best.size()) return;
      if (i == masks.size()) {
        best = cur;
        return;
      }
      if (!(masks[i] & used)) {
        cur.push_back(static_cast<int>(i));
        dfs(i + 1, used | masks[i]);
        cur.pop_back();
      }
      dfs(i + 1, used);
    };
    dfs(0, 0);
  }
  PackingCertificate cert;
  for (int i : best) cert.witnesses.push_back(mk.witnesses[i]);
  return {static_cast<int>(best.size()), cert};
}

DeletionSet planar_deletion_set(const Graph& g, uint64_t node_budget) {
  require_small(g, "planar_deletion_set");
  struct Stop {};
  uint64_t nodes = node_budget;
  auto charge = [&]() {
    if (nodes == 0) throw Stop{};
    nodes--;
  };

  // Remaining graph planar? On a nonplanar remainder optionally report the
  // host vertex set of one witness.
  auto planar_or_witness = [&](uint64_t removed, std::vector<int>* wit) {
    std::vector<int> kept;
    for (int v = 0; v < g.n(); v++)
      if (!(removed & bit(v))) kept.push_back(v);
    std::vector<int> old_of_new;
    Graph h = induced_subgraph(g, kept, &old_of_new);
    if (is_planar(h)) return true;
    if (wit) {
      auto w = kuratowski_witness(h);
      for (const auto& path : w->paths)
        for (int v : path) wit->push_back(old_of_new[v]);
      std::sort(wit->begin(), wit->end());
      wit->erase(std::unique(wit->begin(), wit->end()), wit->end());
    }
    return false;
  };

  // Fallback that always planarizes: delete the first witness vertex until
  // planar. Used only when the node budget ran out.
  auto greedy = [&]() {
    std::vector<int> x;
    uint64_t removed = 0;
    for (;;) {
      std::vector<int> wv;
      if (planar_or_witness(removed, &wv)) break;
      x.push_back(wv[0]);
      removed |= bit(wv[0]);
    }
    std::sort(x.begin(), x.end());
    return x;
  };

  // Phase 1: minimum size by iterative deepening; every deleted vertex comes
  // from a witness of the current remainder.
  std::vector<int> found;
  std::function<bool(uint64_t, std::vector<int>&, int)> dfs =
      [&](uint64_t removed, std::vector<int>& chosen, int depth) {
        charge();
        std::vector<int> wv;
        if (planar_or_witness(removed, depth > 0 ? &wv : nullptr)) {
          found = chosen;
          std::sort(found.begin(), found.end());
          return true;
        }
        if (depth == 0) return false;
        for (int v : wv) {
          chosen.push_back(v);
          if (dfs(removed | bit(v), chosen, depth - 1)) return true;
          chosen.pop_back();
        }
        return false;
      };

  int size = -1;
  try {
    for (int target = 0; target <= g.n(); target++) {
      std::vector<int> chosen;
      if (dfs(0, chosen, target)) {
        size = target;
        break;
      }
    }
  } catch (Stop) {
    return {greedy(), false};
  }

  // Phase 2: lexicographically first set of the optimum size. Falls back to
  // the phase-1 set (still minimum) if the budget runs out here.
  DeletionSet out{found, true};
  try {
    for_each_combination(g.n(), size, [&](const std::vector<int>& comb) {
      charge();
      if (planar_or_witness(to_mask(comb), nullptr)) {
        out.vertices = comb;
        return true;
      }
      return false;
    });
  } catch (Stop) {
  }
  return out;
}

bool apex_certificate_ok(const Graph& g, const ApexCertificate& c,
                         uint64_t budget, std::string* why) {
  for (size_t i = 0; i < c.apex_set.size(); i++) {
    int v = c.apex_set[i];
    if (v < 0 || v >= g.n()) {
      if (why) *why = "apex vertex out of range";
      return false;
    }
    if (i && c.apex_set[i - 1] >= v) {
      if (why) *why = "apex set not strictly ascending";
      return false;
    }
  }
  if (c.target_genus < 0) {
    if (why) *why = "negative target genus";
    return false;
  }
  Graph rest = delete_vertices(g, c.apex_set).graph;
  if (!drawable_at_genus(rest, c.target_genus, budget)) {
    if (why) *why = "remainder does not draw at the target genus";
    return false;
  }
  GenusReport fresh = genus_report(rest, budget);
  bool match = fresh.euler_genus == c.achieved.euler_genus &&
               fresh.orientable_genus == c.achieved.orientable_genus &&
               fresh.per_component.size() == c.achieved.per_component.size();
  for (size_t i = 0; match && i < fresh.per_component.size(); i++)
    match = fresh.per_component[i].euler == c.achieved.per_component[i].euler &&
            fresh.per_component[i].orientable ==
                c.achieved.per_component[i].orientable;
  if (!match) {
    if (why) *why = "achieved genus report does not match the remainder";
    return false;
  }
  return true;
}

std::optional<ApexCertificate> apex_to_genus(const Graph& g, int k,
                                             uint64_t budget) {
  require_small(g, "apex_to_genus");
  if (k < 0) throw std::invalid_argument("apex_to_genus: need k >= 0");
  std::optional<ApexCertificate> out;
  for (int s = 0; s <= g.n() && !out; s++)
    for_each_combination(g.n(), s, [&](const std::vector<int>& comb) {
      Graph rest = delete_vertices(g, comb).graph;
      if (!drawable_at_genus(rest, k, budget)) return false;
      out = ApexCertificate{comb, k, genus_report(rest, budget)};
      return true;
    });
  return out;
}

DualityReport duality_report(const Graph& g, int k, uint64_t budget, int cap) {
  if (k < 0) throw std::invalid_argument("duality_report: need k >= 0");
  DualityReport rep;
  rep.k = k;
  MinimalKGraphs mk = enumerate_minimal_kgraphs(g, cap);
  if (!mk.exhaustive)
    throw budget_error(
        "duality_report: minimal K-graph enumeration truncated at cap " +
        std::to_string(cap) + "; raise the cap");
  std::vector<uint64_t> masks;
  for (const auto& w : mk.witnesses) masks.push_back(to_mask(witness_vertices(w)));
  if (auto chosen = first_packing_of_size(masks, k + 1)) {
    rep.outcome = DualityOutcome::packing;
    PackingCertificate cert;
    for (int i : *chosen) cert.witnesses.push_back(mk.witnesses[i]);
    rep.packing = std::move(cert);
    return rep;
  }
  rep.outcome = DualityOutcome::apex;
  rep.apex = apex_to_genus(g, k, budget);
  return rep;
}

}  // namespace kura
