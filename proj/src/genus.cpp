#include "kura/genus.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "kura/errors.hpp"
#include "kura/planarity.hpp"

namespace kura {
namespace {

struct Budget {
  uint64_t left;
  void spend() {
    if (left == 0) throw budget_error("genus: face-trace budget exhausted");
    left--;
  }
};

// Orbit count over (dart, sign) states, divided by 2: every facial walk
// appears once per traversal direction. rot holds exactly the darts of the
// traced subgraph; edges/sig are indexed by dart/2.
int count_face_orbits_halved(const std::vector<std::vector<int>>& rot,
                             const std::vector<std::pair<int, int>>& edges,
                             const std::vector<int>& sig) {
  std::vector<char> vis(4 * edges.size(), 0);
  int orbits = 0;
  for (const auto& darts : rot)
    for (int d0 : darts)
      for (int s0 = 0; s0 < 2; s0++) {
        if (vis[2 * d0 + s0]) continue;
        orbits++;
        int d = d0, s = s0;
        do {
          vis[2 * d + s] = 1;
          auto [a, b] = edges[d / 2];
          int v = d % 2 == 0 ? b : a;  // head of d
          int r = d ^ 1;               // reversed dart, leaves v
          const auto& rv = rot[v];
          int k = static_cast<int>(rv.size());
          int i = 0;
          while (rv[i] != r) i++;
          int nxt = rv[s == 0 ? (i + 1) % k : (i + k - 1) % k];
          s = s ^ (sig[nxt / 2] < 0 ? 1 : 0);
          d = nxt;
        } while (!(d == d0 && s == s0));
      }
  return orbits / 2;
}

// Delete degree-<=1 vertices and suppress degree-2 vertices with nonadjacent
// neighbors; both preserve all genus values. Input connected nonplanar.
Graph simplify_for_genus(Graph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n() && !changed; v++) {
      int d = g.degree(v);
      if (d <= 1) {
        g = delete_vertices(g, {v}).graph;
        changed = true;
      } else if (d == 2) {
        int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
        if (!g.has_edge(a, b)) {
          auto del = delete_vertices(g, {v});
          g = add_edge_copy(del.graph, del.new_of_old[a], del.new_of_old[b]);
          changed = true;
        }
      }
    }
  }
  return g;
}

// DFS over embedding schemes of a connected graph: spanning-tree edges are
// inserted first (signature +1, the normalization), then co-tree edges with
// all corner placements and allowed signs. The Euler contribution
// 2 - V + E - F never decreases along an insertion, so any partial scheme
// exceeding `target` is pruned.
struct SchemeSearch {
  enum class Signs { all_plus, some_minus };

  const Graph& g;
  Budget* budget;
  Signs mode;
  int target = 0;

  std::vector<int> order;  // edge ids, tree edges first
  size_t tree_cnt = 0;
  std::vector<std::vector<int>> rot;
  std::vector<int> sig;
  std::vector<char> vert_in;
  int V = 0, E = 0;

  SchemeSearch(const Graph& graph, Budget* b, Signs m)
      : g(graph), budget(b), mode(m) {
    rot.resize(g.n());
    sig.assign(g.m(), 1);
    vert_in.assign(g.n(), 0);
    std::vector<char> edge_used(g.m(), 0);
    std::vector<int> queue{0};
    std::vector<char> seen(g.n(), 0);
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); qi++) {
      int u = queue[qi];
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          int e = g.edge_index(u, w);
          edge_used[e] = 1;
          order.push_back(e);
          queue.push_back(w);
        }
    }
    tree_cnt = order.size();
    for (int e = 0; e < g.m(); e++)
      if (!edge_used[e]) order.push_back(e);
  }

  int contribution() {
    budget->spend();
    int f = count_face_orbits_halved(rot, g.edges(), sig);
    return 2 - V + E - f;
  }

  bool found(int* out_contribution) {
    vert_in[0] = 1;
    V = 1;
    bool ok = dfs(0, false, out_contribution);
    vert_in[0] = 0;
    V = 0;
    return ok;
  }

  bool dfs(size_t step, bool neg_used, int* out) {
    if (step == order.size()) {
      *out = contribution();
      return *out <= target;
    }
    int e = order[step];
    auto [a, b] = g.edges()[e];
    if (step < tree_cnt) {
      int u = vert_in[a] ? a : b;
      int w = u == a ? b : a;
      int du = 2 * e + (u == a ? 0 : 1);
      size_t su = rot[u].size();
      size_t lo = su == 0 ? 0 : 1;
      for (size_t k = lo; k <= std::max(lo, su); k++) {
        rot[u].insert(rot[u].begin() + k, du);
        rot[w].push_back(du ^ 1);
        vert_in[w] = 1;
        V++;
        E++;
        if (dfs(step + 1, neg_used, out)) return true;
        E--;
        V--;
        vert_in[w] = 0;
        rot[w].pop_back();
        rot[u].erase(rot[u].begin() + k);
      }
      return false;
    }
    int da = 2 * e, db = 2 * e + 1;
    bool last = step + 1 == order.size();
    int nsigns = mode == Signs::all_plus ? 1 : 2;
    for (size_t ka = 1; ka <= rot[a].size(); ka++)
      for (size_t kb = 1; kb <= rot[b].size(); kb++)
        for (int si = 0; si < nsigns; si++) {
          int sgn = si == 0 ? 1 : -1;
          if (mode == Signs::some_minus && last && !neg_used && sgn > 0)
            continue;
          rot[a].insert(rot[a].begin() + ka, da);
          rot[b].insert(rot[b].begin() + kb, db);
          sig[e] = sgn;
          E++;
          int c = contribution();
          bool ok = false;
          if (c <= target) {
            if (step + 1 == order.size()) {
              *out = c;
              ok = true;
            } else {
              ok = dfs(step + 1, neg_used || sgn < 0, out);
            }
          }
          if (!ok) {
            E--;
            sig[e] = 1;
            rot[b].erase(rot[b].begin() + kb);
            rot[a].erase(rot[a].begin() + ka);
          } else {
            return true;
          }
        }
    return false;
  }
};

// Contribution units: orientable2 = 2 * orientable genus (min over all-plus
// schemes), crosscap = min over non-orientable schemes; the Euler genus of
// the component is min(orientable2, crosscap).
struct CompTriple {
  int orientable2;
  int crosscap;
};

int deepen(const Graph& simp, Budget* budget, SchemeSearch::Signs mode,
           int start, int step) {
  int beta = simp.m() - simp.n() + 1;  // every scheme has contribution <= beta
  for (int t = start;; t += step) {
    SchemeSearch s(simp, budget, mode);
    s.target = t;
    int c = 0;
    if (s.found(&c)) return c;
    if (t > beta)
      throw std::logic_error("genus: deepening passed the Betti cap");
  }
}

std::map<std::pair<int, std::vector<std::pair<int, int>>>, CompTriple>&
triple_cache() {
  static std::map<std::pair<int, std::vector<std::pair<int, int>>>, CompTriple>
      cache;
  return cache;
}
std::mutex& triple_cache_mutex() {
  static std::mutex m;
  return m;
}

// g: connected nonplanar component (not yet simplified).
CompTriple nonplanar_component_genus(const Graph& g, Budget* budget) {
  Graph simp = simplify_for_genus(g);
  auto key = std::make_pair(simp.n(), simp.edges());
  {
    std::lock_guard<std::mutex> lock(triple_cache_mutex());
    auto it = triple_cache().find(key);
    if (it != triple_cache().end()) return it->second;
  }
  int m = simp.m(), n = simp.n();
  int lb = std::max(1, m - 3 * n + 6 > 0 ? (m - 3 * n + 6 + 2) / 3 : 1);
  int crosscap =
      deepen(simp, budget, SchemeSearch::Signs::some_minus, lb, 1);
  int or2 = deepen(simp, budget, SchemeSearch::Signs::all_plus,
                   lb + (lb % 2), 2);
  if (crosscap > or2 + 1)
    throw std::logic_error("genus: crosscap exceeds its orientable bound");
  CompTriple t{or2, crosscap};
  std::lock_guard<std::mutex> lock(triple_cache_mutex());
  triple_cache().emplace(key, t);
  return t;
}

void validate_spec(const SurfaceSpec& spec) {
  for (const auto& c : spec.components) {
    if (c.genus < 0)
      throw std::invalid_argument("surface component genus must be >= 0");
    if (!c.orientable && c.genus == 0)
      throw std::invalid_argument(
          "non-orientable surface component needs genus >= 1");
  }
}

}  // namespace

int SurfaceSpec::total_genus() const {
  int t = 0;
  for (const auto& c : components) t += c.genus;
  return t;
}

int trace_faces(const Graph& g, const EmbeddingScheme& s) {
  if (g.n() == 0 || components(g).size() != 1)
    throw std::invalid_argument("trace_faces: graph must be connected");
  if (static_cast<int>(s.rotation.size()) != g.n())
    throw std::invalid_argument("trace_faces: rotation size mismatch");
  if (static_cast<int>(s.signature.size()) != g.m())
    throw std::invalid_argument("trace_faces: signature size mismatch");
  for (int x : s.signature)
    if (x != 1 && x != -1)
      throw std::invalid_argument("trace_faces: signature entries must be +-1");
  std::vector<char> seen(2 * g.m(), 0);
  for (int v = 0; v < g.n(); v++) {
    if (static_cast<int>(s.rotation[v].size()) != g.degree(v))
      throw std::invalid_argument("trace_faces: rotation has wrong length");
    for (int d : s.rotation[v]) {
      if (d < 0 || d >= 2 * g.m() || seen[d])
        throw std::invalid_argument("trace_faces: rotation has a bad dart");
      seen[d] = 1;
      auto [a, b] = g.edges()[d / 2];
      if ((d % 2 == 0 ? a : b) != v)
        throw std::invalid_argument(
            "trace_faces: dart listed at a vertex it does not leave");
    }
  }
  if (g.m() == 0) return 1;  // single vertex: one face
  return count_face_orbits_halved(s.rotation, g.edges(), s.signature);
}

GenusReport genus_report(const Graph& g, uint64_t budget) {
  Budget b{budget};
  GenusReport r;
  for (const auto& comp_verts : components(g)) {
    Graph comp = induced_subgraph(g, comp_verts);
    ComponentGenus cg;
    if (!is_planar(comp)) {
      CompTriple t = nonplanar_component_genus(comp, &b);
      cg.euler = std::min(t.orientable2, t.crosscap);
      cg.orientable = t.orientable2 / 2;
    }
    r.per_component.push_back(cg);
    r.euler_genus += cg.euler;
    r.orientable_genus += cg.orientable;
  }
  return r;
}

int euler_genus_exact(const Graph& g, uint64_t budget) {
  return genus_report(g, budget).euler_genus;
}

int orientable_genus_exact(const Graph& g, uint64_t budget) {
  return genus_report(g, budget).orientable_genus;
}

bool can_draw(const Graph& h, const SurfaceSpec& spec, uint64_t budget) {
  validate_spec(spec);
  Budget b{budget};
  auto comps = components(h);
  if (spec.components.empty()) return comps.empty();

  // Planar components embed in every surface alongside anything else; only
  // nonplanar components constrain the assignment.
  struct Hard {
    int gamma;     // orientable genus
    int euler;     // Euler genus
    int crosscap;  // non-orientable (crosscap) genus
  };
  std::vector<Hard> hard;
  for (const auto& comp_verts : comps) {
    Graph comp = induced_subgraph(h, comp_verts);
    if (is_planar(comp)) continue;
    CompTriple t = nonplanar_component_genus(comp, &b);
    hard.push_back(
        {t.orientable2 / 2, std::min(t.orientable2, t.crosscap), t.crosscap});
  }

  // Per surface component: bundle of assigned hard components is feasible iff
  //   orientable g:      sum(gamma_i) <= g
  //   non-orientable c:  sum(euler_i) + min_i(crosscap_i - euler_i) <= c
  // Both left sides only grow as the bundle grows, so infeasible prefixes
  // prune.
  size_t S = spec.components.size();
  std::vector<int> sum_gamma(S, 0), sum_euler(S, 0), min_delta(S, INT32_MAX);
  auto feasible = [&](size_t si) {
    const auto& sc = spec.components[si];
    if (sc.orientable) return sum_gamma[si] <= sc.genus;
    if (min_delta[si] == INT32_MAX) return true;  // empty bundle
    return sum_euler[si] + min_delta[si] <= sc.genus;
  };
  std::function<bool(size_t)> place = [&](size_t hi) -> bool {
    if (hi == hard.size()) return true;
    for (size_t si = 0; si < S; si++) {
      int og = sum_gamma[si], oe = sum_euler[si], od = min_delta[si];
      sum_gamma[si] += hard[hi].gamma;
      sum_euler[si] += hard[hi].euler;
      min_delta[si] =
          std::min(min_delta[si], hard[hi].crosscap - hard[hi].euler);
      if (feasible(si) && place(hi + 1)) return true;
      sum_gamma[si] = og;
      sum_euler[si] = oe;
      min_delta[si] = od;
    }
    return false;
  };
  return place(0);
}

std::vector<SurfaceSpec> surface_catalog(int total_genus, int max_components) {
  std::vector<SurfaceSpec> out;
  if (total_genus < 0 || max_components < 1) return out;
  SurfaceSpec cur;
  std::function<void(int, int)> rec = [&](int remaining, int last_key) {
    if (!cur.components.empty() && remaining == 0) out.push_back(cur);
    if (static_cast<int>(cur.components.size()) == max_components) return;
    for (int orient = 0; orient < 2; orient++)
      for (int genus = orient == 0 ? 0 : 1; genus <= remaining; genus++) {
        int key = orient * 1000 + genus;
        if (key < last_key) continue;
        cur.components.push_back({orient == 0, genus});
        rec(remaining - genus, key);
        cur.components.pop_back();
      }
  };
  rec(total_genus, -1);
  return out;
}

bool drawable_at_genus(const Graph& h, int k, uint64_t budget) {
  if (k < 0) return false;
  int nonplanar = 0;
  for (const auto& comp : components(h))
    if (!is_planar(induced_subgraph(h, comp))) nonplanar++;
  for (const auto& spec : surface_catalog(k, std::max(1, nonplanar)))
    if (can_draw(h, spec, budget)) return true;
  return false;
}

int min_drawable_genus(const Graph& h, uint64_t budget) {
  for (int k = 0;; k++)
    if (drawable_at_genus(h, k, budget)) return k;
}

KuratowskiGenusCheck verify_kuratowski_genus(int k, uint64_t budget) {
  if (k < 0 || k > 3)
    throw std::invalid_argument("verify_kuratowski_genus: need 0 <= k <= 3");
  KuratowskiGenusCheck rep;
  rep.k = k;

  auto describe_spec = [](const SurfaceSpec& s) {
    std::string d = "[";
    for (size_t i = 0; i < s.components.size(); i++) {
      if (i) d += ",";
      d += (s.components[i].orientable ? "o" : "n") +
           std::to_string(s.components[i].genus);
    }
    return d + "]";
  };

  int max_c = std::max(1, k);
  for (int fives = 0; fives <= k; fives++) {
    std::vector<std::string> kinds(fives, "K5");
    kinds.resize(k, "K33");
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    for (int i = 0; i < fives; i++) {
      for (int a = 0; a < 5; a++)
        for (int c = a + 1; c < 5; c++) edges.push_back({n + a, n + c});
      n += 5;
    }
    for (int i = fives; i < k; i++) {
      for (int a = 0; a < 3; a++)
        for (int c = 0; c < 3; c++) edges.push_back({n + a, n + 3 + c});
      n += 6;
    }
    Graph h(n, edges);
    rep.multisets_checked++;
    std::string name;
    for (int i = 0; i < k; i++) name += (i ? "+" : "") + kinds[i];
    if (k == 0) name = "(empty)";

    for (const auto& spec : surface_catalog(k, max_c)) {
      rep.specs_checked++;
      if (!can_draw(h, spec, budget)) {
        rep.pass = false;
        rep.counterexample = name + " does not draw in genus-" +
                             std::to_string(k) + " spec " + describe_spec(spec);
        return rep;
      }
    }
    for (const auto& spec : surface_catalog(k - 1, max_c)) {
      rep.specs_checked++;
      if (can_draw(h, spec, budget)) {
        rep.pass = false;
        rep.counterexample = name + " draws in genus-" + std::to_string(k - 1) +
                             " spec " + describe_spec(spec);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace kura
