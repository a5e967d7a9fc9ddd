#include "kura/kuratowski.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kura/planarity.hpp"

namespace kura {

std::vector<std::pair<int, int>> witness_model_edges(KuratowskiKind kind) {
  std::vector<std::pair<int, int>> out;
  if (kind == KuratowskiKind::K5) {
    for (int i = 0; i < 5; i++)
      for (int j = i + 1; j < 5; j++) out.push_back({i, j});
  } else {
    for (int i = 0; i < 3; i++)
      for (int j = 3; j < 6; j++) out.push_back({i, j});
  }
  return out;
}

std::optional<KGraphWitness> kuratowski_witness(const Graph& g) {
  if (is_planar(g)) return std::nullopt;

  // Edge-minimize: one pass in sorted edge order suffices, since deleting
  // further edges can only keep previously-planar deletions planar.
  Graph h = g;
  for (auto [u, v] : g.edges()) {
    if (!h.has_edge(u, v)) continue;
    Graph cand = delete_edge(h, u, v);
    if (!is_planar(cand)) h = std::move(cand);
  }

  // h is now edge-minimal nonplanar: a K5 or K3,3 subdivision plus isolated
  // vertices. Classify by degrees.
  std::vector<int> branch;
  int deg3 = 0, deg4 = 0;
  for (int v = 0; v < h.n(); v++) {
    int d = h.degree(v);
    if (d >= 3) {
      branch.push_back(v);
      if (d == 3) deg3++;
      if (d == 4) deg4++;
    }
  }
  KuratowskiKind kind;
  if (deg4 == 5 && deg3 == 0 && branch.size() == 5)
    kind = KuratowskiKind::K5;
  else if (deg3 == 6 && deg4 == 0 && branch.size() == 6)
    kind = KuratowskiKind::K33;
  else
    throw std::logic_error("kuratowski_witness: minimization fixpoint is not a subdivision");

  std::vector<char> is_branch(h.n(), 0);
  for (int b : branch) is_branch[b] = 1;

  // Walk each branch path once, keyed by its endpoint pair.
  std::map<std::pair<int, int>, std::vector<int>> path_of;
  for (int b : branch) {
    for (int x : h.neighbors(b)) {
      std::vector<int> path{b, x};
      int prev = b, cur = x;
      while (!is_branch[cur]) {
        int nxt = -1;
        for (int w : h.neighbors(cur))
          if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
        path.push_back(cur);
      }
      auto key = std::minmax(b, cur);
      if (path_of.count({key.first, key.second})) continue;
      if (path.front() != key.first) std::reverse(path.begin(), path.end());
      path_of[{key.first, key.second}] = std::move(path);
    }
  }

  KGraphWitness w;
  w.kind = kind;
  if (kind == KuratowskiKind::K5) {
    w.branch_vertices = branch;  // already ascending
  } else {
    // Bipartition: the side of branch[0] is everyone it has no path to.
    std::vector<int> part1, part2;
    for (int b : branch) {
      auto key = std::minmax(branch[0], b);
      if (b == branch[0] || !path_of.count({key.first, key.second}))
        part1.push_back(b);
      else
        part2.push_back(b);
    }
    w.branch_vertices = part1;
    w.branch_vertices.insert(w.branch_vertices.end(), part2.begin(), part2.end());
  }

  for (auto [i, j] : witness_model_edges(kind)) {
    int a = w.branch_vertices[i], b = w.branch_vertices[j];
    auto key = std::minmax(a, b);
    auto it = path_of.find({key.first, key.second});
    if (it == path_of.end())
      throw std::logic_error("kuratowski_witness: missing branch path");
    std::vector<int> p = it->second;
    if (p.front() != a) std::reverse(p.begin(), p.end());
    w.paths.push_back(std::move(p));
  }
  return w;
}

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("witness: " + msg);
}

}  // namespace

void verify_kgraph_witness(const Graph& g, const KGraphWitness& w) {
  size_t nb = w.kind == KuratowskiKind::K5 ? 5 : 6;
  size_t np = w.kind == KuratowskiKind::K5 ? 10 : 9;
  if (w.branch_vertices.size() != nb) fail("wrong branch vertex count");
  if (w.paths.size() != np) fail("wrong path count");
  for (int b : w.branch_vertices)
    if (b < 0 || b >= g.n()) fail("branch vertex out of range");
  {
    auto s = w.branch_vertices;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail("branch vertices not distinct");
  }

  auto model = witness_model_edges(w.kind);
  // occurrences[v]: how many paths visit v (branch vertices may repeat only
  // as endpoints; every other vertex belongs to at most one path).
  std::vector<int> occurrences(g.n(), 0);
  std::vector<char> is_branch(g.n(), 0);
  for (int b : w.branch_vertices) is_branch[b] = 1;

  for (size_t t = 0; t < np; t++) {
    const auto& p = w.paths[t];
    if (p.size() < 2) fail("branch path too short");
    int a = w.branch_vertices[model[t].first];
    int b = w.branch_vertices[model[t].second];
    if (!((p.front() == a && p.back() == b) ||
          (p.front() == b && p.back() == a)))
      fail("branch path endpoints do not match its model edge");
    std::vector<char> seen(g.n(), 0);
    for (size_t i = 0; i < p.size(); i++) {
      int v = p[i];
      if (v < 0 || v >= g.n()) fail("path vertex out of range");
      if (seen[v]) fail("path revisits a vertex");
      seen[v] = 1;
      bool endpoint = i == 0 || i + 1 == p.size();
      if (!endpoint && is_branch[v]) fail("branch vertex interior to a path");
      occurrences[v]++;
      if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1]))
        fail("path step is not an edge of the host graph");
    }
  }

  int want_deg = w.kind == KuratowskiKind::K5 ? 4 : 3;
  for (int v = 0; v < g.n(); v++) {
    if (is_branch[v]) {
      if (occurrences[v] != want_deg) fail("branch vertex has wrong path degree");
    } else if (occurrences[v] > 1) {
      fail("paths share an interior vertex");
    }
  }
}

bool kgraph_witness_ok(const Graph& g, const KGraphWitness& w,
                       std::string* why) {
  try {
    verify_kgraph_witness(g, w);
    return true;
  } catch (const std::invalid_argument& e) {
    if (why) *why = e.what();
    return false;
  }
}

}  // namespace kura
