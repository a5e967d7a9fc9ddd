#include "kura/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace kura {

uint64_t Rng::next_below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
  uint64_t r;
  do {
    r = eng_();
  } while (r >= lim);
  return r % bound;
}

int Rng::next_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("next_int: empty range");
  return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo) + 1));
}

double Rng::next_unit() {
  return static_cast<double>(eng_() >> 11) * 0x1p-53;
}

Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) e.push_back({i, j});
  return Graph(k, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; i++)
    for (int j = 0; j < b; j++) e.push_back({i, a + j});
  return Graph(a + b, e);
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph: need k >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; i++) e.push_back({i, (i + 1) % k});
  return Graph(k, e);
}

Graph path_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; i++) e.push_back({i, i + 1});
  return Graph(k, e);
}

Graph petersen_graph() {
  // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; i++) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
    e.push_back({i, 5 + i});
  }
  return Graph(10, e);
}

Graph kuratowski_union(const std::vector<std::string>& kinds) {
  Graph g(0, {});
  for (const auto& kind : kinds) {
    if (kind == "K5")
      g = disjoint_union(g, complete_graph(5));
    else if (kind == "K33")
      g = disjoint_union(g, complete_bipartite(3, 3));
    else
      throw std::invalid_argument("kuratowski_union: kind must be K5 or K33");
  }
  return g;
}

Graph random_graph(int n, double p, Rng& rng) {
  if (n < 0) throw std::invalid_argument("random_graph: n must be >= 0");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p must be in [0,1]");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (rng.next_bool(p)) e.push_back({i, j});
  return Graph(n, e);
}

Graph random_planar_graph(int n, double drop, Rng& rng) {
  if (n < 0) throw std::invalid_argument("random_planar_graph: n must be >= 0");
  std::vector<std::pair<int, int>> e;
  if (n == 2) e.push_back({0, 1});
  if (n >= 3) {
    // grow a random stacked triangulation, then sparsify
    e = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; v++) {
      size_t f = rng.next_below(faces.size());
      auto [a, b, c] = faces[f];
      e.push_back({a, v});
      e.push_back({b, v});
      e.push_back({c, v});
      faces[f] = {a, b, v};
      faces.push_back({a, c, v});
      faces.push_back({b, c, v});
    }
    if (drop > 0.0) {
      std::vector<std::pair<int, int>> kept;
      for (auto& ed : e)
        if (!rng.next_bool(drop)) kept.push_back(ed);
      e = kept;
    }
  }
  return Graph(n, e);
}

Graph random_apex_planar(int base_size, int apex_count, Rng& rng) {
  if (base_size < 0 || apex_count < 0)
    throw std::invalid_argument("random_apex_planar: sizes must be >= 0");
  Graph base = random_planar_graph(base_size, 0.25, rng);
  std::vector<std::pair<int, int>> e(base.edges());
  for (int a = 0; a < apex_count; a++) {
    int v = base_size + a;
    int attached = 0;
    for (int u = 0; u < base_size; u++)
      if (rng.next_bool(0.5)) {
        e.push_back({u, v});
        attached++;
      }
    // keep apexes meaningful on tiny bases
    for (int u = 0; attached < 3 && u < base_size; u++) {
      if (std::find(e.begin(), e.end(), std::make_pair(u, v)) == e.end()) {
        e.push_back({u, v});
        attached++;
      }
    }
  }
  return Graph(base_size + apex_count, e);
}

}  // namespace kura
