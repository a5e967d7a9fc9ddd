#include "kura/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kura {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge rejected");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: parallel edge rejected");
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); s++) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* old_of_new) {
  std::vector<int> vs = verts;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex");
  std::vector<int> new_of_old(g.n(), -1);
  for (size_t i = 0; i < vs.size(); i++) {
    if (vs[i] < 0 || vs[i] >= g.n())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    new_of_old[vs[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    if (new_of_old[u] >= 0 && new_of_old[v] >= 0)
      es.push_back({new_of_old[u], new_of_old[v]});
  if (old_of_new) *old_of_new = vs;
  return Graph(static_cast<int>(vs.size()), std::move(es));
}

VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& del) {
  std::vector<char> gone(g.n(), 0);
  for (int v : del) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("delete_vertices: vertex out of range");
    gone[v] = 1;
  }
  VertexDeletion r;
  r.new_of_old.assign(g.n(), -1);
  for (int v = 0; v < g.n(); v++)
    if (!gone[v]) {
      r.new_of_old[v] = static_cast<int>(r.old_of_new.size());
      r.old_of_new.push_back(v);
    }
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) es.push_back({r.new_of_old[u], r.new_of_old[v]});
  r.graph = Graph(static_cast<int>(r.old_of_new.size()), std::move(es));
  return r;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: no such edge");
  std::vector<std::pair<int, int>> es;
  es.reserve(g.m() - 1);
  if (u > v) std::swap(u, v);
  for (auto e : g.edges())
    if (e != std::pair{u, v}) es.push_back(e);
  return Graph(g.n(), std::move(es));
}

Graph add_edge_copy(const Graph& g, int u, int v) {
  auto es = g.edges();
  es.push_back({u, v});
  return Graph(g.n(), std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.push_back({u + a.n(), v + a.n()});
  return Graph(a.n() + b.n(), std::move(es));
}

}  // namespace kura
