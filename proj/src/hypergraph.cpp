#include "kura/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kura {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("hypergraph: negative vertex count");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw std::invalid_argument("hypergraph: empty hyperedge");
    if (e.front() < 0 || e.back() >= n_)
      throw std::invalid_argument("hypergraph: vertex out of range");
  }
}

namespace {

bool edge_hit(const std::vector<int>& edge, const std::vector<char>& in_cover) {
  for (int v : edge)
    if (in_cover[v]) return true;
  return false;
}

// Any cover of the given size extending in_cover, branching on the vertices
// of the first unhit hyperedge in ascending order.
bool cover_of_size(const Hypergraph& h, int size, std::vector<char>& in_cover,
                   std::vector<int>& chosen) {
  const std::vector<int>* unhit = nullptr;
  for (const auto& e : h.edges())
    if (!edge_hit(e, in_cover)) {
      unhit = &e;
      break;
    }
  if (!unhit) return true;
  if (size == 0) return false;
  for (int v : *unhit) {
    in_cover[v] = 1;
    chosen.push_back(v);
    if (cover_of_size(h, size - 1, in_cover, chosen)) return true;
    chosen.pop_back();
    in_cover[v] = 0;
  }
  return false;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? i++ : j++;
  }
  return true;
}

void best_disjoint(const Hypergraph& h, size_t from, std::vector<int>& cur,
                   std::vector<int>& best) {
  if (cur.size() > best.size()) best = cur;
  if (cur.size() + (h.edges().size() - from) <= best.size()) return;
  for (size_t i = from; i < h.edges().size(); i++) {
    bool ok = true;
    for (int j : cur)
      if (!disjoint(h.edges()[j], h.edges()[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back((int)i);
    best_disjoint(h, i + 1, cur, best);
    cur.pop_back();
  }
}

// Indices of the first occurrence of each distinct hyperedge, in order.
std::vector<int> distinct_indices(const Hypergraph& h) {
  std::vector<int> out;
  std::set<std::vector<int>> seen;
  for (size_t i = 0; i < h.edges().size(); i++)
    if (seen.insert(h.edges()[i]).second) out.push_back((int)i);
  return out;
}

// For the selection sel (edge indices), finds a private vertex per pair:
// in both ends of the pair and in no other selected edge. Pair conditions
// are independent, so each is checked on its own.
bool private_vertices_for(const Hypergraph& h, const std::vector<int>& sel,
                          std::vector<int>* out) {
  if (out) out->clear();
  size_t k = sel.size();
  for (size_t i = 0; i < k; i++)
    for (size_t j = i + 1; j < k; j++) {
      int found = -1;
      for (int v : h.edges()[sel[i]]) {
        if (!std::binary_search(h.edges()[sel[j]].begin(),
                                h.edges()[sel[j]].end(), v))
          continue;
        bool elsewhere = false;
        for (size_t t = 0; t < k && !elsewhere; t++)
          if (t != i && t != j)
            elsewhere = std::binary_search(h.edges()[sel[t]].begin(),
                                           h.edges()[sel[t]].end(), v);
        if (!elsewhere) {
          found = v;
          break;
        }
      }
      if (found < 0) return false;
      if (out) out->push_back(found);
    }
  return true;
}

bool selection_of_size(const Hypergraph& h, const std::vector<int>& pool,
                       size_t k, size_t from, std::vector<int>& sel,
                       std::vector<int>* priv) {
  if (sel.size() == k) return private_vertices_for(h, sel, priv);
  if (pool.size() - from < k - sel.size()) return false;
  for (size_t i = from; i < pool.size(); i++) {
    sel.push_back(pool[i]);
    if (selection_of_size(h, pool, k, i + 1, sel, priv)) return true;
    sel.pop_back();
  }
  return false;
}

}  // namespace

int tau_exact(const Hypergraph& h, std::vector<int>* cover) {
  std::vector<char> in_cover(h.n(), 0);
  std::vector<int> chosen;
  for (int size = 0;; size++) {
    if (cover_of_size(h, size, in_cover, chosen)) {
      if (cover) {
        std::sort(chosen.begin(), chosen.end());
        *cover = chosen;
      }
      return (int)chosen.size();
    }
  }
}

int nu_exact(const Hypergraph& h, std::vector<int>* family) {
  std::vector<int> cur, best;
  best_disjoint(h, 0, cur, best);
  if (family) *family = best;
  return (int)best.size();
}

int lambda_exact(const Hypergraph& h, LambdaWitness* w) {
  std::vector<int> pool = distinct_indices(h);
  int best = 0;
  if (w) *w = {};
  // dropping a member of a valid selection keeps it valid, so feasibility is
  // downward closed and the first infeasible size ends the search
  for (size_t k = 1; k <= pool.size(); k++) {
    std::vector<int> sel, priv;
    if (!selection_of_size(h, pool, k, 0, sel, &priv)) break;
    best = (int)k;
    if (w) *w = {sel, priv};
  }
  return best;
}

bool lambda_witness_ok(const Hypergraph& h, const LambdaWitness& w) {
  size_t k = w.selection.size();
  for (int i : w.selection)
    if (i < 0 || i >= (int)h.edges().size()) return false;
  std::set<std::vector<int>> sets;
  for (int i : w.selection) sets.insert(h.edges()[i]);
  if (sets.size() != k) return false;  // distinct as sets
  if (w.private_vertices.size() != k * (k - 1) / 2) return false;
  size_t p = 0;
  for (size_t i = 0; i < k; i++)
    for (size_t j = i + 1; j < k; j++) {
      int v = w.private_vertices[p++];
      for (size_t t = 0; t < k; t++) {
        bool has = std::binary_search(h.edges()[w.selection[t]].begin(),
                                      h.edges()[w.selection[t]].end(), v);
        if ((t == i || t == j) != has) return false;
      }
    }
  return true;
}

mpz_class ding_bound(int lambda, int nu) {
  if (lambda < 0 || nu < 0)
    throw std::invalid_argument("ding_bound: negative argument");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), lambda + nu, nu);
  return 11 * mpz_class(lambda) * lambda * (lambda + nu + 3) * binom * binom;
}

DingCheck verify_ding_bound(const Hypergraph& h) {
  DingCheck out;
  out.metrics.tau = tau_exact(h);
  out.metrics.nu = nu_exact(h);
  out.metrics.lambda = lambda_exact(h);
  out.metrics.ding_bound = ding_bound(out.metrics.lambda, out.metrics.nu);
  out.pass = out.metrics.tau <= out.metrics.ding_bound;
  return out;
}

Hypergraph random_hypergraph(int n, int m, int max_edge, Rng& rng) {
  if (n < 1 || max_edge < 1 || max_edge > n || m < 0)
    throw std::invalid_argument("random_hypergraph: bad shape");
  std::vector<std::vector<int>> edges;
  std::vector<int> verts(n);
  for (int v = 0; v < n; v++) verts[v] = v;
  for (int i = 0; i < m; i++) {
    int size = (int)rng.next_int(1, max_edge);
    rng.shuffle(verts);
    edges.emplace_back(verts.begin(), verts.begin() + size);
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace kura
