#pragma once

// Instance constructors and seeded random generators. Every random generator
// is a pure function of its seed (portable Rng, no std::distribution), so
// corpora reproduce byte-identically across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "kura/graph.hpp"

namespace kura {

// Deterministic wrapper around mt19937_64. std::uniform_int_distribution is
// not portable across standard libraries; these helpers are.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound); bound > 0.
  uint64_t next_below(uint64_t bound);

  // Uniform in {lo, ..., hi}, inclusive.
  int next_int(int lo, int hi);

  // Uniform in [0, 1) with 53 random bits.
  double next_unit();

  bool next_bool(double p) { return next_unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; i--)
      std::swap(v[i - 1], v[next_below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph petersen_graph();

// Disjoint union of k components, each K5 or K3,3 as listed (kinds[i] is
// "K5" or "K33"); kinds must have exactly k entries.
Graph kuratowski_union(const std::vector<std::string>& kinds);

// G(n, p) with each pair included independently.
Graph random_graph(int n, double p, Rng& rng);

// Random connected maximal-planar-ish base: a planar graph built by a random
// straight-line-free triangulation process (n >= 3), then optionally
// sparsified by deleting each edge with probability drop.
Graph random_planar_graph(int n, double drop, Rng& rng);

// Planar base on base_size vertices plus apex_count extra vertices, each
// joined to a random subset of the base (at least 3 neighbors when possible).
Graph random_apex_planar(int base_size, int apex_count, Rng& rng);

}  // namespace kura
