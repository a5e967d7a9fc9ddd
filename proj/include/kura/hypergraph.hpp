#pragma once

#include <gmpxx.h>

#include <vector>

#include "kura/generators.hpp"

namespace kura {

// A family of nonempty vertex subsets over vertices 0..n-1. Members of each
// hyperedge are stored sorted and deduplicated; duplicate hyperedges in the
// family are kept as given (the metrics below treat the family as a set).
struct Hypergraph {
  Hypergraph(int n, std::vector<std::vector<int>> edges);
  int n() const { return n_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<std::vector<int>> edges_;
};

// Minimum size of a vertex set meeting every hyperedge. If `cover` is given
// it receives one minimum cover, sorted; the search branches on the first
// unhit hyperedge's vertices in ascending order, so the result is
// deterministic.
int tau_exact(const Hypergraph& h, std::vector<int>* cover = nullptr);

// Maximum number of pairwise disjoint hyperedges; `family` receives the
// lexicographically first maximum subfamily as ascending edge indices.
int nu_exact(const Hypergraph& h, std::vector<int>* family = nullptr);

// Selection of k distinct hyperedges where every pair (i, j) owns a private
// vertex: in both A_i and A_j and in no other selected hyperedge.
// private_vertices follows pair order (0,1), (0,2), ..., (1,2), ...
struct LambdaWitness {
  std::vector<int> selection;         // ascending hyperedge indices
  std::vector<int> private_vertices;  // one per selection pair
};

// Maximum size of such a selection: 0 for the empty family, else >= 1.
// Distinctness is as sets, so duplicate hyperedges do not inflate the value.
int lambda_exact(const Hypergraph& h, LambdaWitness* w = nullptr);

// True iff w is a valid selection-with-private-vertices for h.
bool lambda_witness_ok(const Hypergraph& h, const LambdaWitness& w);

// 11 * lambda^2 * (lambda + nu + 3) * C(lambda + nu, nu)^2, exactly.
mpz_class ding_bound(int lambda, int nu);

struct PackCoverMetrics {
  int tau = 0;
  int nu = 0;
  int lambda = 0;
  mpz_class ding_bound = 0;
};

struct DingCheck {
  PackCoverMetrics metrics;
  bool pass = false;  // tau <= ding_bound
};

// Computes all metrics exactly and checks the packing-covering inequality.
DingCheck verify_ding_bound(const Hypergraph& h);

// m hyperedges, each of a uniform size in 1..max_edge with distinct
// uniformly chosen vertices. Requires 1 <= max_edge <= n.
Hypergraph random_hypergraph(int n, int m, int max_edge, Rng& rng);

}  // namespace kura
