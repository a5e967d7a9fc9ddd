#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kura/graph.hpp"

namespace kura {

enum class KuratowskiKind { K5, K33 };

// A subdivision of K5 or K3,3 inside a host graph.
//
// branch_vertices: 5 entries for K5 (ascending); 6 for K33, where the first
// three form one side of the bipartition and the last three the other (each
// triple ascending, and the triple containing the smallest vertex first).
//
// paths: one branch path per model edge, each a host-vertex walk whose
// endpoints are the model edge's branch vertices. Model-edge order is fixed:
//   K5:  pairs (i,j), 0 <= i < j < 5, lexicographic over branch indices;
//   K33: pairs (i,j), i = 0..2 indexing the first triple, j = 0..2 the
//        second, row-major.
// Each path is oriented from the model edge's first endpoint.
struct KGraphWitness {
  KuratowskiKind kind;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

// The model-edge endpoint pairs (indices into branch_vertices) for a kind.
std::vector<std::pair<int, int>> witness_model_edges(KuratowskiKind kind);

// Finds a Kuratowski subdivision in g, or nullopt when g is planar.
// Method: repeatedly delete edges that keep the graph nonplanar; the fixpoint
// is an edge-minimal nonplanar graph, i.e. exactly a K5 or K3,3 subdivision
// (plus isolated vertices, which are dropped). Deterministic.
std::optional<KGraphWitness> kuratowski_witness(const Graph& g);

// Validates a witness against its host graph; throws std::invalid_argument
// with a description on the first violated condition.
void verify_kgraph_witness(const Graph& g, const KGraphWitness& w);

// Non-throwing wrapper; optionally reports the failure reason.
bool kgraph_witness_ok(const Graph& g, const KGraphWitness& w,
                       std::string* why = nullptr);

}  // namespace kura
