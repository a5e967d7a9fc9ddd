#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kura/genus.hpp"
#include "kura/graph.hpp"
#include "kura/kuratowski.hpp"

namespace kura {

// All host vertices used by the witness's branch paths, sorted, no duplicates.
std::vector<int> witness_vertices(const KGraphWitness& w);

// A family of pairwise vertex-disjoint K5/K3,3 subdivisions in a host graph.
struct PackingCertificate {
  std::vector<KGraphWitness> witnesses;
};

// Every witness valid in g and the witness vertex sets pairwise disjoint.
bool packing_certificate_ok(const Graph& g, const PackingCertificate& c,
                            std::string* why = nullptr);

// Vertex-minimal K-graph vertex sets of g with verified witnesses. A vertex
// set is listed when its induced subgraph is nonplanar but every proper
// induced subgraph is planar; such a set is exactly the vertex set of some
// K5/K3,3 subdivision. Sorted by (size, then lexicographic vertex set).
// exhaustive is true when the list holds every such set; it goes false when
// the cap or the internal search budget truncated the enumeration.
struct MinimalKGraphs {
  std::vector<KGraphWitness> witnesses;
  bool exhaustive = true;
};

inline constexpr int default_minimal_cap = 10'000;

// Enumerates minimal sets by extracting a witness, shrinking its vertex set
// to a minimal one, and branching on the deletion of each of its vertices
// (complete: any other minimal set survives one of the branches). Requires
// at most 64 vertices.
MinimalKGraphs enumerate_minimal_kgraphs(const Graph& g,
                                         int cap = default_minimal_cap);

enum class KNumberMode { exact, lower };

// Largest number of pairwise vertex-disjoint K-graphs in g, with a
// certificate of that size. exact runs branch and bound over the minimal
// K-graph vertex sets (any packing shrinks to one of minimal sets) and
// throws budget_error when their enumeration was truncated, suggesting
// lower mode; lower greedily packs the enumerated sets in (size, lex) order
// and is a valid lower bound either way. Certificates are the
// (cardinality, lex)-smallest of their size.
std::pair<int, PackingCertificate> k_number(const Graph& g,
                                            KNumberMode mode = KNumberMode::exact,
                                            int cap = default_minimal_cap);

// A vertex set whose deletion leaves g planar. optimal is true when the set
// is known minimum (and then it is the lexicographically first minimum one);
// it goes false only when the node budget stopped the search, in which case
// vertices still planarizes but may be oversized.
struct DeletionSet {
  std::vector<int> vertices;
  bool optimal = true;
};

inline constexpr uint64_t default_deletion_nodes = 1'000'000;

// Minimum planarizing deletion set, by iterative deepening that branches on
// the vertices of a Kuratowski witness of the current graph, then a
// lexicographic sweep at the optimum size. Requires at most 64 vertices.
DeletionSet planar_deletion_set(const Graph& g,
                                uint64_t node_budget = default_deletion_nodes);

// Deleting apex_set from the host leaves a graph that draws in some
// (possibly disconnected) surface of total genus <= target_genus; achieved
// holds the exact genus report of that remainder.
struct ApexCertificate {
  std::vector<int> apex_set;
  int target_genus = 0;
  GenusReport achieved;
};

// apex_set valid, remainder drawable at total genus <= target_genus, and
// achieved matching the recomputed genus report of the remainder.
bool apex_certificate_ok(const Graph& g, const ApexCertificate& c,
                         uint64_t budget = default_genus_budget,
                         std::string* why = nullptr);

// Smallest vertex set X, by (cardinality, then lexicographic), with g minus X
// drawable at total genus <= k (per drawable_at_genus). Deleting everything
// always works, so a certificate exists; budget_error propagates from the
// genus search. The budget is per drawability probe.
std::optional<ApexCertificate> apex_to_genus(
    const Graph& g, int k, uint64_t budget = default_genus_budget);

enum class DualityOutcome { packing, apex };

// Exactly one certificate is present, matching outcome: packing holds k+1
// disjoint K-graphs; apex holds a set whose deletion draws at genus <= k.
struct DualityReport {
  int k = 0;
  DualityOutcome outcome = DualityOutcome::apex;
  std::optional<PackingCertificate> packing;
  std::optional<ApexCertificate> apex;
};

// Packing outcome when g holds k+1 disjoint K-graphs (the lexicographically
// first such family), apex outcome otherwise. Budget exhaustion anywhere
// surfaces as budget_error, never as a certificate for the other side.
DualityReport duality_report(const Graph& g, int k,
                             uint64_t budget = default_genus_budget,
                             int cap = default_minimal_cap);

}  // namespace kura
