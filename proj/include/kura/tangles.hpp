#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kura/graph.hpp"

namespace kura {

// A separation splits a graph into two edge-disjoint subgraphs covering it.
// It is stored as a side assignment for every host edge plus the two vertex
// sets; a side's vertex set is exactly the endpoints of its edges (vertices
// that are isolated in the host ride on the left side of the orientation
// that the enumerator emits). The interface left ∩ right has no edges by
// construction, and its size is the separation's order.
struct Separation {
  std::vector<int> left_vertices;   // sorted
  std::vector<int> right_vertices;  // sorted
  std::vector<int> edge_side;       // per host edge: 0 = left, 1 = right

  bool operator==(const Separation& o) const {
    return left_vertices == o.left_vertices &&
           right_vertices == o.right_vertices && edge_side == o.edge_side;
  }
  bool operator<(const Separation& o) const;
};

int separation_order(const Separation& s);
std::vector<int> separation_interface(const Separation& s);
// The opposite orientation: flips every edge's side and re-derives the
// vertex sets (host-isolated vertices land on the new left side).
Separation reverse_separation(const Graph& g, const Separation& s);
bool separation_ok(const Graph& g, const Separation& s,
                   std::string* why = nullptr);

// One side of a separation as a graph on the host's vertex count (vertices
// outside the side stay as isolated padding; they do not affect planarity).
Graph separation_side(const Graph& g, const Separation& s, int side);

// Exactness caps: beyond these the enumeration refuses outright.
inline constexpr int max_tangle_theta = 4;
inline constexpr int max_tangle_edges = 24;
inline constexpr std::uint64_t max_separation_count = 2'000'000;

// All separations of order < theta, one representative per unordered pair
// (the reverse orientation is derivable). Output is sorted by edge-side
// vector, lexicographically, with the first edge pinned to the left side.
std::vector<Separation> enumerate_separations(const Graph& g, int theta);

struct Tangle {
  int order = 0;
  std::vector<Separation> members;  // oriented; possibly both orientations
};

struct TangleCheck {
  bool pass = false;
  bool matted = false;  // every member's left side is planar
  std::string axiom;    // "", "axiom1", "axiom2", "axiom3"
  // axiom1: the uncovered separation; axiom2: the violating member triple;
  // axiom3: the member whose left side spans every vertex.
  std::vector<Separation> witness;
};

enum class TangleOutcome { tangle, both_sides_nonplanar, axiom_violation };

struct TangleResult {
  TangleOutcome outcome = TangleOutcome::axiom_violation;
  std::optional<Tangle> tangle;              // when outcome == tangle
  std::optional<Separation> both_nonplanar;  // when both_sides_nonplanar
  TangleCheck check;  // filled for tangle and axiom_violation outcomes
};

// Orients every separation of order < theta toward its planar side.
// If some separation has two nonplanar sides that is reported instead; if
// the resulting set breaks a tangle axiom the violation is the outcome.
TangleResult planar_side_tangle(const Graph& g, int theta);

// Checks the three tangle axioms exhaustively and reports mattedness.
// Axiom 1: every separation of order < t.order has an orientation among the
// members. Axiom 2: no three member left sides union to the whole graph.
// Axiom 3: no member's left side spans every vertex. Members must be valid
// reduced separations of g of order < t.order, without duplicates.
TangleCheck verify_tangle_axioms(const Graph& g, const Tangle& t);

// The induced tangle on g minus z (|z| < t.order): every member that can
// absorb z into its interface while keeping order < t.order is projected to
// the smaller graph (deleted vertices leave both sides, surviving vertices
// keep their sides, vertex sets re-reduced), deduplicated and sorted. The
// result has order t.order - |z| and uses the deleted graph's labels, i.e.
// those of delete_vertices(g, z).
Tangle tangle_delete(const Graph& g, const Tangle& t,
                     const std::vector<int>& z);

}  // namespace kura
