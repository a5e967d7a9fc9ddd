#pragma once

// Societies: a graph with a cyclic boundary order, thought of as drawn
// toward the rim of a closed disc. Provides an exact two-disjoint-paths
// search, cross detection over boundary quadruples, a disc-embedding
// ("rural") oracle via hub-and-rim augmentation, and a checker for the
// disc-plus-cross nonplanarity configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kura/generators.hpp"
#include "kura/graph.hpp"

namespace kura {

// Search expansions allowed per two_disjoint_paths / find_cross call.
inline constexpr uint64_t default_path_budget = 5'000'000;

// Graph plus a cyclic sequence of distinct vertices (the boundary order).
struct Society {
  Graph graph;
  std::vector<int> boundary;
};

// Throws std::invalid_argument unless the boundary vertices are distinct and
// exist in the graph.
void validate_society(const Society& s);

// Two vertex-disjoint paths whose four ends alternate around the boundary.
struct Cross {
  std::vector<int> p1, p2;
};

struct TwoPaths {
  std::vector<int> p1, p2;
};

// Vertex-disjoint paths s1 -> t1 and s2 -> t2, if any exist. Exact: iterative
// deepening on the first path's length (the returned p1 is shortest possible)
// with connectivity pruning. `budget` caps search expansions; exceeding it
// throws budget_error. The four vertices must be distinct.
std::optional<TwoPaths> two_disjoint_paths(const Graph& g, int s1, int t1,
                                           int s2, int t2,
                                           uint64_t budget = default_path_budget);

// First cross in deterministic order: boundary-position quadruples
// a < b < c < d lexicographically, alternating pairing (a,c),(b,d), shortest
// p1 within the quadruple. Absent when no cross exists (always, if the
// boundary has fewer than four vertices).
std::optional<Cross> find_cross(const Society& s,
                                uint64_t budget = default_path_budget);

// Validity of a cross against its society: both paths live in the graph, are
// vertex-disjoint, and their four ends are boundary vertices occurring in
// alternating cyclic order. On failure, *why names the broken condition.
bool cross_ok(const Society& s, const Cross& c, std::string* why = nullptr);

// True iff the graph can be drawn in a closed disc with the boundary
// vertices on the disc boundary in the given cyclic order. Decided by
// augmenting with a rim cycle through the boundary (one subdivision vertex
// per rim edge) plus a hub adjacent to every boundary vertex, then testing
// planarity of the augmented graph.
bool is_rural(const Society& s);

// Instance of the disc-plus-cross nonplanarity argument. A separation of g
// into sides A and B (a_vertices / b_vertices share the interface; each edge
// is assigned to the side containing both ends), with B drawable in a disc
// whose rim carries `boundary` = v_1..v_T in order. The interface is the
// back arc {v_t, ..., v_T, v_1}; p1, p2, p3 connect v_i to v_{t+1-i} and
// together with the cross q, r (over rim positions a < b < c < d) force
// nonplanarity of the whole graph.
struct CrossConfig {
  Graph g;
  std::vector<int> a_vertices, b_vertices;
  std::vector<int> edge_side;  // per edge of g: 0 = side A, 1 = side B
  std::vector<int> boundary;   // v_1..v_T, rim order of side B
  int t = 0;                   // back arc starts at v_t (1-based)
  std::vector<int> p1, p2, p3;
  int a = 0, b = 0, c = 0, d = 0;  // 1-based rim positions, 3 <= a<b<c<d <= t-2
  std::vector<int> q, r;
};

// Machine-checks every hypothesis of the configuration, throwing
// hypothesis_error naming the first failed one: "separation" (sides cover the
// graph, edges inside their side), "disc_drawing" (side B rural on the given
// rim order), "interface" (shared vertices are exactly the back arc),
// "three_paths" (p1/p2/p3 valid, correctly anchored, pairwise disjoint; p2,
// p3 inside B), "interface_on_p1" (every interface vertex on p1), and
// "cross_indices" (index bounds plus disjoint q, r with the right ends).
// Returns is_planar(g) — the configuration forces this to be false, which is
// what callers assert.
bool verify_cross_config_nonplanar(const CrossConfig& config);

// The minimum-size instance: t = 8, T = 10, all paths as short as possible,
// 16 vertices in total.
CrossConfig extremal_cross_config();

// Random hypothesis-satisfying instance: the extremal skeleton under random
// rim padding (isolated boundary vertices), path-edge subdivisions, pendant
// trees on either side, and a random vertex relabeling.
CrossConfig random_cross_config(Rng& rng);

// Seeded random society: vertices on a random circular order, edges a random
// non-crossing chord sample (so the bare instance is rural by construction),
// then with some probability a planted pair of interleaving chords (so the
// instance certainly contains a cross). Both outcomes of the cross/rural
// dichotomy occur, and on every instance that dichotomy is forced by
// construction rather than sampled blindly — arbitrary graphs can be
// cross-free yet fail to draw in a disc, which is exactly the gap the
// full portrait machinery exists to cover.
Society random_society(int n, int boundary_size, Rng& rng);

}  // namespace kura
