#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kura/graph.hpp"

namespace kura {

// Rotation system with edge signature, defining a cellular embedding.
// rotation[v] lists the darts leaving v in cyclic order; dart 2*e points from
// edges()[e].first to edges()[e].second, dart 2*e+1 the reverse.
// signature[e] is +1 or -1 (-1 edges reverse orientation when crossed).
struct EmbeddingScheme {
  std::vector<std::vector<int>> rotation;
  std::vector<int> signature;
};

inline constexpr uint64_t default_genus_budget = 100'000'000;

// Face count of the embedding defined by the scheme: orbit count of the
// face-tracing rule (arriving at v with orientation s, leave by the rotation
// successor of the reversed dart when s=+1, the predecessor when s=-1; the
// orientation flips across signature -1 edges). Requires g connected and s
// valid for g; throws std::invalid_argument otherwise.
int trace_faces(const Graph& g, const EmbeddingScheme& s);

// One connected closed surface: `genus` counts handles when orientable,
// crosscaps (>= 1) otherwise.
struct SurfaceComponent {
  bool orientable = true;
  int genus = 0;
};

// Possibly disconnected closed surface; its genus is the sum over components.
struct SurfaceSpec {
  std::vector<SurfaceComponent> components;
  int total_genus() const;
};

struct ComponentGenus {
  int euler = 0;
  int orientable = 0;
};

// Exact genus values, additive over connected components (euler per Miller,
// orientable per Battle et al.). per_component follows components(g) order.
struct GenusReport {
  int euler_genus = 0;
  int orientable_genus = 0;
  std::vector<ComponentGenus> per_component;
};

// Exact minima over embedding schemes, per component, summed. The budget
// counts face traces across the whole call; exceeding it throws budget_error
// rather than returning a wrong answer.
int euler_genus_exact(const Graph& g, uint64_t budget = default_genus_budget);
int orientable_genus_exact(const Graph& g,
                           uint64_t budget = default_genus_budget);
GenusReport genus_report(const Graph& g, uint64_t budget = default_genus_budget);

// True iff the connected components of h can be assigned to the surface
// components of spec so that every assigned bundle embeds in its surface
// (disjoint unions: orientable genus adds; crosscap number of a bundle is
// min over components of crosscap there plus Euler genus elsewhere).
bool can_draw(const Graph& h, const SurfaceSpec& spec,
              uint64_t budget = default_genus_budget);

// All surface specs with the given total genus and at most max_components
// components, as non-decreasing component sequences (orientable before
// non-orientable, then by genus). Exhaustive up to adding handles/crosscaps
// or empty components, which never shrink the set of drawable graphs.
std::vector<SurfaceSpec> surface_catalog(int total_genus, int max_components);

// True iff h draws in some (possibly disconnected) surface of genus <= k.
// Scans surface_catalog(k, c) with c = max(1, number of nonplanar components
// of h): planar components fit anywhere and extra genus never hurts, so that
// slice of the catalog decides the question.
bool drawable_at_genus(const Graph& h, int k,
                       uint64_t budget = default_genus_budget);

// Smallest k with drawable_at_genus(h, k); at most orientable_genus_exact(h).
int min_drawable_genus(const Graph& h, uint64_t budget = default_genus_budget);

struct KuratowskiGenusCheck {
  bool pass = true;
  int k = 0;
  int multisets_checked = 0;
  int specs_checked = 0;
  std::string counterexample;  // empty when pass
};

// Desk-scale drawability dichotomy: every k-component multiset from
// {K5, K3,3} must be drawable in every surface spec of total genus k and in
// none of total genus k-1 (specs range over a catalog with at most
// max(1, k) surface components, which is exhaustive up to adding handles
// or empty components). Requires 0 <= k <= 3 as a cost guard.
KuratowskiGenusCheck verify_kuratowski_genus(
    int k, uint64_t budget = default_genus_budget);

}  // namespace kura
