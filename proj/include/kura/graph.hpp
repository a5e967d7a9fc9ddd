#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kura {

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges;
// construction validates and throws std::invalid_argument on violations.
// Edges are stored normalized (u < v) and sorted, so two graphs are equal as
// labeled graphs iff their (n, edges) agree.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  // Index of normalized edge {u,v} in edges(), or -1.
  int edge_index(int u, int v) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// --- basic operations ------------------------------------------------------

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// Subgraph induced on `verts` (need not be sorted; duplicates rejected).
// Vertices are relabeled 0..k-1 in ascending order of their old ids; if
// old_of_new is non-null it receives that mapping.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* old_of_new = nullptr);

// Result of deleting a vertex set: the remaining graph plus both directions
// of the relabeling (new_of_old[v] == -1 for deleted v).
struct VertexDeletion {
  Graph graph;
  std::vector<int> new_of_old;
  std::vector<int> old_of_new;
};
VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& del);

Graph delete_edge(const Graph& g, int u, int v);
Graph add_edge_copy(const Graph& g, int u, int v);

// Disjoint union; vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

// --- serialization ---------------------------------------------------------

enum class GraphFormat { graph6, edge_list, json };

// graph6: the de-facto standard bit layout (upper triangle, column order,
// 6 bits per byte biased by 63; ">>graph6<<" header tolerated).
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// sparse6 (":..." form) is accepted for input only.
Graph parse_sparse6(const std::string& text);

// Whitespace edge list, one "u v" per line. An optional "n m" header line is
// recognized when m equals the number of following nonblank lines; without a
// header, n is 1 + the largest vertex id.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// JSON object {"n": int, "edges": [[u,v], ...]}.
Graph parse_graph_json(const std::string& text);
std::string to_graph_json(const Graph& g);

// Dispatch on format; for graph6 input, a leading ':' routes to sparse6.
Graph load_graph(const std::string& text, GraphFormat f);
std::string save_graph(const Graph& g, GraphFormat f);

}  // namespace kura
