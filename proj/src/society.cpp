#include "kura/society.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "kura/errors.hpp"
#include "kura/planarity.hpp"

namespace kura {

namespace {

// BFS shortest path from `from` to `to` avoiding blocked vertices; neighbors
// are scanned in ascending order, so the result is deterministic. Empty when
// unreachable.
std::vector<int> shortest_path_avoiding(const Graph& g, int from, int to,
                                        const std::vector<char>& blocked) {
  if (blocked[from] || blocked[to]) return {};
  std::vector<int> parent(g.n(), -2);
  parent[from] = -1;
  std::vector<int> queue{from};
  for (size_t head = 0; head < queue.size() && parent[to] == -2; head++) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (parent[w] != -2 || blocked[w]) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// BFS distances from `from` avoiding blocked vertices; -1 when unreachable.
std::vector<int> distances_avoiding(const Graph& g, int from,
                                    const std::vector<char>& blocked) {
  std::vector<int> dist(g.n(), -1);
  if (blocked[from]) return dist;
  dist[from] = 0;
  std::vector<int> queue{from};
  for (size_t head = 0; head < queue.size(); head++) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1 || blocked[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Depth-first construction of p1 under a length limit. The first complete p1
// whose complement still connects s2 to t2 wins; iterative deepening on the
// limit therefore returns a shortest-possible p1.
struct PathSearch {
  const Graph& g;
  int t1, s2, t2;
  uint64_t* left;
  int limit = 0;
  std::vector<char> used;      // vertices on the partial p1
  std::vector<char> p2_block;  // used plus t1: optimistic obstacle set for p2
  std::vector<int> path;
  std::vector<int> p2;

  PathSearch(const Graph& g_, int s1, int t1_, int s2_, int t2_,
             uint64_t* left_)
      : g(g_), t1(t1_), s2(s2_), t2(t2_) {
    left = left_;
    used.assign(g.n(), 0);
    p2_block.assign(g.n(), 0);
    used[s1] = p2_block[s1] = 1;
    p2_block[t1] = 1;
    path.push_back(s1);
  }

  bool dfs() {
    if (*left == 0)
      throw budget_error("two_disjoint_paths: search budget exhausted");
    --*left;
    int head = path.back();
    if (head == t1) {
      p2 = shortest_path_avoiding(g, s2, t2, used);
      return !p2.empty();
    }
    int spent = static_cast<int>(path.size()) - 1;
    if (spent == limit) return false;
    // p1 must still reach t1 within the limit, around s2/t2 and its own tail.
    std::vector<char> ahead = used;
    ahead[head] = 0;
    ahead[s2] = ahead[t2] = 1;
    std::vector<int> dist = distances_avoiding(g, head, ahead);
    if (dist[t1] == -1 || dist[t1] > limit - spent) return false;
    // p2 must still be completable outside the partial p1 (and t1).
    if (shortest_path_avoiding(g, s2, t2, p2_block).empty()) return false;
    for (int w : g.neighbors(head)) {
      if (used[w] || w == s2 || w == t2) continue;
      used[w] = p2_block[w] = 1;
      path.push_back(w);
      if (dfs()) return true;
      path.pop_back();
      used[w] = p2_block[w] = 0;
    }
    return false;
  }
};

std::optional<TwoPaths> disjoint_paths_shared(const Graph& g, int s1, int t1,
                                              int s2, int t2, uint64_t* left) {
  int ends[4] = {s1, t1, s2, t2};
  for (int v : ends)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("two_disjoint_paths: vertex out of range");
  for (int i = 0; i < 4; i++)
    for (int j = i + 1; j < 4; j++)
      if (ends[i] == ends[j])
        throw std::invalid_argument(
            "two_disjoint_paths: the four ends must be distinct");
  int cap = std::max(1, g.n() - 3);  // p1 avoids s2 and t2
  for (int limit = 1; limit <= cap; limit++) {
    PathSearch search(g, s1, t1, s2, t2, left);
    search.limit = limit;
    if (search.dfs()) return TwoPaths{search.path, search.p2};
  }
  return std::nullopt;
}

bool simple_path_in(const Graph& g, const std::vector<int>& path,
                    const char* name, std::string* why) {
  auto fail = [&](const char* what) {
    if (why) *why = std::string(name) + " " + what;
    return false;
  };
  if (path.size() < 2) return fail("has fewer than two vertices");
  std::set<int> seen;
  for (int v : path) {
    if (v < 0 || v >= g.n()) return fail("leaves the vertex range");
    if (!seen.insert(v).second) return fail("repeats a vertex");
  }
  for (size_t i = 0; i + 1 < path.size(); i++)
    if (!g.has_edge(path[i], path[i + 1])) return fail("uses a missing edge");
  return true;
}

int position_in(const std::vector<int>& boundary, int v) {
  for (size_t i = 0; i < boundary.size(); i++)
    if (boundary[i] == v) return static_cast<int>(i);
  return -1;
}

bool vertex_disjoint(const std::vector<int>& p, const std::vector<int>& q) {
  std::set<int> sp(p.begin(), p.end());
  for (int v : q)
    if (sp.count(v)) return false;
  return true;
}

}  // namespace

void validate_society(const Society& s) {
  std::vector<char> seen(s.graph.n(), 0);
  for (int v : s.boundary) {
    if (v < 0 || v >= s.graph.n())
      throw std::invalid_argument("society: boundary vertex out of range");
    if (seen[v])
      throw std::invalid_argument("society: boundary vertices must be distinct");
    seen[v] = 1;
  }
}

std::optional<TwoPaths> two_disjoint_paths(const Graph& g, int s1, int t1,
                                           int s2, int t2, uint64_t budget) {
  uint64_t left = budget;
  return disjoint_paths_shared(g, s1, t1, s2, t2, &left);
}

std::optional<Cross> find_cross(const Society& s, uint64_t budget) {
  validate_society(s);
  int k = static_cast<int>(s.boundary.size());
  uint64_t left = budget;
  for (int a = 0; a < k; a++)
    for (int b = a + 1; b < k; b++)
      for (int c = b + 1; c < k; c++)
        for (int d = c + 1; d < k; d++) {
          auto paths =
              disjoint_paths_shared(s.graph, s.boundary[a], s.boundary[c],
                                    s.boundary[b], s.boundary[d], &left);
          if (paths) return Cross{std::move(paths->p1), std::move(paths->p2)};
        }
  return std::nullopt;
}

bool cross_ok(const Society& s, const Cross& c, std::string* why) {
  if (!simple_path_in(s.graph, c.p1, "p1", why)) return false;
  if (!simple_path_in(s.graph, c.p2, "p2", why)) return false;
  if (!vertex_disjoint(c.p1, c.p2)) {
    if (why) *why = "paths share a vertex";
    return false;
  }
  int pos[4] = {position_in(s.boundary, c.p1.front()),
                position_in(s.boundary, c.p1.back()),
                position_in(s.boundary, c.p2.front()),
                position_in(s.boundary, c.p2.back())};
  for (int p : pos)
    if (p < 0) {
      if (why) *why = "an end is not a boundary vertex";
      return false;
    }
  int sorted[4] = {pos[0], pos[1], pos[2], pos[3]};
  std::sort(sorted, sorted + 4);
  // The ends alternate iff p1's pair is opposite in the circular order.
  int lo = std::min(pos[0], pos[1]), hi = std::max(pos[0], pos[1]);
  bool alternate = (lo == sorted[0] && hi == sorted[2]) ||
                   (lo == sorted[1] && hi == sorted[3]);
  if (!alternate) {
    if (why) *why = "the four ends do not alternate around the boundary";
    return false;
  }
  return true;
}

bool is_rural(const Society& s) {
  validate_society(s);
  int n = s.graph.n();
  int k = static_cast<int>(s.boundary.size());
  // With at most one pinned vertex a planar drawing can always be rotated to
  // put it on the outer face, so the disc adds no constraint.
  if (k <= 1) return is_planar(s.graph);
  std::vector<std::pair<int, int>> edges = s.graph.edges();
  int hub = n;
  for (int i = 0; i < k; i++) {
    int rim = n + 1 + i;  // subdivision vertex after boundary position i
    edges.emplace_back(s.boundary[i], rim);
    edges.emplace_back(rim, s.boundary[(i + 1) % k]);
    edges.emplace_back(hub, s.boundary[i]);
  }
  return is_planar(Graph(n + 1 + k, std::move(edges)));
}

namespace {

void require(bool ok, const char* which, const std::string& msg) {
  if (!ok) throw hypothesis_error(which, msg);
}

// Path validity inside the configuration; when inside_b is set, every edge of
// the path must be assigned to side B.
void check_config_path(const CrossConfig& cfg, const std::vector<int>& path,
                       const char* which, const char* name, bool inside_b) {
  std::string label(name);
  require(path.size() >= 2, which, label + " must have at least two vertices");
  std::set<int> seen;
  for (int v : path) {
    require(v >= 0 && v < cfg.g.n(), which, label + " leaves the vertex range");
    require(seen.insert(v).second, which, label + " repeats a vertex");
  }
  for (size_t i = 0; i + 1 < path.size(); i++) {
    int idx = cfg.g.edge_index(path[i], path[i + 1]);
    require(idx >= 0, which, label + " uses a missing edge");
    if (inside_b)
      require(cfg.edge_side[idx] == 1, which,
              label + " must stay inside side B");
  }
}

bool ends_are(const std::vector<int>& path, int x, int y) {
  return (path.front() == x && path.back() == y) ||
         (path.front() == y && path.back() == x);
}

}  // namespace

bool verify_cross_config_nonplanar(const CrossConfig& config) {
  const Graph& g = config.g;
  int n = g.n();

  // Separation: sides cover the graph, every edge inside its assigned side.
  std::vector<char> in_a(n, 0), in_b(n, 0);
  auto mark = [&](const std::vector<int>& verts, std::vector<char>& flag,
                  const char* side) {
    for (int v : verts) {
      require(v >= 0 && v < n, "separation",
              std::string("side ") + side + " lists a vertex out of range");
      require(!flag[v], "separation",
              std::string("side ") + side + " repeats a vertex");
      flag[v] = 1;
    }
  };
  mark(config.a_vertices, in_a, "A");
  mark(config.b_vertices, in_b, "B");
  for (int v = 0; v < n; v++)
    require(in_a[v] || in_b[v], "separation", "every vertex must lie on a side");
  require(static_cast<int>(config.edge_side.size()) == g.m(), "separation",
          "edge_side must assign every edge");
  for (int e = 0; e < g.m(); e++) {
    int side = config.edge_side[e];
    require(side == 0 || side == 1, "separation", "edge sides are 0 or 1");
    const std::vector<char>& flag = side == 0 ? in_a : in_b;
    require(flag[g.edges()[e].first] && flag[g.edges()[e].second], "separation",
            "an edge leaves its assigned side");
  }

  // Disc drawing: side B is rural on the given rim order.
  int T = static_cast<int>(config.boundary.size());
  require(T >= 1, "disc_drawing", "the rim must be nonempty");
  std::vector<char> on_rim(n, 0);
  for (int v : config.boundary) {
    require(v >= 0 && v < n && in_b[v], "disc_drawing",
            "rim vertices must belong to side B");
    require(!on_rim[v], "disc_drawing", "rim vertices must be distinct");
    on_rim[v] = 1;
  }
  std::vector<int> new_id(n, -1);
  int b_count = 0;
  for (int v = 0; v < n; v++)
    if (in_b[v]) new_id[v] = b_count++;
  std::vector<std::pair<int, int>> b_edges;
  for (int e = 0; e < g.m(); e++)
    if (config.edge_side[e] == 1)
      b_edges.emplace_back(new_id[g.edges()[e].first],
                           new_id[g.edges()[e].second]);
  Society side_b{Graph(b_count, std::move(b_edges)), {}};
  for (int v : config.boundary) side_b.boundary.push_back(new_id[v]);
  require(is_rural(side_b), "disc_drawing",
          "side B does not draw in a disc with the given rim order");

  // Interface: the shared vertices are exactly the back arc of the rim.
  require(config.t >= 1 && config.t <= T, "interface", "t must index the rim");
  std::set<int> interface_set;
  for (int v = 0; v < n; v++)
    if (in_a[v] && in_b[v]) interface_set.insert(v);
  std::set<int> back_arc;
  back_arc.insert(config.boundary[0]);
  for (int i = config.t; i <= T; i++) back_arc.insert(config.boundary[i - 1]);
  require(interface_set == back_arc, "interface",
          "shared vertices must be exactly the back arc of the rim");

  // Three pairwise disjoint paths, each joining v_i to v_{t+1-i}.
  int t = config.t;
  require(t >= 6, "three_paths",
          "the rim is too short to anchor three disjoint paths");
  auto rim = [&](int pos) { return config.boundary[pos - 1]; };
  check_config_path(config, config.p1, "three_paths", "p1", false);
  check_config_path(config, config.p2, "three_paths", "p2", true);
  check_config_path(config, config.p3, "three_paths", "p3", true);
  require(ends_are(config.p1, rim(1), rim(t)), "three_paths",
          "p1 must join v_1 and v_t");
  require(ends_are(config.p2, rim(2), rim(t - 1)), "three_paths",
          "p2 must join v_2 and v_{t-1}");
  require(ends_are(config.p3, rim(3), rim(t - 2)), "three_paths",
          "p3 must join v_3 and v_{t-2}");
  require(vertex_disjoint(config.p1, config.p2) &&
              vertex_disjoint(config.p1, config.p3) &&
              vertex_disjoint(config.p2, config.p3),
          "three_paths", "p1, p2, p3 must be pairwise vertex-disjoint");

  // Every interface vertex lies on p1.
  std::set<int> p1_set(config.p1.begin(), config.p1.end());
  for (int v : interface_set)
    require(p1_set.count(v) > 0, "interface_on_p1",
            "every shared vertex must lie on p1");

  // The cross: 3 <= a < b < c < d <= t-2 with disjoint q, r.
  require(3 <= config.a && config.a < config.b && config.b < config.c &&
              config.c < config.d && config.d <= t - 2,
          "cross_indices", "need 3 <= a < b < c < d <= t-2");
  check_config_path(config, config.q, "cross_indices", "q", false);
  check_config_path(config, config.r, "cross_indices", "r", false);
  require(ends_are(config.q, rim(config.a), rim(config.c)), "cross_indices",
          "q must join v_a and v_c");
  require(ends_are(config.r, rim(config.b), rim(config.d)), "cross_indices",
          "r must join v_b and v_d");
  require(vertex_disjoint(config.q, config.r), "cross_indices",
          "q and r must be vertex-disjoint");

  return is_planar(g);
}

CrossConfig extremal_cross_config() {
  // Rim v_1..v_10 = vertices 0..9; interior of side B: 10..15. Side A is the
  // back arc {v_8, v_9, v_10, v_1} plus the two interleaved chords that the
  // disc cannot absorb.
  std::vector<std::pair<int, int>> a_edges = {{0, 8}, {7, 9}};
  std::vector<std::pair<int, int>> b_edges = {
      {0, 9},   {8, 9},   {7, 8},                        // p1 along the rim
      {1, 10},  {10, 11}, {11, 12}, {12, 13}, {6, 13},   // p2
      {2, 14},  {14, 15}, {5, 15},                       // p3
      {2, 10},  {0, 10},  {8, 12},  {12, 15}, {4, 15},   // q inside B
      {3, 14},  {11, 14}, {9, 11},  {7, 13},  {5, 13}};  // r inside B
  std::vector<std::pair<int, int>> all = a_edges;
  all.insert(all.end(), b_edges.begin(), b_edges.end());

  CrossConfig cfg;
  cfg.g = Graph(16, std::move(all));
  cfg.a_vertices = {0, 7, 8, 9};
  cfg.b_vertices.resize(16);
  for (int v = 0; v < 16; v++) cfg.b_vertices[v] = v;
  std::set<std::pair<int, int>> a_set;
  for (auto [u, v] : a_edges) a_set.insert({std::min(u, v), std::max(u, v)});
  for (const auto& e : cfg.g.edges())
    cfg.edge_side.push_back(a_set.count(e) ? 0 : 1);
  cfg.boundary = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  cfg.t = 8;
  cfg.p1 = {0, 9, 8, 7};
  cfg.p2 = {1, 10, 11, 12, 13, 6};
  cfg.p3 = {2, 14, 15, 5};
  cfg.a = 3;
  cfg.b = 4;
  cfg.c = 5;
  cfg.d = 6;
  cfg.q = {2, 10, 0, 8, 12, 15, 4};
  cfg.r = {3, 14, 11, 9, 7, 13, 5};
  return cfg;
}

CrossConfig random_cross_config(Rng& rng) {
  CrossConfig cfg = extremal_cross_config();
  int n = cfg.g.n();
  auto norm = [](int u, int v) {
    return std::make_pair(std::min(u, v), std::max(u, v));
  };
  std::map<std::pair<int, int>, int> side;
  for (int e = 0; e < cfg.g.m(); e++) side[cfg.g.edges()[e]] = cfg.edge_side[e];
  std::set<int> a_verts(cfg.a_vertices.begin(), cfg.a_vertices.end());
  std::set<int> b_verts(cfg.b_vertices.begin(), cfg.b_vertices.end());
  std::vector<std::vector<int>*> paths = {&cfg.p1, &cfg.p2, &cfg.p3, &cfg.q,
                                          &cfg.r};

  // Isolated rim vertices on the front arc, strictly between v_3 and
  // v_{t-2} so every anchor position keeps its role.
  int pads = rng.next_int(0, 2);
  for (int i = 0; i < pads; i++) {
    int slot = rng.next_int(3, cfg.t - 3);  // insertion index into boundary
    int w = n++;
    cfg.boundary.insert(cfg.boundary.begin() + slot, w);
    b_verts.insert(w);
    for (int* pos : {&cfg.a, &cfg.b, &cfg.c, &cfg.d, &cfg.t})
      if (*pos >= slot + 1) (*pos)++;
  }

  // Subdivide path edges; both halves inherit the side of the old edge. The
  // five paths are pairwise edge-disjoint, so each path owns its edges.
  int subs = rng.next_int(0, 5);
  for (int i = 0; i < subs; i++) {
    std::vector<int>& path =
        *paths[static_cast<size_t>(rng.next_int(0, 4))];
    int j = rng.next_int(0, static_cast<int>(path.size()) - 2);
    auto key = norm(path[j], path[j + 1]);
    int s = side.at(key);
    int w = n++;
    side.erase(key);
    side[norm(path[j], w)] = s;
    side[norm(w, path[j + 1])] = s;
    (s == 1 ? b_verts : a_verts).insert(w);
    path.insert(path.begin() + j + 1, w);
  }

  // Pendant chains hanging off either side.
  int pendants = rng.next_int(0, 3);
  for (int i = 0; i < pendants; i++) {
    bool inside_b = !rng.next_bool(0.25);
    std::set<int>& pool = inside_b ? b_verts : a_verts;
    std::vector<int> anchors(pool.begin(), pool.end());
    int anchor = anchors[static_cast<size_t>(
        rng.next_int(0, static_cast<int>(anchors.size()) - 1))];
    int len = rng.next_int(1, 2);
    for (int step = 0; step < len; step++) {
      int w = n++;
      side[norm(anchor, w)] = inside_b ? 1 : 0;
      pool.insert(w);
      anchor = w;
    }
  }

  // Random relabeling of all vertices.
  std::vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = i;
  rng.shuffle(perm);
  std::map<std::pair<int, int>, int> mapped;
  for (const auto& [e, s] : side) mapped[norm(perm[e.first], perm[e.second])] = s;
  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [e, s] : mapped) edge_list.push_back(e);
  cfg.g = Graph(n, std::move(edge_list));
  cfg.edge_side.clear();
  for (const auto& e : cfg.g.edges()) cfg.edge_side.push_back(mapped.at(e));
  cfg.a_vertices.clear();
  for (int v : a_verts) cfg.a_vertices.push_back(perm[v]);
  std::sort(cfg.a_vertices.begin(), cfg.a_vertices.end());
  cfg.b_vertices.clear();
  for (int v : b_verts) cfg.b_vertices.push_back(perm[v]);
  std::sort(cfg.b_vertices.begin(), cfg.b_vertices.end());
  for (int& v : cfg.boundary) v = perm[v];
  for (std::vector<int>* path : paths)
    for (int& v : *path) v = perm[v];
  return cfg;
}

Society random_society(int n, int boundary_size, Rng& rng) {
  if (n < 0 || boundary_size < 0 || boundary_size > n)
    throw std::invalid_argument(
        "random_society: boundary size must fit the graph");
  // Base: all vertices on a random circular order, edges a random
  // non-crossing chord sample. Such a graph draws in a disc with any
  // order-respecting subset on the rim, so the base society is rural.
  std::vector<int> sigma(n);
  for (int i = 0; i < n; i++) sigma[i] = i;
  rng.shuffle(sigma);
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[sigma[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) pairs.emplace_back(u, v);
  rng.shuffle(pairs);
  double keep = 0.25 + 0.65 * rng.next_unit();
  auto crossing = [&](const std::pair<int, int>& e,
                      const std::pair<int, int>& f) {
    int i = std::min(pos[e.first], pos[e.second]);
    int j = std::max(pos[e.first], pos[e.second]);
    bool x_in = i < pos[f.first] && pos[f.first] < j;
    bool y_in = i < pos[f.second] && pos[f.second] < j;
    return x_in != y_in;
  };
  std::vector<std::pair<int, int>> chosen;
  for (const auto& e : pairs) {
    if (!rng.next_bool(keep)) continue;
    bool ok = true;
    for (const auto& f : chosen)
      if (crossing(e, f)) {
        ok = false;
        break;
      }
    if (ok) chosen.push_back(e);
  }
  // Boundary: a random subset, listed in rim order.
  std::vector<int> picks(n);
  for (int i = 0; i < n; i++) picks[i] = i;
  rng.shuffle(picks);
  picks.resize(boundary_size);
  std::sort(picks.begin(), picks.end(),
            [&](int u, int v) { return pos[u] < pos[v]; });
  // Optionally plant a cross: two chords whose ends interleave along the
  // boundary. The planted pair is itself a cross, so the society is
  // certainly not rural; without it the base drawing stands.
  if (boundary_size >= 4 && rng.next_bool(0.45)) {
    std::vector<int> idx(boundary_size);
    for (int i = 0; i < boundary_size; i++) idx[i] = i;
    rng.shuffle(idx);
    idx.resize(4);
    std::sort(idx.begin(), idx.end());
    chosen.emplace_back(picks[idx[0]], picks[idx[2]]);
    chosen.emplace_back(picks[idx[1]], picks[idx[3]]);
  }
  std::set<std::pair<int, int>> dedup;
  for (auto [u, v] : chosen) dedup.insert({std::min(u, v), std::max(u, v)});
  Graph g(n, std::vector<std::pair<int, int>>(dedup.begin(), dedup.end()));
  return Society{std::move(g), std::move(picks)};
}

}  // namespace kura
