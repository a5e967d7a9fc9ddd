#include "kura/tangles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "kura/errors.hpp"
#include "kura/planarity.hpp"

namespace kura {

namespace {

// Reduced vertex sets for an edge bipartition: each side holds exactly the
// endpoints of its edges; host-isolated vertices go left.
Separation from_bipartition(const Graph& g, std::vector<int> side) {
  std::vector<char> left(g.n(), 0), right(g.n(), 0);
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges()[e];
    auto& mark = side[e] ? right : left;
    mark[u] = 1;
    mark[v] = 1;
  }
  Separation s;
  for (int v = 0; v < g.n(); v++) {
    if (left[v] || g.degree(v) == 0) s.left_vertices.push_back(v);
    if (right[v]) s.right_vertices.push_back(v);
  }
  s.edge_side = std::move(side);
  return s;
}

bool is_reduced_member(const Graph& g, const Separation& s) {
  return s == from_bipartition(g, s.edge_side);
}

void require_members_consistent(const Graph& g, const Tangle& t) {
  std::set<Separation> seen;
  for (const Separation& m : t.members) {
    std::string why;
    if (!separation_ok(g, m, &why))
      throw std::invalid_argument("verify_tangle_axioms: bad member: " + why);
    if (separation_order(m) >= t.order)
      throw std::invalid_argument(
          "verify_tangle_axioms: member order is not below the tangle order");
    if (!is_reduced_member(g, m))
      throw std::invalid_argument(
          "verify_tangle_axioms: member vertex sets are not reduced");
    if (!seen.insert(m).second)
      throw std::invalid_argument("verify_tangle_axioms: duplicate member");
  }
}

}  // namespace

bool Separation::operator<(const Separation& o) const {
  return std::tie(edge_side, left_vertices, right_vertices) <
         std::tie(o.edge_side, o.left_vertices, o.right_vertices);
}

int separation_order(const Separation& s) {
  return static_cast<int>(separation_interface(s).size());
}

std::vector<int> separation_interface(const Separation& s) {
  std::vector<int> shared;
  std::set_intersection(s.left_vertices.begin(), s.left_vertices.end(),
                        s.right_vertices.begin(), s.right_vertices.end(),
                        std::back_inserter(shared));
  return shared;
}

Separation reverse_separation(const Graph& g, const Separation& s) {
  std::vector<int> flipped;
  flipped.reserve(s.edge_side.size());
  for (int b : s.edge_side) flipped.push_back(1 - b);
  return from_bipartition(g, std::move(flipped));
}

bool separation_ok(const Graph& g, const Separation& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(s.edge_side.size()) != g.m())
    return fail("edge side assignment length differs from the edge count");
  for (int b : s.edge_side)
    if (b != 0 && b != 1) return fail("edge side out of range");
  auto sorted_in_range = [&](const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); i++) {
      if (vs[i] < 0 || vs[i] >= g.n()) return false;
      if (i > 0 && vs[i - 1] >= vs[i]) return false;
    }
    return true;
  };
  if (!sorted_in_range(s.left_vertices) || !sorted_in_range(s.right_vertices))
    return fail("vertex sets must be sorted, duplicate-free, in range");
  std::vector<char> left(g.n(), 0), right(g.n(), 0);
  for (int v : s.left_vertices) left[v] = 1;
  for (int v : s.right_vertices) right[v] = 1;
  for (int v = 0; v < g.n(); v++)
    if (!left[v] && !right[v]) return fail("vertex on neither side");
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges()[e];
    const auto& mark = s.edge_side[e] ? right : left;
    if (!mark[u] || !mark[v])
      return fail("edge endpoint outside its side's vertex set");
  }
  return true;
}

Graph separation_side(const Graph& g, const Separation& s, int side) {
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.m(); e++)
    if (s.edge_side[e] == side) edges.push_back(g.edges()[e]);
  return Graph(g.n(), std::move(edges));
}

std::vector<Separation> enumerate_separations(const Graph& g, int theta) {
  if (theta < 0)
    throw std::invalid_argument("enumerate_separations: negative theta");
  std::vector<Separation> out;
  if (theta == 0) return out;
  if (theta > max_tangle_theta)
    throw budget_error("enumerate_separations: theta exceeds the exact cap");
  if (g.m() > max_tangle_edges)
    throw budget_error(
        "enumerate_separations: edge count exceeds the exact cap");

  std::vector<int> side(g.m(), 0);
  std::vector<int> left_deg(g.n(), 0), right_deg(g.n(), 0);
  int shared = 0;
  auto bump = [&](int w, int s, int dir) {
    auto& mine = s ? right_deg : left_deg;
    const auto& other = s ? left_deg : right_deg;
    if (dir > 0) {
      if (++mine[w] == 1 && other[w] > 0) shared++;
    } else {
      if (mine[w]-- == 1 && other[w] > 0) shared--;
    }
  };
  // Assign edges in index order, left branch first: output is sorted by
  // edge-side vector. Pinning edge 0 left emits each unordered pair once.
  auto rec = [&](auto&& self, int e) -> void {
    if (shared >= theta) return;
    if (e == g.m()) {
      out.push_back(from_bipartition(g, side));
      if (out.size() > max_separation_count)
        throw budget_error("enumerate_separations: too many separations");
      return;
    }
    auto [u, v] = g.edges()[e];
    int last = e == 0 ? 0 : 1;
    for (int s = 0; s <= last; s++) {
      side[e] = s;
      bump(u, s, +1);
      bump(v, s, +1);
      self(self, e + 1);
      bump(u, s, -1);
      bump(v, s, -1);
    }
  };
  rec(rec, 0);
  return out;
}

TangleResult planar_side_tangle(const Graph& g, int theta) {
  if (theta < 1)
    throw std::invalid_argument("planar_side_tangle: theta must be >= 1");
  std::vector<Separation> pairs = enumerate_separations(g, theta);

  std::vector<char> left_planar(pairs.size()), right_planar(pairs.size());
  TangleResult result;
  for (size_t i = 0; i < pairs.size(); i++) {
    left_planar[i] = is_planar(separation_side(g, pairs[i], 0));
    right_planar[i] = is_planar(separation_side(g, pairs[i], 1));
    if (!left_planar[i] && !right_planar[i]) {
      result.outcome = TangleOutcome::both_sides_nonplanar;
      result.both_nonplanar = pairs[i];
      return result;
    }
  }

  Tangle t;
  t.order = theta;
  for (size_t i = 0; i < pairs.size(); i++) {
    if (left_planar[i]) t.members.push_back(pairs[i]);
    if (right_planar[i]) {
      Separation rev = reverse_separation(g, pairs[i]);
      if (!(left_planar[i] && rev == pairs[i])) t.members.push_back(rev);
    }
  }
  result.check = verify_tangle_axioms(g, t);
  if (result.check.pass) {
    result.outcome = TangleOutcome::tangle;
    result.tangle = std::move(t);
  } else {
    result.outcome = TangleOutcome::axiom_violation;
  }
  return result;
}

TangleCheck verify_tangle_axioms(const Graph& g, const Tangle& t) {
  if (t.order < 1)
    throw std::invalid_argument("verify_tangle_axioms: order must be >= 1");
  if (g.n() > 64)
    throw std::invalid_argument(
        "verify_tangle_axioms: supports at most 64 vertices");
  require_members_consistent(g, t);

  TangleCheck res;
  res.matted = true;
  for (const Separation& m : t.members)
    if (!is_planar(separation_side(g, m, 0))) {
      res.matted = false;
      break;
    }

  // Axiom 1: every separation of order < t.order has an oriented member.
  std::set<Separation> members(t.members.begin(), t.members.end());
  for (const Separation& p : enumerate_separations(g, t.order)) {
    if (!members.count(p) && !members.count(reverse_separation(g, p))) {
      res.axiom = "axiom1";
      res.witness = {p};
      return res;
    }
  }

  // Axiom 3: no member's left side spans every vertex.
  for (const Separation& m : t.members) {
    if (static_cast<int>(m.left_vertices.size()) == g.n()) {
      res.axiom = "axiom3";
      res.witness = {m};
      return res;
    }
  }

  // Axiom 2: no three member left sides (repetition allowed) union to g.
  size_t count = t.members.size();
  std::vector<std::uint64_t> vmask(count, 0);
  std::vector<std::uint32_t> emask(count, 0);
  for (size_t i = 0; i < count; i++) {
    for (int v : t.members[i].left_vertices) vmask[i] |= 1ULL << v;
    for (int e = 0; e < g.m(); e++)
      if (t.members[i].edge_side[e] == 0) emask[i] |= 1U << e;
  }
  std::uint64_t all_v = g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1;
  std::uint32_t all_e = (1U << g.m()) - 1;
  for (size_t i = 0; i < count; i++)
    for (size_t j = i; j < count; j++)
      for (size_t k = j; k < count; k++)
        if ((vmask[i] | vmask[j] | vmask[k]) == all_v &&
            (emask[i] | emask[j] | emask[k]) == all_e) {
          res.axiom = "axiom2";
          res.witness = {t.members[i], t.members[j], t.members[k]};
          return res;
        }

  res.pass = true;
  return res;
}

Tangle tangle_delete(const Graph& g, const Tangle& t,
                     const std::vector<int>& z) {
  std::set<int> zs(z.begin(), z.end());
  if (zs.size() != z.size())
    throw std::invalid_argument("tangle_delete: duplicate vertex");
  for (int v : z)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("tangle_delete: vertex out of range");
  if (static_cast<int>(z.size()) >= t.order)
    throw std::invalid_argument(
        "tangle_delete: must delete fewer vertices than the order");

  VertexDeletion del = delete_vertices(g, z);
  Tangle out;
  out.order = t.order - static_cast<int>(z.size());
  std::set<Separation> seen;
  for (const Separation& m : t.members) {
    // The member must accept z into its interface at order < t.order.
    std::set<int> fat(zs);
    for (int v : separation_interface(m)) fat.insert(v);
    if (static_cast<int>(fat.size()) >= t.order) continue;

    std::vector<int> side(del.graph.m(), 0);
    for (int e = 0; e < g.m(); e++) {
      auto [u, v] = g.edges()[e];
      int nu = del.new_of_old[u], nv = del.new_of_old[v];
      if (nu < 0 || nv < 0) continue;
      side[del.graph.edge_index(nu, nv)] = m.edge_side[e];
    }
    Separation proj = from_bipartition(del.graph, std::move(side));
    if (seen.insert(proj).second) out.members.push_back(proj);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace kura
