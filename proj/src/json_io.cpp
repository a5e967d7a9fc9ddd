#include "kura/json_io.hpp"

#include <stdexcept>

namespace kura {

using nlohmann::json;

json witness_to_json(const KGraphWitness& w) {
  json j;
  j["kind"] = w.kind == KuratowskiKind::K5 ? "K5" : "K33";
  j["branch_vertices"] = w.branch_vertices;
  j["paths"] = w.paths;
  return j;
}

KGraphWitness witness_from_json(const json& j) {
  KGraphWitness w;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "K5")
    w.kind = KuratowskiKind::K5;
  else if (kind == "K33")
    w.kind = KuratowskiKind::K33;
  else
    throw std::invalid_argument("witness kind must be K5 or K33");
  w.branch_vertices = j.at("branch_vertices").get<std::vector<int>>();
  w.paths = j.at("paths").get<std::vector<std::vector<int>>>();
  return w;
}

json genus_report_to_json(const GenusReport& r) {
  json comps = json::array();
  for (const auto& c : r.per_component)
    comps.push_back({{"euler", c.euler}, {"orientable", c.orientable}});
  return {{"euler_genus", r.euler_genus},
          {"orientable_genus", r.orientable_genus},
          {"per_component", comps}};
}

json surface_spec_to_json(const SurfaceSpec& s) {
  json comps = json::array();
  for (const auto& c : s.components)
    comps.push_back({{"genus", c.genus}, {"orientable", c.orientable}});
  return {{"components", comps}};
}

SurfaceSpec surface_spec_from_json(const json& j) {
  SurfaceSpec s;
  for (const auto& c : j.at("components")) {
    s.components.push_back(
        {c.at("orientable").get<bool>(), c.at("genus").get<int>()});
  }
  return s;
}

json hypergraph_to_json(const Hypergraph& h) {
  return {{"n", h.n()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const json& j) {
  return Hypergraph(j.at("n").get<int>(),
                    j.at("edges").get<std::vector<std::vector<int>>>());
}

json ding_check_to_json(const DingCheck& c) {
  json j;
  j["tau"] = c.metrics.tau;
  j["nu"] = c.metrics.nu;
  j["lambda"] = c.metrics.lambda;
  const mpz_class& b = c.metrics.ding_bound;
  if (b.fits_slong_p() && sizeof(long) == 8)
    j["ding_bound"] = (int64_t)b.get_si();
  else
    j["ding_bound"] = b.get_str();
  j["pass"] = c.pass;
  return j;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), std::move(edges));
}

json society_to_json(const Society& s) {
  return {{"graph", graph_to_json(s.graph)}, {"boundary", s.boundary}};
}

Society society_from_json(const json& j) {
  Society s{graph_from_json(j.at("graph")),
            j.at("boundary").get<std::vector<int>>()};
  validate_society(s);
  return s;
}

json cross_to_json(const Cross& c) {
  return {{"p1", c.p1}, {"p2", c.p2}};
}

Cross cross_from_json(const json& j) {
  return Cross{j.at("p1").get<std::vector<int>>(),
               j.at("p2").get<std::vector<int>>()};
}

json separation_to_json(const Separation& s) {
  std::string bitmap;
  bitmap.reserve(s.edge_side.size());
  for (int b : s.edge_side) bitmap.push_back(b ? '1' : '0');
  return {{"left", s.left_vertices},
          {"interface", separation_interface(s)},
          {"right", s.right_vertices},
          {"edge_side", bitmap}};
}

Separation separation_from_json(const json& j) {
  Separation s;
  s.left_vertices = j.at("left").get<std::vector<int>>();
  s.right_vertices = j.at("right").get<std::vector<int>>();
  for (char c : j.at("edge_side").get<std::string>()) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("edge_side bitmap must be 0/1 characters");
    s.edge_side.push_back(c - '0');
  }
  if (j.contains("interface") &&
      j.at("interface").get<std::vector<int>>() != separation_interface(s))
    throw std::invalid_argument(
        "separation interface disagrees with the vertex sets");
  return s;
}

json tangle_to_json(const Tangle& t) {
  json members = json::array();
  for (const Separation& m : t.members) members.push_back(separation_to_json(m));
  return {{"order", t.order}, {"members", members}};
}

Tangle tangle_from_json(const json& j) {
  Tangle t;
  t.order = j.at("order").get<int>();
  for (const auto& m : j.at("members")) t.members.push_back(separation_from_json(m));
  return t;
}

json tangle_result_to_json(const TangleResult& r) {
  json j;
  switch (r.outcome) {
    case TangleOutcome::tangle:
      j["outcome"] = "tangle";
      j["tangle"] = tangle_to_json(*r.tangle);
      j["matted"] = r.check.matted;
      break;
    case TangleOutcome::both_sides_nonplanar:
      j["outcome"] = "both_sides_nonplanar";
      j["separation"] = separation_to_json(*r.both_nonplanar);
      break;
    case TangleOutcome::axiom_violation:
      j["outcome"] = "axiom_violation";
      j["axiom"] = r.check.axiom;
      {
        json w = json::array();
        for (const Separation& s : r.check.witness)
          w.push_back(separation_to_json(s));
        j["witness"] = w;
      }
      j["matted"] = r.check.matted;
      break;
  }
  return j;
}

json packing_certificate_to_json(const PackingCertificate& c) {
  json ws = json::array();
  for (const KGraphWitness& w : c.witnesses) ws.push_back(witness_to_json(w));
  return {{"witnesses", ws}};
}

PackingCertificate packing_certificate_from_json(const json& j) {
  PackingCertificate c;
  for (const auto& w : j.at("witnesses")) c.witnesses.push_back(witness_from_json(w));
  return c;
}

json apex_certificate_to_json(const ApexCertificate& c) {
  return {{"apex_set", c.apex_set},
          {"target_genus", c.target_genus},
          {"achieved", genus_report_to_json(c.achieved)}};
}

json duality_report_to_json(const DualityReport& r) {
  json j;
  j["k"] = r.k;
  if (r.outcome == DualityOutcome::packing) {
    j["outcome"] = "packing";
    j["packing"] = packing_certificate_to_json(*r.packing);
  } else {
    j["outcome"] = "apex";
    j["apex"] = apex_certificate_to_json(*r.apex);
  }
  return j;
}

}  // namespace kura
