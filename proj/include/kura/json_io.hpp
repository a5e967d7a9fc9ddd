#pragma once

// JSON (de)serialization for the library's report and certificate types.
// All emitters produce objects with sorted keys so equal values serialize to
// identical bytes.

#include <json.hpp>

#include "kura/genus.hpp"
#include "kura/hypergraph.hpp"
#include "kura/kuratowski.hpp"
#include "kura/packing.hpp"
#include "kura/society.hpp"
#include "kura/tangles.hpp"

namespace kura {

nlohmann::json witness_to_json(const KGraphWitness& w);
KGraphWitness witness_from_json(const nlohmann::json& j);

nlohmann::json genus_report_to_json(const GenusReport& r);

nlohmann::json surface_spec_to_json(const SurfaceSpec& s);
SurfaceSpec surface_spec_from_json(const nlohmann::json& j);

// {"n":, "edges":[[v,...],...]}
nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

// ding_bound is emitted as a JSON number when it fits a 64-bit signed
// integer and as a decimal string otherwise.
nlohmann::json ding_check_to_json(const DingCheck& c);

// {"n":, "edges":[[u,v],...]} — the same shape the text formats use.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"graph":, "boundary":[v,...]}
nlohmann::json society_to_json(const Society& s);
Society society_from_json(const nlohmann::json& j);

nlohmann::json cross_to_json(const Cross& c);
Cross cross_from_json(const nlohmann::json& j);

// {"left":[v,...], "interface":[v,...], "right":[v,...], "edge_side":"010..."}
nlohmann::json separation_to_json(const Separation& s);
Separation separation_from_json(const nlohmann::json& j);

// {"order":, "members":[separation,...]}
nlohmann::json tangle_to_json(const Tangle& t);
Tangle tangle_from_json(const nlohmann::json& j);

// {"outcome":"tangle"|"both_sides_nonplanar"|"axiom_violation", ...payload}
nlohmann::json tangle_result_to_json(const TangleResult& r);

// {"witnesses":[witness,...]}
nlohmann::json packing_certificate_to_json(const PackingCertificate& c);
PackingCertificate packing_certificate_from_json(const nlohmann::json& j);

// {"apex_set":[v,...], "target_genus":, "achieved":genus_report}
nlohmann::json apex_certificate_to_json(const ApexCertificate& c);

// {"k":, "outcome":"packing"|"apex", "packing"/"apex":certificate}
nlohmann::json duality_report_to_json(const DualityReport& r);

}  // namespace kura
