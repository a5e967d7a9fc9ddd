// kura: packing/covering toolkit for Kuratowski subdivisions.
// Exit codes: 0 success, 1 usage or parse failure, 2 budget exceeded.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kura/errors.hpp"
#include "kura/generators.hpp"
#include "kura/genus.hpp"
#include "kura/graph.hpp"
#include "kura/hypergraph.hpp"
#include "kura/json_io.hpp"
#include "kura/kuratowski.hpp"
#include "kura/packing.hpp"
#include "kura/planarity.hpp"
#include "kura/society.hpp"
#include "kura/tangles.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << data;
}

kura::GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return kura::GraphFormat::graph6;
  if (name == "edgelist" || name == "edge_list") return kura::GraphFormat::edge_list;
  if (name == "json") return kura::GraphFormat::json;
  throw std::runtime_error("unknown format: " + name);
}

struct IoOpts {
  std::string input = "-";
  std::string format = "graph6";
  std::string out = "-";
};

void add_io_opts(CLI::App* cmd, IoOpts& io, bool with_format = true) {
  cmd->add_option("--input", io.input, "input file, or - for stdin");
  if (with_format)
    cmd->add_option("--format", io.format, "graph format: graph6|edgelist|json")
        ->check(CLI::IsMember({"graph6", "edgelist", "edge_list", "json"}));
  cmd->add_option("--out", io.out, "output file, or - for stdout");
}

kura::Graph load(const IoOpts& io) {
  return kura::load_graph(read_input(io.input), parse_format(io.format));
}

json load_json(const IoOpts& io) { return json::parse(read_input(io.input)); }

void emit(const IoOpts& io, const json& j) {
  write_output(io.out, j.dump(2) + "\n");
}

// --- generate ----------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::runtime_error("bad integer: " + s);
  return v;
}

double to_double(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::runtime_error("bad number: " + s);
  return v;
}

// Spec strings: kuratowski:<k>:<kind,...>, random:<n>:<p>,
// apex_planar:<base>:<apexes>, society:<n>:<boundary>,
// hypergraph:<n>:<m>:<max_edge>. Random kinds require --seed.
void run_generate(const std::string& spec, bool have_seed, uint64_t seed,
                  const IoOpts& io) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw std::runtime_error("empty generate spec");
  const std::string& kind = parts[0];
  auto need = [&](size_t n) {
    if (parts.size() != n + 1)
      throw std::runtime_error("generate " + kind + ": expected " +
                               std::to_string(n) + " parameters");
  };
  auto need_seed = [&]() {
    if (!have_seed)
      throw std::runtime_error("generate " + kind + ": --seed is required");
  };

  if (kind == "kuratowski") {
    need(2);
    int k = to_int(parts[1]);
    auto kinds = split(parts[2], ',');
    if (static_cast<int>(kinds.size()) != k)
      throw std::runtime_error("generate kuratowski: need exactly " +
                               std::to_string(k) + " component kinds");
    kura::Graph g = kura::kuratowski_union(kinds);
    write_output(io.out, kura::save_graph(g, parse_format(io.format)));
    return;
  }
  if (kind == "random") {
    need(2);
    need_seed();
    int n = to_int(parts[1]);
    double p = to_double(parts[2]);
    if (n < 0 || p < 0.0 || p > 1.0)
      throw std::runtime_error("generate random: need n >= 0 and 0 <= p <= 1");
    kura::Rng rng(seed);
    write_output(io.out,
                 kura::save_graph(kura::random_graph(n, p, rng), parse_format(io.format)));
    return;
  }
  if (kind == "apex_planar") {
    need(2);
    need_seed();
    int base = to_int(parts[1]), apexes = to_int(parts[2]);
    if (base < 3 || apexes < 0)
      throw std::runtime_error("generate apex_planar: need base >= 3, apexes >= 0");
    kura::Rng rng(seed);
    kura::Graph g = kura::random_apex_planar(base, apexes, rng);
    write_output(io.out, kura::save_graph(g, parse_format(io.format)));
    return;
  }
  if (kind == "society") {
    need(2);
    need_seed();
    int n = to_int(parts[1]), boundary = to_int(parts[2]);
    kura::Rng rng(seed);
    emit(io, kura::society_to_json(kura::random_society(n, boundary, rng)));
    return;
  }
  if (kind == "hypergraph") {
    need(3);
    need_seed();
    int n = to_int(parts[1]), m = to_int(parts[2]), max_edge = to_int(parts[3]);
    kura::Rng rng(seed);
    emit(io, kura::hypergraph_to_json(kura::random_hypergraph(n, m, max_edge, rng)));
    return;
  }
  throw std::runtime_error("unknown generate kind: " + kind);
}

// --- survey --------------------------------------------------------------------

std::vector<kura::Graph> survey_corpus(const std::string& spec, bool have_seed,
                                       uint64_t seed, const IoOpts& io) {
  std::vector<kura::Graph> corpus;
  if (!spec.empty()) {
    auto parts = split(spec, ':');
    if (parts.size() != 4 || parts[0] != "random")
      throw std::runtime_error("survey corpus spec must be random:<count>:<max_n>:<p>");
    if (!have_seed) throw std::runtime_error("survey corpus spec requires --seed");
    int count = to_int(parts[1]), max_n = to_int(parts[2]);
    double p = to_double(parts[3]);
    if (count < 0 || max_n < 4 || p < 0.0 || p > 1.0)
      throw std::runtime_error("survey corpus spec out of range");
    kura::Rng rng(seed);
    for (int i = 0; i < count; i++) {
      int n = 4 + static_cast<int>(rng.next_below(max_n - 3));
      corpus.push_back(kura::random_graph(n, p, rng));
    }
    return corpus;
  }
  std::istringstream in(read_input(io.input));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    corpus.push_back(kura::parse_graph6(line));
  }
  return corpus;
}

std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n') c = ';';
  return s;
}

// One CSV row per (instance, k): K-number, duality outcome, apex set size,
// achieved genus of the remainder, certificate re-verification. Per-instance
// budget failures become rows, not process failures. Footer: max |X| per k.
void run_survey(const std::vector<kura::Graph>& corpus, std::vector<int> ks,
                uint64_t genus_budget, const IoOpts& io) {
  if (ks.empty()) ks = {0, 1};
  std::ostringstream out;
  out << "instance,k,n,m,k_number,outcome,apex_size,achieved_genus,verified,error\n";
  std::vector<int> max_apex(ks.size(), -1);
  for (size_t i = 0; i < corpus.size(); i++) {
    const kura::Graph& g = corpus[i];
    for (size_t ki = 0; ki < ks.size(); ki++) {
      int k = ks[ki];
      out << i << "," << k << "," << g.n() << "," << g.m() << ",";
      try {
        int kn = kura::k_number(g).first;
        kura::DualityReport rep = kura::duality_report(g, k, genus_budget);
        if (rep.outcome == kura::DualityOutcome::packing) {
          bool ok = kura::packing_certificate_ok(g, *rep.packing) &&
                    static_cast<int>(rep.packing->witnesses.size()) == k + 1;
          out << kn << ",packing,,," << (ok ? 1 : 0) << ",\n";
        } else {
          const kura::ApexCertificate& cert = *rep.apex;
          bool ok = kura::apex_certificate_ok(g, cert, genus_budget);
          kura::Graph rest = kura::delete_vertices(g, cert.apex_set).graph;
          int achieved = kura::min_drawable_genus(rest, genus_budget);
          int size = static_cast<int>(cert.apex_set.size());
          max_apex[ki] = std::max(max_apex[ki], size);
          out << kn << ",apex," << size << "," << achieved << ","
              << (ok ? 1 : 0) << ",\n";
        }
      } catch (const kura::budget_error& e) {
        out << ",budget,,,," << csv_safe(e.what()) << "\n";
      }
    }
  }
  for (size_t ki = 0; ki < ks.size(); ki++) {
    out << "# max_apex_size k=" << ks[ki] << ": ";
    if (max_apex[ki] < 0)
      out << "none\n";
    else
      out << max_apex[ki] << "\n";
  }
  write_output(io.out, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing/covering toolkit for Kuratowski subdivisions"};
  app.require_subcommand(1);

  IoOpts io;
  uint64_t seed = 0;
  uint64_t budget_schemes = kura::default_genus_budget;
  uint64_t budget_nodes = kura::default_deletion_nodes;
  int k_param = 0;
  std::string mode = "exact";
  std::string gen_spec;
  std::string corpus_spec;
  std::vector<int> survey_ks;

  auto* c_planarity = app.add_subcommand("planarity", "decide planarity");
  add_io_opts(c_planarity, io);

  auto* c_witness =
      app.add_subcommand("witness", "extract a K5/K3,3 subdivision witness");
  add_io_opts(c_witness, io);

  auto* c_genus = app.add_subcommand(
      "genus", "exact Euler and orientable genus, per component");
  add_io_opts(c_genus, io);
  c_genus->add_option("--budget-schemes", budget_schemes,
                      "face traces allowed in the embedding search");

  auto* c_pack = app.add_subcommand(
      "pack", "maximum family of vertex-disjoint K5/K3,3 subdivisions");
  add_io_opts(c_pack, io);
  c_pack->add_option("--mode", mode, "exact|lower")
      ->check(CLI::IsMember({"exact", "lower"}));

  auto* c_cover =
      app.add_subcommand("cover", "minimum planarizing vertex deletion set");
  add_io_opts(c_cover, io);
  c_cover->add_option("--budget-nodes", budget_nodes,
                      "search nodes allowed before settling for best-known");

  auto* c_apex = app.add_subcommand(
      "apex", "smallest set whose deletion draws at total genus <= k");
  add_io_opts(c_apex, io);
  c_apex->add_option("--k", k_param, "target total genus")->required();
  c_apex->add_option("--budget-schemes", budget_schemes,
                     "face traces allowed per drawability probe");

  auto* c_duality = app.add_subcommand(
      "duality", "packing of size k+1, or an apex set for total genus k");
  add_io_opts(c_duality, io);
  c_duality->add_option("--k", k_param, "duality parameter")->required();
  c_duality->add_option("--budget-schemes", budget_schemes,
                        "face traces allowed per drawability probe");

  auto* c_hyper = app.add_subcommand(
      "hypergraph-verify",
      "exact tau/nu/lambda and the packing-covering bound (JSON input)");
  add_io_opts(c_hyper, io, false);

  auto* c_scross = app.add_subcommand(
      "society-cross", "first cross of a society (JSON input)");
  add_io_opts(c_scross, io, false);

  auto* c_srural = app.add_subcommand(
      "society-rural", "disc drawability of a society (JSON input)");
  add_io_opts(c_srural, io, false);

  auto* c_tangle = app.add_subcommand(
      "tangle", "planar-side tangle of the given order, axiom-checked");
  add_io_opts(c_tangle, io);
  c_tangle->add_option("--k", k_param, "tangle order")->required();

  auto* c_generate =
      app.add_subcommand("generate", "emit a deterministic instance");
  c_generate->add_option("spec", gen_spec,
                         "kuratowski:<k>:<kinds> | random:<n>:<p> | "
                         "apex_planar:<base>:<apexes> | society:<n>:<boundary> | "
                         "hypergraph:<n>:<m>:<max_edge>")
      ->required();
  add_io_opts(c_generate, io);
  auto* gen_seed = c_generate->add_option("--seed", seed, "generator seed");

  auto* c_survey = app.add_subcommand(
      "survey", "CSV duality survey over a corpus (graph6 lines, or a spec)");
  add_io_opts(c_survey, io);
  c_survey->add_option("corpus", corpus_spec,
                       "optional generated corpus: random:<count>:<max_n>:<p>");
  auto* survey_seed = c_survey->add_option("--seed", seed, "corpus seed");
  c_survey->add_option("--k", survey_ks, "duality parameters (repeatable; default 0 1)");
  c_survey->add_option("--budget-schemes", budget_schemes,
                       "face traces allowed per drawability probe");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_planarity->parsed()) {
      kura::Graph g = load(io);
      emit(io, json{{"planar", kura::is_planar(g)}});
    } else if (c_witness->parsed()) {
      kura::Graph g = load(io);
      auto w = kura::kuratowski_witness(g);
      if (!w) {
        emit(io, json{{"planar", true}});
      } else {
        json j = kura::witness_to_json(*w);
        j["planar"] = false;
        emit(io, j);
      }
    } else if (c_genus->parsed()) {
      emit(io, kura::genus_report_to_json(kura::genus_report(load(io), budget_schemes)));
    } else if (c_pack->parsed()) {
      kura::Graph g = load(io);
      auto m = mode == "exact" ? kura::KNumberMode::exact : kura::KNumberMode::lower;
      auto [kn, cert] = kura::k_number(g, m);
      json j;
      j["k_number"] = kn;
      j["mode"] = mode;
      j["certificate"] = kura::packing_certificate_to_json(cert);
      emit(io, j);
    } else if (c_cover->parsed()) {
      kura::Graph g = load(io);
      kura::DeletionSet d = kura::planar_deletion_set(g, budget_nodes);
      emit(io, json{{"vertices", d.vertices}, {"optimal", d.optimal}});
    } else if (c_apex->parsed()) {
      kura::Graph g = load(io);
      auto cert = kura::apex_to_genus(g, k_param, budget_schemes);
      emit(io, kura::apex_certificate_to_json(*cert));
    } else if (c_duality->parsed()) {
      kura::Graph g = load(io);
      emit(io, kura::duality_report_to_json(
                   kura::duality_report(g, k_param, budget_schemes)));
    } else if (c_hyper->parsed()) {
      kura::Hypergraph h = kura::hypergraph_from_json(load_json(io));
      emit(io, kura::ding_check_to_json(kura::verify_ding_bound(h)));
    } else if (c_scross->parsed()) {
      kura::Society s = kura::society_from_json(load_json(io));
      auto cross = kura::find_cross(s);
      json j;
      j["cross"] = cross ? kura::cross_to_json(*cross) : json(nullptr);
      emit(io, j);
    } else if (c_srural->parsed()) {
      kura::Society s = kura::society_from_json(load_json(io));
      emit(io, json{{"rural", kura::is_rural(s)}});
    } else if (c_tangle->parsed()) {
      kura::Graph g = load(io);
      emit(io, kura::tangle_result_to_json(kura::planar_side_tangle(g, k_param)));
    } else if (c_generate->parsed()) {
      run_generate(gen_spec, gen_seed->count() > 0, seed, io);
    } else if (c_survey->parsed()) {
      auto corpus = survey_corpus(corpus_spec, survey_seed->count() > 0, seed, io);
      run_survey(corpus, survey_ks, budget_schemes, io);
    }
  } catch (const kura::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
