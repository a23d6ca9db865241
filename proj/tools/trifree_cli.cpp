#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trifree/construction.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/errors.hpp"
#include "trifree/experiment.hpp"
#include "trifree/gadgets.hpp"
#include "trifree/partite_distance.hpp"
#include "trifree/random_models.hpp"

using json = nlohmann::ordered_json;
using namespace trifree;

namespace {

constexpr int kArgumentExit = 2;
constexpr int kCapacityExit = 3;

std::optional<double> parse_c(const std::string& text) {
  if (text == "formula") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ArgumentError("--c expects a number or 'formula'");
}

json cut_json(const CutResult& cut, std::size_t r, std::size_t m) {
  json j;
  j["r"] = r;
  j["edges"] = m;
  j["cut"] = cut.cut;
  j["distance"] = cut.distance;
  j["exact"] = cut.exact;
  j["coloring"] = cut.coloring.color;
  return j;
}

json params_json(const ConstructionParams& p) {
  json j;
  j["gamma"] = p.gamma;
  j["r"] = p.r;
  j["n"] = p.n;
  j["p"] = p.p;
  j["ell"] = p.ell;
  j["K"] = p.big_k;
  j["eps"] = p.eps;
  j["c"] = p.c;
  j["c_source"] = p.c_source == CSource::kFormula ? "formula" : "explicit";
  j["c_prime"] = p.c_prime;
  j["pprime"] = p.pprime;
  j["seed"] = p.seed.value;
  j["trial"] = p.seed.trial;
  j["valid"] = p.valid;
  j["lemma_regime"] = p.lemma_regime;
  return j;
}

VertexSet set_from(const json& params, const char* key, std::size_t n, const VertexSet& fallback) {
  if (!params.contains(key)) return fallback;
  return VertexSet::from(n, params.at(key).get<std::vector<Vertex>>());
}

template <class T>
T value_or(const json& params, const char* key, T fallback) {
  return params.contains(key) ? params.at(key).get<T>() : fallback;
}

template <class T>
T need(const json& params, const char* key) {
  if (!params.contains(key)) throw ArgumentError(std::string("--params: missing '") + key + "'");
  return params.at(key).get<T>();
}

void write_graph(const std::string& path, const Graph& g) {
  if (path.empty() || path == "-")
    write_edge_list(std::cout, g);
  else
    save_edge_list(path, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-free construction and partite-distance toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1, trial = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) or G(n,p,p')");
  std::string model = "gnp", gen_out;
  std::size_t gen_n = 0;
  double gen_p = 0, gen_pp = 1;
  gen->add_option("--model", model)->check(CLI::IsMember({"gnp", "gnpp"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--p", gen_p)->required();
  auto* pprime_opt = gen->add_option("--pprime", gen_pp, "B-internal sparsification; implies --model gnpp");
  gen->add_option("--seed", seed);
  gen->add_option("--trial", trial);
  gen->add_option("--out", gen_out, "edge list path, '-' for stdout");

  // gadget
  auto* gad = app.add_subcommand("gadget", "Print the triangle-free gadget with chromatic number r+1");
  std::size_t gad_r = 2;
  std::string gad_out;
  gad->add_option("--r", gad_r)->required();
  gad->add_option("--out", gad_out, "also write the edge list here");

  // construct
  auto* con = app.add_subcommand("construct", "Run the staged construction");
  std::size_t con_n = 0, con_r = 2;
  double con_p = 0, con_gamma = 0.2;
  std::string con_c = std::to_string(kDefaultC), con_prefix = "./", con_gamma_graph;
  double con_p_scale = 0;
  con->add_option("--n", con_n)->required();
  auto* con_p_opt = con->add_option("--p", con_p);
  con->add_option("--p-scale", con_p_scale, "p as a multiple of n^-1/2")->excludes(con_p_opt);
  con->add_option("--gamma", con_gamma);
  con->add_option("--r", con_r);
  con->add_option("--c", con_c, "number or 'formula'");
  con->add_option("--seed", seed);
  con->add_option("--trial", trial);
  con->add_option("--out-prefix", con_prefix, "prepended to g1.edges, g2.edges, g3.edges, h.edges, trace.json");
  con->add_option("--gamma-graph", con_gamma_graph, "use this edge list as the host graph");
  bool con_save_gamma = false;
  con->add_flag("--save-gamma", con_save_gamma);

  // distance
  auto* dist = app.add_subcommand("distance", "Distance to r-partite");
  std::string dist_graph, dist_method = "auto";
  std::size_t dist_r = 2, dist_restarts = kDefaultRestarts;
  dist->add_option("--graph", dist_graph)->required();
  dist->add_option("--r", dist_r);
  auto* method_opt = dist->add_option("--method", dist_method)->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  bool dist_exact = false, dist_heuristic = false;
  auto* exact_flag = dist->add_flag("--exact", dist_exact)->excludes(method_opt);
  dist->add_flag("--heuristic", dist_heuristic)->excludes(method_opt)->excludes(exact_flag);
  dist->add_option("--restarts", dist_restarts);
  dist->add_option("--seed", seed);

  // verify
  auto* ver = app.add_subcommand("verify", "Check a probabilistic property and print a JSON report");
  std::string ver_graph, ver_gamma, ver_lemma, ver_params = "{}";
  std::size_t ver_samples = 50;
  ver->add_option("--graph", ver_graph, "H (or the graph under test)")->required();
  ver->add_option("--gamma-graph", ver_gamma, "host graph for stars");
  ver->add_option("--lemma", ver_lemma)
      ->required()
      ->check(CLI::IsMember({"g1nice", "basics", "atypical", "stars", "slicing", "classify"}));
  ver->add_option("--params", ver_params, "JSON object or @file");
  ver->add_option("--samples", ver_samples);
  ver->add_option("--seed", seed);

  // sweep
  auto* sw = app.add_subcommand("sweep", "Run a parameter sweep");
  std::string sw_config, sw_out;
  sw->add_option("--config", sw_config)->required();
  sw->add_option("--out", sw_out, "overrides 'out' in the config");

  // fit
  auto* fit = app.add_subcommand("fit", "Fit distance against n/p");
  std::string fit_in;
  fit->add_option("--in", fit_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kArgumentExit;
  }

  try {
    const Seed s{seed, trial};
    if (*gen) {
      if (model == "gnp" && pprime_opt->count() == 0)
        write_graph(gen_out, sample_gnp(gen_n, gen_p, s));
      else
        write_graph(gen_out, sample_gnpp(gen_n, gen_p, gen_pp, s).graph);
    } else if (*gad) {
      const auto g = gadget_for(gad_r);
      json j;
      j["r"] = g.r;
      j["order"] = g.order();
      j["chromatic_number"] = g.chromatic_number;
      j["triangle_free"] = triangle_census(g.graph).triangle_free();
      j["edges"] = g.graph.edges();
      std::cout << j.dump(2) << '\n';
      if (!gad_out.empty()) save_edge_list(gad_out, g.graph);
    } else if (*con) {
      const double p = con_p_scale > 0 ? con_p_scale / std::sqrt(static_cast<double>(con_n)) : con_p;
      require(p > 0, "construct: give --p or --p-scale");
      const auto params = derive_params(con_gamma, con_r, con_n, p, parse_c(con_c), s);
      const auto gamma = con_gamma_graph.empty() ? sample_gnp(con_n, p, s) : load_edge_list(con_gamma_graph);
      const auto trace = construct(gamma, params);
      const auto check = check_chain(gamma, trace, params.gadget.graph);
      if (const auto parent = std::filesystem::path(con_prefix + "x").parent_path(); !parent.empty())
        std::filesystem::create_directories(parent);
      if (con_save_gamma) save_edge_list(con_prefix + "gamma.edges", gamma);
      save_edge_list(con_prefix + "g1.edges", trace.g1);
      save_edge_list(con_prefix + "g2.edges", trace.g2);
      save_edge_list(con_prefix + "g3.edges", trace.g3);
      save_edge_list(con_prefix + "h.edges", trace.h);
      json j;
      j["params"] = params_json(params);
      j["edges"] = {{"gamma", gamma.m()}, {"g1", trace.g1.m()}, {"g2", trace.g2.m()}, {"g3", trace.g3.m()},
                    {"h", trace.h.m()}};
      j["deleted"] = {{"g1_a_internal", trace.deleted.g1_a_internal},
                      {"g1_b_dropped", trace.deleted.g1_b_dropped},
                      {"g2", trace.deleted.g2},
                      {"g3", trace.deleted.g3},
                      {"h", trace.deleted.h}};
      j["min_degree_h"] = trace.min_degree_h;
      j["min_degree_target"] = trace.min_degree_target;
      j["min_degree_ok"] = trace.min_degree_ok;
      j["triangles_h"] = trace.triangles_h;
      j["chain"] = {{"monotone", check.monotone},
                    {"a_independent", check.a_independent},
                    {"a_degrees_preserved", check.a_degrees_preserved},
                    {"b_edges_respect_gadget", check.b_edges_respect_gadget}};
      std::ofstream(con_prefix + "trace.json") << j.dump(2) << '\n';
      std::cout << j.dump(2) << '\n';
    } else if (*dist) {
      const auto g = load_edge_list(dist_graph);
      if (dist_exact) dist_method = "exact";
      if (dist_heuristic) dist_method = "heuristic";
      const bool exact = dist_method == "exact" || (dist_method == "auto" && g.n() <= 24 &&
                                                    g.n() <= exact_vertex_cap(dist_r));
      const auto cut = exact ? max_rcut_exact(g, dist_r) : rcut_local_search(g, dist_r, dist_restarts, s);
      std::cout << cut_json(cut, dist_r, g.m()).dump(2) << '\n';
    } else if (*ver) {
      std::string text = ver_params;
      if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw ArgumentError("cannot open params file '" + text.substr(1) + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      json params;
      try {
        params = json::parse(text);
      } catch (const json::exception& e) {
        throw ArgumentError(std::string("--params: ") + e.what());
      }
      const auto g = load_edge_list(ver_graph);
      const std::size_t n = g.n();
      const auto halves = GnppLayout::for_order(n);
      PropertyReport report;
      if (ver_lemma == "g1nice") {
        const auto cp = derive_params(need<double>(params, "gamma"), value_or<std::size_t>(params, "r", 2), n,
                                      need<double>(params, "p"),
                                      params.contains("c") && params["c"].is_string()
                                          ? std::optional<double>{}
                                          : std::optional<double>{value_or<double>(params, "c", kDefaultC)},
                                      s);
        report = check_g1nice(g, halves, cp, need<double>(params, "eps"), ver_samples, s);
      } else if (ver_lemma == "basics") {
        BasicsInputs in;
        in.eps = need<double>(params, "eps");
        in.big_m = value_or<std::size_t>(params, "M", 10);
        in.p = need<double>(params, "p");
        if (params.contains("A")) in.a = set_from(params, "A", n, halves.a);
        if (params.contains("B")) in.b = set_from(params, "B", n, halves.b);
        in.samples = ver_samples;
        in.seed = s;
        report = check_basics(g, in);
      } else if (ver_lemma == "atypical") {
        report = check_atypical(g, set_from(params, "A", n, halves.a), set_from(params, "B", n, halves.b),
                                need<double>(params, "eps"), need<double>(params, "p"),
                                value_or<std::size_t>(params, "M", 2));
      } else if (ver_lemma == "stars") {
        require(!ver_gamma.empty(), "verify stars: --gamma-graph is required");
        const auto host = load_edge_list(ver_gamma);
        report = check_bad_stars(host, g, set_from(params, "A", n, halves.a), need<double>(params, "q"),
                                 need<double>(params, "eps"), need<std::size_t>(params, "s"),
                                 need<double>(params, "p"));
      } else if (ver_lemma == "slicing") {
        report = check_slicing(g, VertexSet::from(n, need<std::vector<Vertex>>(params, "X")),
                               VertexSet::from(n, need<std::vector<Vertex>>(params, "Y")),
                               need<double>(params, "eps"), need<double>(params, "d"), need<double>(params, "p"),
                               ver_samples, s);
      } else {
        std::vector<VertexSet> parts;
        for (const auto& part : need<std::vector<std::vector<Vertex>>>(params, "parts"))
          parts.push_back(VertexSet::from(n, part));
        std::optional<std::vector<Edge>> reduced;
        if (params.contains("reduced")) reduced = params["reduced"].get<std::vector<Edge>>();
        report = check_classification(g, parts, need<double>(params, "d"), need<double>(params, "eps"),
                                      need<double>(params, "p"), value_or<double>(params, "gamma", 0.0),
                                      reduced ? &*reduced : nullptr);
      }
      std::cout << report_json(report) << '\n';
    } else if (*sw) {
      auto config = load_sweep_config(sw_config);
      if (!sw_out.empty()) config.out = sw_out;
      require(!config.out.empty(), "sweep: no output path (set 'out' or --out)");
      const auto records = run_sweep(config);
      save_sweep(config.out, config, records);
      std::size_t completed = 0, triangles = 0;
      for (const auto& r : records) {
        completed += r.completed;
        triangles += r.triangles_h;
      }
      json j;
      j["records"] = records.size();
      j["completed"] = completed;
      j["triangles_total"] = triangles;
      j["csv"] = config.out;
      std::cout << j.dump(2) << '\n';
    } else if (*fit) {
      std::cout << fit_json(fit_scaling(load_csv(fit_in))) << '\n';
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacityExit;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgumentExit;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgumentExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
