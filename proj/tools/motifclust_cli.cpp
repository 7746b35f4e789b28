#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifclust/anneal.hpp"
#include "motifclust/bounds.hpp"
#include "motifclust/errors.hpp"
#include "motifclust/graph.hpp"
#include "motifclust/instance.hpp"
#include "motifclust/lp.hpp"
#include "motifclust/mmcc.hpp"
#include "motifclust/oracles.hpp"

namespace mc = motifclust;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------- plumbing

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mc::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Common {
  std::string input;
  bool one_based = false;
  int n_override = 0;
  CLI::Option* n_opt = nullptr;
  bool force = false;
  std::string output;
  bool json_out = false;
  bool timing = false;
  uint64_t seed = 0;
  std::chrono::steady_clock::time_point t0;
};

void add_common(CLI::App* sub, Common& c, bool need_input = true) {
  if (need_input)
    sub->add_option("input", c.input, "edge list file (two ids per line, # comments)")
        ->required();
  sub->add_flag("--one-based", c.one_based, "vertex ids in the input start at 1");
  c.n_opt = sub->add_option("--n", c.n_override,
                            "vertex count override (allows isolated trailing vertices)");
  sub->add_flag("--force", c.force, "lift resource guards sized for typical inputs");
  sub->add_option("-o,--output", c.output, "write the JSON run report to this file");
  sub->add_flag("--json", c.json_out, "print the JSON run report on stdout");
  sub->add_flag("--timing", c.timing, "include wall-clock timing in the report");
  sub->add_option("--seed", c.seed, "random seed");
}

struct LoadedGraph {
  mc::Graph g;
  std::string digest;
};

LoadedGraph load_graph(Common& c) {
  c.t0 = std::chrono::steady_clock::now();
  const std::string bytes = read_file(c.input);
  mc::ParseOptions opt;
  opt.one_based = c.one_based;
  if (c.n_opt != nullptr && c.n_opt->count() > 0) opt.n_override = c.n_override;
  std::istringstream in(bytes);
  return {mc::parse_edge_list(in, opt), fnv1a64_hex(bytes)};
}

json make_report(const std::string& cmd, const Common& c) {
  json r;
  r["command"] = cmd;
  r["seed"] = c.seed;
  return r;
}

void set_input(json& r, const Common& c, const LoadedGraph& lg) {
  r["input"] = {{"path", c.input},
                {"digest", lg.digest},
                {"n", lg.g.num_vertices()},
                {"m", lg.g.num_edges()}};
}

void emit(json& r, const Common& c, const std::string& text) {
  if (c.timing) {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - c.t0)
                          .count();
    r["timing"] = {{"wall_ms", ms}};
  }
  if (!c.output.empty()) {
    std::ofstream f(c.output);
    f << r.dump(2) << '\n';
    if (!f) throw mc::ConfigError("cannot write '" + c.output + "'");
  }
  if (c.json_out)
    std::cout << r.dump(2) << '\n';
  else
    std::cout << text;
}

// ------------------------------------------------------------- weight flags

struct WeightFlags {
  std::string config;
  double edge_sim = 1.0, nonedge = 0.5, coeff = 0.0, tri = 1.0, nontri = 0.5;
  double lambda = 1.0, l1 = 1.0, l2 = 1.0;
  std::vector<double> range;
  CLI::Option *o_edge = nullptr, *o_ne = nullptr, *o_coeff = nullptr, *o_range = nullptr,
              *o_tri = nullptr, *o_ntri = nullptr, *o_lam = nullptr, *o_l1 = nullptr,
              *o_l2 = nullptr;
};

void add_weight_flags(CLI::App* sub, WeightFlags& w) {
  sub->add_option("--config", w.config, "weight config file (key = value lines)");
  w.o_edge = sub->add_option("--edge-sim", w.edge_sim, "similarity of edges [0,1]");
  w.o_ne = sub->add_option("--nonedge-dissim", w.nonedge, "absolute nonedge dissimilarity");
  w.o_coeff = sub->add_option("--nonedge-dissim-coeff", w.coeff,
                              "nonedge dissimilarity = 1/2 - c * edge density");
  w.o_range = sub->add_option("--nonedge-dissim-coeff-range", w.range,
                              "per-nonedge coefficient drawn uniformly from [lo, hi]")
                  ->expected(2);
  w.o_tri = sub->add_option("--tri-sim", w.tri, "similarity of triangles [0,1]");
  w.o_ntri = sub->add_option("--nontri-sim", w.nontri,
                             "similarity of non-triangle triples [0,1]");
  w.o_lam = sub->add_option("--lambda", w.lambda,
                            "relevance factor applied to both pair and triple terms");
  w.o_l1 = sub->add_option("--lambda1", w.l1, "pair-term relevance factor");
  w.o_l2 = sub->add_option("--lambda2", w.l2, "triple-term relevance factor");
}

mc::WeightConfig resolve_weights(const WeightFlags& w, uint64_t seed) {
  mc::WeightConfig cfg;
  if (!w.config.empty()) {
    std::ifstream f(w.config);
    if (!f) throw mc::ConfigError("cannot read config '" + w.config + "'");
    cfg = mc::parse_weight_config(f);
  }
  if (w.o_edge->count()) cfg.edge_sim = w.edge_sim;
  if (w.o_ne->count()) {
    cfg.nonedge_dissim = w.nonedge;
    cfg.nonedge_coeff.reset();
    cfg.nonedge_coeff_range.reset();
  }
  if (w.o_coeff->count()) {
    cfg.nonedge_coeff = w.coeff;
    cfg.nonedge_coeff_range.reset();
  }
  if (w.o_range->count()) cfg.nonedge_coeff_range = std::make_pair(w.range[0], w.range[1]);
  if (w.o_lam->count()) cfg.lambda1 = cfg.lambda2 = w.lambda;
  if (w.o_l1->count()) cfg.lambda1 = w.l1;
  if (w.o_l2->count()) cfg.lambda2 = w.l2;
  if (w.o_tri->count()) cfg.triangle_sim = w.tri;
  if (w.o_ntri->count()) cfg.nontriangle_sim = w.nontri;
  cfg.seed = seed;
  return cfg;
}

json weights_json(const mc::WeightConfig& cfg) {
  json j;
  j["edge_sim"] = cfg.edge_sim;
  if (cfg.nonedge_coeff_range)
    j["nonedge_dissim_coeff_range"] = {cfg.nonedge_coeff_range->first,
                                       cfg.nonedge_coeff_range->second};
  else if (cfg.nonedge_coeff)
    j["nonedge_dissim_coeff"] = *cfg.nonedge_coeff;
  else
    j["nonedge_dissim"] = cfg.nonedge_dissim;
  j["triangle_sim"] = cfg.triangle_sim;
  j["nontriangle_sim"] = cfg.nontriangle_sim;
  j["lambda1"] = cfg.lambda1;
  j["lambda2"] = cfg.lambda2;
  return j;
}

// --------------------------------------------------------------- converters

json clusters_json(const mc::Graph& g, const mc::Partition& p) {
  json arr = json::array();
  for (const auto& cl : p.clusters()) {
    json c = json::array();
    for (int v : cl) c.push_back(g.label(v));
    arr.push_back(std::move(c));
  }
  return arr;
}

json partition_json(const mc::Graph& g, const mc::Partition& p) {
  json m = json::object();
  for (int v = 0; v < g.num_vertices(); ++v)
    m[std::to_string(g.label(v))] = p.label[static_cast<std::size_t>(v)];
  return m;
}

json communities_json(const mc::Graph& g, const mc::FeatureAssignment& a) {
  json arr = json::array();
  for (const auto& com : a.communities()) {
    json c = json::array();
    for (int v : com) c.push_back(g.label(v));
    arr.push_back(std::move(c));
  }
  return arr;
}

json assignment_json(const mc::Graph& g, const mc::FeatureAssignment& a) {
  json m = json::object();
  for (int v = 0; v < a.n; ++v) {
    json fs = json::array();
    for (int f = 0; f < a.num_features; ++f)
      if ((a.masks[static_cast<std::size_t>(v)] >> f) & 1) fs.push_back(f);
    m[std::to_string(g.label(v))] = std::move(fs);
  }
  return m;
}

std::string cluster_lines(const json& clusters) {
  std::ostringstream out;
  int i = 0;
  for (const auto& cl : clusters) {
    out << "  cluster " << i++ << ":";
    for (const auto& v : cl) out << ' ' << v.get<int64_t>();
    out << '\n';
  }
  return out.str();
}

json parse_json_file(const std::string& path) {
  const std::string bytes = read_file(path);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw mc::ParseError("'" + path + "' is not valid JSON");
  return j;
}

// Map "label": value objects back onto dense vertex ids.
int vertex_of_label(const mc::Graph& g, const std::string& key) {
  std::size_t pos = 0;
  long long lab = 0;
  try {
    lab = std::stoll(key, &pos);
  } catch (const std::exception&) {
    throw mc::ParseError("vertex label '" + key + "' is not an integer");
  }
  if (pos != key.size()) throw mc::ParseError("vertex label '" + key + "' is not an integer");
  const long long v = lab - g.label_base;
  if (v < 0 || v >= g.num_vertices())
    throw mc::ParseError("vertex label '" + key + "' is outside the graph");
  return static_cast<int>(v);
}

// ----------------------------------------------------------------- commands

struct MmccOpts {
  Common c;
  WeightFlags w;
  double alpha = 1.0 / 3.0, beta = 1.0 / 3.0;
  std::string pivot = "asc";
  std::string route = "auto";
  std::string bridge;
  long max_iters = 500000;
  double feas_tol = 1e-7;
  std::string export_lp, export_mps;
  bool export_only = false;
};

void run_mmcc(MmccOpts& o) {
  auto lg = load_graph(o.c);
  const mc::WeightConfig cfg = resolve_weights(o.w, o.c.seed);

  json r = make_report("mmcc", o.c);
  set_input(r, o.c, lg);
  r["parameters"] = {{"weights", weights_json(cfg)},
                     {"alpha", o.alpha},
                     {"beta", o.beta},
                     {"pivot", o.pivot},
                     {"route", o.route}};

  if (!o.export_lp.empty() || !o.export_mps.empty()) {
    mc::BuildOptions bo;
    bo.force = o.c.force;
    const auto inst = mc::build_instance(lg.g, cfg, bo);
    const auto model = mc::build_lp(inst);
    auto write = [](const std::string& path, auto&& fn) {
      std::ofstream f(path);
      fn(f);
      if (!f) throw mc::ConfigError("cannot write '" + path + "'");
    };
    if (!o.export_lp.empty())
      write(o.export_lp, [&](std::ostream& s) { mc::export_lp_text(model, s); });
    if (!o.export_mps.empty())
      write(o.export_mps, [&](std::ostream& s) { mc::export_mps(model, s); });
    if (o.export_only) {
      r["results"] = {{"exported", true},
                      {"num_vars", model.num_vars()},
                      {"num_rows", model.num_rows()}};
      emit(r, o.c, "exported LP with " + std::to_string(model.num_vars()) + " vars, " +
                       std::to_string(model.num_rows()) + " rows\n");
      return;
    }
  }

  mc::ClusterOptions co;
  co.weights = cfg;
  co.rounding.alpha = o.alpha;
  co.rounding.beta = o.beta;
  co.rounding.pivot = o.pivot == "random" ? mc::RoundingParams::Pivot::random
                                          : mc::RoundingParams::Pivot::ascending;
  co.rounding.seed = o.c.seed;
  co.route = o.route == "embedded"   ? mc::LpRoute::embedded
             : o.route == "external" ? mc::LpRoute::external
                                     : mc::LpRoute::automatic;
  co.bridge_path = o.bridge;
  co.simplex.max_iters = o.max_iters;
  co.feas_tol = o.feas_tol;
  co.build.force = o.c.force;

  const mc::ClusterResult res = mc::cluster_mmcc(lg.g, co);

  json results;
  results["clusters"] = clusters_json(lg.g, res.partition);
  results["num_clusters"] = res.partition.num_clusters();
  results["partition"] = partition_json(lg.g, res.partition);
  results["lp_objective"] = res.lp_objective;
  results["rounded_cost"] = res.rounded_cost;
  if (res.lp_objective > 1e-12)
    results["ratio"] = res.rounded_cost / res.lp_objective;
  else
    results["ratio"] = nullptr;
  results["lp_source"] = res.lp_source;
  if (res.lp_source == "embedded")
    results["lp_iterations"] = res.lp_iterations;
  else
    results["lp_iterations"] = nullptr;
  r["results"] = results;

  std::ostringstream text;
  text << "clusters: " << res.partition.num_clusters() << '\n'
       << cluster_lines(r["results"]["clusters"])
       << "lp_objective  = " << mc::fmt_double(res.lp_objective) << " (" << res.lp_source
       << ")\n"
       << "rounded_cost  = " << mc::fmt_double(res.rounded_cost) << '\n';
  if (res.lp_objective > 1e-12)
    text << "ratio         = " << mc::fmt_double(res.rounded_cost / res.lp_objective) << '\n';
  emit(r, o.c, text.str());
}

struct AnnealOpts {
  Common c;
  int features = 2;
  double mu = -1.0;
  int64_t rounds = -1;
  int restarts = 1;
  std::string accept = "raw";
  std::string init = "empty";
  bool trace = false;
  double w_edge = 0, w_nonedge = 0, w_tri = 0, w_nontri = 0;
  CLI::Option *o_we = nullptr, *o_wne = nullptr, *o_wt = nullptr, *o_wnt = nullptr;
};

void add_score_weight_flags(CLI::App* sub, AnnealOpts& o) {
  o.o_we = sub->add_option("--w-edge", o.w_edge, "score weight of covered edges");
  o.o_wne = sub->add_option("--w-nonedge", o.w_nonedge, "score weight of uncovered nonedges");
  o.o_wt = sub->add_option("--w-tri", o.w_tri, "score weight of covered triangles");
  o.o_wnt = sub->add_option("--w-nontri", o.w_nontri,
                            "score weight of uncovered non-triangle triples");
}

mc::ScoreWeights resolve_score_weights(const mc::Graph& g, const AnnealOpts& o) {
  mc::ScoreWeights w = mc::default_weights(g);
  if (o.o_we && o.o_we->count()) w.edge = o.w_edge;
  if (o.o_wne && o.o_wne->count()) w.nonedge = o.w_nonedge;
  if (o.o_wt && o.o_wt->count()) w.triangle = o.w_tri;
  if (o.o_wnt && o.o_wnt->count()) w.nontriangle = o.w_nontri;
  return w;
}

json score_weights_json(const mc::ScoreWeights& w) {
  return {{"edge", w.edge},
          {"nonedge", w.nonedge},
          {"triangle", w.triangle},
          {"nontriangle", w.nontriangle}};
}

void run_anneal(AnnealOpts& o) {
  auto lg = load_graph(o.c);
  const mc::ScoreWeights w = resolve_score_weights(lg.g, o);

  mc::AnnealParams p;
  p.num_features = o.features;
  p.mu = o.mu;
  p.rounds = o.rounds;
  p.restarts = o.restarts;
  p.seed = o.c.seed;
  p.normalized_accept = o.accept == "normalized";
  p.random_init = o.init == "random";
  p.keep_trace = o.trace;

  const mc::AnnealResult res = mc::anneal(lg.g, p, &w);
  mc::AnnealContext ctx(lg.g, w);

  json r = make_report("anneal", o.c);
  set_input(r, o.c, lg);
  r["parameters"] = {{"features", o.features},
                     {"mu", p.mu < 0 ? static_cast<double>(o.features) : p.mu},
                     {"rounds", res.rounds},
                     {"restarts", o.restarts},
                     {"accept_scale", o.accept},
                     {"init", o.init},
                     {"weights", score_weights_json(w)}};

  json results;
  results["raw_score"] = res.best_raw;
  results["normalized_score"] = res.best_normalized;
  results["max_score"] = ctx.max_score();
  results["communities"] = communities_json(lg.g, res.best);
  results["assignment"] = assignment_json(lg.g, res.best);
  results["winning_restart"] = res.winning_restart;
  if (o.trace) results["trace"] = res.trace;
  r["results"] = results;

  std::ostringstream text;
  text << "normalized score = " << mc::fmt_double(res.best_normalized) << " (raw "
       << mc::fmt_double(res.best_raw) << " of " << mc::fmt_double(ctx.max_score()) << ")\n";
  int f = 0;
  for (const auto& com : r["results"]["communities"]) {
    text << "  community " << f++ << " (" << com.size() << "):";
    for (const auto& v : com) text << ' ' << v.get<int64_t>();
    text << '\n';
  }
  emit(r, o.c, text.str());
}

struct BoundsOpts {
  Common c;
  int n = 0;
  CLI::Option* n_opt = nullptr;
  int d = 0;
  CLI::Option* d_opt = nullptr;
};

void run_bounds(BoundsOpts& o) {
  o.c.t0 = std::chrono::steady_clock::now();
  json r = make_report("bounds", o.c);
  int n = 0;
  if (!o.c.input.empty()) {
    auto lg = load_graph(o.c);
    set_input(r, o.c, lg);
    n = lg.g.num_vertices();
  } else if (o.n_opt->count() > 0) {
    n = o.n;
  } else {
    throw mc::ConfigError("bounds: give an input graph or --n");
  }

  const int64_t ecc = mc::ecc_bound(n);
  const mc::EtccBound etcc = mc::etcc_bound(n);
  const bool with_alon = o.d_opt->count() > 0;
  const int64_t alon = with_alon ? mc::alon_bound(n, o.d) : 0;

  r["parameters"] = json::object();
  if (with_alon) r["parameters"]["d"] = o.d;
  json results;
  results["n"] = n;
  results["ecc_bound"] = ecc;
  results["etcc_bound"] = etcc.value;
  results["etcc_in_stated_range"] = etcc.in_stated_range;
  if (with_alon) results["alon_bound"] = alon;
  r["results"] = results;

  if (!etcc.in_stated_range)
    std::cerr << "warning: the edge-triangle cover bound formula is stated for n >= 7\n";

  std::ostringstream text;
  text << "n\tecc_bound\tetcc_bound";
  if (with_alon) text << "\talon_bound(d=" << o.d << ")";
  text << '\n' << n << '\t' << ecc << '\t' << etcc.value;
  if (with_alon) text << '\t' << alon;
  text << '\n';
  emit(r, o.c, text.str());
}

struct ExactOpts {
  Common c;
  WeightFlags w;
  std::string what;
  int features = 2;
};

void run_exact(ExactOpts& o) {
  auto lg = load_graph(o.c);
  json r = make_report("exact", o.c);
  set_input(r, o.c, lg);
  r["parameters"] = {{"what", o.what}};

  std::ostringstream text;
  json results;
  if (o.what == "mmcc") {
    const mc::WeightConfig cfg = resolve_weights(o.w, o.c.seed);
    r["parameters"]["weights"] = weights_json(cfg);
    mc::BuildOptions bo;
    bo.force = o.c.force;
    const auto inst = mc::build_instance(lg.g, cfg, bo);
    const auto res = mc::exact_mmcc(inst);
    results["optimum"] = res.optimum;
    results["clusters"] = clusters_json(lg.g, res.argmin);
    results["partition"] = partition_json(lg.g, res.argmin);
    text << "optimum = " << mc::fmt_double(res.optimum) << '\n'
         << cluster_lines(results["clusters"]);
  } else if (o.what == "ecc" || o.what == "etcc") {
    const auto res = o.what == "ecc" ? mc::exact_ecc(lg.g) : mc::exact_etcc(lg.g);
    results["size"] = res.size;
    json cover = json::array();
    for (const auto& cl : res.cover) {
      json c = json::array();
      for (int v : cl) c.push_back(lg.g.label(v));
      cover.push_back(std::move(c));
    }
    results["cover"] = cover;
    text << o.what << " = " << res.size << '\n';
  } else {  // assign
    r["parameters"]["features"] = o.features;
    const auto res = mc::exact_best_assignment(lg.g, o.features);
    results["raw_score"] = res.raw;
    results["normalized_score"] = res.normalized;
    results["communities"] = communities_json(lg.g, res.argmax);
    results["assignment"] = assignment_json(lg.g, res.argmax);
    text << "best normalized score = " << mc::fmt_double(res.normalized) << " (raw "
         << mc::fmt_double(res.raw) << ")\n";
  }
  r["results"] = results;
  emit(r, o.c, text.str());
}

struct EvalOpts {
  Common c;
  WeightFlags w;
  std::string partition_file;
  std::string assignment_file;
  int features = 0;
  CLI::Option* features_opt = nullptr;
};

void run_eval(EvalOpts& o) {
  if (o.partition_file.empty() == o.assignment_file.empty())
    throw mc::ConfigError("eval: give exactly one of --partition or --assignment");
  auto lg = load_graph(o.c);
  const int n = lg.g.num_vertices();
  json r = make_report("eval", o.c);
  set_input(r, o.c, lg);

  json results;
  std::ostringstream text;
  if (!o.partition_file.empty()) {
    const json doc = parse_json_file(o.partition_file);
    if (!doc.contains("partition") || !doc["partition"].is_object())
      throw mc::ParseError("'" + o.partition_file + "': expected a top-level \"partition\" object");
    mc::Partition p;
    p.label.assign(static_cast<std::size_t>(n), -1);
    for (const auto& [key, val] : doc["partition"].items()) {
      if (!val.is_number_integer())
        throw mc::ParseError("partition entry '" + key + "' is not an integer cluster id");
      p.label[static_cast<std::size_t>(vertex_of_label(lg.g, key))] = val.get<int>();
    }
    for (int v = 0; v < n; ++v)
      if (p.label[static_cast<std::size_t>(v)] < 0)
        throw mc::ParseError("partition is missing vertex " + std::to_string(lg.g.label(v)));
    p.canonicalize();

    const mc::WeightConfig cfg = resolve_weights(o.w, o.c.seed);
    r["parameters"] = {{"weights", weights_json(cfg)}, {"partition_file", o.partition_file}};
    mc::BuildOptions bo;
    bo.force = o.c.force;
    const auto inst = mc::build_instance(lg.g, cfg, bo);
    const double cost = mc::mmcc_cost(inst, p);
    results["mmcc_cost"] = cost;
    results["num_clusters"] = p.num_clusters();
    text << "mmcc_cost = " << mc::fmt_double(cost) << " over " << p.num_clusters()
         << " clusters\n";
  } else {
    const json doc = parse_json_file(o.assignment_file);
    if (!doc.contains("assignment") || !doc["assignment"].is_object())
      throw mc::ParseError("'" + o.assignment_file +
                           "': expected a top-level \"assignment\" object");
    mc::FeatureAssignment a;
    a.n = n;
    a.masks.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int max_feature = -1;
    for (const auto& [key, val] : doc["assignment"].items()) {
      const int v = vertex_of_label(lg.g, key);
      if (!val.is_array())
        throw mc::ParseError("assignment entry '" + key + "' is not a feature array");
      for (const auto& f : val) {
        if (!f.is_number_integer() || f.get<int>() < 0 || f.get<int>() >= 64)
          throw mc::ParseError("assignment entry '" + key + "' has a bad feature index");
        a.masks[static_cast<std::size_t>(v)] |= uint64_t{1} << f.get<int>();
        max_feature = std::max(max_feature, f.get<int>());
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!seen[static_cast<std::size_t>(v)])
        throw mc::ParseError("assignment is missing vertex " + std::to_string(lg.g.label(v)));
    a.num_features = o.features_opt->count() > 0 ? o.features : max_feature + 1;
    if (a.num_features < 1) a.num_features = 1;
    if (max_feature >= a.num_features)
      throw mc::ConfigError("assignment uses feature " + std::to_string(max_feature) +
                            " but only " + std::to_string(a.num_features) + " features");

    const mc::ScoreWeights w = mc::default_weights(lg.g);
    r["parameters"] = {{"weights", score_weights_json(w)},
                       {"assignment_file", o.assignment_file},
                       {"features", a.num_features}};
    mc::AnnealContext ctx(lg.g, w);
    const double raw = ctx.raw_score(a.masks);
    results["raw_score"] = raw;
    results["normalized_score"] = ctx.normalized(raw);
    results["max_score"] = ctx.max_score();
    text << "normalized score = " << mc::fmt_double(ctx.normalized(raw)) << " (raw "
         << mc::fmt_double(raw) << " of " << mc::fmt_double(ctx.max_score()) << ")\n";
  }
  r["results"] = results;
  emit(r, o.c, text.str());
}

struct RandcoverOpts {
  Common c;
  int d = 1;
  int trials = 5;
  bool list_cliques = false;
};

void run_randcover(RandcoverOpts& o) {
  auto lg = load_graph(o.c);
  const mc::CoverReport rep = mc::random_cover(lg.g, o.d, o.c.seed, o.trials);

  json r = make_report("randcover", o.c);
  set_input(r, o.c, lg);
  r["parameters"] = {{"d", o.d}, {"trials", o.trials}};
  json results;
  results["bound"] = rep.bound;
  results["trials_used"] = rep.trials_used;
  results["covered_all"] = rep.covered_all;
  results["degree_ok"] = rep.degree_ok;
  results["num_cliques"] = rep.cliques.size();
  if (o.list_cliques) {
    json cl = json::array();
    for (const auto& c : rep.cliques) {
      json one = json::array();
      for (int v : c) one.push_back(lg.g.label(v));
      cl.push_back(std::move(one));
    }
    results["cliques"] = cl;
  }
  r["results"] = results;

  if (!rep.degree_ok)
    std::cerr << "warning: some vertex has more than d-1 non-neighbours; coverage is not "
                 "guaranteed\n";

  std::ostringstream text;
  text << "covered_all = " << (rep.covered_all ? "true" : "false") << " ("
       << rep.cliques.size() << " cliques, bound " << rep.bound << ", trial "
       << rep.trials_used << ")\n";
  emit(r, o.c, text.str());
}

struct TrianglesOpts {
  Common c;
  bool list = false;
};

void run_triangles(TrianglesOpts& o) {
  auto lg = load_graph(o.c);
  const auto tris = mc::enumerate_triangles(lg.g);

  json r = make_report("triangles", o.c);
  set_input(r, o.c, lg);
  r["parameters"] = json::object();
  json results;
  results["count"] = tris.size();
  if (o.list) {
    json arr = json::array();
    for (const mc::Triple& t : tris)
      arr.push_back({lg.g.label(t.a), lg.g.label(t.b), lg.g.label(t.c)});
    results["triangles"] = arr;
  }
  r["results"] = results;
  emit(r, o.c, "triangles: " + std::to_string(tris.size()) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motif clustering toolkit: edge+triangle correlation clustering, "
               "overlapping communities, clique cover bounds"};
  app.require_subcommand(1);

  MmccOpts mo;
  auto* mmcc = app.add_subcommand(
      "mmcc", "cluster via the linear relaxation and region-growing rounding");
  add_common(mmcc, mo.c);
  add_weight_flags(mmcc, mo.w);
  mmcc->add_option("--alpha", mo.alpha, "rounding ball radius (0,1)");
  mmcc->add_option("--beta", mo.beta, "rounding density threshold (0,1)");
  mmcc->add_option("--pivot-rule", mo.pivot, "pivot choice: asc (default) or random")
      ->check(CLI::IsMember({"asc", "random"}));
  mmcc->add_option("--route", mo.route, "LP route: auto, embedded, external")
      ->check(CLI::IsMember({"auto", "embedded", "external"}));
  mmcc->add_option("--lp-bridge", mo.bridge,
                   "external solver bridge script (default $MOTIFCLUST_LP_BRIDGE)");
  mmcc->add_option("--lp-max-iters", mo.max_iters, "embedded simplex iteration limit");
  mmcc->add_option("--feas-tol", mo.feas_tol, "feasibility tolerance for imported solutions");
  mmcc->add_option("--export-lp", mo.export_lp, "also write the model in LP text format");
  mmcc->add_option("--export-mps", mo.export_mps, "also write the model in free MPS format");
  mmcc->add_flag("--export-only", mo.export_only, "stop after exporting the model");
  mmcc->callback([&] { run_mmcc(mo); });

  AnnealOpts ao;
  auto* anneal = app.add_subcommand(
      "anneal", "overlapping communities by simulated annealing on the coverage score");
  add_common(anneal, ao.c);
  anneal->add_option("-M,--features", ao.features, "number of features / communities");
  anneal->add_option("--mu", ao.mu, "acceptance sharpness (default: number of features)");
  anneal->add_option("--rounds", ao.rounds, "rounds per chain (default: ceil(20 n ln n))");
  anneal->add_option("--restarts", ao.restarts, "independent chains; best one wins");
  anneal->add_option("--accept-scale", ao.accept,
                     "delta scale in the acceptance test: raw or normalized")
      ->check(CLI::IsMember({"raw", "normalized"}));
  anneal->add_option("--init", ao.init, "initial assignment: empty or random")
      ->check(CLI::IsMember({"empty", "random"}));
  anneal->add_flag("--trace", ao.trace, "include the best-score trace in the report");
  add_score_weight_flags(anneal, ao);
  anneal->callback([&] { run_anneal(ao); });

  BoundsOpts bo;
  auto* bounds = app.add_subcommand("bounds", "closed-form clique cover bounds (TSV)");
  bounds->add_option("input", bo.c.input, "edge list file (optional; or use --n)");
  bounds->add_flag("--one-based", bo.c.one_based, "vertex ids in the input start at 1");
  bo.n_opt = bounds->add_option("--n", bo.n, "vertex count (instead of an input graph)");
  bo.d_opt = bounds->add_option("-d", bo.d, "non-neighbour budget for the sampling bound");
  bounds->add_option("-o,--output", bo.c.output, "write the JSON run report to this file");
  bounds->add_flag("--json", bo.c.json_out, "print the JSON run report on stdout");
  bounds->add_flag("--timing", bo.c.timing, "include wall-clock timing in the report");
  bounds->add_option("--seed", bo.c.seed, "random seed (unused; kept for report symmetry)");
  bounds->callback([&] { run_bounds(bo); });

  ExactOpts eo;
  auto* exact = app.add_subcommand("exact", "exhaustive optima at desk scale");
  add_common(exact, eo.c);
  exact->add_option("--what", eo.what, "mmcc, etcc, ecc, or assign")
      ->required()
      ->check(CLI::IsMember({"mmcc", "etcc", "ecc", "assign"}));
  exact->add_option("-M,--features", eo.features, "features for --what assign");
  add_weight_flags(exact, eo.w);
  exact->callback([&] { run_exact(eo); });

  EvalOpts vo;
  auto* eval = app.add_subcommand("eval", "score a user-supplied partition or assignment");
  add_common(eval, vo.c);
  eval->add_option("--partition", vo.partition_file,
                   "JSON file: {\"partition\": {label: cluster, ...}}");
  eval->add_option("--assignment", vo.assignment_file,
                   "JSON file: {\"assignment\": {label: [features], ...}}");
  vo.features_opt =
      eval->add_option("-M,--features", vo.features, "feature count for --assignment");
  add_weight_flags(eval, vo.w);
  eval->callback([&] { run_eval(vo); });

  RandcoverOpts ro;
  auto* randcover =
      app.add_subcommand("randcover", "randomized edge+triangle clique cover");
  add_common(randcover, ro.c);
  randcover->add_option("-d", ro.d, "non-neighbour budget (vertex kept w.p. 1/(d+1))")
      ->required();
  randcover->add_option("--trials", ro.trials, "retries until full coverage");
  randcover->add_flag("--cliques", ro.list_cliques, "include the clique list in the report");
  randcover->callback([&] { run_randcover(ro); });

  TrianglesOpts to;
  auto* triangles = app.add_subcommand("triangles", "enumerate triangles");
  add_common(triangles, to.c);
  triangles->add_flag("--list", to.list, "include the triangle list in the report");
  triangles->callback([&] { run_triangles(to); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mc::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const mc::SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
