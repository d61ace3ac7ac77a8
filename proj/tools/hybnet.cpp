// hybnet command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hybnet/builder.hpp"
#include "hybnet/errors.hpp"
#include "hybnet/generate.hpp"
#include "hybnet/network_io.hpp"
#include "hybnet/newick.hpp"
#include "hybnet/oracles.hpp"
#include "hybnet/search.hpp"
#include "hybnet/trace_io.hpp"

using namespace hybnet;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 2, kMismatch = 3, kBudget = 4, kOther = 5 };

struct Failure {
  int code;
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kOther, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kOther, "cannot write " + path};
  out << text;
}

// parse errors get the file name in front
template <class F>
auto parse_file(const std::string& path, F parse) {
  auto text = slurp(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Failure{kParse, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                              std::string(to_string(e.code())) + ": " + e.what()};
  } catch (const Error& e) {
    throw Failure{kParse, path + ": " + std::string(to_string(e.code())) + ": " + e.what()};
  }
}

int exit_for(Errc c) {
  switch (c) {
    case Errc::GroundSetMismatch:
    case Errc::LabelMismatch: return kMismatch;
    case Errc::CapExceeded: return kBudget;
    default: return kOther;
  }
}

json image_json(const EmbeddingImage& img, const Forest& f) {
  const auto& g = f.graph();
  json vm = json::array();
  for (auto [v, w] : img.vertex_map)
    vm.push_back({{"forest_vertex", v}, {"label", g.labeled(v) ? json(g.label(v)) : json(nullptr)}, {"network_vertex", w}});
  json ep = json::array();
  for (const auto& [e, p] : img.edge_paths) ep.push_back({{"edge", {e.first, e.second}}, {"path", p}});
  return {{"vertex_map", vm}, {"edge_paths", ep}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hybrid number and TBR distance of unrooted binary forests"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string f1_path, f2_path, trace_path, trace_out, net_out, out_path, net_path, forest_path, t1_path, t2_path;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  int cap = 8, leaves = 5, components = 1;
  std::uint64_t seed = 0;
  bool pair = false;
  std::string out1, out2;

  auto* hyb = app.add_subcommand("hybrid", "exact hybrid number by cherry picking search");
  hyb->add_option("--forest1", f1_path)->required();
  hyb->add_option("--forest2", f2_path)->required();
  hyb->add_option("--trace-out", trace_out);
  hyb->add_option("--network-out", net_out);
  hyb->add_option("--budget", budget, "node budget");
  hyb->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* tbr = app.add_subcommand("tbr", "TBR distance by breadth-first search");
  tbr->add_option("--tree1", t1_path)->required();
  tbr->add_option("--tree2", t2_path)->required();
  tbr->add_option("--cap", cap, "depth cap")->check(CLI::NonNegativeNumber);

  auto* val = app.add_subcommand("validate-trace", "replay a trace and print its weight");
  val->add_option("--forest1", f1_path)->required();
  val->add_option("--forest2", f2_path)->required();
  val->add_option("--trace", trace_path)->required();

  auto* bld = app.add_subcommand("build-network", "network displaying both forests from a trace");
  bld->add_option("--forest1", f1_path)->required();
  bld->add_option("--forest2", f2_path)->required();
  bld->add_option("--trace", trace_path)->required();
  bld->add_option("--out", out_path)->required();

  auto* dsp = app.add_subcommand("displays", "does the network display the forest");
  dsp->add_option("--network", net_path)->required();
  dsp->add_option("--forest", forest_path)->required();

  auto* gen = app.add_subcommand("gen", "seeded random forests");
  gen->add_option("--leaves", leaves)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--components", components)->check(CLI::PositiveNumber);
  gen->add_flag("--pair", pair);
  gen->add_option("--out1", out1, "write the first forest here instead of stdout");
  gen->add_option("--out2", out2, "write the second forest here (with --pair)");

  for (auto* sub : {hyb, tbr, val, bld, dsp, gen}) sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kOther;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json report;
  report["command"] = app.get_subcommands().front()->get_name();
  auto emit = [&](const json& outcome, const std::string& text) {
    if (as_json) {
      report["outcome"] = outcome;
      report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  };
  auto read_forest = [](const std::string& p) { return parse_file(p, [](const std::string& s) { return parse_forest(s); }); };

  try {
    if (*hyb) {
      report["inputs"] = {f1_path, f2_path};
      Forest a = read_forest(f1_path), b = read_forest(f2_path);
      SearchOptions opts;
      opts.budget = budget;
      opts.threads = threads;
      auto res = min_weight_cps(a, b, opts);
      json stats = {{"nodes", res.stats.nodes}, {"memo_hits", res.stats.memo_hits}, {"elapsed_ms", res.stats.elapsed_ms}};
      if (!trace_out.empty()) spit(trace_out, serialize_trace(res.witness));
      std::optional<int> r;
      if (!net_out.empty()) {
        auto built = build_network(a, b, res.witness);
        spit(net_out, serialize_network(built.network));
        r = built.network.reticulation();
      }
      if (res.status == SearchResult::Status::Bounded) {
        emit({{"status", "bounded"}, {"lower", res.lower}, {"upper", res.upper}, {"stats", stats}},
             "bounded: " + std::to_string(res.lower) + " <= h <= " + std::to_string(res.upper) + "\n");
        return kBudget;
      }
      json out = {{"status", "exact"}, {"hybrid_number", res.min_weight}, {"stats", stats}};
      if (r) out["network_reticulation"] = *r;
      emit(out, std::to_string(res.min_weight) + "\n");
    } else if (*tbr) {
      report["inputs"] = {t1_path, t2_path};
      Forest a = read_forest(t1_path), b = read_forest(t2_path);
      if (a.component_count() != 1 || b.component_count() != 1) throw Error(Errc::NotATree, "inputs must be single trees");
      int d = tbr_distance_bfs(a.components().front(), b.components().front(), cap);
      emit({{"tbr_distance", d}}, std::to_string(d) + "\n");
    } else if (*val) {
      report["inputs"] = {f1_path, f2_path, trace_path};
      Forest a = read_forest(f1_path), b = read_forest(f2_path);
      auto tr = parse_file(trace_path, [](const std::string& s) { return parse_trace(s); });
      int w = validate_trace(a, b, tr);
      emit({{"weight", w}, {"steps", tr.steps.size()}}, std::to_string(w) + "\n");
    } else if (*bld) {
      report["inputs"] = {f1_path, f2_path, trace_path};
      Forest a = read_forest(f1_path), b = read_forest(f2_path);
      auto tr = parse_file(trace_path, [](const std::string& s) { return parse_trace(s); });
      auto built = build_network(a, b, tr);
      spit(out_path, serialize_network(built.network));
      emit({{"reticulation", built.network.reticulation()}, {"weight", weight(tr)}, {"out", out_path}},
           "r=" + std::to_string(built.network.reticulation()) + "\n");
    } else if (*dsp) {
      report["inputs"] = {net_path, forest_path};
      auto net = parse_file(net_path, [](const std::string& s) { return parse_network(s); });
      Forest f = read_forest(forest_path);
      auto img = displays(net, f);
      json out = {{"displays", img.has_value()}};
      if (img) out["image"] = image_json(*img, f);
      emit(out, img ? "yes\n" : "no\n");
    } else if (*gen) {
      Rng rng(seed);
      Forest a = random_forest(leaves, components, rng);
      std::optional<Forest> b;
      if (pair) b = random_forest(leaves, components, rng);
      const auto sa = serialize_forest(a);
      const auto sb = b ? serialize_forest(*b) : std::string();
      if (!out1.empty()) spit(out1, sa);
      if (b && !out2.empty()) spit(out2, sb);
      json out = {{"forest1", sa}};
      if (b) out["forest2"] = sb;
      std::string text = b ? "# forest 1\n" + sa + "# forest 2\n" + sb : sa;
      if (!out1.empty() && (!b || !out2.empty())) text.clear();
      emit(out, text);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const ReplayError& e) {
    std::cerr << "error: ReplayError at step " << e.step() << ": " << e.reason() << "\n";
    return kOther;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kOk;
}
