#include "cli.hpp"

#include "sfc/bench.hpp"
#include "sfc/errors.hpp"
#include "sfc/expansion.hpp"
#include "sfc/json_io.hpp"
#include "sfc/maxflow.hpp"
#include "sfc/must_stop.hpp"
#include "sfc/placement.hpp"
#include "sfc/sfc_maxflow.hpp"
#include "sfc/umw.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace sfc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;

template <class T>
std::vector<T> split_list(const std::string& text, const std::function<T(const std::string&)>& convert) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("empty entry in list \"" + text + "\"");
    try {
      out.push_back(convert(item));
    } catch (const std::logic_error&) {
      throw InputError("bad list entry \"" + item + "\"");
    }
  }
  return out;
}

std::vector<std::size_t> size_list(const std::string& text) {
  return split_list<std::size_t>(text, [](const std::string& s) {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  });
}

std::vector<double> double_list(const std::string& text) {
  return split_list<double>(text, [](const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  });
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SFC_TOOLKIT_SEED")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw InputError("SFC_TOOLKIT_SEED must be an unsigned integer");
  }
  return 1;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

// Writes to the file when a path is given, otherwise to out.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json infeasible(std::string reason) { return {{"status", "infeasible"}, {"reason", std::move(reason)}}; }

ServiceChain chain_with_groups(const Network& net, const std::string& chain, const std::string& groups) {
  ServiceChain sc = parse_chain(net, chain);
  if (!groups.empty()) {
    sc.flexible_groups = size_list(groups);
    check_chain(net, sc);
  }
  return sc;
}

struct Terminals {
  NodeId source = 0;
  NodeId destination = 0;
};

// Explicit flags win, then the fixture's "source"/"destination", then the
// first and last nodes.
Terminals terminals(const std::string& graph_path, const Network& net, const std::string& s,
                    const std::string& d) {
  if (net.node_count() < 2) throw InputError("graph needs at least two nodes");
  Json doc = read_json_file(graph_path);
  auto pick = [&](const std::string& flag, const char* key, NodeId fallback) {
    if (!flag.empty()) return net.node(flag);
    if (doc.is_object() && doc.contains(key) && doc[key].is_string()) {
      return net.node(doc[key].get<std::string>());
    }
    return fallback;
  };
  return {pick(s, "source", 0), pick(d, "destination", static_cast<NodeId>(net.node_count() - 1))};
}

SimConfig load_sim_config(const std::string& path, const std::optional<std::uint64_t>& seed_flag) {
  Json doc = read_json_file(path);
  if (!doc.is_object()) throw InputError(path + ": expected an object");
  SimConfig cfg;
  if (!doc.contains("graph")) throw InputError(path + ": missing \"graph\"");
  if (doc["graph"].is_string()) {
    std::filesystem::path graph = doc["graph"].get<std::string>();
    if (graph.is_relative()) graph = std::filesystem::path(path).parent_path() / graph;
    cfg.net = load_network(graph);
  } else {
    cfg.net = network_from_json(doc["graph"]);
  }
  if (!doc.contains("flows") || !doc["flows"].is_array()) throw InputError(path + ": \"flows\" must be an array");
  for (const auto& f : doc["flows"]) {
    if (!f.is_object() || !f.contains("source") || !f.contains("destination")) {
      throw InputError(path + ": each flow needs \"source\" and \"destination\"");
    }
    SimFlow flow;
    flow.chain.source = cfg.net.node(f["source"].get<std::string>());
    flow.chain.destination = cfg.net.node(f["destination"].get<std::string>());
    if (f.contains("chain")) {
      for (const auto& fn : f["chain"]) flow.chain.functions.push_back(fn.get<std::string>());
    }
    flow.arrival_rate = f.value("rate", 0.0);
    cfg.flows.push_back(std::move(flow));
  }
  cfg.horizon = doc.value("horizon", cfg.horizon);
  cfg.warmup = doc.value("warmup", cfg.warmup);
  cfg.seed = doc.contains("seed") && !seed_flag ? doc["seed"].get<std::uint64_t>() : resolve_seed(seed_flag);
  return cfg;
}

Json sim_summary(const SimResult& r) {
  return {{"average_queue", r.average_queue},
          {"stable", r.stable},
          {"arrived", r.arrived},
          {"routed", r.routed},
          {"delivered", r.delivered},
          {"unroutable", r.unroutable},
          {"chain_violations", r.chain_violations},
          {"capacity_violations", r.capacity_violations}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Service function chain routing and placement toolkit", "sfc-toolkit"};
  app.require_subcommand(1);

  std::string graph, chain, groups, emit_expanded, source, dest, via, target, config, sweep_list, csv,
      out_path, nodes_list, functions;
  std::optional<std::uint64_t> seed;
  bool greedy = false, undirected = false;
  double z = 0.5, degree = 4;
  std::size_t chain_length = 3, trials = 0, horizon = 0, warmup = 0, gen_nodes = 10;
  std::int64_t cap_lo = 1, cap_hi = 1, cost_lo = 1, cost_hi = 1;

  auto* sp = app.add_subcommand("sp", "Chain-constrained shortest path");
  sp->add_option("--graph", graph, "Graph JSON")->required();
  sp->add_option("--chain", chain, "src,phi1,...,dst")->required();
  sp->add_option("--flexible", groups, "Sizes of freely ordered chain groups, e.g. 1,2");
  sp->add_option("--emit-expanded", emit_expanded, "Write the pruned expanded graph as JSON");

  auto* smf = app.add_subcommand("sfc-maxflow", "Max flow with single-instance chain functions");
  smf->add_option("--graph", graph, "Graph JSON")->required();
  smf->add_option("--chain", chain, "src,phi1,...,dst")->required();

  auto* mf = app.add_subcommand("maxflow", "Exact maximum flow and minimum cut");
  mf->add_option("--graph", graph, "Graph JSON")->required();
  mf->add_option("--source", source, "Source node");
  mf->add_option("--dest", dest, "Destination node");

  auto* ms = app.add_subcommand("must-stop", "Max flow through a mandatory node (undirected)");
  ms->add_option("--graph", graph, "Graph JSON")->required();
  ms->add_option("--source", source, "Source node");
  ms->add_option("--via", via, "Mandatory node")->required();
  ms->add_option("--dest", dest, "Destination node");

  auto* pl = app.add_subcommand("place", "Minimum virtualized node set");
  pl->add_option("--graph", graph, "Graph JSON")->required();
  pl->add_option("--source", source, "Source node");
  pl->add_option("--dest", dest, "Destination node");
  pl->add_option("--target-flow", target, "Flow to preserve; defaults to the max flow");
  pl->add_flag("--greedy", greedy, "Greedy upper bound instead of the exact minimum");

  auto* um = app.add_subcommand("umw-sim", "Max-weight routing simulation");
  um->add_option("--config", config, "Simulation config JSON")->required();
  um->add_option("--sweep", sweep_list, "Comma-separated rate multipliers p");
  um->add_option("--csv", csv, "CSV output path for --sweep");
  um->add_option("--horizon", horizon, "Override the slot count");
  um->add_option("--warmup", warmup, "Override the warmup slot count");
  um->add_option("--seed", seed, "Random seed");

  auto* bs = app.add_subcommand("bench-size", "Expanded versus layered graph size");
  bs->add_option("--nodes", nodes_list, "Node counts")->default_str("20,40,60,80,100");
  bs->add_option("--z", z, "Per-node function probability");
  bs->add_option("--r", chain_length, "Chain length");
  bs->add_option("--trials", trials, "Trials per node count");
  bs->add_option("--degree", degree, "Average out-degree");
  bs->add_option("--csv", csv, "CSV output path");
  bs->add_option("--seed", seed, "Random seed");

  auto* bp = app.add_subcommand("bench-place", "Average minimum placement size");
  bp->add_option("--nodes", nodes_list, "Node counts")->default_str("10,20,...,100");
  bp->add_option("--trials", trials, "Trials per node count");
  bp->add_option("--csv", csv, "CSV output path");
  bp->add_option("--seed", seed, "Random seed");

  auto* gen = app.add_subcommand("gen", "Random graph generator");
  gen->add_option("--nodes", gen_nodes, "Node count");
  gen->add_option("--z", z, "Per-node function probability");
  gen->add_option("--degree", degree, "Average degree");
  gen->add_option("--functions", functions, "Function catalog, comma separated");
  gen->add_option("--cap-lo", cap_lo, "Lowest capacity");
  gen->add_option("--cap-hi", cap_hi, "Highest capacity");
  gen->add_option("--cost-lo", cost_lo, "Lowest cost");
  gen->add_option("--cost-hi", cost_hi, "Highest cost");
  gen->add_flag("--undirected", undirected, "Undirected edges");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (sp->parsed()) {
      Network net = load_network(graph);
      ServiceChain sc = chain_with_groups(net, chain, groups);
      if (!emit_expanded.empty()) {
        write_text(emit_expanded, expanded_to_json(net, prune(build_expanded(net, chain_orderings(sc).front()))).dump(2) + "\n");
      }
      auto best = sfc_set_shortest_path(net, sc);
      if (!best) {
        emit_json(out, infeasible("no admissible walk"));
        return kInfeasible;
      }
      Json doc = {{"status", "ok"}};
      doc.update(walk_to_json(net, best->walk));
      Json order = Json::array();
      for (const auto& f : best->ordering.functions) order.push_back(f);
      doc["chain"] = order;
      emit_json(out, doc);
      return kOk;
    }
    if (smf->parsed()) {
      Network net = load_network(graph);
      ServiceChain sc = parse_chain(net, chain);
      auto result = sfc_max_flow(net, sc);
      Json segments = Json::array();
      for (std::size_t k = 0; k < result.commodities.size(); ++k) {
        const auto& c = result.commodities[k];
        Json seg = {{"segment", c.index}, {"from", net.name(c.from)}, {"to", net.name(c.to)}};
        seg.update(flow_to_json(net, result.per_commodity[k]));
        segments.push_back(seg);
      }
      emit_json(out, {{"status", "ok"}, {"lambda", rational_to_json(result.lambda)}, {"segments", segments}});
      return kOk;
    }
    if (mf->parsed()) {
      Network net = load_network(graph);
      Terminals t = terminals(graph, net, source, dest);
      auto fa = max_flow(net, t.source, t.destination);
      auto cut = min_cut(net, t.source, t.destination);
      Json doc = {{"status", "ok"}};
      doc.update(flow_to_json(net, fa));
      Json cut_edges = Json::array();
      for (std::size_t e : cut.edges) {
        cut_edges.push_back({{"from", net.name(net.edge(e).tail)}, {"to", net.name(net.edge(e).head)}});
      }
      doc["min_cut"] = {{"capacity", rational_to_json(cut.capacity)}, {"edges", cut_edges}};
      emit_json(out, doc);
      return kOk;
    }
    if (ms->parsed()) {
      Network net = load_network(graph);
      Terminals t = terminals(graph, net, source, dest);
      auto result = must_stop(net, t.source, net.node(via), t.destination);
      emit_json(out, {{"status", "ok"},
                      {"value", rational_to_json(result.value)},
                      {"bounds",
                       {{"via_to_virtual_half", rational_to_json(result.bounds.via_to_virtual_half)},
                        {"source_to_via", rational_to_json(result.bounds.source_to_via)},
                        {"via_to_destination", rational_to_json(result.bounds.via_to_destination)}}},
                      {"inbound", flow_to_json(net, result.realization.inbound)},
                      {"outbound", flow_to_json(net, result.realization.outbound)}});
      return kOk;
    }
    if (pl->parsed()) {
      Network net = load_network(graph);
      Terminals t = terminals(graph, net, source, dest);
      std::optional<Rational> goal;
      if (!target.empty()) {
        try {
          goal = parse_rational(target);
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("--target-flow: ") + e.what());
        }
      }
      auto inst = make_placement_instance(std::move(net), t.source, t.destination, goal);
      PlacementResult result;
      try {
        result = greedy ? placement_greedy(inst) : placement_min(inst);
      } catch (const UnachievableTargetError& e) {
        emit_json(out, infeasible(e.what()));
        return kInfeasible;
      }
      Json names = Json::array();
      for (NodeId v : result.nodes) names.push_back(inst.net.name(v));
      FlowAssignment f0, f1;
      f0.arc_flows = result.witness.unprocessed;
      f1.arc_flows = result.witness.processed;
      auto flows = [&](const FlowAssignment& fa) { return flow_to_json(inst.net, fa)["flows"]; };
      emit_json(out, {{"status", "ok"},
                      {"nodes", names},
                      {"size", result.nodes.size()},
                      {"target_flow", rational_to_json(inst.target_flow)},
                      {"method", greedy ? "greedy" : "exact"},
                      {"unprocessed", flows(f0)},
                      {"processed", flows(f1)}});
      return kOk;
    }
    if (um->parsed()) {
      SimConfig cfg = load_sim_config(config, seed);
      if (horizon) cfg.horizon = horizon;
      if (um->count("--warmup")) cfg.warmup = warmup;
      if (sweep_list.empty()) {
        emit_json(out, sim_summary(simulate(cfg)));
        return kOk;
      }
      auto rows = sweep(cfg, double_list(sweep_list));
      std::ostringstream text;
      text << "p,avg_total_queue,stable\n";
      for (const auto& r : rows) {
        text << r.p << ',' << r.average_queue << ',' << (r.stable ? "true" : "false") << '\n';
      }
      emit(out, csv, text.str());
      return kOk;
    }
    if (bs->parsed()) {
      SizeBenchOptions o;
      if (!nodes_list.empty()) o.nodes = size_list(nodes_list);
      o.z = z;
      o.chain_length = chain_length;
      if (trials) o.trials = trials;
      o.average_degree = degree;
      o.seed = resolve_seed(seed);
      std::ostringstream text;
      write_size_csv(text, bench_size(o));
      emit(out, csv, text.str());
      return kOk;
    }
    if (bp->parsed()) {
      PlaceBenchOptions o;
      if (!nodes_list.empty()) o.nodes = size_list(nodes_list);
      if (trials) o.trials = trials;
      o.seed = resolve_seed(seed);
      std::ostringstream text;
      write_place_csv(text, bench_place(o));
      emit(out, csv, text.str());
      return kOk;
    }
    if (gen->parsed()) {
      RandomNetworkOptions o;
      o.nodes = gen_nodes;
      o.directed = !undirected;
      o.function_probability = z;
      o.average_degree = degree;
      o.capacity_lo = cap_lo;
      o.capacity_hi = cap_hi;
      o.cost_lo = cost_lo;
      o.cost_hi = cost_hi;
      if (!functions.empty()) o.catalog = split_list<std::string>(functions, [](const std::string& s) { return s; });
      o.seed = resolve_seed(seed);
      emit(out, out_path, network_to_json(random_network(o)).dump(2) + "\n");
      return kOk;
    }
  } catch (const UnachievableTargetError& e) {
    emit_json(out, infeasible(e.what()));
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace sfc::cli
