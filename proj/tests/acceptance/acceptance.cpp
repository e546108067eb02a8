// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracles/oracles.hpp"
#include "sfc/bench.hpp"
#include "sfc/checks.hpp"
#include "sfc/expansion.hpp"
#include "sfc/json_io.hpp"
#include "sfc/maxflow.hpp"
#include "sfc/must_stop.hpp"
#include "sfc/placement.hpp"
#include "sfc/sfc_maxflow.hpp"
#include "sfc/umw.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace sfc;

namespace {

const std::string kData = std::string(SFC_DATA_DIR) + "/instances/";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every emitted flow passes through here; the last criterion reports the tally.
struct InvariantLedger {
  std::size_t checked = 0;
  std::vector<std::string> problems;

  void record(const std::string& where, const Problems& found) {
    ++checked;
    for (const auto& p : found) problems.push_back(where + ": " + p);
  }
};

InvariantLedger ledger;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::printf("%s %2d %s: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
}

std::string join_names(const Network& net, const std::vector<NodeId>& nodes) {
  std::string out;
  for (NodeId v : nodes) out += (out.empty() ? "" : ",") + net.name(v);
  return out;
}

Outcome golden_shortest_walk() {
  Network net = load_network(kData + "fig2.json");
  ServiceChain sc = parse_chain(net, "v1,phi1,phi2,v5");
  auto walk = sfc_shortest_path(net, sc);
  if (!walk) return {false, "no walk found"};
  std::vector<double> times;
  for (int i = 0; i < 51; ++i) {
    auto start = Clock::now();
    auto again = sfc_shortest_path(net, sc);
    times.push_back(seconds_since(start) * 1e3);
    if (!again || again->nodes != walk->nodes || again->cost != walk->cost) return {false, "unstable result"};
  }
  std::sort(times.begin(), times.end());
  double median_ms = times[times.size() / 2];
  std::string path = join_names(net, walk->nodes);
  bool pass = path == "v1,v3,v4,v3,v5" && walk->cost == 6 && median_ms < 1.0;
  std::ostringstream d;
  d << "walk " << path << " cost " << to_string(walk->cost) << ", median " << median_ms << " ms";
  return {pass, d.str()};
}

Outcome expansion_sizes() {
  Network net = load_network(kData + "fig2.json");
  ExpandedGraph initial = build_expanded(net, parse_chain(net, "v1,phi1,phi2,v5"));
  ExpandedGraph pruned = prune(initial);
  bool pass = initial.vertices().size() == 15 && initial.arcs().size() == 21 && pruned.vertices().size() == 7 &&
              pruned.arcs().size() == 9;
  std::ostringstream d;
  d << "initial " << initial.vertices().size() << "/" << initial.arcs().size() << ", pruned "
    << pruned.vertices().size() << "/" << pruned.arcs().size() << " (vertices/arcs)";
  return {pass, d.str()};
}

Outcome baseline_equivalence() {
  auto start = Clock::now();
  const double zs[] = {0.3, 0.5, 0.8};
  std::size_t instances = 0, feasible = 0, brute_checked = 0, mismatches = 0;
  std::string first_mismatch;
  for (std::uint64_t seed = 1; instances < 240; ++seed) {
    RandomNetworkOptions o;
    o.nodes = 3 + seed % 10;  // 3..12
    o.directed = seed % 4 != 0;
    o.function_probability = zs[seed % 3];
    o.average_degree = 2 + static_cast<double>(seed % 3);
    o.cost_lo = 0;
    o.cost_hi = 10;
    o.catalog = {"phi1", "phi2", "phi3"};
    o.seed = seed;
    Network net = random_network(o);
    std::size_t r = seed % 4;
    ServiceChain sc{0, static_cast<NodeId>(o.nodes - 1), {}, {}};
    for (std::size_t i = 0; i < r; ++i) sc.functions.push_back(o.catalog[i]);
    ++instances;

    auto ours = sfc_shortest_path(net, sc);
    auto layered = layered_shortest_path(net, sc);
    auto hosts = oracle::host_sequence_cost(net, sc);
    std::optional<std::optional<Rational>> brute;
    if (o.nodes <= 8) {
      auto b = oracle::enumerate_walks(net, sc);
      brute = b ? std::optional<Rational>(b->first) : std::nullopt;
      ++brute_checked;
    }
    auto cost = [](const std::optional<Walk>& w) { return w ? std::optional<Rational>(w->cost) : std::nullopt; };
    bool ok = cost(ours) == cost(layered) && cost(ours) == hosts && (!brute || *brute == cost(ours));
    if (ours) {
      ++feasible;
      ok = ok && is_admissible(net, ours->nodes, sc) && walk_cost(net, ours->nodes) == ours->cost;
    }
    if (!ok) {
      ++mismatches;
      if (first_mismatch.empty()) first_mismatch = " first at seed " + std::to_string(seed);
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream d;
  d << instances << " instances (" << feasible << " feasible, " << brute_checked << " brute-forced), " << mismatches
    << " mismatches" << first_mismatch << ", " << elapsed << " s";
  return {mismatches == 0 && instances >= 200 && elapsed < 60, d.str()};
}

Outcome pruning_statistics() {
  const std::size_t runs = 600;
  double removed_sum = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    RandomNetworkOptions o;
    o.nodes = 10 + i % 21;
    o.directed = true;
    o.function_probability = 0.5;
    o.average_degree = 4;
    o.catalog = {"phi1", "phi2", "phi3"};
    o.seed = trial_seed(7, o.nodes, i);
    Network net = random_network(o);
    ServiceChain sc{0, static_cast<NodeId>(o.nodes - 1), o.catalog, {}};
    ExpandedGraph initial = build_expanded(net, sc);
    ExpandedGraph pruned = prune(initial);
    removed_sum += 1.0 - static_cast<double>(pruned.vertices().size()) / static_cast<double>(initial.vertices().size());
  }
  double mean = removed_sum / runs;
  const double bound = 0.5 * 0.5, margin = 0.02;
  std::ostringstream d;
  d << runs << " expansions, mean removed vertex fraction " << mean << " (bound " << bound << ", margin " << margin
    << ")";
  return {mean >= bound - margin, d.str()};
}

Outcome golden_must_stop() {
  Network net = load_network(kData + "fig4.json");
  NodeId s = net.node("s"), t = net.node("t"), d = net.node("d");
  auto r = must_stop(net, s, t, d);
  auto problems = check_must_stop(net, s, t, d, r.realization, r.value);
  ledger.record("must-stop example", problems);
  bool pass = r.bounds.via_to_virtual_half == Rational(3, 2) && r.bounds.source_to_via == 2 &&
              r.bounds.via_to_destination == 2 && r.value == Rational(3, 2) && problems.empty();
  std::ostringstream o;
  o << "bounds (" << to_string(r.bounds.via_to_virtual_half) << ", " << to_string(r.bounds.source_to_via) << ", "
    << to_string(r.bounds.via_to_destination) << "), value " << to_string(r.value) << ", realization delivers "
    << to_string(r.realization.inbound.value) << "/" << to_string(r.realization.outbound.value) << ", "
    << problems.size() << " invariant problems";
  return {pass, o.str()};
}

Outcome must_stop_oracle() {
  std::mt19937_64 rng(31);
  std::size_t instances = 0, mismatches = 0, not_half = 0, nonzero = 0;
  std::string first;
  for (std::uint64_t seed = 1; instances < 220; ++seed) {
    RandomNetworkOptions o;
    o.nodes = 3 + seed % 5;  // 3..7
    o.directed = false;
    o.average_degree = 1.5 + static_cast<double>(seed % 3);
    o.capacity_lo = 1;
    o.capacity_hi = 5;
    o.seed = seed;
    Network drawn = random_network(o);
    const auto n = static_cast<NodeId>(o.nodes);
    std::uniform_int_distribution<NodeId> pick(1, n - 2);
    NodeId s = 0, d = n - 1, t = pick(rng);
    Network net(false);
    for (NodeId v = 0; v < n; ++v) {
      net.add_node(drawn.name(v), v == t ? std::set<FunctionId>{"phi"} : std::set<FunctionId>{});
    }
    for (const auto& e : drawn.edges()) net.add_edge(e.tail, e.head, e.cost, e.capacity);
    ++instances;
    auto r = must_stop(net, s, t, d);
    auto lp = sfc_max_flow(net, ServiceChain{s, d, {"phi"}, {}});
    ledger.record("must-stop realization", check_must_stop(net, s, t, d, r.realization, r.value));
    std::vector<Commodity> coms;
    for (std::size_t k = 0; k < lp.commodities.size(); ++k) {
      coms.push_back({lp.commodities[k].from, lp.commodities[k].to, &lp.per_commodity[k]});
    }
    ledger.record("segment flows", check_commodities(net, coms));
    if (r.value != lp.lambda) {
      ++mismatches;
      if (first.empty()) first = " first at seed " + std::to_string(seed);
    }
    if (!is_half_integer(r.value)) ++not_half;
    if (r.value > 0) ++nonzero;
  }
  std::ostringstream d;
  d << instances << " graphs (" << nonzero << " with positive flow), " << mismatches << " value mismatches" << first
    << ", " << not_half << " values off the half grid";
  return {mismatches == 0 && not_half == 0 && instances >= 200, d.str()};
}

Outcome golden_placement() {
  Network net = load_network(kData + "fig7a.json");
  NodeId s = net.node("v1"), d = net.node("v8");
  auto fa = max_flow(net, s, d);
  ledger.record("placement example max flow", check_flow(net, fa, s, d));
  auto inst = make_placement_instance(net, s, d);
  auto result = placement_min(inst);
  std::set<NodeId> chosen(result.nodes.begin(), result.nodes.end());
  auto problems = check_two_layer(inst, chosen, result.witness);
  ledger.record("placement example witness", problems);
  std::string nodes = join_names(inst.net, result.nodes);
  bool pass = fa.value == 8 && nodes == "v6" && problems.empty();
  std::ostringstream o;
  o << "max flow " << to_string(fa.value) << ", placement {" << nodes << "}, witness problems " << problems.size();
  return {pass, o.str()};
}

PlacementInstance random_placement_instance(std::uint64_t seed) {
  RandomNetworkOptions o;
  o.nodes = 4 + seed % 7;  // 4..10
  o.directed = true;
  o.average_degree = 2 + static_cast<double>(seed % 3);
  o.capacity_lo = 1;
  o.capacity_hi = 8;
  o.seed = seed * 7919;
  Network drawn = random_network(o);
  Network net(true);
  for (NodeId v = 0; v < drawn.node_count(); ++v) net.add_node(drawn.name(v));
  const auto d = static_cast<NodeId>(drawn.node_count() - 1);
  for (const auto& e : drawn.edges()) {
    if (e.tail == 0 && e.head == d) continue;
    net.add_edge(e.tail, e.head, e.cost, e.capacity);
  }
  return make_placement_instance(std::move(net), 0, d);
}

std::size_t enumerate_min_placement(const PlacementInstance& inst) {
  auto candidates = placement_candidates(inst);
  std::size_t best = candidates.size() + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    std::set<NodeId> trial;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask >> i & 1U) trial.insert(candidates[i]);
    }
    auto witness = placement_feasible(inst, trial);
    if (witness) {
      ledger.record("enumerated placement witness", check_two_layer(inst, trial, *witness));
      best = size;
    }
  }
  return best;
}

Outcome placement_oracle() {
  std::size_t instances = 0, mismatches = 0, greedy_below = 0, greedy_above = 0;
  std::size_t size_hist[11] = {};
  std::string first;
  for (std::uint64_t seed = 1; instances < 120; ++seed) {
    auto inst = random_placement_instance(seed);
    ++instances;
    auto exact = placement_min(inst);
    auto greedy = placement_greedy(inst);
    for (const auto* r : {&exact, &greedy}) {
      std::set<NodeId> chosen(r->nodes.begin(), r->nodes.end());
      ledger.record("placement witness", check_two_layer(inst, chosen, r->witness));
    }
    std::size_t expected = enumerate_min_placement(inst);
    if (exact.nodes.size() != expected) {
      ++mismatches;
      if (first.empty()) first = " first at seed " + std::to_string(seed);
    }
    if (greedy.nodes.size() < exact.nodes.size()) ++greedy_below;
    if (greedy.nodes.size() > exact.nodes.size()) ++greedy_above;
    ++size_hist[std::min<std::size_t>(exact.nodes.size(), 10)];
  }
  std::ostringstream d;
  d << instances << " instances, " << mismatches << " exact/enumeration mismatches" << first << ", greedy larger on "
    << greedy_above << ", greedy smaller on " << greedy_below << "; sizes 0/1/2/3+: " << size_hist[0] << "/"
    << size_hist[1] << "/" << size_hist[2] << "/" << instances - size_hist[0] - size_hist[1] - size_hist[2];
  return {mismatches == 0 && greedy_below == 0 && instances >= 100, d.str()};
}

Outcome set_cover_reduction() {
  std::mt19937_64 rng(17);
  std::size_t instances = 0, mismatches = 0, below_cover = 0;
  std::string first;
  std::bernoulli_distribution member(0.4);
  while (instances < 80) {
    std::size_t universe = 1 + instances % 6;
    std::size_t count = 1 + (instances / 6) % 5;
    std::vector<std::vector<std::size_t>> subsets(count);
    for (auto& s : subsets) {
      for (std::size_t e = 0; e < universe; ++e) {
        if (member(rng)) s.push_back(e);
      }
    }
    std::uniform_int_distribution<std::size_t> which(0, count - 1);
    for (std::size_t e = 0; e < universe; ++e) {
      bool covered = false;
      for (const auto& s : subsets) covered = covered || std::count(s.begin(), s.end(), e) > 0;
      if (!covered) {
        auto& s = subsets[which(rng)];
        s.insert(std::upper_bound(s.begin(), s.end(), e), e);
      }
    }
    ++instances;
    auto expected = oracle::brute_set_cover(universe, subsets);
    auto red = setcover_to_placement(universe, subsets);
    auto result = placement_min(red.instance);
    std::set<NodeId> chosen(result.nodes.begin(), result.nodes.end());
    ledger.record("set-cover placement witness", check_two_layer(red.instance, chosen, result.witness));
    if (expected && result.nodes.size() < *expected) ++below_cover;
    if (!expected || result.nodes.size() != *expected) {
      ++mismatches;
      if (first.empty()) first = " first at instance " + std::to_string(instances);
    }
  }
  std::ostringstream d;
  d << instances << " set-cover instances, " << mismatches << " mismatches" << first << " (" << below_cover
    << " with a placement smaller than the cover)";
  return {mismatches == 0 && instances >= 50, d.str()};
}

Outcome size_benchmark() {
  SizeBenchOptions o;
  o.nodes = {20, 40, 60, 80, 100};
  o.z = 0.5;
  o.chain_length = 3;
  o.trials = 10;
  o.seed = 1;
  auto rows = bench_size(o);
  bool below = true;
  std::ostringstream d;
  d << "ours/layered:";
  for (const auto& r : rows) {
    below = below && r.our_size < r.layered_size;
    d << " n=" << r.n << " " << r.our_size << "/" << r.layered_size;
  }
  SizeBenchOptions sweep = o;
  sweep.nodes = {60};
  std::vector<double> ratios;
  d << "; n=60 ratio by z:";
  for (double z : {0.3, 0.5, 0.7, 0.9}) {
    sweep.z = z;
    auto row = bench_size(sweep).front();
    ratios.push_back(row.our_size / row.layered_size);
    d << " " << z << "->" << ratios.back();
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < ratios.size(); ++i) decreasing = decreasing && ratios[i] < ratios[i - 1];
  return {below && decreasing, d.str()};
}

Outcome queue_stability() {
  SimConfig cfg;
  cfg.net = load_network(kData + "fig6a.json");
  const Network& net = cfg.net;
  cfg.flows.push_back({ServiceChain{net.node("v1"), net.node("v6"), {"phi1", "phi2"}, {}}, 2.0});
  cfg.flows.push_back({ServiceChain{net.node("v7"), net.node("v5"), {"phi1", "phi3"}, {}}, 1.0});
  cfg.horizon = 100000;
  cfg.warmup = 10000;
  cfg.seed = 1;
  auto start = Clock::now();
  auto rows = sweep(cfg, {0.5, 0.7, 0.9, 1.2});
  double elapsed = seconds_since(start);
  bool pass = elapsed < 120;
  std::uint64_t violations = 0, routed = 0;
  std::ostringstream d;
  for (const auto& r : rows) {
    bool expect_stable = r.p < 1.0;
    pass = pass && r.stable == expect_stable;
    violations += r.result.chain_violations + r.result.capacity_violations + r.result.unroutable;
    routed += r.result.routed;
    d << "p=" << r.p << " avg " << r.average_queue << (r.stable ? " stable" : " growing") << "; ";
  }
  pass = pass && violations == 0;
  d << routed << " packets routed, " << violations << " chain/capacity violations, sweep " << elapsed << " s";
  return {pass, d.str()};
}

Outcome global_invariants() {
  // Flows emitted by the criteria above plus a batch of standalone max flows.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomNetworkOptions o;
    o.nodes = 4 + seed % 12;
    o.directed = seed % 2 == 0;
    o.average_degree = 3;
    o.capacity_lo = 0;
    o.capacity_hi = 12;
    o.seed = seed;
    Network net = random_network(o);
    NodeId s = 0, d = static_cast<NodeId>(o.nodes - 1);
    auto fa = max_flow(net, s, d);
    ledger.record("max flow", check_flow(net, fa, s, d));
    ledger.record("decomposed max flow", check_flow(net, superpose(decompose(fa, s, d)), s, d));
  }
  std::ostringstream d;
  d << ledger.checked << " flows re-checked, " << ledger.problems.size() << " problems";
  if (!ledger.problems.empty()) d << "; first: " << ledger.problems.front();
  return {ledger.problems.empty() && ledger.checked > 0, d.str()};
}

}  // namespace

int main() {
  report(1, "golden chain-constrained shortest walk", golden_shortest_walk);
  report(2, "expanded graph sizes before and after pruning", expansion_sizes);
  report(3, "expansion, layered baseline and brute force agree", baseline_equivalence);
  report(4, "pruning removes at least half of z of the vertices", pruning_statistics);
  report(5, "golden must-stop bounds and realization", golden_must_stop);
  report(6, "must-stop value equals segment-flow LP and is half-integral", must_stop_oracle);
  report(7, "golden max flow and minimum placement", golden_placement);
  report(8, "branch-and-bound placement equals subset enumeration", placement_oracle);
  report(9, "set-cover reduction preserves the optimum", set_cover_reduction);
  report(10, "pruned expansion beats the layered baseline", size_benchmark);
  report(11, "max-weight routing stable below capacity, growing above", queue_stability);
  report(12, "every emitted flow passes the independent re-checker", global_invariants);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
