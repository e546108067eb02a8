#include "sfc/placement.hpp"

#include "sfc/errors.hpp"
#include "sfc/lp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sfc {

PlacementInstance make_placement_instance(Network net, NodeId s, NodeId d,
                                          std::optional<Rational> target) {
  Rational max_value = max_flow(net, s, d).value;
  Rational goal = target ? *target : max_value;
  if (goal < 0) throw InputError("negative target flow");
  if (goal > max_value) {
    throw InputError("target flow " + to_string(goal) + " exceeds the max flow " + to_string(max_value));
  }
  return PlacementInstance{std::move(net), s, d, std::move(goal)};
}

std::vector<NodeId> placement_candidates(const PlacementInstance& inst) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < inst.net.node_count(); ++v) {
    if (v != inst.source && v != inst.destination) out.push_back(v);
  }
  return out;
}

namespace {

// How the conversion decision enters the model.
enum class Conversion { fixed_set, relaxed };

struct TwoLayerModel {
  LinearProgram lp;
  std::vector<Arc> arcs;
  std::vector<std::optional<std::size_t>> f0, f1;
  std::optional<std::size_t> rate;           // variable target when maximizing
  std::vector<std::optional<std::size_t>> k;  // relaxed mode, per node
};

// fixings (relaxed mode): -1 free, 0 or 1 fixed, per node.
TwoLayerModel build_model(const PlacementInstance& inst, Conversion mode,
                          const std::set<NodeId>& virtualized, const std::vector<int>& fixings,
                          bool variable_rate) {
  const Network& net = inst.net;
  const NodeId s = inst.source;
  const NodeId d = inst.destination;
  TwoLayerModel m;
  m.arcs = net.arcs();
  const auto adj = build_adjacency(net.node_count(), m.arcs);
  m.f0.resize(m.arcs.size());
  m.f1.resize(m.arcs.size());
  for (std::size_t a = 0; a < m.arcs.size(); ++a) {
    const Arc& arc = m.arcs[a];
    if (arc.head == s || arc.tail == d) continue;
    if (arc.head != d) m.f0[a] = m.lp.add_variable();
    if (arc.tail != s) m.f1[a] = m.lp.add_variable();
  }
  if (variable_rate) m.rate = m.lp.add_variable(0, std::nullopt, 1);

  auto collect = [&](const std::vector<std::size_t>& list,
                     const std::vector<std::optional<std::size_t>>& layer, int sign,
                     std::vector<Term>& terms) {
    for (std::size_t a : list) {
      if (layer[a]) terms.push_back({*layer[a], sign});
    }
  };

  // Source emits the target unprocessed; destination absorbs it processed.
  {
    std::vector<Term> out0;
    collect(adj.out[s], m.f0, 1, out0);
    std::vector<Term> in1;
    collect(adj.in[d], m.f1, 1, in1);
    if (m.rate) {
      out0.push_back({*m.rate, -1});
      in1.push_back({*m.rate, -1});
      m.lp.add_constraint(std::move(out0), Relation::equal, 0);
      m.lp.add_constraint(std::move(in1), Relation::equal, 0);
    } else {
      m.lp.add_constraint(std::move(out0), Relation::equal, inst.target_flow);
      m.lp.add_constraint(std::move(in1), Relation::equal, inst.target_flow);
    }
  }

  if (mode == Conversion::relaxed) m.k.resize(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v == s || v == d) continue;
    // Joint conservation.
    std::vector<Term> joint;
    collect(adj.in[v], m.f0, 1, joint);
    collect(adj.in[v], m.f1, 1, joint);
    collect(adj.out[v], m.f0, -1, joint);
    collect(adj.out[v], m.f1, -1, joint);
    m.lp.add_constraint(std::move(joint), Relation::equal, 0);

    std::vector<Term> processed;
    collect(adj.out[v], m.f1, 1, processed);
    collect(adj.in[v], m.f1, -1, processed);
    if (mode == Conversion::fixed_set) {
      if (virtualized.count(v)) collect(adj.in[v], m.f0, -1, processed);
      m.lp.add_constraint(std::move(processed), Relation::equal, 0);
      continue;
    }
    // out1 - in1 = converted, converted <= k * inbound capacity, converted <= in0 via out0 >= 0.
    Rational inbound = 0;
    for (std::size_t a : adj.in[v]) inbound += net.edge(m.arcs[a].edge).capacity;
    Rational lo = fixings[v] == 1 ? Rational(1) : Rational(0);
    Rational hi = fixings[v] == 0 ? Rational(0) : Rational(1);
    std::size_t kv = m.lp.add_variable(lo, hi, -1);
    m.k[v] = kv;
    std::size_t converted = m.lp.add_variable();
    processed.push_back({converted, -1});
    m.lp.add_constraint(std::move(processed), Relation::equal, 0);
    m.lp.add_constraint({{converted, 1}, {kv, -inbound}}, Relation::less_equal, 0);
  }

  std::vector<std::vector<Term>> capacity_rows(net.edge_count());
  for (std::size_t a = 0; a < m.arcs.size(); ++a) {
    if (m.f0[a]) capacity_rows[m.arcs[a].edge].push_back({*m.f0[a], 1});
    if (m.f1[a]) capacity_rows[m.arcs[a].edge].push_back({*m.f1[a], 1});
  }
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (capacity_rows[e].empty()) continue;
    m.lp.add_constraint(std::move(capacity_rows[e]), Relation::less_equal, net.edge(e).capacity);
  }
  return m;
}

TwoLayerFlow extract(const TwoLayerModel& m, const std::vector<Rational>& x) {
  TwoLayerFlow flow;
  for (std::size_t a = 0; a < m.arcs.size(); ++a) {
    auto key = std::make_pair(m.arcs[a].tail, m.arcs[a].head);
    if (m.f0[a] && x[*m.f0[a]] != 0) flow.unprocessed[key] = x[*m.f0[a]];
    if (m.f1[a] && x[*m.f1[a]] != 0) flow.processed[key] = x[*m.f1[a]];
  }
  return flow;
}

std::set<NodeId> to_set(const std::vector<NodeId>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::optional<TwoLayerFlow> placement_feasible(const PlacementInstance& inst,
                                               const std::set<NodeId>& virtualized) {
  for (NodeId v : virtualized) {
    if (v >= inst.net.node_count() || v == inst.source || v == inst.destination) {
      throw InputError("virtualized set must exclude source and destination");
    }
  }
  TwoLayerModel m = build_model(inst, Conversion::fixed_set, virtualized, {}, false);
  auto x = feasible(m.lp);
  if (!x) return std::nullopt;
  return extract(m, *x);
}

Rational max_processed_flow(const PlacementInstance& inst, const std::set<NodeId>& virtualized) {
  TwoLayerModel m = build_model(inst, Conversion::fixed_set, virtualized, {}, true);
  LpSolution sol = solve(m.lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("two-layer rate LP did not solve");
  return sol.value;
}

PlacementResult placement_min(const PlacementInstance& inst) {
  const auto candidates = placement_candidates(inst);
  PlacementResult best;
  best.lp_solves = 1;
  auto all = placement_feasible(inst, to_set(candidates));
  if (!all) throw UnachievableTargetError("target flow is unachievable even with every node virtualized");
  best.nodes = candidates;
  best.witness = std::move(*all);

  const std::size_t n = inst.net.node_count();
  std::vector<int> root(n, -1);
  root[inst.source] = 0;
  root[inst.destination] = 0;
  std::vector<std::vector<int>> stack{root};
  while (!stack.empty()) {
    std::vector<int> fix = std::move(stack.back());
    stack.pop_back();
    TwoLayerModel m = build_model(inst, Conversion::relaxed, {}, fix, false);
    LpSolution sol = solve(m.lp);
    ++best.lp_solves;
    if (sol.status != LpStatus::optimal) continue;
    Rational bound = ceil(-sol.value);
    if (bound >= static_cast<long>(best.nodes.size())) continue;

    std::optional<NodeId> fractional;
    std::vector<NodeId> chosen;
    for (NodeId v : candidates) {
      const Rational& kv = sol.x[*m.k[v]];
      if (kv == 1) {
        chosen.push_back(v);
      } else if (kv != 0 && !fractional) {
        fractional = v;
      }
    }
    if (!fractional) {
      auto witness = placement_feasible(inst, to_set(chosen));
      ++best.lp_solves;
      if (!witness) throw std::logic_error("integral relaxation point is not placement-feasible");
      best.nodes = std::move(chosen);
      best.witness = std::move(*witness);
      continue;
    }
    // Depth first; the k = 1 child is explored before k = 0.
    std::vector<int> zero = fix, one = fix;
    zero[*fractional] = 0;
    one[*fractional] = 1;
    stack.push_back(std::move(zero));
    stack.push_back(std::move(one));
  }
  best.optimal = true;
  return best;
}

PlacementResult placement_greedy(const PlacementInstance& inst) {
  const auto candidates = placement_candidates(inst);
  PlacementResult out;
  std::set<NodeId> chosen;
  Rational current = 0;
  if (inst.target_flow > 0) {
    current = max_processed_flow(inst, chosen);
    ++out.lp_solves;
  }
  while (current < inst.target_flow) {
    std::optional<NodeId> pick;
    Rational pick_value = -1;
    for (NodeId v : candidates) {
      if (chosen.count(v)) continue;
      auto trial = chosen;
      trial.insert(v);
      Rational value = max_processed_flow(inst, trial);
      ++out.lp_solves;
      if (value > pick_value) {
        pick = v;
        pick_value = value;
      }
    }
    if (!pick) throw UnachievableTargetError("target flow is unachievable even with every node virtualized");
    chosen.insert(*pick);
    current = pick_value;
  }
  auto witness = placement_feasible(inst, chosen);
  ++out.lp_solves;
  if (!witness) throw std::logic_error("greedy set failed its feasibility check");
  out.nodes.assign(chosen.begin(), chosen.end());
  out.witness = std::move(*witness);
  out.optimal = false;
  return out;
}

PlacementResult placement_exhaustive(const PlacementInstance& inst) {
  const auto candidates = placement_candidates(inst);
  PlacementResult out;
  const std::size_t c = candidates.size();
  for (std::size_t size = 0; size <= c; ++size) {
    // Lexicographic combinations of `size` indices.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::set<NodeId> trial;
      for (std::size_t i : idx) trial.insert(candidates[i]);
      auto witness = placement_feasible(inst, trial);
      ++out.lp_solves;
      if (witness) {
        out.nodes.assign(trial.begin(), trial.end());
        out.witness = std::move(*witness);
        out.optimal = true;
        return out;
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == c - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw UnachievableTargetError("target flow is unachievable even with every node virtualized");
}

SetCoverReduction setcover_to_placement(std::size_t universe,
                                        const std::vector<std::vector<std::size_t>>& subsets) {
  Network net(true);
  NodeId s = net.add_node("s");
  std::vector<NodeId> subset_nodes;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    subset_nodes.push_back(net.add_node("u" + std::to_string(k + 1)));
  }
  NodeId d = net.add_node("d");

  std::map<std::pair<NodeId, NodeId>, Rational> capacity;
  std::vector<std::pair<NodeId, NodeId>> order;
  std::vector<std::vector<NodeId>> paths;
  for (std::size_t element = 0; element < universe; ++element) {
    std::vector<NodeId> path{s};
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      for (std::size_t member : subsets[k]) {
        if (member >= universe) throw InputError("subset member outside the universe");
      }
      if (std::find(subsets[k].begin(), subsets[k].end(), element) != subsets[k].end()) {
        path.push_back(subset_nodes[k]);
      }
    }
    if (path.size() == 1) {
      throw InputError("element " + std::to_string(element) + " is covered by no subset");
    }
    path.push_back(d);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto key = std::make_pair(path[i], path[i + 1]);
      auto [it, inserted] = capacity.try_emplace(key, 0);
      if (inserted) order.push_back(key);
      it->second += 1;
    }
    paths.push_back(std::move(path));
  }
  for (const auto& key : order) net.add_edge(key.first, key.second, 1, capacity[key]);

  SetCoverReduction out{make_placement_instance(std::move(net), s, d), std::move(subset_nodes),
                        std::move(paths)};
  return out;
}

std::optional<std::size_t> min_set_cover_size(std::size_t universe,
                                              const std::vector<std::vector<std::size_t>>& subsets) {
  const std::size_t l = subsets.size();
  if (l >= 63) throw InputError("too many subsets for exhaustive cover");
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (best && size >= *best) continue;
    std::vector<bool> covered(universe, false);
    for (std::size_t k = 0; k < l; ++k) {
      if (!(mask >> k & 1U)) continue;
      for (std::size_t member : subsets[k]) {
        if (member < universe) covered[member] = true;
      }
    }
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) best = size;
  }
  return best;
}

}  // namespace sfc
