/*
  Minimum-cardinality VNF placement that keeps the unconstrained max flow.

  Flow is split into an unprocessed layer f0 and a processed layer f1 that
  share each arc's capacity. All chain functions sit together at a
  virtualized node; a unit becomes processed when it passes one. With the
  virtualized set S fixed the model is an LP:

    interior i:       in0 + in1 = out0 + out1
    i in S:           out1 = in0 + in1      (everything leaves processed)
    i not in S:       out1 = in1
    source:           out0 = target, nothing enters, nothing leaves processed
    destination:      in1 = target, nothing leaves
    every edge:       f0 + f1 <= capacity

  placement_min() runs branch-and-bound over S with an LP relaxation in which
  node i may convert up to k_i times its inbound capacity, 0 <= k_i <= 1.
*/
#pragma once

#include "sfc/maxflow.hpp"
#include "sfc/network.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace sfc {

struct PlacementInstance {
  Network net;
  NodeId source = 0;
  NodeId destination = 0;
  Rational target_flow{0};
};

// target defaults to max_flow(s, d). Throws InputError if the target is
// negative or exceeds the max flow.
PlacementInstance make_placement_instance(Network net, NodeId s, NodeId d,
                                          std::optional<Rational> target = std::nullopt);

struct TwoLayerFlow {
  std::map<std::pair<NodeId, NodeId>, Rational> unprocessed;
  std::map<std::pair<NodeId, NodeId>, Rational> processed;
};

// Candidate nodes: every node except source and destination, ascending.
std::vector<NodeId> placement_candidates(const PlacementInstance& inst);

// Witness flow for the fixed set, or nullopt when the LP is infeasible.
std::optional<TwoLayerFlow> placement_feasible(const PlacementInstance& inst,
                                               const std::set<NodeId>& virtualized);

// Largest target reachable with the fixed set.
Rational max_processed_flow(const PlacementInstance& inst, const std::set<NodeId>& virtualized);

struct PlacementResult {
  std::vector<NodeId> nodes;
  TwoLayerFlow witness;
  bool optimal = false;
  std::size_t lp_solves = 0;
};

// Exact minimum. Throws UnachievableTargetError if even S = all candidates fails.
PlacementResult placement_min(const PlacementInstance& inst);

// Adds the node that raises max_processed_flow most (lowest id on ties)
// until the target is met. An upper bound on the optimum.
PlacementResult placement_greedy(const PlacementInstance& inst);

// Iterative deepening over subsets in lexicographic order; exponential, for
// cross-checking on small instances.
PlacementResult placement_exhaustive(const PlacementInstance& inst);

struct SetCoverReduction {
  PlacementInstance instance;
  // Node of each subset (subset k -> u_{k+1}).
  std::vector<NodeId> subset_nodes;
  // Path built for each element, source to destination.
  std::vector<std::vector<NodeId>> element_paths;
};

// One node per subset plus s and d; each element adds a unit-capacity path
// s -> (its subsets in index order) -> d, raising capacity by one on reuse.
// Throws InputError if an element is covered by no subset.
SetCoverReduction setcover_to_placement(std::size_t universe,
                                        const std::vector<std::vector<std::size_t>>& subsets);

// Smallest number of subsets covering the universe, by enumeration.
std::optional<std::size_t> min_set_cover_size(std::size_t universe,
                                              const std::vector<std::vector<std::size_t>>& subsets);

}  // namespace sfc
