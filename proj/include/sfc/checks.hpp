/*
  Independent constraint re-checkers for emitted flows. Each returns a list
  of human-readable problems; an empty list means the flow is valid. All
  comparisons are exact.
*/
#pragma once

#include "sfc/maxflow.hpp"
#include "sfc/must_stop.hpp"
#include "sfc/network.hpp"
#include "sfc/placement.hpp"

#include <set>
#include <string>
#include <vector>

namespace sfc {

using Problems = std::vector<std::string>;

struct Commodity {
  NodeId from = 0;
  NodeId to = 0;
  const FlowAssignment* flow = nullptr;
};

// Arcs exist and carry positive flow, per-edge capacity holds (both
// directions summed on undirected edges), flow is conserved away from s and
// d, and the net outflow of s and net inflow of d both equal fa.value.
Problems check_flow(const Network& net, const FlowAssignment& fa, NodeId s, NodeId d);

// Each commodity is valid on its own and all of them share edge capacity.
Problems check_commodities(const Network& net, const std::vector<Commodity>& commodities);

// Inbound s -> t and outbound t -> d both carry `value` and fit jointly.
Problems check_must_stop(const Network& net, NodeId s, NodeId t, NodeId d,
                         const MustStopRealization& realization, const Rational& value);

// Two-layer flow rules for the fixed virtualized set.
Problems check_two_layer(const PlacementInstance& inst, const std::set<NodeId>& virtualized,
                         const TwoLayerFlow& flow);

}  // namespace sfc
