/*
  Exact single-commodity maximum flow (shortest augmenting paths).

  Directed edges carry flow tail -> head only. An undirected edge may carry
  flow either way; the flow is kept antisymmetric, so the assignment reports
  one net direction per edge and the summed two-way capacity rule holds.
*/
#pragma once

#include "sfc/network.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sfc {

struct FlowAssignment {
  Rational value{0};
  // Positive flow per (tail, head); absent keys carry zero.
  std::map<std::pair<NodeId, NodeId>, Rational> arc_flows;

  Rational flow(NodeId tail, NodeId head) const;
  void add(NodeId tail, NodeId head, const Rational& amount);
};

// Throws InputError if s == d or either is unknown.
FlowAssignment max_flow(const Network& net, NodeId s, NodeId d);

struct MinCut {
  std::vector<std::size_t> edges;
  Rational capacity{0};
  // Nodes reachable from s in the final residual graph.
  std::vector<bool> source_side;
};

MinCut min_cut(const Network& net, NodeId s, NodeId d);

struct FlowPath {
  std::vector<NodeId> nodes;
  Rational amount{0};
};

struct FlowDecomposition {
  std::vector<FlowPath> paths;
  // Circulations found in the assignment; they carry no s-d value.
  std::vector<FlowPath> cycles;
};

// Splits the arc flows into s-d paths plus cycles whose superposition
// reproduces the assignment. Throws std::invalid_argument when flow is not
// conserved.
FlowDecomposition decompose(const FlowAssignment& fa, NodeId s, NodeId d);

// Sums path and cycle amounts back into arc flows.
FlowAssignment superpose(const FlowDecomposition& dec);

}  // namespace sfc
