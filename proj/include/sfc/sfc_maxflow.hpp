/*
  Chain-constrained maximum flow with single-instance functions.

  The chain splits into r+1 segment commodities: s -> host(phi_1),
  host(phi_i) -> host(phi_{i+1}), host(phi_r) -> d. The common rate lambda is
  maximized subject to every commodity carrying at least lambda and all
  commodities sharing edge capacity. Each commodity gets one flow variable per
  arc (node-arc form), which has the same optimum as the path form by flow
  decomposition but stays polynomial in size.
*/
#pragma once

#include "sfc/maxflow.hpp"
#include "sfc/network.hpp"

#include <vector>

namespace sfc {

struct SegmentCommodity {
  std::size_t index = 0;  // 1-based segment number
  NodeId from = 0;
  NodeId to = 0;
};

// Throws AmbiguousHostingError unless every chain function is hosted at exactly one node.
std::vector<SegmentCommodity> segment_commodities(const Network& net, const ServiceChain& sc);

struct SfcMaxFlowResult {
  Rational lambda{0};
  std::vector<SegmentCommodity> commodities;
  // One assignment per commodity; opposite flows on an edge are cancelled.
  std::vector<FlowAssignment> per_commodity;
};

// Throws InputError if every segment is degenerate (lambda unbounded).
SfcMaxFlowResult sfc_max_flow(const Network& net, const ServiceChain& sc);

}  // namespace sfc
