/*
  Chain-aware graph expansion.

  Vertex (v, i) stands for "at node v with the first i chain functions done".
  build_expanded() creates (r+1)|V| vertices and, for every arc (u, v) and
  every level i of u, one arc to v at the highest level j >= i such that v
  hosts phi_{i+1}..phi_j. prune() then drops vertices lacking incoming or
  outgoing arcs (source and destination exempt) until a fixpoint.
  build_layered() is the r+1 full copies baseline, kept for size and
  correctness comparison.
*/
#pragma once

#include "sfc/network.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sfc {

using VertexId = std::uint32_t;

struct LevelVertex {
  NodeId node = 0;
  std::uint32_t level = 0;
};

struct ExpandedArc {
  VertexId from = 0;
  VertexId to = 0;
  Rational cost{0};
  // Originating network edge; empty for zero-cost layer transitions.
  std::optional<std::size_t> edge;
};

class ExpandedGraph {
 public:
  ExpandedGraph(std::size_t node_count, std::uint32_t levels, std::vector<LevelVertex> vertices,
                std::vector<ExpandedArc> arcs, LevelVertex source, LevelVertex destination);

  // Chain length r; levels run 0..r.
  std::uint32_t levels() const { return levels_; }
  std::size_t node_count() const { return node_count_; }

  const std::vector<LevelVertex>& vertices() const { return vertices_; }
  const std::vector<ExpandedArc>& arcs() const { return arcs_; }
  const LevelVertex& vertex(VertexId v) const { return vertices_.at(v); }

  VertexId source() const { return source_; }
  VertexId destination() const { return destination_; }
  // Level t of the source vertex: length of the chain prefix hosted at the source.
  std::uint32_t source_level() const { return vertices_[source_].level; }

  std::optional<VertexId> find(NodeId node, std::uint32_t level) const;

  std::span<const std::size_t> out_arcs(VertexId v) const;
  std::span<const std::size_t> in_arcs(VertexId v) const;

 private:
  std::size_t node_count_;
  std::uint32_t levels_;
  std::vector<LevelVertex> vertices_;
  std::vector<ExpandedArc> arcs_;
  VertexId source_ = 0;
  VertexId destination_ = 0;
  std::vector<std::int64_t> lookup_;  // node * (levels + 1) + level -> vertex or -1
  std::vector<std::size_t> out_offsets_, out_list_, in_offsets_, in_list_;
};

// Highest j >= from_level such that node hosts chain[from_level..j-1].
std::uint32_t advance_level(const Network& net, NodeId node, std::span<const FunctionId> chain,
                            std::uint32_t from_level);

// Requires a fixed-order chain (flexible groups are ignored).
ExpandedGraph build_expanded(const Network& net, const ServiceChain& sc);

ExpandedGraph prune(const ExpandedGraph& eg);

ExpandedGraph build_layered(const Network& net, const ServiceChain& sc);

struct GraphSize {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::size_t total = 0;
};

GraphSize graph_size(const ExpandedGraph& eg);

// Minimum-cost walk from the source vertex to the destination vertex using
// the stored arc costs, mapped back to network nodes. Ties prefer fewer hops,
// then the lexicographically smallest (node, level) sequence.
std::optional<Walk> shortest_walk(const ExpandedGraph& eg);

// Expand, prune, search. Throws NegativeCostError on a negative edge cost.
std::optional<Walk> sfc_shortest_path(const Network& net, const ServiceChain& sc);

struct ChainPathResult {
  Walk walk;
  ServiceChain ordering;
  std::size_t ordering_index = 0;
};

// Best walk over every admissible ordering; ties go to the lowest ordering index.
std::optional<ChainPathResult> sfc_set_shortest_path(const Network& net, const ServiceChain& sc);

// Same search on the layered baseline.
std::optional<Walk> layered_shortest_path(const Network& net, const ServiceChain& sc);

}  // namespace sfc
