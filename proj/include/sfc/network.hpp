/*
  Network data model: nodes with hosted network functions, weighted and
  capacitated edges, service chains and walks.

  Node ids are dense indices in insertion order; names are the external
  identifiers used by the JSON schema and the CLI. A Network is assembled with
  add_node/add_edge and treated as immutable afterwards. Undirected edges are
  stored once and expanded into an arc pair by arcs().
*/
#pragma once

#include "sfc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfc {

using NodeId = std::uint32_t;
using FunctionId = std::string;

struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  Rational cost{1};
  Rational capacity{1};
};

// One traversal direction of an edge.
struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  std::size_t edge = 0;
};

class Network {
 public:
  Network() = default;
  explicit Network(bool directed) : directed_(directed) {}

  NodeId add_node(std::string name, std::set<FunctionId> functions = {});
  std::size_t add_edge(NodeId tail, NodeId head, Rational cost = 1, Rational capacity = 1);

  bool directed() const { return directed_; }
  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(NodeId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  const std::set<FunctionId>& functions(NodeId v) const { return functions_.at(v); }
  bool hosts(NodeId v, const FunctionId& fn) const { return functions_.at(v).count(fn) != 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<NodeId> find(std::string_view name) const;
  // Throws InputError for an unknown name.
  NodeId node(std::string_view name) const;

  // Edge joining u to v (either orientation when undirected).
  std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;

  // Directed arcs; undirected edges contribute (tail, head) then (head, tail).
  std::vector<Arc> arcs() const;

  Rational total_capacity() const;

 private:
  bool directed_ = true;
  std::vector<std::string> names_;
  std::vector<std::set<FunctionId>> functions_;
  std::vector<Edge> edges_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> edge_lookup_;
};

// Per-node outgoing / incoming arc indices into an arc list.
struct Adjacency {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
};

Adjacency build_adjacency(std::size_t node_count, std::span<const Arc> arcs);

enum class ViolationKind {
  unknown_endpoint,
  self_loop,
  negative_cost,
  negative_capacity,
  duplicate_edge,
  duplicate_node,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Every structural violation; empty means the network is well formed.
std::vector<Violation> validate(const Network& net);

// (v_s, phi_1, ..., phi_r, v_d). flexible_groups holds the sizes of a
// contiguous partition of chain positions; each group's internal order is
// free. Empty means the chain order is fixed.
struct ServiceChain {
  NodeId source = 0;
  NodeId destination = 0;
  std::vector<FunctionId> functions;
  std::vector<std::size_t> flexible_groups;

  std::size_t length() const { return functions.size(); }
};

// Throws InputError when endpoints are unknown, the groups do not partition
// the chain, or source == destination with an empty chain.
void check_chain(const Network& net, const ServiceChain& sc);

// Every fixed-order chain admitted by the flexible groups, in lexicographic
// order of the position permutation (first group varies slowest).
std::vector<ServiceChain> chain_orderings(const ServiceChain& sc);

struct Walk {
  std::vector<NodeId> nodes;
  Rational cost{0};
};

// Sum of edge costs along consecutive nodes; nullopt if some hop has no edge.
std::optional<Rational> walk_cost(const Network& net, std::span<const NodeId> nodes);

// Number of leading chain functions covered when replaying the walk, each
// visit consuming as many consecutive functions as the node hosts.
std::size_t chain_progress(const Network& net, std::span<const NodeId> nodes,
                           std::span<const FunctionId> chain);

// Walk joins consecutive nodes, runs source to destination and covers the chain in order.
bool is_admissible(const Network& net, std::span<const NodeId> nodes, const ServiceChain& sc);

struct RandomNetworkOptions {
  std::size_t nodes = 10;
  bool directed = true;
  // Each catalog function is placed at each node independently with this probability.
  double function_probability = 0.5;
  // Expected out-degree (directed) or degree (undirected).
  double average_degree = 3.0;
  std::int64_t capacity_lo = 1;
  std::int64_t capacity_hi = 1;
  std::int64_t cost_lo = 1;
  std::int64_t cost_hi = 1;
  std::vector<FunctionId> catalog;
  std::uint64_t seed = 1;
};

// Node names are v1..vn. Throws std::invalid_argument on bad options.
Network random_network(const RandomNetworkOptions& options);

}  // namespace sfc
