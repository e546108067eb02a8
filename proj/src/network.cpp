#include "sfc/network.hpp"

#include "sfc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sfc {

NodeId Network::add_node(std::string name, std::set<FunctionId> functions) {
  names_.push_back(std::move(name));
  functions_.push_back(std::move(functions));
  return static_cast<NodeId>(names_.size() - 1);
}

std::size_t Network::add_edge(NodeId tail, NodeId head, Rational cost, Rational capacity) {
  edges_.push_back(Edge{tail, head, std::move(cost), std::move(capacity)});
  std::size_t e = edges_.size() - 1;
  edge_lookup_.emplace(std::make_pair(tail, head), e);
  return e;
}

std::optional<NodeId> Network::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<NodeId>(i);
  }
  return std::nullopt;
}

NodeId Network::node(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown node '" + std::string(name) + "'");
}

std::optional<std::size_t> Network::find_edge(NodeId u, NodeId v) const {
  if (auto it = edge_lookup_.find({u, v}); it != edge_lookup_.end()) return it->second;
  if (!directed_) {
    if (auto it = edge_lookup_.find({v, u}); it != edge_lookup_.end()) return it->second;
  }
  return std::nullopt;
}

std::vector<Arc> Network::arcs() const {
  std::vector<Arc> out;
  out.reserve(directed_ ? edges_.size() : 2 * edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out.push_back(Arc{edges_[e].tail, edges_[e].head, e});
    if (!directed_) out.push_back(Arc{edges_[e].head, edges_[e].tail, e});
  }
  return out;
}

Rational Network::total_capacity() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.capacity;
  return sum;
}

Adjacency build_adjacency(std::size_t node_count, std::span<const Arc> arcs) {
  Adjacency adj;
  adj.out.resize(node_count);
  adj.in.resize(node_count);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    adj.out[arcs[a].tail].push_back(a);
    adj.in[arcs[a].head].push_back(a);
  }
  return adj;
}

std::vector<Violation> validate(const Network& net) {
  std::vector<Violation> out;
  const std::size_t n = net.node_count();
  std::set<std::string> seen_names;
  for (const auto& name : net.names()) {
    if (!seen_names.insert(name).second) {
      out.push_back({ViolationKind::duplicate_node, "duplicate node name '" + name + "'"});
    }
  }
  std::set<std::pair<NodeId, NodeId>> seen_pairs;
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    const std::string where = "edge " + std::to_string(e) + ": ";
    if (edge.tail >= n || edge.head >= n) {
      out.push_back({ViolationKind::unknown_endpoint, where + "unknown endpoint"});
      continue;
    }
    if (edge.tail == edge.head) {
      out.push_back({ViolationKind::self_loop, where + "self-loop at " + net.name(edge.tail)});
    }
    if (edge.cost < 0) out.push_back({ViolationKind::negative_cost, where + "negative cost"});
    if (edge.capacity < 0) {
      out.push_back({ViolationKind::negative_capacity, where + "negative capacity"});
    }
    auto key = std::make_pair(edge.tail, edge.head);
    if (!net.directed() && key.first > key.second) std::swap(key.first, key.second);
    if (!seen_pairs.insert(key).second) {
      out.push_back({ViolationKind::duplicate_edge, where + "duplicate edge " +
                                                        net.name(edge.tail) + "-" +
                                                        net.name(edge.head)});
    }
  }
  return out;
}

void check_chain(const Network& net, const ServiceChain& sc) {
  if (sc.source >= net.node_count() || sc.destination >= net.node_count()) {
    throw InputError("chain endpoint is not a node of the network");
  }
  if (sc.source == sc.destination && sc.functions.empty()) {
    throw InputError("source equals destination with an empty chain");
  }
  if (!sc.flexible_groups.empty()) {
    std::size_t total = 0;
    for (std::size_t g : sc.flexible_groups) {
      if (g == 0) throw InputError("flexible group of size zero");
      total += g;
    }
    if (total != sc.functions.size()) {
      throw InputError("flexible groups do not partition the chain");
    }
  }
}

std::vector<ServiceChain> chain_orderings(const ServiceChain& sc) {
  ServiceChain rigid = sc;
  rigid.flexible_groups.clear();
  if (sc.flexible_groups.empty()) return {rigid};

  // Group g covers positions [start[g], start[g] + size).
  std::vector<std::size_t> start;
  std::size_t pos = 0;
  for (std::size_t g : sc.flexible_groups) {
    start.push_back(pos);
    pos += g;
  }
  if (pos != sc.functions.size()) throw InputError("flexible groups do not partition the chain");

  std::vector<std::size_t> perm(sc.functions.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ServiceChain> out;
  while (true) {
    ServiceChain c = rigid;
    for (std::size_t i = 0; i < perm.size(); ++i) c.functions[i] = sc.functions[perm[i]];
    out.push_back(std::move(c));
    // Odometer over groups, last group fastest.
    std::size_t g = sc.flexible_groups.size();
    bool advanced = false;
    while (g-- > 0) {
      auto first = perm.begin() + static_cast<std::ptrdiff_t>(start[g]);
      auto last = first + static_cast<std::ptrdiff_t>(sc.flexible_groups[g]);
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
      // next_permutation wrapped the group back to sorted order; carry.
    }
    if (!advanced) break;
  }
  return out;
}

std::optional<Rational> walk_cost(const Network& net, std::span<const NodeId> nodes) {
  Rational cost = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto e = net.find_edge(nodes[i], nodes[i + 1]);
    if (!e) return std::nullopt;
    cost += net.edge(*e).cost;
  }
  return cost;
}

std::size_t chain_progress(const Network& net, std::span<const NodeId> nodes,
                           std::span<const FunctionId> chain) {
  std::size_t progress = 0;
  for (NodeId v : nodes) {
    while (progress < chain.size() && net.hosts(v, chain[progress])) ++progress;
  }
  return progress;
}

bool is_admissible(const Network& net, std::span<const NodeId> nodes, const ServiceChain& sc) {
  if (nodes.empty() || nodes.front() != sc.source || nodes.back() != sc.destination) return false;
  if (!walk_cost(net, nodes)) return false;
  return chain_progress(net, nodes, sc.functions) == sc.functions.size();
}

Network random_network(const RandomNetworkOptions& o) {
  if (o.nodes < 2) throw std::invalid_argument("random_network needs at least 2 nodes");
  if (!(o.function_probability >= 0.0 && o.function_probability <= 1.0)) {
    throw std::invalid_argument("function probability must lie in [0, 1]");
  }
  if (o.capacity_lo > o.capacity_hi || o.capacity_lo < 0) {
    throw std::invalid_argument("invalid capacity range");
  }
  if (o.cost_lo > o.cost_hi || o.cost_lo < 0) throw std::invalid_argument("invalid cost range");
  if (o.average_degree < 0) throw std::invalid_argument("negative average degree");

  std::mt19937_64 rng(o.seed);
  std::bernoulli_distribution place(o.function_probability);
  Network net(o.directed);
  for (std::size_t i = 0; i < o.nodes; ++i) {
    std::set<FunctionId> fns;
    for (const auto& f : o.catalog) {
      if (place(rng)) fns.insert(f);
    }
    net.add_node("v" + std::to_string(i + 1), std::move(fns));
  }

  double p = std::min(1.0, o.average_degree / static_cast<double>(o.nodes - 1));
  std::bernoulli_distribution link(p);
  std::uniform_int_distribution<std::int64_t> cap(o.capacity_lo, o.capacity_hi);
  std::uniform_int_distribution<std::int64_t> cost(o.cost_lo, o.cost_hi);
  for (NodeId u = 0; u < o.nodes; ++u) {
    for (NodeId v = 0; v < o.nodes; ++v) {
      if (u == v || (!o.directed && v < u)) continue;
      if (!link(rng)) continue;
      std::int64_t c = cap(rng);
      std::int64_t w = cost(rng);
      net.add_edge(u, v, Rational(w), Rational(c));
    }
  }
  return net;
}

}  // namespace sfc
