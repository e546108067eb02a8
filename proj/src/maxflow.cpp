#include "sfc/maxflow.hpp"

#include "sfc/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sfc {

Rational FlowAssignment::flow(NodeId tail, NodeId head) const {
  auto it = arc_flows.find({tail, head});
  return it == arc_flows.end() ? Rational(0) : it->second;
}

void FlowAssignment::add(NodeId tail, NodeId head, const Rational& amount) {
  if (amount == 0) return;
  auto [it, inserted] = arc_flows.try_emplace({tail, head}, amount);
  if (!inserted) {
    it->second += amount;
    if (it->second == 0) arc_flows.erase(it);
  }
}

namespace {

struct ResidualArc {
  NodeId to;
  Rational residual;
  std::size_t reverse;
};

class Residual {
 public:
  explicit Residual(const Network& net) : net_(net), adj_(net.node_count()) {
    forward_.reserve(net.edge_count());
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
      const Edge& edge = net.edge(e);
      Rational back = net.directed() ? Rational(0) : edge.capacity;
      std::size_t fi = adj_[edge.tail].size();
      std::size_t bi = adj_[edge.head].size();
      adj_[edge.tail].push_back({edge.head, edge.capacity, bi});
      adj_[edge.head].push_back({edge.tail, back, fi});
      forward_.push_back(fi);
    }
  }

  Rational run(NodeId s, NodeId d) {
    Rational total = 0;
    const std::size_t n = adj_.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    while (true) {
      std::vector<std::pair<NodeId, std::size_t>> parent(n, {0, none});
      std::vector<bool> seen(n, false);
      std::queue<NodeId> queue;
      seen[s] = true;
      queue.push(s);
      while (!queue.empty() && !seen[d]) {
        NodeId u = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < adj_[u].size(); ++i) {
          const auto& arc = adj_[u][i];
          if (arc.residual > 0 && !seen[arc.to]) {
            seen[arc.to] = true;
            parent[arc.to] = {u, i};
            queue.push(arc.to);
          }
        }
      }
      if (!seen[d]) break;
      Rational bottleneck = -1;
      for (NodeId v = d; v != s; v = parent[v].first) {
        const auto& arc = adj_[parent[v].first][parent[v].second];
        if (bottleneck < 0 || arc.residual < bottleneck) bottleneck = arc.residual;
      }
      for (NodeId v = d; v != s; v = parent[v].first) {
        auto& arc = adj_[parent[v].first][parent[v].second];
        arc.residual -= bottleneck;
        adj_[arc.to][arc.reverse].residual += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

  // Net flow from tail to head of edge e (negative means head to tail).
  Rational edge_flow(std::size_t e) const {
    const Edge& edge = net_.edge(e);
    return edge.capacity - adj_[edge.tail][forward_[e]].residual;
  }

  std::vector<bool> reachable(NodeId s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<NodeId> queue;
    seen[s] = true;
    queue.push(s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop();
      for (const auto& arc : adj_[u]) {
        if (arc.residual > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          queue.push(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  const Network& net_;
  std::vector<std::vector<ResidualArc>> adj_;
  std::vector<std::size_t> forward_;
};

void check_terminals(const Network& net, NodeId s, NodeId d) {
  if (s >= net.node_count() || d >= net.node_count()) throw InputError("unknown flow terminal");
  if (s == d) throw InputError("flow source equals destination");
  for (const auto& e : net.edges()) {
    if (e.capacity < 0) throw InputError("negative capacity");
  }
}

}  // namespace

FlowAssignment max_flow(const Network& net, NodeId s, NodeId d) {
  check_terminals(net, s, d);
  Residual res(net);
  FlowAssignment fa;
  fa.value = res.run(s, d);
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    Rational f = res.edge_flow(e);
    const Edge& edge = net.edge(e);
    if (f > 0) fa.add(edge.tail, edge.head, f);
    if (f < 0) fa.add(edge.head, edge.tail, -f);
  }
  return fa;
}

MinCut min_cut(const Network& net, NodeId s, NodeId d) {
  check_terminals(net, s, d);
  Residual res(net);
  res.run(s, d);
  MinCut cut;
  cut.source_side = res.reachable(s);
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    bool crosses = cut.source_side[edge.tail] && !cut.source_side[edge.head];
    if (!net.directed()) crosses = crosses || (cut.source_side[edge.head] && !cut.source_side[edge.tail]);
    if (crosses) {
      cut.edges.push_back(e);
      cut.capacity += edge.capacity;
    }
  }
  return cut;
}

namespace {

using ArcMap = std::map<std::pair<NodeId, NodeId>, Rational>;

std::optional<NodeId> first_successor(const ArcMap& remaining, NodeId u) {
  auto it = remaining.lower_bound({u, 0});
  if (it == remaining.end() || it->first.first != u) return std::nullopt;
  return it->first.second;
}

Rational cancel(ArcMap& remaining, const std::vector<NodeId>& nodes) {
  Rational amount = -1;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Rational& f = remaining.at({nodes[i], nodes[i + 1]});
    if (amount < 0 || f < amount) amount = f;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto it = remaining.find({nodes[i], nodes[i + 1]});
    it->second -= amount;
    if (it->second == 0) remaining.erase(it);
  }
  return amount;
}

}  // namespace

FlowDecomposition decompose(const FlowAssignment& fa, NodeId s, NodeId d) {
  ArcMap remaining;
  for (const auto& [arc, f] : fa.arc_flows) {
    if (f < 0) throw std::invalid_argument("negative arc flow");
    if (f > 0) remaining.emplace(arc, f);
  }
  FlowDecomposition out;

  // s-d paths, cancelling any cycle met on the way.
  while (auto first = first_successor(remaining, s)) {
    std::vector<NodeId> path{s};
    std::map<NodeId, std::size_t> position{{s, 0}};
    bool reached = false;
    while (!reached) {
      NodeId u = path.back();
      if (u == d && path.size() > 1) {
        reached = true;
        break;
      }
      auto next = first_successor(remaining, u);
      if (!next) {
        if (u == d) break;
        throw std::invalid_argument("flow is not conserved at node " + std::to_string(u));
      }
      if (auto it = position.find(*next); it != position.end()) {
        std::vector<NodeId> cycle(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
        cycle.push_back(*next);
        Rational amount = cancel(remaining, cycle);
        out.cycles.push_back({std::move(cycle), amount});
        for (std::size_t i = it->second + 1; i < path.size(); ++i) position.erase(path[i]);
        path.resize(it->second + 1);
        continue;
      }
      position[*next] = path.size();
      path.push_back(*next);
    }
    if (reached) {
      Rational amount = cancel(remaining, path);
      out.paths.push_back({std::move(path), amount});
    }
  }

  // Whatever is left must be circulation.
  while (!remaining.empty()) {
    NodeId start = remaining.begin()->first.first;
    std::vector<NodeId> walk{start};
    std::map<NodeId, std::size_t> position{{start, 0}};
    while (true) {
      auto next = first_successor(remaining, walk.back());
      if (!next) {
        throw std::invalid_argument("flow is not conserved at node " + std::to_string(walk.back()));
      }
      if (auto it = position.find(*next); it != position.end()) {
        std::vector<NodeId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(it->second), walk.end());
        cycle.push_back(*next);
        Rational amount = cancel(remaining, cycle);
        out.cycles.push_back({std::move(cycle), amount});
        break;
      }
      position[*next] = walk.size();
      walk.push_back(*next);
    }
  }
  return out;
}

FlowAssignment superpose(const FlowDecomposition& dec) {
  FlowAssignment fa;
  auto add_all = [&](const FlowPath& p) {
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) fa.add(p.nodes[i], p.nodes[i + 1], p.amount);
  };
  for (const auto& p : dec.paths) {
    add_all(p);
    fa.value += p.amount;
  }
  for (const auto& c : dec.cycles) add_all(c);
  return fa;
}

}  // namespace sfc
