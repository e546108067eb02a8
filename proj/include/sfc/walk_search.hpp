/*
  Label-setting search over an ExpandedGraph with caller-supplied arc costs.

  Labels are (cost, hops) compared lexicographically, so zero-cost arcs are
  harmless. A forward and a backward pass give tight arcs; the vertex path is
  then read greedily from the source, always taking the tight successor with
  the smallest (node, level). That yields a deterministic path among all
  minimum (cost, hops) paths.
*/
#pragma once

#include "sfc/expansion.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

namespace sfc {

template <class Cost>
struct PathLabel {
  Cost cost{};
  std::uint64_t hops = 0;

  friend bool operator<(const PathLabel& a, const PathLabel& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.hops < b.hops;
  }
  friend bool operator==(const PathLabel& a, const PathLabel& b) {
    return a.cost == b.cost && a.hops == b.hops;
  }
};

namespace detail {

template <class Cost, class CostOf>
std::vector<std::optional<PathLabel<Cost>>> label_pass(const ExpandedGraph& eg, VertexId root,
                                                       bool forward, const CostOf& cost_of) {
  using Label = PathLabel<Cost>;
  using Entry = std::pair<Label, VertexId>;
  auto greater = [](const Entry& a, const Entry& b) {
    if (a.first == b.first) return a.second > b.second;
    return b.first < a.first;
  };
  std::vector<std::optional<Label>> best(eg.vertices().size());
  std::vector<bool> done(eg.vertices().size(), false);
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> queue(greater);
  best[root] = Label{Cost{}, 0};
  queue.push({*best[root], root});
  while (!queue.empty()) {
    auto [label, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    auto arcs = forward ? eg.out_arcs(v) : eg.in_arcs(v);
    for (std::size_t a : arcs) {
      const ExpandedArc& arc = eg.arcs()[a];
      VertexId w = forward ? arc.to : arc.from;
      if (done[w]) continue;
      Label next{label.cost + cost_of(a), label.hops + 1};
      if (!best[w] || next < *best[w]) {
        best[w] = next;
        queue.push({next, w});
      }
    }
  }
  return best;
}

}  // namespace detail

// cost_of(arc index) must return a nonnegative Cost.
template <class Cost, class CostOf>
std::optional<std::vector<VertexId>> best_vertex_path(const ExpandedGraph& eg,
                                                      const CostOf& cost_of) {
  const VertexId src = eg.source();
  const VertexId dst = eg.destination();
  if (src == dst) return std::vector<VertexId>{src};
  auto fwd = detail::label_pass<Cost>(eg, src, true, cost_of);
  if (!fwd[dst]) return std::nullopt;
  auto bwd = detail::label_pass<Cost>(eg, dst, false, cost_of);
  const PathLabel<Cost> target = *fwd[dst];

  std::vector<VertexId> path{src};
  VertexId cur = src;
  while (cur != dst) {
    std::optional<VertexId> pick;
    for (std::size_t a : eg.out_arcs(cur)) {
      const ExpandedArc& arc = eg.arcs()[a];
      if (!bwd[arc.to]) continue;
      PathLabel<Cost> through{fwd[cur]->cost + cost_of(a) + bwd[arc.to]->cost,
                              fwd[cur]->hops + 1 + bwd[arc.to]->hops};
      if (!(through == target)) continue;
      if (!pick) {
        pick = arc.to;
        continue;
      }
      const LevelVertex& a_v = eg.vertex(arc.to);
      const LevelVertex& p_v = eg.vertex(*pick);
      if (std::tie(a_v.node, a_v.level) < std::tie(p_v.node, p_v.level)) pick = arc.to;
    }
    // A tight successor always exists while cur lies on an optimal path.
    if (!pick) return std::nullopt;
    cur = *pick;
    path.push_back(cur);
  }
  return path;
}

}  // namespace sfc
