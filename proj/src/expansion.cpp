#include "sfc/expansion.hpp"

#include "sfc/errors.hpp"
#include "sfc/walk_search.hpp"

#include <deque>
#include <stdexcept>

namespace sfc {

ExpandedGraph::ExpandedGraph(std::size_t node_count, std::uint32_t levels,
                             std::vector<LevelVertex> vertices, std::vector<ExpandedArc> arcs,
                             LevelVertex source, LevelVertex destination)
    : node_count_(node_count),
      levels_(levels),
      vertices_(std::move(vertices)),
      arcs_(std::move(arcs)) {
  const std::size_t width = static_cast<std::size_t>(levels_) + 1;
  lookup_.assign(node_count_ * width, -1);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& lv = vertices_[v];
    if (lv.node >= node_count_ || lv.level > levels_) {
      throw std::invalid_argument("expanded vertex out of range");
    }
    lookup_[lv.node * width + lv.level] = static_cast<std::int64_t>(v);
  }
  auto src = find(source.node, source.level);
  auto dst = find(destination.node, destination.level);
  if (!src || !dst) throw std::invalid_argument("source or destination vertex missing");
  source_ = *src;
  destination_ = *dst;

  // CSR adjacency in arc order.
  const std::size_t nv = vertices_.size();
  out_offsets_.assign(nv + 1, 0);
  in_offsets_.assign(nv + 1, 0);
  for (const auto& a : arcs_) {
    ++out_offsets_[a.from + 1];
    ++in_offsets_[a.to + 1];
  }
  for (std::size_t i = 0; i < nv; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_list_.resize(arcs_.size());
  in_list_.resize(arcs_.size());
  std::vector<std::size_t> out_cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    out_list_[out_cursor[arcs_[a].from]++] = a;
    in_list_[in_cursor[arcs_[a].to]++] = a;
  }
}

std::optional<VertexId> ExpandedGraph::find(NodeId node, std::uint32_t level) const {
  if (node >= node_count_ || level > levels_) return std::nullopt;
  std::int64_t v = lookup_[node * (static_cast<std::size_t>(levels_) + 1) + level];
  if (v < 0) return std::nullopt;
  return static_cast<VertexId>(v);
}

std::span<const std::size_t> ExpandedGraph::out_arcs(VertexId v) const {
  return std::span<const std::size_t>(out_list_).subspan(out_offsets_[v],
                                                         out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const std::size_t> ExpandedGraph::in_arcs(VertexId v) const {
  return std::span<const std::size_t>(in_list_).subspan(in_offsets_[v],
                                                        in_offsets_[v + 1] - in_offsets_[v]);
}

std::uint32_t advance_level(const Network& net, NodeId node, std::span<const FunctionId> chain,
                            std::uint32_t from_level) {
  std::uint32_t j = from_level;
  while (j < chain.size() && net.hosts(node, chain[j])) ++j;
  return j;
}

namespace {

std::vector<LevelVertex> all_level_vertices(std::size_t n, std::uint32_t r) {
  std::vector<LevelVertex> vs;
  vs.reserve(n * (r + 1));
  for (NodeId v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i <= r; ++i) vs.push_back({v, i});
  }
  return vs;
}

VertexId dense_index(NodeId v, std::uint32_t level, std::uint32_t r) {
  return static_cast<VertexId>(v * (r + 1) + level);
}

void reject_negative_costs(const Network& net) {
  for (const auto& e : net.edges()) {
    if (e.cost < 0) throw NegativeCostError("negative edge cost");
  }
}

Walk to_walk(const ExpandedGraph& eg, const std::vector<VertexId>& path) {
  Walk w;
  for (std::size_t i = 0; i < path.size(); ++i) {
    NodeId node = eg.vertex(path[i]).node;
    if (w.nodes.empty() || w.nodes.back() != node) w.nodes.push_back(node);
    if (i + 1 < path.size()) {
      for (std::size_t a : eg.out_arcs(path[i])) {
        if (eg.arcs()[a].to == path[i + 1]) {
          w.cost += eg.arcs()[a].cost;
          break;
        }
      }
    }
  }
  return w;
}

}  // namespace

ExpandedGraph build_expanded(const Network& net, const ServiceChain& sc) {
  check_chain(net, sc);
  const auto r = static_cast<std::uint32_t>(sc.functions.size());
  const std::size_t n = net.node_count();
  std::vector<ExpandedArc> arcs;
  const auto net_arcs = net.arcs();
  arcs.reserve(net_arcs.size() * (r + 1));
  for (const Arc& arc : net_arcs) {
    const Rational& cost = net.edge(arc.edge).cost;
    for (std::uint32_t i = 0; i <= r; ++i) {
      std::uint32_t j = advance_level(net, arc.head, sc.functions, i);
      arcs.push_back({dense_index(arc.tail, i, r), dense_index(arc.head, j, r), cost, arc.edge});
    }
  }
  std::uint32_t t = advance_level(net, sc.source, sc.functions, 0);
  return ExpandedGraph(n, r, all_level_vertices(n, r), std::move(arcs), {sc.source, t},
                       {sc.destination, r});
}

ExpandedGraph prune(const ExpandedGraph& eg) {
  const std::size_t nv = eg.vertices().size();
  std::vector<std::size_t> indeg(nv, 0), outdeg(nv, 0);
  for (const auto& a : eg.arcs()) {
    ++outdeg[a.from];
    ++indeg[a.to];
  }
  std::vector<bool> removed(nv, false);
  std::deque<VertexId> work;
  auto exempt = [&](VertexId v) { return v == eg.source() || v == eg.destination(); };
  for (VertexId v = 0; v < nv; ++v) {
    if (!exempt(v) && (indeg[v] == 0 || outdeg[v] == 0)) {
      removed[v] = true;
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    auto drop = [&](VertexId w) {
      if (!removed[w] && !exempt(w) && (indeg[w] == 0 || outdeg[w] == 0)) {
        removed[w] = true;
        work.push_back(w);
      }
    };
    for (std::size_t a : eg.out_arcs(v)) {
      VertexId w = eg.arcs()[a].to;
      if (removed[w]) continue;
      --indeg[w];
      drop(w);
    }
    for (std::size_t a : eg.in_arcs(v)) {
      VertexId w = eg.arcs()[a].from;
      if (removed[w]) continue;
      --outdeg[w];
      drop(w);
    }
  }

  std::vector<std::int64_t> remap(nv, -1);
  std::vector<LevelVertex> vertices;
  for (VertexId v = 0; v < nv; ++v) {
    if (removed[v]) continue;
    remap[v] = static_cast<std::int64_t>(vertices.size());
    vertices.push_back(eg.vertex(v));
  }
  std::vector<ExpandedArc> arcs;
  for (const auto& a : eg.arcs()) {
    if (removed[a.from] || removed[a.to]) continue;
    arcs.push_back({static_cast<VertexId>(remap[a.from]), static_cast<VertexId>(remap[a.to]),
                    a.cost, a.edge});
  }
  return ExpandedGraph(eg.node_count(), eg.levels(), std::move(vertices), std::move(arcs),
                       eg.vertex(eg.source()), eg.vertex(eg.destination()));
}

ExpandedGraph build_layered(const Network& net, const ServiceChain& sc) {
  check_chain(net, sc);
  const auto r = static_cast<std::uint32_t>(sc.functions.size());
  const std::size_t n = net.node_count();
  std::vector<ExpandedArc> arcs;
  for (const Arc& arc : net.arcs()) {
    for (std::uint32_t i = 0; i <= r; ++i) {
      arcs.push_back({dense_index(arc.tail, i, r), dense_index(arc.head, i, r),
                      net.edge(arc.edge).cost, arc.edge});
    }
  }
  for (std::uint32_t i = 0; i < r; ++i) {
    for (NodeId v = 0; v < n; ++v) {
      if (net.hosts(v, sc.functions[i])) {
        arcs.push_back({dense_index(v, i, r), dense_index(v, i + 1, r), Rational(0), std::nullopt});
      }
    }
  }
  return ExpandedGraph(n, r, all_level_vertices(n, r), std::move(arcs), {sc.source, 0},
                       {sc.destination, r});
}

GraphSize graph_size(const ExpandedGraph& eg) {
  GraphSize s;
  s.vertices = eg.vertices().size();
  s.arcs = eg.arcs().size();
  s.total = s.vertices + s.arcs;
  return s;
}

std::optional<Walk> shortest_walk(const ExpandedGraph& eg) {
  for (const auto& a : eg.arcs()) {
    if (a.cost < 0) throw NegativeCostError("negative arc cost");
  }
  auto path = best_vertex_path<Rational>(
      eg, [&](std::size_t a) -> const Rational& { return eg.arcs()[a].cost; });
  if (!path) return std::nullopt;
  return to_walk(eg, *path);
}

std::optional<Walk> sfc_shortest_path(const Network& net, const ServiceChain& sc) {
  reject_negative_costs(net);
  return shortest_walk(prune(build_expanded(net, sc)));
}

std::optional<ChainPathResult> sfc_set_shortest_path(const Network& net, const ServiceChain& sc) {
  check_chain(net, sc);
  reject_negative_costs(net);
  auto orderings = chain_orderings(sc);
  std::optional<ChainPathResult> best;
  for (std::size_t k = 0; k < orderings.size(); ++k) {
    auto walk = sfc_shortest_path(net, orderings[k]);
    if (!walk) continue;
    if (!best || walk->cost < best->walk.cost) {
      best = ChainPathResult{std::move(*walk), orderings[k], k};
    }
  }
  return best;
}

std::optional<Walk> layered_shortest_path(const Network& net, const ServiceChain& sc) {
  reject_negative_costs(net);
  return shortest_walk(build_layered(net, sc));
}

}  // namespace sfc
