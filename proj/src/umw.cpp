#include "sfc/umw.hpp"

#include "sfc/errors.hpp"
#include "sfc/expansion.hpp"
#include "sfc/walk_search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <map>
#include <numeric>
#include <random>

namespace sfc {

bool is_stable(const std::vector<std::uint64_t>& series, std::size_t warmup) {
  if (series.size() <= warmup) return true;
  const std::size_t span = series.size() - warmup;
  const std::size_t window = std::max<std::size_t>(1, span / 10);
  auto mean = [&](std::size_t from) {
    double sum = 0;
    for (std::size_t t = from; t < from + window; ++t) sum += static_cast<double>(series[t]);
    return sum / static_cast<double>(window);
  };
  return mean(series.size() - window) <= 3.0 * mean(warmup);
}

namespace {

struct Packet {
  std::vector<std::size_t> links;  // network arc indices in travel order
  std::size_t next = 0;
};

struct FlowRouting {
  ExpandedGraph graph;
  // Network arc index per expanded arc.
  std::vector<std::size_t> link_of;
  std::poisson_distribution<std::uint64_t> arrivals;
  bool active = false;
};

void check_config(const SimConfig& cfg) {
  if (cfg.horizon <= cfg.warmup) throw InputError("horizon must exceed warmup");
  for (const auto& f : cfg.flows) {
    if (!std::isfinite(f.arrival_rate) || f.arrival_rate < 0) {
      throw InputError("arrival rates must be finite and nonnegative");
    }
    check_chain(cfg.net, f.chain);
  }
}

}  // namespace

SimResult simulate(const SimConfig& cfg) {
  check_config(cfg);
  const Network& net = cfg.net;
  const auto arcs = net.arcs();
  std::map<std::pair<NodeId, NodeId>, std::size_t> arc_index;
  for (std::size_t a = 0; a < arcs.size(); ++a) arc_index[{arcs[a].tail, arcs[a].head}] = a;
  std::vector<std::int64_t> service(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    Rational floor_cap = -ceil(Rational(-net.edge(arcs[a].edge).capacity));
    service[a] = floor_cap.get_num().get_si();
  }

  std::vector<FlowRouting> routing;
  for (const auto& f : cfg.flows) {
    FlowRouting fr{prune(build_expanded(net, f.chain)), {}, {}, f.arrival_rate > 0};
    for (const auto& ea : fr.graph.arcs()) {
      NodeId u = fr.graph.vertex(ea.from).node;
      NodeId v = fr.graph.vertex(ea.to).node;
      fr.link_of.push_back(arc_index.at({u, v}));
    }
    if (fr.active) fr.arrivals = std::poisson_distribution<std::uint64_t>(f.arrival_rate);
    routing.push_back(std::move(fr));
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::int64_t> virtual_queue(arcs.size(), 0);
  std::vector<std::int64_t> assigned(arcs.size(), 0);
  std::vector<std::deque<std::size_t>> physical(arcs.size());
  std::vector<Packet> packets;
  std::vector<std::size_t> free_slots;
  std::uint64_t in_queues = 0;

  SimResult out;
  out.total_queue.reserve(cfg.horizon);
  std::vector<std::pair<std::size_t, std::size_t>> moves;  // (packet, from link)

  for (std::size_t slot = 0; slot < cfg.horizon; ++slot) {
    std::fill(assigned.begin(), assigned.end(), 0);
    for (std::size_t k = 0; k < routing.size(); ++k) {
      FlowRouting& fr = routing[k];
      if (!fr.active) continue;
      std::uint64_t count = fr.arrivals(rng);
      if (count == 0) continue;
      out.arrived += count;
      auto cost_of = [&](std::size_t a) { return virtual_queue[fr.link_of[a]]; };
      auto path = best_vertex_path<std::int64_t>(fr.graph, cost_of);
      if (!path) {
        out.unroutable += count;
        continue;
      }
      Packet proto;
      std::vector<NodeId> nodes{fr.graph.vertex(path->front()).node};
      for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        NodeId u = fr.graph.vertex((*path)[i]).node;
        NodeId v = fr.graph.vertex((*path)[i + 1]).node;
        proto.links.push_back(arc_index.at({u, v}));
        nodes.push_back(v);
      }
      if (!is_admissible(net, nodes, cfg.flows[k].chain)) out.chain_violations += count;
      for (std::size_t link : proto.links) assigned[link] += static_cast<std::int64_t>(count);
      out.routed += count;
      for (std::uint64_t c = 0; c < count; ++c) {
        if (proto.links.empty()) {
          ++out.delivered;
          continue;
        }
        std::size_t id;
        if (free_slots.empty()) {
          id = packets.size();
          packets.push_back(proto);
        } else {
          id = free_slots.back();
          free_slots.pop_back();
          packets[id] = proto;
        }
        physical[proto.links.front()].push_back(id);
        ++in_queues;
      }
    }
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      virtual_queue[a] = std::max<std::int64_t>(virtual_queue[a] + assigned[a] - service[a], 0);
    }

    moves.clear();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      for (std::int64_t sent = 0; sent < service[a] && !physical[a].empty(); ++sent) {
        moves.emplace_back(physical[a].front(), a);
        physical[a].pop_front();
      }
    }
    std::fill(assigned.begin(), assigned.end(), 0);
    for (auto [id, from] : moves) ++assigned[from];
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (assigned[a] > net.edge(arcs[a].edge).capacity) {
        ++out.capacity_violations;
        break;
      }
    }
    for (auto [id, from] : moves) {
      Packet& p = packets[id];
      if (p.links[p.next] != from) ++out.chain_violations;
      ++p.next;
      if (p.next == p.links.size()) {
        ++out.delivered;
        --in_queues;
        free_slots.push_back(id);
      } else {
        physical[p.links[p.next]].push_back(id);
      }
    }
    out.total_queue.push_back(in_queues);
  }

  double sum = 0;
  for (std::size_t t = cfg.warmup; t < cfg.horizon; ++t) sum += static_cast<double>(out.total_queue[t]);
  out.average_queue = sum / static_cast<double>(cfg.horizon - cfg.warmup);
  out.stable = is_stable(out.total_queue, cfg.warmup);
  return out;
}

std::vector<SweepRow> sweep(const SimConfig& base, const std::vector<double>& p_values) {
  check_config(base);
  std::vector<std::future<SimResult>> runs;
  for (double p : p_values) {
    if (!std::isfinite(p) || p < 0) throw InputError("sweep values must be finite and nonnegative");
    SimConfig cfg = base;
    for (auto& f : cfg.flows) f.arrival_rate *= p;
    runs.push_back(std::async(std::launch::async, [cfg = std::move(cfg)] { return simulate(cfg); }));
  }
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    SimResult r = runs[i].get();
    rows.push_back({p_values[i], r.average_queue, r.stable, std::move(r)});
  }
  return rows;
}

}  // namespace sfc
