#include "sfc/sfc_maxflow.hpp"

#include "sfc/errors.hpp"
#include "sfc/lp.hpp"

namespace sfc {

std::vector<SegmentCommodity> segment_commodities(const Network& net, const ServiceChain& sc) {
  check_chain(net, sc);
  std::vector<NodeId> stops{sc.source};
  for (const auto& fn : sc.functions) {
    std::vector<NodeId> hosts;
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (net.hosts(v, fn)) hosts.push_back(v);
    }
    if (hosts.size() != 1) {
      throw AmbiguousHostingError("ambiguous hosting: function '" + fn + "' is hosted at " +
                                  std::to_string(hosts.size()) + " nodes");
    }
    stops.push_back(hosts.front());
  }
  stops.push_back(sc.destination);
  std::vector<SegmentCommodity> out;
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) out.push_back({i + 1, stops[i], stops[i + 1]});
  return out;
}

SfcMaxFlowResult sfc_max_flow(const Network& net, const ServiceChain& sc) {
  SfcMaxFlowResult result;
  result.commodities = segment_commodities(net, sc);
  const auto arcs = net.arcs();
  const auto adj = build_adjacency(net.node_count(), arcs);

  LinearProgram lp;
  const std::size_t lambda = lp.add_variable(0, std::nullopt, 1);
  // flow_var[k][a] for active commodity k, or empty for degenerate segments.
  std::vector<std::vector<std::size_t>> flow_var(result.commodities.size());
  bool any_active = false;
  for (std::size_t k = 0; k < result.commodities.size(); ++k) {
    const auto& com = result.commodities[k];
    if (com.from == com.to) continue;
    any_active = true;
    for (std::size_t a = 0; a < arcs.size(); ++a) flow_var[k].push_back(lp.add_variable());
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (v == com.to) continue;
      std::vector<Term> terms;
      for (std::size_t a : adj.out[v]) terms.push_back({flow_var[k][a], 1});
      for (std::size_t a : adj.in[v]) terms.push_back({flow_var[k][a], -1});
      if (v == com.from) {
        terms.push_back({lambda, -1});
        lp.add_constraint(std::move(terms), Relation::greater_equal, 0);
      } else {
        lp.add_constraint(std::move(terms), Relation::equal, 0);
      }
    }
  }
  if (!any_active) throw InputError("every chain segment is degenerate; flow is unbounded");

  std::vector<std::vector<Term>> capacity_rows(net.edge_count());
  for (std::size_t k = 0; k < flow_var.size(); ++k) {
    for (std::size_t a = 0; a < flow_var[k].size(); ++a) {
      capacity_rows[arcs[a].edge].push_back({flow_var[k][a], 1});
    }
  }
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (capacity_rows[e].empty()) continue;
    lp.add_constraint(std::move(capacity_rows[e]), Relation::less_equal, net.edge(e).capacity);
  }

  LpSolution sol = solve(lp);
  if (sol.status != LpStatus::optimal) throw std::logic_error("segment flow LP did not solve");
  result.lambda = sol.value;

  for (std::size_t k = 0; k < result.commodities.size(); ++k) {
    FlowAssignment fa;
    const auto& com = result.commodities[k];
    if (flow_var[k].empty()) {
      fa.value = result.lambda;
      result.per_commodity.push_back(std::move(fa));
      continue;
    }
    // Net flow per edge, so opposite directions cancel.
    std::vector<Rational> net_flow(net.edge_count());
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const Rational& x = sol.x[flow_var[k][a]];
      const Edge& edge = net.edge(arcs[a].edge);
      if (arcs[a].tail == edge.tail) {
        net_flow[arcs[a].edge] += x;
      } else {
        net_flow[arcs[a].edge] -= x;
      }
    }
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
      const Edge& edge = net.edge(e);
      if (net_flow[e] > 0) fa.add(edge.tail, edge.head, net_flow[e]);
      if (net_flow[e] < 0) fa.add(edge.head, edge.tail, -net_flow[e]);
    }
    for (const auto& [arc, f] : fa.arc_flows) {
      if (arc.first == com.from) fa.value += f;
      if (arc.second == com.from) fa.value -= f;
    }
    result.per_commodity.push_back(std::move(fa));
  }
  return result;
}

}  // namespace sfc
