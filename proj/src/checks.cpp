#include "sfc/checks.hpp"

namespace sfc {

namespace {

using ArcFlows = std::map<std::pair<NodeId, NodeId>, Rational>;

std::string arc_name(const Network& net, const std::pair<NodeId, NodeId>& arc) {
  return net.name(arc.first) + "->" + net.name(arc.second);
}

bool valid_node(const Network& net, NodeId v) { return v < net.node_count(); }

// Arc existence and sign; returns the edge index per arc via `load`.
void check_arcs(const Network& net, const ArcFlows& flows, const std::string& label,
                std::vector<Rational>& load, Problems& out) {
  for (const auto& [arc, f] : flows) {
    if (!valid_node(net, arc.first) || !valid_node(net, arc.second)) {
      out.push_back(label + ": arc with unknown endpoint");
      continue;
    }
    if (f < 0) out.push_back(label + ": negative flow on " + arc_name(net, arc));
    std::optional<std::size_t> edge;
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
      const Edge& ed = net.edge(e);
      if ((ed.tail == arc.first && ed.head == arc.second) ||
          (!net.directed() && ed.tail == arc.second && ed.head == arc.first)) {
        edge = e;
        break;
      }
    }
    if (!edge) {
      out.push_back(label + ": flow on missing arc " + arc_name(net, arc));
      continue;
    }
    load[*edge] += f;
  }
}

void check_capacity(const Network& net, const std::vector<Rational>& load, const std::string& label,
                    Problems& out) {
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    if (load[e] > net.edge(e).capacity) {
      const Edge& ed = net.edge(e);
      out.push_back(label + ": edge " + net.name(ed.tail) + "-" + net.name(ed.head) + " carries " +
                    to_string(load[e]) + " over capacity " + to_string(ed.capacity));
    }
  }
}

std::vector<Rational> net_outflow(const Network& net, const ArcFlows& flows) {
  std::vector<Rational> out(net.node_count());
  for (const auto& [arc, f] : flows) {
    if (!valid_node(net, arc.first) || !valid_node(net, arc.second)) continue;
    out[arc.first] += f;
    out[arc.second] -= f;
  }
  return out;
}

void check_conservation(const Network& net, const FlowAssignment& fa, NodeId s, NodeId d,
                        const std::string& label, Problems& out) {
  auto balance = net_outflow(net, fa.arc_flows);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    Rational expected = v == s ? fa.value : v == d ? Rational(-fa.value) : Rational(0);
    if (balance[v] != expected) {
      out.push_back(label + ": node " + net.name(v) + " has net outflow " + to_string(balance[v]) +
                    ", expected " + to_string(expected));
    }
  }
}

}  // namespace

Problems check_flow(const Network& net, const FlowAssignment& fa, NodeId s, NodeId d) {
  Problems out;
  if (!valid_node(net, s) || !valid_node(net, d)) return {"unknown terminal"};
  std::vector<Rational> load(net.edge_count());
  check_arcs(net, fa.arc_flows, "flow", load, out);
  check_capacity(net, load, "flow", out);
  check_conservation(net, fa, s, d, "flow", out);
  return out;
}

Problems check_commodities(const Network& net, const std::vector<Commodity>& commodities) {
  Problems out;
  std::vector<Rational> load(net.edge_count());
  for (std::size_t k = 0; k < commodities.size(); ++k) {
    const Commodity& c = commodities[k];
    const std::string label = "commodity " + std::to_string(k + 1);
    if (!c.flow || !valid_node(net, c.from) || !valid_node(net, c.to)) {
      out.push_back(label + ": malformed");
      continue;
    }
    check_arcs(net, c.flow->arc_flows, label, load, out);
    if (c.from != c.to) check_conservation(net, *c.flow, c.from, c.to, label, out);
  }
  check_capacity(net, load, "joint", out);
  return out;
}

Problems check_must_stop(const Network& net, NodeId s, NodeId t, NodeId d,
                         const MustStopRealization& realization, const Rational& value) {
  Problems out;
  if (realization.inbound.value != value) out.push_back("inbound value differs from " + to_string(value));
  if (realization.outbound.value != value) out.push_back("outbound value differs from " + to_string(value));
  auto joint = check_commodities(net, {{s, t, &realization.inbound}, {t, d, &realization.outbound}});
  out.insert(out.end(), joint.begin(), joint.end());
  return out;
}

Problems check_two_layer(const PlacementInstance& inst, const std::set<NodeId>& virtualized,
                         const TwoLayerFlow& flow) {
  const Network& net = inst.net;
  const NodeId s = inst.source;
  const NodeId d = inst.destination;
  Problems out;
  std::vector<Rational> load(net.edge_count());
  check_arcs(net, flow.unprocessed, "unprocessed", load, out);
  check_arcs(net, flow.processed, "processed", load, out);
  check_capacity(net, load, "two-layer", out);

  std::vector<Rational> in0(net.node_count()), out0(net.node_count());
  std::vector<Rational> in1(net.node_count()), out1(net.node_count());
  for (const auto& [arc, f] : flow.unprocessed) {
    if (!valid_node(net, arc.first) || !valid_node(net, arc.second)) continue;
    out0[arc.first] += f;
    in0[arc.second] += f;
  }
  for (const auto& [arc, f] : flow.processed) {
    if (!valid_node(net, arc.first) || !valid_node(net, arc.second)) continue;
    out1[arc.first] += f;
    in1[arc.second] += f;
  }
  auto expect = [&](bool ok, NodeId v, const std::string& rule) {
    if (!ok) out.push_back("node " + net.name(v) + " violates " + rule);
  };
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (v == s) {
      expect(out0[v] == inst.target_flow, v, "source emits the target unprocessed");
      expect(out1[v] == 0 && in0[v] == 0 && in1[v] == 0, v, "source only emits unprocessed flow");
    } else if (v == d) {
      expect(in1[v] == inst.target_flow, v, "destination absorbs the target processed");
      expect(in0[v] == 0 && out0[v] == 0 && out1[v] == 0, v, "destination only absorbs processed flow");
    } else {
      expect(in0[v] + in1[v] == out0[v] + out1[v], v, "joint conservation");
      if (virtualized.count(v)) {
        expect(out1[v] == in0[v] + in1[v], v, "virtualized output is fully processed");
      } else {
        expect(out1[v] == in1[v], v, "processed conservation");
      }
    }
  }
  return out;
}

}  // namespace sfc
