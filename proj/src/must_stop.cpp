#include "sfc/must_stop.hpp"

#include "sfc/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfc {

namespace {

void check_request(const Network& net, NodeId s, NodeId t, NodeId d) {
  if (net.directed()) throw InputError("must-stop flow requires an undirected network");
  const std::size_t n = net.node_count();
  if (s >= n || t >= n || d >= n) throw InputError("unknown must-stop terminal");
  if (s == t || t == d || s == d) throw InputError("source, via and destination must be distinct");
}

// Copy of net plus a node T joined to s and d with the given capacity.
Network with_virtual_sink(const Network& net, NodeId s, NodeId d, const Rational& capacity) {
  Network g(false);
  for (NodeId v = 0; v < net.node_count(); ++v) g.add_node(net.name(v), net.functions(v));
  for (const auto& e : net.edges()) g.add_edge(e.tail, e.head, e.cost, e.capacity);
  NodeId sink = g.add_node("__virtual_sink");
  g.add_edge(s, sink, 0, capacity);
  g.add_edge(d, sink, 0, capacity);
  return g;
}

}  // namespace

MustStopResult must_stop_value(const Network& net, NodeId s, NodeId t, NodeId d) {
  check_request(net, s, t, d);
  const Rational unbounded = net.total_capacity() + 1;
  Network g = with_virtual_sink(net, s, d, unbounded);
  const auto sink = static_cast<NodeId>(net.node_count());

  MustStopResult r;
  r.bounds.via_to_virtual_half = max_flow(g, t, sink).value / 2;
  r.bounds.source_to_via = max_flow(net, s, t).value;
  r.bounds.via_to_destination = max_flow(net, t, d).value;
  r.value = std::min({r.bounds.via_to_virtual_half, r.bounds.source_to_via,
                      r.bounds.via_to_destination});
  return r;
}

MustStopRealization must_stop_realize(const Network& net, NodeId s, NodeId t, NodeId d,
                                      const Rational& value) {
  check_request(net, s, t, d);
  if (value < 0) throw InputError("negative must-stop value");
  MustStopRealization out;
  if (value == 0) return out;

  Network g = with_virtual_sink(net, s, d, value);
  const auto sink = static_cast<NodeId>(net.node_count());
  FlowAssignment toward_sink = max_flow(g, t, sink);
  if (toward_sink.value != 2 * value) {
    throw std::logic_error("must-stop realization delivered " + to_string(toward_sink.value) +
                           " instead of " + to_string(2 * value));
  }

  FlowDecomposition dec = decompose(toward_sink, t, sink);
  for (const auto& path : dec.paths) {
    // Every path ends with (s, T) or (d, T); drop the virtual hop.
    std::vector<NodeId> nodes(path.nodes.begin(), path.nodes.end() - 1);
    if (nodes.back() == s) {
      std::reverse(nodes.begin(), nodes.end());
      for (std::size_t i = 0; i + 1 < nodes.size(); ++i) out.inbound.add(nodes[i], nodes[i + 1], path.amount);
      out.inbound.value += path.amount;
    } else {
      for (std::size_t i = 0; i + 1 < nodes.size(); ++i) out.outbound.add(nodes[i], nodes[i + 1], path.amount);
      out.outbound.value += path.amount;
    }
  }
  if (out.inbound.value != value || out.outbound.value != value) {
    throw std::logic_error("must-stop realization is unbalanced");
  }
  return out;
}

MustStopResult must_stop(const Network& net, NodeId s, NodeId t, NodeId d) {
  MustStopResult r = must_stop_value(net, s, t, d);
  r.realization = must_stop_realize(net, s, t, d, r.value);
  return r;
}

}  // namespace sfc
