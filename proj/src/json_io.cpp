#include "sfc/json_io.hpp"

#include "sfc/errors.hpp"

#include <fstream>
#include <sstream>

namespace sfc {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::string require_string(const Json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": expected a string");
  return value.get<std::string>();
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string message = e.what();
    auto cut = message.find("parse error");
    if (cut != std::string::npos) message = message.substr(cut);
    throw InputError("malformed JSON at " + line_column(text, e.byte) + ": " + message);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a number or a rational string");
}

Json rational_to_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) return value.get_num().get_si();
  double d = to_double(value);
  if (rational_from_double(d) == value) return d;
  return to_string(value);
}

Network network_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("graph: expected an object");
  bool directed = true;
  if (doc.contains("directed")) {
    if (!doc["directed"].is_boolean()) throw InputError("graph: \"directed\" must be a boolean");
    directed = doc["directed"].get<bool>();
  }
  Network net(directed);
  const Json& nodes = require(doc, "nodes", "graph");
  if (!nodes.is_array()) throw InputError("graph: \"nodes\" must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    std::string id = require_string(require(nodes[i], "id", where), where + ".id");
    if (net.find(id)) throw InputError(where + ": duplicate node id \"" + id + "\"");
    std::set<FunctionId> functions;
    if (nodes[i].contains("functions")) {
      const Json& fs = nodes[i]["functions"];
      if (!fs.is_array()) throw InputError(where + ".functions: expected an array");
      for (const auto& f : fs) functions.insert(require_string(f, where + ".functions"));
    }
    net.add_node(std::move(id), std::move(functions));
  }
  if (doc.contains("edges")) {
    const Json& edges = doc["edges"];
    if (!edges.is_array()) throw InputError("graph: \"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      NodeId u = net.node(require_string(require(edges[i], "from", where), where + ".from"));
      NodeId v = net.node(require_string(require(edges[i], "to", where), where + ".to"));
      Rational cost = 1, capacity = 1;
      try {
        if (edges[i].contains("cost")) cost = rational_from_json(edges[i]["cost"]);
        if (edges[i].contains("capacity")) capacity = rational_from_json(edges[i]["capacity"]);
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
      if (u == v) throw InputError(where + ": self-loop at \"" + net.name(u) + "\"");
      if (net.find_edge(u, v) && (!directed || net.edge(*net.find_edge(u, v)).tail == u)) {
        throw InputError(where + ": duplicate edge");
      }
      net.add_edge(u, v, std::move(cost), std::move(capacity));
    }
  }
  auto violations = validate(net);
  if (!violations.empty()) throw InputError("graph: " + violations.front().message);
  return net;
}

Json network_to_json(const Network& net) {
  Json doc;
  doc["directed"] = net.directed();
  Json nodes = Json::array();
  for (NodeId v = 0; v < net.node_count(); ++v) {
    Json fs = Json::array();
    for (const auto& f : net.functions(v)) fs.push_back(f);
    nodes.push_back({{"id", net.name(v)}, {"functions", fs}});
  }
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : net.edges()) {
    edges.push_back({{"from", net.name(e.tail)},
                     {"to", net.name(e.head)},
                     {"cost", rational_to_json(e.cost)},
                     {"capacity", rational_to_json(e.capacity)}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Network load_network(const std::filesystem::path& path) {
  Json doc = read_json_file(path);
  if (doc.is_object() && doc.contains("graph")) return network_from_json(doc["graph"]);
  return network_from_json(doc);
}

ServiceChain parse_chain(const Network& net, std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() < 2) throw InputError("chain needs at least a source and a destination");
  for (const auto& p : parts) {
    if (p.empty()) throw InputError("chain has an empty entry");
  }
  ServiceChain sc;
  sc.source = net.node(parts.front());
  sc.destination = net.node(parts.back());
  sc.functions.assign(parts.begin() + 1, parts.end() - 1);
  check_chain(net, sc);
  return sc;
}

Json walk_to_json(const Network& net, const Walk& walk) {
  Json path = Json::array();
  for (NodeId v : walk.nodes) path.push_back(net.name(v));
  return {{"path", path}, {"cost", rational_to_json(walk.cost)}};
}

Json flow_to_json(const Network& net, const FlowAssignment& fa) {
  Json flows = Json::array();
  for (const auto& [arc, f] : fa.arc_flows) {
    if (f == 0) continue;
    flows.push_back({{"from", net.name(arc.first)}, {"to", net.name(arc.second)}, {"flow", rational_to_json(f)}});
  }
  return {{"value", rational_to_json(fa.value)}, {"flows", flows}};
}

Json expanded_to_json(const Network& net, const ExpandedGraph& eg) {
  auto name = [&](VertexId v) {
    const LevelVertex& lv = eg.vertex(v);
    return net.name(lv.node) + "@" + std::to_string(lv.level);
  };
  Json vertices = Json::array();
  for (VertexId v = 0; v < eg.vertices().size(); ++v) vertices.push_back(name(v));
  Json arcs = Json::array();
  for (const auto& a : eg.arcs()) {
    arcs.push_back({{"from", name(a.from)}, {"to", name(a.to)}, {"cost", rational_to_json(a.cost)}});
  }
  return {{"source", name(eg.source())},
          {"destination", name(eg.destination())},
          {"vertices", vertices},
          {"arcs", arcs}};
}

}  // namespace sfc
