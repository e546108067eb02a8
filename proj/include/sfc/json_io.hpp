/*
  JSON reading and writing for networks, chains, walks and flows.

  Graph schema:
    { "directed": bool,
      "nodes": [ { "id": str, "functions": [str] } ],
      "edges": [ { "from": str, "to": str, "cost": num, "capacity": num } ] }
  cost and capacity default to 1. Numbers may also be strings such as
  "3/2". Output writes a rational as a JSON number when the number reads
  back exactly, otherwise as a "p/q" string.
*/
#pragma once

#include "sfc/expansion.hpp"
#include "sfc/maxflow.hpp"
#include "sfc/network.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace sfc {

using Json = nlohmann::ordered_json;

// Throws InputError with line and column on malformed text.
Json parse_json_text(std::string_view text);
Json read_json_file(const std::filesystem::path& path);

Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

// Throws InputError on schema problems or validation violations.
Network network_from_json(const Json& doc);
Json network_to_json(const Network& net);

// Reads a graph file; accepts either a bare graph or an object whose
// "graph" key holds one.
Network load_network(const std::filesystem::path& path);

// "src,phi1,phi2,dst": first and last entries are node names.
ServiceChain parse_chain(const Network& net, std::string_view text);

Json walk_to_json(const Network& net, const Walk& walk);
Json flow_to_json(const Network& net, const FlowAssignment& fa);

// Vertices are named "node@level".
Json expanded_to_json(const Network& net, const ExpandedGraph& eg);

}  // namespace sfc
