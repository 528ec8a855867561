#pragma once

#include "gengraph/certificate.hpp"
#include "gengraph/graph.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace gengraph {

using Json = nlohmann::ordered_json;

/// {order, vertices: [labels], edges: [[i, j], ...], selfDominating: [...]}.
/// Edges are sorted; selfDominating is omitted when no vertex is marked.
Json graph_to_json(const Graph& g, const std::vector<std::string>& labels);
/// Inverse of graph_to_json; labels are written to `labels` when non-null.
Graph graph_from_json(const Json& j, std::vector<std::string>* labels = nullptr);

void write_dot(std::ostream& out, const Graph& g, const std::vector<std::string>& labels,
               const std::string& name = "G");

/// Tagged form {"type": kind, ...fields}.
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

}  // namespace gengraph
