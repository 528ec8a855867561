#include "gengraph/io.hpp"

#include "gengraph/errors.hpp"

#include <ostream>

namespace gengraph {

Json graph_to_json(const Graph& g, const std::vector<std::string>& labels) {
  Json j;
  j["order"] = g.vertex_count();
  Json vs = Json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    vs.push_back(v < labels.size() ? labels[v] : std::to_string(v));
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  j["edges"] = std::move(es);
  const auto& marks = g.self_dominating_marks();
  if (marks.any()) {
    Json sd = Json::array();
    for (auto v = marks.find_first(); v != Bits::npos; v = marks.find_next(v)) sd.push_back(v);
    j["selfDominating"] = std::move(sd);
  }
  return j;
}

Graph graph_from_json(const Json& j, std::vector<std::string>* labels) {
  try {
    const auto n = j.at("order").get<std::size_t>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      const auto u = e.at(0).get<Vertex>();
      const auto v = e.at(1).get<Vertex>();
      if (u >= n || v >= n || u == v) throw PreconditionError("graph JSON: bad edge");
      g.add_edge(u, v);
    }
    if (j.contains("selfDominating"))
      for (const auto& v : j["selfDominating"]) {
        if (v.get<std::size_t>() >= n) throw PreconditionError("graph JSON: bad mark");
        g.set_self_dominating(v.get<Vertex>());
      }
    if (labels) {
      labels->clear();
      if (j.contains("vertices"))
        for (const auto& l : j["vertices"]) labels->push_back(l.get<std::string>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("graph JSON: ") + e.what());
  }
}

void write_dot(std::ostream& out, const Graph& g, const std::vector<std::string>& labels,
               const std::string& name) {
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "graph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=" << quoted(v < labels.size() ? labels[v] : std::to_string(v));
    if (g.self_dominating(static_cast<Vertex>(v))) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

namespace {

Json to_json(const VertexCut& c) {
  return {{"type", "VertexCut"}, {"vertices", c.vertices}, {"complete", c.complete}};
}
Json to_json(const EdgeCut& c) {
  Json es = Json::array();
  for (auto [u, v] : c.edges) es.push_back({u, v});
  return {{"type", "EdgeCut"}, {"edges", es}};
}
Json to_json(const EulerCircuit& c) { return {{"type", "EulerCircuit"}, {"walk", c.walk}}; }
Json to_json(const HamCycle& c) { return {{"type", "HamCycle"}, {"order", c.order}}; }
Json to_json(const Clique& c) { return {{"type", "Clique"}, {"vertices", c.vertices}}; }
Json to_json(const Colouring& c) { return {{"type", "Colouring"}, {"colour", c.colour}}; }
Json to_json(const DominatingSet& c) { return {{"type", "DominatingSet"}, {"vertices", c.vertices}}; }
Json to_json(const HChords& c) {
  return {{"type", "HChords"},
          {"order", c.cycle.order},
          {"chordOdd", {c.chordOdd.first, c.chordOdd.second}},
          {"chordEven", {c.chordEven.first, c.chordEven.second}}};
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

Certificate certificate_from_json(const Json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    auto pair = [](const Json& p) {
      return std::pair<std::size_t, std::size_t>{p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>()};
    };
    if (type == "VertexCut")
      return VertexCut{j.at("vertices").get<std::vector<Vertex>>(), j.value("complete", false)};
    if (type == "EdgeCut") {
      EdgeCut c;
      for (const auto& e : j.at("edges")) c.edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
      return c;
    }
    if (type == "EulerCircuit") return EulerCircuit{j.at("walk").get<std::vector<Vertex>>()};
    if (type == "HamCycle") return HamCycle{j.at("order").get<std::vector<Vertex>>()};
    if (type == "Clique") return Clique{j.at("vertices").get<std::vector<Vertex>>()};
    if (type == "Colouring") return Colouring{j.at("colour").get<std::vector<std::size_t>>()};
    if (type == "DominatingSet") return DominatingSet{j.at("vertices").get<std::vector<Vertex>>()};
    if (type == "HChords")
      return HChords{HamCycle{j.at("order").get<std::vector<Vertex>>()}, pair(j.at("chordOdd")),
                     pair(j.at("chordEven"))};
    throw PreconditionError("unknown certificate type " + type);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace gengraph
