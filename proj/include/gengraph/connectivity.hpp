#pragma once

#include "gengraph/certificate.hpp"
#include "gengraph/graph.hpp"

#include <cstddef>

namespace gengraph {

struct VertexConnectivity {
  std::size_t kappa = 0;
  VertexCut cut;  // cut.complete for K_n (kappa = n - 1)
};

struct EdgeConnectivity {
  std::size_t lambda = 0;
  EdgeCut cut;
};

/// Exact kappa. Max-flow on the vertex-split network from a minimum-degree
/// vertex to each non-neighbour, plus flows between nonadjacent pairs of its
/// neighbours. Disconnected input gives 0 with an empty cut.
VertexConnectivity vertex_connectivity(const Graph& g);

/// Exact lambda by unit-capacity flows from vertex 0 to every other vertex.
/// K_1 and disconnected graphs give 0.
EdgeConnectivity edge_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent).
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

}  // namespace gengraph
