#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gengraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second
using Bits = boost::dynamic_bitset<>;

/// Undirected loopless graph stored as dense adjacency rows.
///
/// Vertices may carry a self-dominating mark: for total domination a marked
/// vertex counts as its own neighbour. Marks never create edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bits(n)), degree_(n, 0), selfDominating_(n) {}

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return rows_.empty(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  const Bits& row(Vertex v) const { return rows_[v]; }
  std::vector<Vertex> neighbours(Vertex v) const;
  std::vector<Edge> edges() const;  // lexicographically sorted

  bool self_dominating(Vertex v) const { return selfDominating_.test(v); }
  void set_self_dominating(Vertex v, bool on = true) { selfDominating_.set(v, on); }
  const Bits& self_dominating_marks() const { return selfDominating_; }

  /// Induced subgraph; vertex i of the result is vs[i]. Marks are kept.
  Graph induced(std::span<const Vertex> vs) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_ && a.selfDominating_ == b.selfDominating_;
  }

 private:
  std::vector<Bits> rows_;
  std::vector<std::size_t> degree_;
  Bits selfDominating_;
  std::size_t edges_ = 0;
};

Graph complete_graph(std::size_t n);
Graph null_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Blocks of the given sizes; edges exactly between distinct blocks.
Graph complete_multipartite(std::span<const std::size_t> parts);

/// Direct (tensor) product. Vertex (a, b) has index a * |V(B)| + b; it is
/// marked self-dominating when both coordinates are.
Graph direct_product(const Graph& a, const Graph& b);

/// Lexicographic product a[b], same vertex numbering as direct_product.
Graph lex_product(const Graph& a, const Graph& b);

/// K_{a_1} x ... x K_{a_s}: tuples adjacent iff they differ in every
/// coordinate. Mixed-radix numbering, first coordinate most significant.
Graph complete_product(std::span<const std::size_t> sizes);

struct BasicMetrics {
  std::optional<std::size_t> minDegree;  // absent for the empty graph
  bool connected = false;                // false for the empty graph
  std::size_t componentCount = 0;
  std::optional<std::size_t> diameter;   // absent when disconnected or empty
};

BasicMetrics basic_metrics(const Graph& g);

/// Component id per vertex, ids numbered in order of least vertex.
std::vector<std::size_t> components(const Graph& g);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced on the vertices with `keep` set.
bool induced_connected(const Graph& g, const Bits& keep);

}  // namespace gengraph
