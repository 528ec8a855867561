#pragma once

#include "gengraph/graph.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace gengraph {

/// Removing `vertices` disconnects the graph. `complete` marks the K_n
/// convention (kappa = n - 1, nothing to remove).
struct VertexCut {
  std::vector<Vertex> vertices;
  bool complete = false;
};

struct EdgeCut {
  std::vector<Edge> edges;
};

/// Closed walk v_0, v_1, ..., v_m = v_0 using every edge exactly once.
struct EulerCircuit {
  std::vector<Vertex> walk;
};

struct HamCycle {
  std::vector<Vertex> order;
};

struct Clique {
  std::vector<Vertex> vertices;
};

/// colour[v] is the class of vertex v; classes are 0..k-1.
struct Colouring {
  std::vector<std::size_t> colour;
  std::size_t class_count() const;
};

struct DominatingSet {
  std::vector<Vertex> vertices;
};

/// Hamiltonian cycle on 2k vertices, positions 0..2k-1, with one chord
/// joining two odd positions and one joining two even positions.
struct HChords {
  HamCycle cycle;
  std::pair<std::size_t, std::size_t> chordOdd;
  std::pair<std::size_t, std::size_t> chordEven;
};

using Certificate =
    std::variant<VertexCut, EdgeCut, EulerCircuit, HamCycle, Clique, Colouring, DominatingSet, HChords>;

std::string certificate_kind(const Certificate& c);

/// Definitional re-check of a certificate against its graph.
bool verify_certificate(const Graph& g, const Certificate& c);

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> order);
bool is_total_dominating(const Graph& g, std::span<const Vertex> set);
bool is_clique(const Graph& g, std::span<const Vertex> set);
bool is_proper_colouring(const Graph& g, std::span<const std::size_t> colour);

}  // namespace gengraph
