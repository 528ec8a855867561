#include "gengraph/certificate.hpp"

#include <algorithm>
#include <set>

namespace gengraph {

std::size_t Colouring::class_count() const {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

namespace {

bool valid_vertices(const Graph& g, std::span<const Vertex> vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v < g.vertex_count(); });
}

bool distinct(std::span<const Vertex> vs) {
  std::vector<Vertex> s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool verify(const Graph& g, const VertexCut& c) {
  const std::size_t n = g.vertex_count();
  if (c.complete) {
    if (!c.vertices.empty() || n == 0) return false;
    return g.edge_count() == n * (n - 1) / 2;
  }
  if (!valid_vertices(g, c.vertices) || !distinct(c.vertices)) return false;
  Bits keep(n);
  keep.set();
  for (Vertex v : c.vertices) keep.reset(v);
  if (keep.count() < 2) return false;
  return !induced_connected(g, keep);
}

bool verify(const Graph& g, const EdgeCut& c) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return c.edges.empty();
  if (n == 0) return false;
  Graph h = g;
  std::set<Edge> seen;
  for (auto [u, v] : c.edges) {
    if (u >= n || v >= n || u >= v || !g.adjacent(u, v) || !seen.insert({u, v}).second) return false;
    h.remove_edge(u, v);
  }
  return !is_connected(h);
}

bool verify(const Graph& g, const EulerCircuit& c) {
  const auto& w = c.walk;
  if (g.vertex_count() == 0) return false;
  if (!is_connected(g)) return false;
  if (g.edge_count() == 0) return w.size() == 1 && w.front() < g.vertex_count();
  if (w.size() != g.edge_count() + 1 || w.front() != w.back() || !valid_vertices(g, w)) return false;
  std::set<Edge> used;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    Vertex u = std::min(w[i], w[i + 1]);
    Vertex v = std::max(w[i], w[i + 1]);
    if (u == v || !g.adjacent(u, v) || !used.insert({u, v}).second) return false;
  }
  return used.size() == g.edge_count();
}

bool verify(const Graph& g, const HamCycle& c) { return is_hamiltonian_cycle(g, c.order); }

bool verify(const Graph& g, const Clique& c) { return is_clique(g, c.vertices); }

bool verify(const Graph& g, const Colouring& c) {
  if (c.colour.size() != g.vertex_count() || !is_proper_colouring(g, c.colour)) return false;
  // Classes must be exactly 0..k-1.
  std::vector<bool> used(c.class_count(), false);
  for (auto k : c.colour) used[k] = true;
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

bool verify(const Graph& g, const DominatingSet& c) { return is_total_dominating(g, c.vertices); }

bool verify(const Graph& g, const HChords& c) {
  const auto& order = c.cycle.order;
  const std::size_t n = order.size();
  if (!is_hamiltonian_cycle(g, order) || n % 2 != 0) return false;
  auto chord_ok = [&](std::pair<std::size_t, std::size_t> ch, std::size_t parity) {
    auto [a, b] = ch;
    if (a >= n || b >= n || a == b) return false;
    if (a % 2 != parity || b % 2 != parity) return false;
    const std::size_t gap = a > b ? a - b : b - a;
    if (gap == 1 || gap == n - 1) return false;  // a cycle edge, not a chord
    return g.adjacent(order[a], order[b]);
  };
  return chord_ok(c.chordOdd, 1) && chord_ok(c.chordEven, 0);
}

}  // namespace

std::string certificate_kind(const Certificate& c) {
  static const char* const names[] = {"VertexCut", "EdgeCut",   "EulerCircuit",  "HamCycle",
                                      "Clique",    "Colouring", "DominatingSet", "HChords"};
  return names[c.index()];
}

bool verify_certificate(const Graph& g, const Certificate& c) {
  return std::visit([&](const auto& x) { return verify(g, x); }, c);
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || order.size() != n || !valid_vertices(g, order) || !distinct(order)) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (!g.adjacent(order[i], order[(i + 1) % n])) return false;
  return true;
}

bool is_total_dominating(const Graph& g, std::span<const Vertex> set) {
  if (!valid_vertices(g, set)) return false;
  const std::size_t n = g.vertex_count();
  Bits covered(n);
  for (Vertex s : set) {
    covered |= g.row(s);
    if (g.self_dominating(s)) covered.set(s);
  }
  return covered.count() == n;
}

bool is_clique(const Graph& g, std::span<const Vertex> set) {
  if (!valid_vertices(g, set) || !distinct(set)) return false;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

bool is_proper_colouring(const Graph& g, std::span<const std::size_t> colour) {
  if (colour.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (colour[u] == colour[v]) return false;
  return true;
}

}  // namespace gengraph
