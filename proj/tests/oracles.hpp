#pragma once

// Brute-force references, deliberately naive and sharing no code with the library.

#include "gengraph/graph.hpp"
#include "gengraph/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using gengraph::Elem;
using gengraph::Graph;
using gengraph::Vertex;

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

inline unsigned distinct_primes(std::uint64_t n) {
  unsigned c = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime && n % p == 0) ++c;
  }
  return c;
}

// Words in a and b, grown until no new product appears.
inline std::size_t span_size(const gengraph::Group& g, Elem a, Elem b) {
  std::set<Elem> seen{0, a, b};
  std::vector<Elem> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem y : {a, b}) {
        Elem z = g.mul(x, y);
        if (seen.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline bool generates(const gengraph::Group& g, Elem a, Elem b) { return span_size(g, a, b) == g.order(); }

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline bool connected_without(const std::vector<std::vector<bool>>& a, std::uint64_t removed) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n);
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v)
    if (!(removed >> v & 1)) {
      start = v;
      break;
    }
  if (start == n) return false;
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (a[u][v] && !seen[v] && !(removed >> v & 1)) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!(removed >> v & 1) && !seen[v]) return false;
  return true;
}

// Least number of vertices whose removal disconnects; n-1 for complete graphs.
inline std::size_t kappa(const Graph& g) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  if (!connected_without(a, 0)) return 0;
  std::size_t best = n - 1;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    if (k >= best || k > n - 2) continue;
    if (!connected_without(a, m)) best = k;
  }
  return best;
}

// Minimum over vertex bipartitions of the crossing edges.
inline std::size_t lambda(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0;
  const auto edges = g.edges();
  std::size_t best = edges.size();
  for (std::uint64_t m = 1; m < (1ULL << (n - 1)); ++m) {
    std::size_t cross = 0;
    for (const auto& [u, v] : edges) cross += ((m >> u) & 1) != ((m >> v) & 1);
    best = std::min(best, cross);
  }
  return best;
}

inline bool dominates(const Graph& g, std::uint64_t set) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool hit = (set >> v & 1) && g.self_dominating(v);
    for (Vertex w = 0; w < g.vertex_count() && !hit; ++w) hit = (set >> w & 1) && g.adjacent(v, w);
    if (!hit) return false;
  }
  return true;
}

// 0 when no total dominating set exists.
inline std::size_t gamma_t(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    if (best != 0 && k >= best) continue;
    if (dominates(g, m)) best = k;
  }
  return best;
}

inline std::size_t omega(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n ? 1 : 0;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    if (k <= best) continue;
    bool clique = true;
    for (Vertex u = 0; u < n && clique; ++u)
      for (Vertex v = u + 1; v < n && clique; ++v)
        if ((m >> u & 1) && (m >> v & 1) && !g.adjacent(u, v)) clique = false;
    if (clique) best = k;
  }
  return best;
}

inline bool colourable(const Graph& g, std::size_t k, std::vector<std::size_t>& c, Vertex v) {
  if (v == g.vertex_count()) return true;
  for (std::size_t col = 0; col < k; ++col) {
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && c[u] == col);
    if (!ok) continue;
    c[v] = col;
    if (colourable(g, k, c, v + 1)) return true;
  }
  return false;
}

inline std::size_t chi(const Graph& g) {
  std::vector<std::size_t> c(g.vertex_count());
  for (std::size_t k = 1;; ++k)
    if (colourable(g, k, c, 0)) return g.vertex_count() ? k : 0;
}

inline bool hamiltonian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return false;
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
