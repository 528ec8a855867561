#include "gengraph/graph.hpp"

#include "gengraph/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace gengraph {

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("graphs are loopless");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++degree_[u];
  ++degree_[v];
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u == v || !rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --degree_[u];
  --degree_[v];
  --edges_;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  const auto& r = rows_[v];
  for (auto i = r.find_first(); i != Bits::npos; i = r.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    const auto& r = rows_[u];
    for (auto v = r.find_next(u); v != Bits::npos; v = r.find_next(v))
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  Graph h(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (self_dominating(vs[i])) h.set_self_dominating(static_cast<Vertex>(i));
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return h;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph null_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle graph needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw PreconditionError("complete_multipartite: no parts");
  std::vector<std::size_t> block;
  for (std::size_t b = 0; b < parts.size(); ++b) block.insert(block.end(), parts[b], b);
  Graph g(block.size());
  for (Vertex u = 0; u < block.size(); ++u)
    for (Vertex v = u + 1; v < block.size(); ++v)
      if (block[u] != block[v]) g.add_edge(u, v);
  return g;
}

Graph direct_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.vertex_count();
  Graph g(a.vertex_count() * nb);
  for (Vertex a1 = 0; a1 < a.vertex_count(); ++a1)
    for (Vertex b1 = 0; b1 < nb; ++b1) {
      const auto x = static_cast<Vertex>(a1 * nb + b1);
      if (a.self_dominating(a1) && b.self_dominating(b1)) g.set_self_dominating(x);
      for (Vertex a2 : a.neighbours(a1))
        for (Vertex b2 : b.neighbours(b1)) {
          const auto y = static_cast<Vertex>(a2 * nb + b2);
          if (x < y) g.add_edge(x, y);
        }
    }
  return g;
}

Graph lex_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.vertex_count();
  Graph g(a.vertex_count() * nb);
  for (Vertex a1 = 0; a1 < a.vertex_count(); ++a1)
    for (Vertex b1 = 0; b1 < nb; ++b1) {
      const auto x = static_cast<Vertex>(a1 * nb + b1);
      for (Vertex a2 = a1; a2 < a.vertex_count(); ++a2)
        for (Vertex b2 = 0; b2 < nb; ++b2) {
          const auto y = static_cast<Vertex>(a2 * nb + b2);
          if (y <= x) continue;
          if (a.adjacent(a1, a2) || (a1 == a2 && b.adjacent(b1, b2))) g.add_edge(x, y);
        }
    }
  return g;
}

Graph complete_product(std::span<const std::size_t> sizes) {
  std::size_t n = 1;
  for (auto s : sizes) n *= s;
  const std::size_t k = sizes.size();
  std::vector<std::vector<std::size_t>> digits(n, std::vector<std::size_t>(k));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t c = k; c-- > 0;) {
      digits[x][c] = rest % sizes[c];
      rest /= sizes[c];
    }
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool differ = true;
      for (std::size_t c = 0; c < k && differ; ++c) differ = digits[u][c] != digits[v][c];
      if (differ) g.add_edge(u, v);
    }
  return g;
}

std::vector<std::size_t> components(const Graph& g) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, kNone);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      const auto& r = g.row(u);
      for (auto v = r.find_first(); v != Bits::npos; v = r.find_next(v))
        if (comp[v] == kNone) {
          comp[v] = next;
          stack.push_back(static_cast<Vertex>(v));
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool induced_connected(const Graph& g, const Bits& keep) {
  const auto first = keep.find_first();
  if (first == Bits::npos) return false;
  Bits seen(g.vertex_count());
  seen.set(first);
  std::vector<std::size_t> stack{first};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    Bits fresh = g.row(static_cast<Vertex>(u)) & keep;
    fresh -= seen;
    seen |= fresh;
    for (auto v = fresh.find_first(); v != Bits::npos; v = fresh.find_next(v)) stack.push_back(v);
  }
  return seen == keep;
}

BasicMetrics basic_metrics(const Graph& g) {
  BasicMetrics m;
  const std::size_t n = g.vertex_count();
  if (n == 0) return m;
  std::size_t minDeg = n;
  for (Vertex v = 0; v < n; ++v) minDeg = std::min(minDeg, g.degree(v));
  m.minDegree = minDeg;
  auto comp = components(g);
  m.componentCount = *std::max_element(comp.begin(), comp.end()) + 1;
  m.connected = m.componentCount == 1;
  if (!m.connected) return m;

  std::size_t diam = 0;
  std::vector<std::size_t> dist(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbours(u))
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          diam = std::max(diam, dist[v]);
          queue.push_back(v);
        }
    }
  }
  m.diameter = diam;
  return m;
}

}  // namespace gengraph
