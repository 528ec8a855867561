#include "gengraph/connectivity.hpp"

#include "gengraph/errors.hpp"

#include <algorithm>
#include <limits>

namespace gengraph {

namespace {

/// Dinic max-flow on a fixed arc set; capacities are restored between runs.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_arc(std::size_t u, std::size_t v, int cap, int reverseCap = 0) {
    arcs_.push_back({static_cast<int>(v), cap, head_[u]});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({static_cast<int>(u), reverseCap, head_[v]});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  void freeze() {
    initial_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) initial_[i] = arcs_[i].cap;
  }

  void reset() {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = initial_[i];
  }

  /// Flow value, stopping early once `limit` is reached.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), iter_.begin());
      while (flow < limit) {
        int f = dfs(s, t, limit - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  std::vector<bool> residual_reach(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int pushed) {
    if (u == t) return pushed;
    for (int& a = iter_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      int f = dfs(arc.to, t, std::min(pushed, arc.cap));
      if (f > 0) {
        arc.cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> initial_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Vertex v splits into in(v) = 2v and out(v) = 2v + 1.
FlowNetwork split_network(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const int big = static_cast<int>(n) + 1;
  FlowNetwork net(2 * n);
  for (std::size_t v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, big);
    net.add_arc(2 * v + 1, 2 * u, big);
  }
  net.freeze();
  return net;
}

std::size_t common_neighbours(const Graph& g, Vertex a, Vertex b) { return (g.row(a) & g.row(b)).count(); }

}  // namespace

VertexConnectivity vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionError("vertex connectivity of the empty graph");
  VertexConnectivity result;
  if (g.edge_count() == n * (n - 1) / 2) {
    result.kappa = n - 1;
    result.cut.complete = true;
    return result;
  }
  if (!is_connected(g)) return result;

  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  // Removing N(v) isolates v from the rest whenever v is not universal.
  std::size_t best = n - 1;
  if (g.degree(v) < n - 1) {
    best = g.degree(v);
    result.cut.vertices = g.neighbours(v);
  }

  FlowNetwork net = split_network(g);
  auto try_pair = [&](Vertex s, Vertex t) {
    // Common neighbours alone give that many disjoint paths.
    if (common_neighbours(g, s, t) >= best) return;
    net.reset();
    const int f = net.max_flow(static_cast<int>(2 * s + 1), static_cast<int>(2 * t), static_cast<int>(best));
    if (static_cast<std::size_t>(f) >= best) return;
    best = static_cast<std::size_t>(f);
    auto reach = net.residual_reach(static_cast<int>(2 * s + 1));
    result.cut.vertices.clear();
    for (Vertex u = 0; u < n; ++u)
      if (reach[2 * u] && !reach[2 * u + 1]) result.cut.vertices.push_back(u);
  };

  for (Vertex w = 0; w < n; ++w)
    if (w != v && !g.adjacent(v, w)) try_pair(v, w);
  const auto nbrs = g.neighbours(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) try_pair(nbrs[i], nbrs[j]);

  result.kappa = best;
  return result;
}

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s == t || g.adjacent(s, t)) throw PreconditionError("local connectivity needs distinct nonadjacent vertices");
  FlowNetwork net = split_network(g);
  return static_cast<std::size_t>(
      net.max_flow(static_cast<int>(2 * s + 1), static_cast<int>(2 * t), std::numeric_limits<int>::max()));
}

EdgeConnectivity edge_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionError("edge connectivity of the empty graph");
  EdgeConnectivity result;
  if (n == 1 || !is_connected(g)) return result;

  FlowNetwork net(n);
  for (auto [u, v] : g.edges()) net.add_arc(u, v, 1, 1);
  net.freeze();

  Vertex minV = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(minV)) minV = u;
  std::size_t best = g.degree(minV);
  auto star = [&](Vertex c) {
    std::vector<Edge> cut;
    for (Vertex w : g.neighbours(c)) cut.emplace_back(std::min(c, w), std::max(c, w));
    std::sort(cut.begin(), cut.end());
    return cut;
  };
  result.cut.edges = star(minV);

  const Vertex s = 0;
  for (Vertex t = 1; t < n; ++t) {
    if (common_neighbours(g, s, t) + (g.adjacent(s, t) ? 1 : 0) >= best) continue;
    net.reset();
    const int f = net.max_flow(s, static_cast<int>(t), static_cast<int>(best));
    if (static_cast<std::size_t>(f) >= best) continue;
    best = static_cast<std::size_t>(f);
    auto reach = net.residual_reach(s);
    result.cut.edges.clear();
    for (auto [a, b] : g.edges())
      if (reach[a] != reach[b]) result.cut.edges.emplace_back(a, b);
  }
  result.lambda = best;
  return result;
}

}  // namespace gengraph
