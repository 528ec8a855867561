#include "gengraph/cycles.hpp"

#include <algorithm>

namespace gengraph {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

EulerResult eulerian_circuit(const Graph& g) {
  EulerResult r;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    r.reason = "empty graph";
    return r;
  }
  if (!is_connected(g)) {
    r.reason = "disconnected";
    return r;
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) % 2 != 0) {
      r.reason = "vertex " + std::to_string(v) + " has odd degree " + std::to_string(g.degree(v));
      return r;
    }

  // Incidence lists (neighbour, edge id), neighbours ascending.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].first].emplace_back(edges[e].second, e);
    inc[edges[e].second].emplace_back(edges[e].first, e);
  }
  for (auto& l : inc) std::sort(l.begin(), l.end());

  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{0};
  std::vector<Vertex> walk;
  walk.reserve(edges.size() + 1);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    auto& i = next[u];
    while (i < inc[u].size() && used[inc[u][i].second]) ++i;
    if (i == inc[u].size()) {
      walk.push_back(u);
      stack.pop_back();
    } else {
      used[inc[u][i].second] = true;
      stack.push_back(inc[u][i].first);
    }
  }
  std::reverse(walk.begin(), walk.end());
  r.circuit = EulerCircuit{std::move(walk)};
  return r;
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, SearchBudget budget) : g_(g), n_(g.vertex_count()), budget_(budget) {}

  std::optional<std::vector<Vertex>> run(Vertex start) {
    start_ = start;
    unvisited_ = Bits(n_);
    unvisited_.set();
    unvisited_.reset(start);
    path_.assign(1, start);
    if (extend()) return path_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }

 private:
  bool extend() {
    const Vertex u = path_.back();
    if (path_.size() == n_) return g_.adjacent(u, start_);
    if (++nodes_ > budget_.maxNodes) {
      exceeded_ = true;
      return false;
    }

    // Every unvisited vertex still needs two neighbours among the unvisited
    // vertices and the two path ends. One with exactly two, one of them u,
    // must come next.
    Bits avail = unvisited_;
    avail.set(u);
    avail.set(start_);
    std::optional<Vertex> forced;
    for (auto w = unvisited_.find_first(); w != Bits::npos; w = unvisited_.find_next(w)) {
      const auto c = (g_.row(static_cast<Vertex>(w)) & avail).count();
      if (c < 2) return false;
      if (c == 2 && path_.size() > 1 && g_.adjacent(u, static_cast<Vertex>(w))) {
        if (forced) return false;
        forced = static_cast<Vertex>(w);
      }
    }

    std::vector<std::pair<std::size_t, Vertex>> candidates;
    if (forced) {
      candidates.emplace_back(0, *forced);
    } else {
      const Bits next = g_.row(u) & unvisited_;
      for (auto w = next.find_first(); w != Bits::npos; w = next.find_next(w))
        candidates.emplace_back((g_.row(static_cast<Vertex>(w)) & unvisited_).count(), static_cast<Vertex>(w));
      std::sort(candidates.begin(), candidates.end());
    }
    for (auto [_, w] : candidates) {
      path_.push_back(w);
      unvisited_.reset(w);
      if (extend()) return true;
      unvisited_.set(w);
      path_.pop_back();
      if (exceeded_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  SearchBudget budget_;
  Vertex start_ = 0;
  Bits unvisited_;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

HamiltonResult hamiltonian(const Graph& g, SearchBudget budget) {
  HamiltonResult r;
  const std::size_t n = g.vertex_count();
  if (n < 3) {
    r.reason = "fewer than 3 vertices";
    return r;
  }
  Vertex start = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(start)) start = v;
  r.dirac = 2 * g.degree(start) >= n;
  if (g.degree(start) < 2) {
    r.reason = "vertex " + std::to_string(start) + " has degree below 2";
    return r;
  }
  if (!is_connected(g)) {
    r.reason = "disconnected";
    return r;
  }

  HamiltonSearch search(g, budget);
  auto cycle = search.run(start);
  r.nodes = search.nodes();
  if (cycle) {
    r.outcome = Outcome::Yes;
    r.cycle = HamCycle{std::move(*cycle)};
  } else if (search.exceeded()) {
    r.outcome = Outcome::BudgetExceeded;
    r.reason = "node budget exhausted";
  } else {
    r.reason = "search space exhausted";
  }
  return r;
}

}  // namespace gengraph
