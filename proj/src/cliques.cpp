#include "gengraph/cliques.hpp"

#include <algorithm>

namespace gengraph {

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, SearchBudget budget) : g_(g), budget_(budget) {}

  void run() {
    Bits all(g_.vertex_count());
    all.set();
    expand(all);
  }

  std::vector<Vertex> best;
  std::uint64_t nodes = 0;
  bool exceeded = false;

 private:
  // Greedy colouring of P in index order; vertices listed by ascending colour.
  void colour_sort(const Bits& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    Bits rest = p;
    std::size_t k = 0;
    while (rest.any()) {
      ++k;
      Bits q = rest;
      for (auto v = q.find_first(); v != Bits::npos; v = q.find_first()) {
        rest.reset(v);
        q.reset(v);
        q -= g_.row(static_cast<Vertex>(v));
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(k);
      }
    }
  }

  void expand(Bits p) {
    if (++nodes > budget_.maxNodes) {
      exceeded = true;
      return;
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      Bits next = p & g_.row(v);
      if (next.none()) {
        if (current_.size() > best.size()) best = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (exceeded) return;
      p.reset(v);
    }
  }

  const Graph& g_;
  SearchBudget budget_;
  std::vector<Vertex> current_;
};

class ColourSearch {
 public:
  ColourSearch(const Graph& g, SearchBudget budget)
      : g_(g), n_(g.vertex_count()), budget_(budget), colour_(n_, kNone), count_(n_, std::vector<std::uint32_t>(n_ + 1, 0)),
        saturation_(n_, 0) {}

  void precolour(std::span<const Vertex> clique) {
    for (std::size_t c = 0; c < clique.size(); ++c) assign(clique[c], c);
    used_ = clique.size();
  }

  /// DSATUR without backtracking; returns the colouring reached.
  std::vector<std::size_t> greedy() {
    auto saved = colour_;
    auto savedCount = count_;
    auto savedSat = saturation_;
    const auto savedUsed = used_;
    for (;;) {
      const auto v = pick();
      if (v == kNoVertex) break;
      std::size_t c = 0;
      while (c < used_ && count_[v][c] > 0) ++c;
      assign(v, c);
      used_ = std::max(used_, c + 1);
    }
    std::vector<std::size_t> result(colour_.begin(), colour_.end());
    colour_ = std::move(saved);
    count_ = std::move(savedCount);
    saturation_ = std::move(savedSat);
    used_ = savedUsed;
    return result;
  }

  void search(std::size_t lowerBound) {
    lower_ = lowerBound;
    recurse();
  }

  std::vector<std::size_t> best;
  std::size_t bestCount = 0;
  std::uint64_t nodes = 0;
  bool exceeded = false;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

  void assign(Vertex v, std::size_t c) {
    colour_[v] = c;
    const auto& r = g_.row(v);
    for (auto w = r.find_first(); w != Bits::npos; w = r.find_next(w))
      if (count_[w][c]++ == 0) ++saturation_[w];
  }

  void unassign(Vertex v) {
    const std::size_t c = colour_[v];
    colour_[v] = kNone;
    const auto& r = g_.row(v);
    for (auto w = r.find_first(); w != Bits::npos; w = r.find_next(w))
      if (--count_[w][c] == 0) --saturation_[w];
  }

  // Uncoloured vertex of maximum saturation, then maximum degree, then least index.
  Vertex pick() const {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] != kNone) continue;
      if (best == kNoVertex || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  void recurse() {
    if (bestCount <= lower_) return;
    if (++nodes > budget_.maxNodes) {
      exceeded = true;
      return;
    }
    const Vertex v = pick();
    if (v == kNoVertex) {
      best.assign(colour_.begin(), colour_.end());
      bestCount = used_;
      return;
    }
    const std::size_t limit = std::min(used_ + 1, bestCount - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (count_[v][c] > 0) continue;
      const std::size_t savedUsed = used_;
      assign(v, c);
      used_ = std::max(used_, c + 1);
      recurse();
      unassign(v);
      used_ = savedUsed;
      if (exceeded || bestCount <= lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  SearchBudget budget_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<std::uint32_t>> count_;  // count_[v][c]: neighbours of v with colour c
  std::vector<std::size_t> saturation_;
  std::size_t used_ = 0;
  std::size_t lower_ = 0;
};

}  // namespace

CliqueResult clique_number(const Graph& g, SearchBudget budget) {
  CliqueResult r;
  if (g.vertex_count() == 0) {
    r.exact = true;
    return r;
  }
  CliqueSearch s(g, budget);
  s.run();
  std::sort(s.best.begin(), s.best.end());
  r.exact = !s.exceeded;
  r.omega = s.best.size();
  r.clique.vertices = std::move(s.best);
  r.nodes = s.nodes;
  return r;
}

ColouringResult chromatic_number(const Graph& g, SearchBudget budget) {
  ColouringResult r;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    r.exact = true;
    return r;
  }
  const auto cl = clique_number(g, budget);
  r.nodes = cl.nodes;
  ColourSearch s(g, budget);
  s.precolour(cl.clique.vertices);
  auto colours = s.greedy();
  r.colouring.colour = colours;
  r.upper = r.colouring.class_count();
  r.lower = cl.omega;
  if (r.upper > r.lower) {
    s.best = colours;
    s.bestCount = r.upper;
    s.search(r.lower);
    r.nodes += s.nodes;
    r.colouring.colour = s.best;
    r.upper = s.bestCount;
    if (!s.exceeded) r.lower = r.upper;
  }
  r.exact = r.lower == r.upper;
  return r;
}

}  // namespace gengraph
