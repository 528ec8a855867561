#include "gengraph/domination.hpp"

#include "gengraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <functional>
#include <numeric>

namespace gengraph {

namespace {

class DominationSearch {
 public:
  DominationSearch(const Graph& g, SearchBudget budget) : g_(g), n_(g.vertex_count()), budget_(budget), dom_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      dom_[v] = g.row(v);
      if (g.self_dominating(v)) dom_[v].set(v);
    }
  }

  bool undominatable() const {
    return std::any_of(dom_.begin(), dom_.end(), [](const Bits& b) { return b.none(); });
  }

  bool solve(std::size_t k) {
    Bits undominated(n_);
    undominated.set();
    Bits allowed = undominated;
    chosen_.clear();
    return recurse(undominated, allowed, k);
  }

  std::vector<Vertex> chosen() const {
    auto s = chosen_;
    std::sort(s.begin(), s.end());
    return s;
  }

  std::uint64_t nodes = 0;
  bool exceeded = false;

 private:
  bool recurse(const Bits& undominated, Bits allowed, std::size_t remaining) {
    if (undominated.none()) return true;
    if (remaining == 0) return false;
    if (++nodes > budget_.maxNodes) {
      exceeded = true;
      return false;
    }
    const std::size_t open = undominated.count();
    cover_.assign(n_, 0);
    covers_.clear();
    for (auto v = allowed.find_first(); v != Bits::npos; v = allowed.find_next(v)) {
      cover_[v] = (dom_[v] & undominated).count();
      covers_.push_back(cover_[v]);
    }
    // The best `remaining` choices together must be able to reach every open vertex.
    const std::size_t take = std::min(remaining, covers_.size());
    std::partial_sort(covers_.begin(), covers_.begin() + static_cast<std::ptrdiff_t>(take), covers_.end(), std::greater<>());
    if (std::accumulate(covers_.begin(), covers_.begin() + static_cast<std::ptrdiff_t>(take), std::size_t{0}) < open)
      return false;

    // Branch on the undominated vertex with fewest allowed dominators.
    std::size_t target = Bits::npos;
    std::size_t fewest = n_ + 1;
    for (auto w = undominated.find_first(); w != Bits::npos; w = undominated.find_next(w)) {
      const std::size_t c = (dom_[w] & allowed).count();
      if (c < fewest) {
        fewest = c;
        target = w;
      }
    }
    if (fewest == 0) return false;

    const Bits options = dom_[target] & allowed;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (auto v = options.find_first(); v != Bits::npos; v = options.find_next(v))
      order.emplace_back(cover_[v], static_cast<Vertex>(v));
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [c, v] : order) {
      allowed.reset(v);
      chosen_.push_back(v);
      Bits next = undominated;
      next -= dom_[v];
      if (recurse(next, allowed, remaining - 1)) return true;
      chosen_.pop_back();
      if (exceeded) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  SearchBudget budget_;
  std::vector<Bits> dom_;  // dom_[v]: vertices dominated by choosing v
  std::vector<Vertex> chosen_;
  std::vector<std::size_t> cover_;
  std::vector<std::size_t> covers_;
};

using Partition = std::vector<std::size_t>;  // class of each element, restricted growth

// All partitions of {0..k-1} into exactly `blocks` classes.
void partitions_into(std::size_t k, std::size_t blocks, Partition& cur, std::size_t used, std::vector<Partition>& out) {
  const std::size_t i = cur.size();
  if (i == k) {
    if (used == blocks) out.push_back(cur);
    return;
  }
  if (blocks - used > k - i) return;
  for (std::size_t c = 0; c <= used && c < blocks; ++c) {
    cur.push_back(c);
    partitions_into(k, blocks, cur, std::max(used, c + 1), out);
    cur.pop_back();
  }
}

// One partition per block-size multiset: consecutive runs, sizes nonincreasing.
void canonical_partitions(std::size_t k, std::size_t blocks, std::size_t maxRun, Partition& cur, std::vector<Partition>& out) {
  const std::size_t left = k - cur.size();
  const std::size_t b = cur.empty() ? 0 : cur.back() + 1;
  if (b == blocks) {
    if (left == 0) out.push_back(cur);
    return;
  }
  const std::size_t rest = blocks - b - 1;
  if (left < rest + 1) return;
  for (std::size_t run = std::min(maxRun, left - rest); run >= 1 && run + rest * run >= left; --run) {
    cur.insert(cur.end(), run, b);
    canonical_partitions(k, blocks, run, cur, out);
    cur.resize(cur.size() - run);
  }
}

using Mask = std::uint64_t;

std::vector<Mask> class_masks(const Partition& p) {
  std::vector<Mask> m(*std::max_element(p.begin(), p.end()) + 1, 0);
  for (std::size_t e = 0; e < p.size(); ++e) m[p[e]] |= Mask{1} << e;
  return m;
}

// Unions of one class per coordinate, inclusion-maximal members only.
std::vector<Mask> maximal_unions(const std::vector<Mask>& unions, const std::vector<Mask>& classes) {
  std::vector<Mask> all;
  for (Mask u : unions)
    for (Mask c : classes) all.push_back(u | c);
  std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Mask> keep;
  for (Mask m : all)
    if (std::none_of(keep.begin(), keep.end(), [m](Mask k) { return (m & ~k) == 0; })) keep.push_back(m);
  return keep;
}

struct PartitionSearch {
  const std::vector<std::vector<Partition>>& options;
  const std::vector<std::size_t>& sizes;  // part size of each coarse coordinate
  std::size_t k;
  std::size_t limit;  // unions must stay below this
  bool needDistinct;
  SearchBudget budget;
  std::uint64_t nodes = 0;
  bool exceeded = false;
  std::vector<std::size_t> pick{};

  bool distinct_rows() const {
    std::set<std::vector<std::size_t>> rows;
    for (std::size_t e = 0; e < k; ++e) {
      std::vector<std::size_t> row;
      for (std::size_t i = 0; i < pick.size(); ++i) row.push_back(options[i][pick[i]][e]);
      rows.insert(std::move(row));
    }
    return rows.size() == k;
  }

  // Lower bound on the final maximum union: each later coordinate adds at
  // least ceil(uncovered / a).
  std::size_t forced(std::size_t i, const std::vector<Mask>& unions) const {
    std::size_t best = 0;
    for (Mask u : unions) {
      auto covered = static_cast<std::size_t>(std::popcount(u));
      for (std::size_t j = i; j < sizes.size(); ++j) covered += (k - covered + sizes[j] - 1) / sizes[j];
      best = std::max(best, covered);
    }
    return best;
  }

  bool run(std::size_t i, const std::vector<Mask>& unions) {
    if (i == options.size()) return !needDistinct || distinct_rows();
    // Coordinates after the first with equal sizes are interchangeable.
    const std::size_t from = i >= 2 && sizes[i] == sizes[i - 1] ? pick[i - 1] : 0;
    for (std::size_t o = from; o < options[i].size(); ++o) {
      if (++nodes > budget.maxNodes) {
        exceeded = true;
        return false;
      }
      auto next = maximal_unions(unions, class_masks(options[i][o]));
      if (forced(i + 1, next) >= limit) continue;
      pick.push_back(o);
      if (run(i + 1, next)) return true;
      pick.pop_back();
      if (exceeded) return false;
    }
    return false;
  }
};

}  // namespace

DominationResult complete_product_td(std::span<const std::size_t> parts, SearchBudget budget) {
  if (parts.empty()) throw PreconditionError("complete_product_td: no parts");
  for (auto a : parts)
    if (a < 2) throw PreconditionError("complete_product_td: parts must be at least 2");
  std::size_t vertices = 1;
  for (auto a : parts) vertices *= a;
  DominationResult r;
  for (std::size_t k = 1; k <= std::min<std::size_t>(vertices, 64); ++k) {
    r.provenLower = k;
    std::size_t discrete = 0;
    std::vector<std::size_t> coarse;  // coordinates with a_i < k
    for (std::size_t c = 0; c < parts.size(); ++c) {
      if (parts[c] >= k) ++discrete;
      else coarse.push_back(c);
    }
    // Each discrete coordinate covers exactly one further element of T.
    if (coarse.empty()) {
      if (discrete < k) {
        r.status = DominationResult::Status::Solved;
        r.gammaT = k;
        for (std::size_t e = 0; e < k; ++e) {
          std::size_t v = 0;
          for (std::size_t c = 0; c < parts.size(); ++c) v = v * parts[c] + e;
          r.set.vertices.push_back(static_cast<Vertex>(v));
        }
        std::sort(r.set.vertices.begin(), r.set.vertices.end());
        break;
      }
      continue;
    }
    std::vector<std::vector<Partition>> options;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      std::vector<Partition> out;
      Partition cur;
      if (i == 0) canonical_partitions(k, parts[coarse[i]], k, cur, out);
      else partitions_into(k, parts[coarse[i]], cur, 0, out);
      options.push_back(std::move(out));
    }
    Partition discretePart(k);
    std::iota(discretePart.begin(), discretePart.end(), std::size_t{0});
    std::vector<std::size_t> sizes;
    for (auto c : coarse) sizes.push_back(parts[c]);
    if (discrete >= k) continue;
    PartitionSearch search{options, sizes, k, k - discrete, discrete == 0, SearchBudget{budget.maxNodes - r.nodes}};
    const bool hit = search.run(0, {Mask{0}});
    r.nodes += search.nodes;
    if (search.exceeded) {
      r.status = DominationResult::Status::BudgetExceeded;
      return r;
    }
    std::optional<std::vector<std::size_t>> found;
    if (hit) found = search.pick;
    if (!found) continue;
    r.status = DominationResult::Status::Solved;
    r.gammaT = k;
    for (std::size_t e = 0; e < k; ++e) {
      std::size_t v = 0;
      for (std::size_t c = 0, i = 0; c < parts.size(); ++c) {
        const bool isCoarse = i < coarse.size() && coarse[i] == c;
        const std::size_t digit = isCoarse ? options[i][(*found)[i]][e] : discretePart[e];
        if (isCoarse) ++i;
        v = v * parts[c] + digit;
      }
      r.set.vertices.push_back(static_cast<Vertex>(v));
    }
    std::sort(r.set.vertices.begin(), r.set.vertices.end());
    break;
  }
  return r;
}

DominationResult total_domination(const Graph& g, SearchBudget budget, std::size_t lowerHint) {
  DominationResult r;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    r.status = DominationResult::Status::Solved;
    return r;
  }
  DominationSearch search(g, budget);
  if (search.undominatable()) return r;
  for (std::size_t k = std::max<std::size_t>(lowerHint, 1); k <= n; ++k) {
    r.provenLower = k;
    if (search.solve(k)) {
      r.status = DominationResult::Status::Solved;
      r.gammaT = k;
      r.set.vertices = search.chosen();
      break;
    }
    if (search.exceeded) {
      r.status = DominationResult::Status::BudgetExceeded;
      break;
    }
  }
  r.nodes = search.nodes;
  return r;
}

TdBounds td_bounds(std::span<const std::size_t> parts) {
  if (parts.empty()) throw PreconditionError("td_bounds: no parts");
  if (!std::is_sorted(parts.begin(), parts.end())) throw PreconditionError("td_bounds: parts must be ascending");
  if (parts.front() < 2) throw PreconditionError("td_bounds: parts must be at least 2");
  TdBounds b;
  const std::size_t s = parts.size();
  std::size_t m = 1;
  for (std::size_t i = s; i-- > 0;) {
    const std::size_t a = parts[i];
    m = (a * m + a - 2) / (a - 1);  // ceil(a m / (a - 1))
  }
  b.lower = m;
  // parts[i] is a_{i+1}; t works when a_i > s - t for every i > t.
  for (b.t = 0; b.t <= s; ++b.t) {
    bool ok = true;
    for (std::size_t i = b.t; i < s && ok; ++i) ok = parts[i] + b.t > s;
    if (ok) break;
  }
  b.upper = (std::size_t{1} << b.t) * (s - b.t + 1);
  return b;
}

std::size_t kappa_product_formula(std::size_t kappaGamma, std::size_t deltaGamma, std::span<const std::size_t> parts) {
  std::vector<std::size_t> t(parts.begin(), parts.end());
  std::sort(t.begin(), t.end());
  const std::size_t u = t.size();
  if (u < 3) throw PreconditionError("product connectivity formula needs at least 3 parts");
  const std::size_t head = std::accumulate(t.begin(), t.end() - 2, std::size_t{0});
  if (head < t[u - 2] || head + t[u - 2] < t[u - 1])
    throw PreconditionError("product connectivity formula: part sizes violate its hypothesis");
  const std::size_t total = head + t[u - 2] + t[u - 1];
  return std::min(kappaGamma * total, deltaGamma * (total - t[u - 1]));
}

}  // namespace gengraph
