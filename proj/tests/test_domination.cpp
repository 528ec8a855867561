#include "gengraph/connectivity.hpp"
#include "gengraph/domination.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gengraph;

namespace {

// Ascending tuples of parts in [minPart, 9] with at most maxVertices tuples.
void tuples(std::size_t minPart, std::size_t maxLen, std::size_t maxVertices, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == maxLen) return;
  std::size_t prod = 1;
  for (auto a : cur) prod *= a;
  for (std::size_t a = cur.empty() ? minPart : cur.back(); a <= 9 && prod * a <= maxVertices; ++a) {
    cur.push_back(a);
    tuples(minPart, maxLen, maxVertices, cur, out);
    cur.pop_back();
  }
}

// Parts of size 2 only in tuples of length <= 3.
std::vector<std::vector<std::size_t>> small_tuples(std::size_t maxVertices, std::size_t minPart = 3) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  tuples(minPart, minPart == 2 ? 3 : 4, maxVertices, cur, out);
  return out;
}

}  // namespace

TEST_CASE("partition route agrees with exhaustive subsets on tiny products") {
  for (const auto& parts : small_tuples(18, 2)) {
    CAPTURE(parts);
    const auto k = complete_product(parts);
    const auto r = complete_product_td(parts);
    const auto brute = oracle::gamma_t(k);
    if (brute == 0) {
      CHECK(r.status == DominationResult::Status::Undefined);
      continue;
    }
    REQUIRE(r.status == DominationResult::Status::Solved);
    CHECK(r.gammaT == brute);
    CHECK(is_total_dominating(k, r.set.vertices));
  }
}

TEST_CASE("partition route agrees with graph search") {
  for (const auto& parts : small_tuples(90)) {
    CAPTURE(parts);
    const auto k = complete_product(parts);
    const auto a = complete_product_td(parts);
    const auto b = total_domination(k);
    REQUIRE(a.status == b.status);
    if (a.status != DominationResult::Status::Solved) continue;
    CHECK(a.gammaT == b.gammaT);
    CHECK(is_total_dominating(k, a.set.vertices));
  }
}

TEST_CASE("bounds sandwich the exact value") {
  for (const auto& parts : small_tuples(2000)) {
    CAPTURE(parts);
    const auto b = td_bounds(parts);
    const auto r = complete_product_td(parts, SearchBudget{2'000'000});
    CHECK(b.lower <= b.upper);
    if (r.status != DominationResult::Status::Solved) continue;
    CHECK(b.lower <= r.gammaT);
    CHECK(r.gammaT <= b.upper);
  }
  const std::size_t p346[] = {3, 4, 6};
  CHECK(td_bounds(p346).lower == 5);
  CHECK(td_bounds(p346).upper == 6);
  const std::size_t p444[] = {4, 4, 4};
  CHECK(complete_product_td(p444).gammaT == 4);
  const std::size_t p3468[] = {3, 4, 6, 8};
  CHECK(complete_product_td(p3468).gammaT == 7);
}

TEST_CASE("large first part: the diagonal is optimal") {
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{3, 3}, {4, 4, 4}, {5, 5, 6, 7}}) {
    const auto r = complete_product_td(parts);
    CHECK(r.gammaT == parts.size() + 1);
    CHECK(td_bounds(parts).upper == parts.size() + 1);
  }
}

TEST_CASE("connectivity of products with complete multipartite graphs") {
  struct Case {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
  };
  for (const auto& c : {Case{{2, 2, 2}, {2, 2, 2}}, Case{{1, 1, 1}, {1, 1, 2}}, Case{{1, 2, 2}, {2, 2, 3}},
                        Case{{1, 1, 1, 1}, {1, 1, 1, 2}}, Case{{2, 2, 2}, {1, 1, 1, 1}}}) {
    CAPTURE(c.right);
    const auto a = complete_multipartite(c.left);
    const auto b = complete_multipartite(c.right);
    const auto ka = vertex_connectivity(a).kappa;
    std::size_t da = a.vertex_count();
    for (Vertex v = 0; v < a.vertex_count(); ++v) da = std::min(da, a.degree(v));
    const auto measured = vertex_connectivity(direct_product(a, b));
    CHECK(measured.kappa == kappa_product_formula(ka, da, c.right));
    CHECK(verify_certificate(direct_product(a, b), Certificate{measured.cut}));
  }
  const std::size_t bad[] = {1, 1, 5};
  CHECK_THROWS(kappa_product_formula(2, 2, bad));
}
