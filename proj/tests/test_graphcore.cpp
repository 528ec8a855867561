#include "gengraph/cliques.hpp"
#include "gengraph/connectivity.hpp"
#include "gengraph/cycles.hpp"
#include "gengraph/domination.hpp"
#include "gengraph/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gengraph;

namespace {

std::vector<Graph> sample_graphs(std::size_t count, std::size_t maxN, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, maxN);
  std::uniform_real_distribution<double> dens(0.2, 0.9);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::random_graph(size(rng), dens(rng), rng));
  out.push_back(complete_graph(6));
  out.push_back(cycle_graph(7));
  const std::size_t parts[] = {2, 3, 3};
  out.push_back(complete_multipartite(parts));
  return out;
}

}  // namespace

TEST_CASE("vertex connectivity matches exhaustive cuts") {
  for (const auto& g : sample_graphs(120, 11, 1)) {
    const auto r = vertex_connectivity(g);
    CHECK(r.kappa == oracle::kappa(g));
    if (r.kappa > 0) CHECK(verify_certificate(g, Certificate{r.cut}));
  }
}

TEST_CASE("edge connectivity matches exhaustive bipartitions") {
  for (const auto& g : sample_graphs(120, 11, 2)) {
    const auto r = edge_connectivity(g);
    CHECK(r.lambda == oracle::lambda(g));
    if (r.lambda > 0) CHECK(verify_certificate(g, Certificate{r.cut}));
  }
}

TEST_CASE("Euler circuits exist exactly for connected even graphs") {
  for (const auto& g : sample_graphs(150, 10, 3)) {
    bool even = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) even = even && g.degree(v) % 2 == 0;
    const auto r = eulerian_circuit(g);
    CHECK(r.circuit.has_value() == (even && is_connected(g)));
    if (r.circuit) {
      CHECK(r.circuit->walk.size() == g.edge_count() + 1);
      CHECK(verify_certificate(g, Certificate{*r.circuit}));
    } else {
      CHECK_FALSE(r.reason.empty());
    }
  }
}

TEST_CASE("Hamiltonian search matches permutations") {
  for (const auto& g : sample_graphs(120, 8, 4)) {
    const auto r = hamiltonian(g);
    REQUIRE(r.outcome != Outcome::BudgetExceeded);
    CHECK((r.outcome == Outcome::Yes) == oracle::hamiltonian(g));
    if (r.cycle) CHECK(is_hamiltonian_cycle(g, r.cycle->order));
  }
  const auto petersen = [] {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
  }();
  CHECK(hamiltonian(petersen).outcome == Outcome::No);
  CHECK(hamiltonian(complete_graph(8), SearchBudget{1}).outcome != Outcome::No);
}

TEST_CASE("clique and chromatic numbers match exhaustive search") {
  for (const auto& g : sample_graphs(100, 10, 5)) {
    const auto c = clique_number(g);
    REQUIRE(c.exact);
    CHECK(c.omega == oracle::omega(g));
    CHECK(is_clique(g, c.clique.vertices));
    const auto col = chromatic_number(g);
    REQUIRE(col.exact);
    CHECK(col.lower == oracle::chi(g));
    CHECK(col.colouring.class_count() == col.upper);
    CHECK(is_proper_colouring(g, col.colouring.colour));
  }
}

TEST_CASE("total domination matches exhaustive subsets") {
  std::mt19937 rng(6);
  for (auto g : sample_graphs(120, 12, 6)) {
    std::bernoulli_distribution mark(0.1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (mark(rng)) g.set_self_dominating(v);
    const auto r = total_domination(g);
    const auto brute = oracle::gamma_t(g);
    if (brute == 0) {
      CHECK(r.status == DominationResult::Status::Undefined);
      continue;
    }
    REQUIRE(r.status == DominationResult::Status::Solved);
    CHECK(r.gammaT == brute);
    CHECK(is_total_dominating(g, r.set.vertices));
  }
}

TEST_CASE("products follow their definitions") {
  std::mt19937 rng(8);
  const auto a = oracle::random_graph(4, 0.6, rng);
  const auto b = oracle::random_graph(5, 0.5, rng);
  const auto d = direct_product(a, b);
  const auto l = lex_product(a, b);
  for (Vertex x = 0; x < 20; ++x)
    for (Vertex y = 0; y < 20; ++y) {
      if (x == y) continue;
      const Vertex a1 = x / 5, b1 = x % 5, a2 = y / 5, b2 = y % 5;
      const bool ea = a1 != a2 && a.adjacent(a1, a2);
      const bool eb = b1 != b2 && b.adjacent(b1, b2);
      CHECK(d.adjacent(x, y) == (ea && eb));
      CHECK(l.adjacent(x, y) == (ea || (a1 == a2 && eb)));
    }
  const std::size_t sizes[] = {2, 3, 4};
  const auto k = complete_product(sizes);
  CHECK(k.vertex_count() == 24);
  for (Vertex v = 0; v < 24; ++v) CHECK(k.degree(v) == 1 * 2 * 3);
}

TEST_CASE("certificates reject tampering and survive JSON") {
  const auto g = cycle_graph(6);
  const HamCycle good{{0, 1, 2, 3, 4, 5}};
  CHECK(verify_certificate(g, Certificate{good}));
  CHECK_FALSE(verify_certificate(g, Certificate{HamCycle{{0, 2, 1, 3, 4, 5}}}));
  CHECK_FALSE(verify_certificate(g, Certificate{HamCycle{{0, 1, 2, 3, 4}}}));
  CHECK_FALSE(verify_certificate(g, Certificate{VertexCut{{0}}}));
  CHECK(verify_certificate(g, Certificate{VertexCut{{0, 3}}}));
  CHECK_FALSE(verify_certificate(g, Certificate{DominatingSet{{0, 1}}}));
  CHECK(verify_certificate(g, Certificate{DominatingSet{{0, 1, 3, 4}}}));
  CHECK_FALSE(verify_certificate(g, Certificate{Colouring{{0, 1, 0, 1, 0, 0}}}));

  const std::vector<Certificate> certs{good, VertexCut{{0, 3}}, EdgeCut{{{0, 1}, {3, 4}}},
                                       Clique{{0, 1}}, Colouring{{0, 1, 0, 1, 0, 1}},
                                       DominatingSet{{0, 1, 3, 4}},
                                       EulerCircuit{{0, 1, 2, 3, 4, 5, 0}},
                                       HChords{good, {1, 3}, {0, 2}}};
  for (const auto& c : certs) {
    const auto back = certificate_from_json(certificate_to_json(c));
    CHECK(certificate_kind(back) == certificate_kind(c));
    CHECK(certificate_to_json(back) == certificate_to_json(c));
  }
  std::vector<std::string> labels{"a", "b", "c", "d", "e", "f"};
  std::vector<std::string> read;
  Graph marked = g;
  marked.set_self_dominating(2);
  CHECK(graph_from_json(graph_to_json(marked, labels), &read) == marked);
  CHECK(read == labels);
}

TEST_CASE("basic metrics") {
  const auto m = basic_metrics(cycle_graph(7));
  CHECK(m.connected);
  CHECK(*m.diameter == 3);
  CHECK(*m.minDegree == 2);
  const auto e = basic_metrics(null_graph(3));
  CHECK(e.componentCount == 3);
  CHECK_FALSE(e.diameter.has_value());
}
