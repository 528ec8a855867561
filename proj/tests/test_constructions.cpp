#include "gengraph/cliques.hpp"
#include "gengraph/connectivity.hpp"
#include "gengraph/constructions.hpp"
#include "gengraph/spec.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gengraph;

namespace {

Group make(const char* s) { return build_group(parse_spec(s)); }

}  // namespace

TEST_CASE("powers of a generator form a Hamiltonian cycle of Delta(C_n)") {
  for (std::size_t n = 3; n <= 36; ++n) {
    const auto g = cyclic_group(n);
    const auto d = delta_graph(g);
    const auto cycle = cyclic_hamiltonian(g);
    CHECK(is_hamiltonian_cycle(d.graph, to_vertices(d, cycle, n)));
  }
}

TEST_CASE("p-group paths with chords") {
  for (const char* s : {"C3^2", "C5^2", "C7^2", "Heis3"}) {
    CAPTURE(s);
    const auto g = make(s);
    const auto d = delta_graph(g);
    const auto pc = pgroup_hamiltonian(g);
    CHECK(pc.constructed);
    CHECK(is_hamiltonian_cycle(d.graph, to_vertices(d, pc.cycle, g.order())));
    REQUIRE(pc.witness.has_value());
    const auto& w = *pc.witness;
    CHECK(w.chordOdd.first % 2 == 1);
    CHECK(w.chordOdd.second % 2 == 1);
    CHECK(w.chordEven.first % 2 == 0);
    CHECK(w.chordEven.second % 2 == 0);
    const HChords h{HamCycle{to_vertices(d, w.cycle, g.order())}, w.chordOdd, w.chordEven};
    CHECK(verify_certificate(d.graph, Certificate{h}));
  }
  const auto two = make("C2^2");
  const auto d = delta_graph(two);
  CHECK(is_hamiltonian_cycle(d.graph, to_vertices(d, pgroup_hamiltonian(two).cycle, 4)));
}

TEST_CASE("C2 times an odd p-group") {
  for (const char* s : {"C3^2", "Heis3", "C9", "C5"}) {
    CAPTURE(s);
    const auto pc = c2_times_p_hamiltonian(make(s));
    const auto d = delta_graph(pc.group);
    CHECK(is_hamiltonian_cycle(d.graph, to_vertices(d, pc.cycle, pc.group.order())));
  }
}

TEST_CASE("nilpotent Hamiltonian cycles") {
  for (const char* s : {"C2^2 x C3", "C12", "C2^2 x C9", "C8", "C2 x Heis3"}) {
    CAPTURE(s);
    const auto g = make(s);
    const auto d = delta_graph(g);
    const auto nc = nilpotent_hamiltonian(g);
    REQUIRE(nc.outcome == Outcome::Yes);
    CHECK(is_hamiltonian_cycle(d.graph, to_vertices(d, nc.cycle, g.order())));
  }
}

TEST_CASE("explicit clique and colouring of Gamma(C_n)") {
  for (std::size_t n = 2; n <= 24; ++n) {
    const auto cc = cyclic_clique_colouring(n);
    const auto expected = oracle::totient(n) + oracle::distinct_primes(n);
    CHECK(cc.clique.size() == expected);
    CHECK(cc.classes == expected);
    // Element k is g^k; Gamma(C_n) in this numbering is k ~ l iff gcd(k, l, n) = 1.
    Graph gamma(n);
    for (Vertex k = 0; k < n; ++k)
      for (Vertex l = k + 1; l < n; ++l)
        if (std::gcd(std::gcd<std::size_t>(k, l), n) == 1) gamma.add_edge(k, l);
    std::vector<Vertex> clique(cc.clique.begin(), cc.clique.end());
    CHECK(is_clique(gamma, clique));
    CHECK(is_proper_colouring(gamma, cc.colour));
    if (n <= 12) CHECK(oracle::omega(gamma) == expected);
  }
}

TEST_CASE("diagonal dominates the complete product") {
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{3, 3}, {3, 4}, {4, 4, 4}, {4, 5, 6}}) {
    const auto k = complete_product(parts);
    const auto d = product_dominating_set(parts);
    CHECK(d.vertices.size() == parts.size() + 1);
    CHECK(is_total_dominating(k, d.vertices));
  }
}

TEST_CASE("total domination of Delta through the product reduction") {
  struct Case {
    const char* spec;
    std::size_t gammaT;
  };
  for (const auto& c : {Case{"C9", 1}, Case{"C2^2", 2}, Case{"C2^2 x C3^2", 3}, Case{"C2^2 x C9", 2},
                        Case{"Heis3", 2}, Case{"C3^2 x C5", 2}}) {
    CAPTURE(c.spec);
    const auto g = make(c.spec);
    const auto td = nilpotent_td(g);
    REQUIRE(td.status == DominationResult::Status::Solved);
    CHECK(td.gammaT == c.gammaT);
    const auto d = delta_graph(g);
    CHECK(is_total_dominating(d.graph, to_vertices(d, td.set, g.order())));
    CHECK(total_domination(d.graph).gammaT == c.gammaT);
  }
}
