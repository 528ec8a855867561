#include "gengraph/errors.hpp"
#include "gengraph/generating_graph.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/spec.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace gengraph;

namespace {

Group make(const char* s) { return build_group(parse_spec(s)); }

}  // namespace

TEST_CASE("generating graph edges are exactly the generating pairs") {
  for (const char* s : {"C10", "C2^2", "C3^2", "C2^2 x C3", "Heis3", "C2 x C4"}) {
    const auto g = make(s);
    const auto gm = generating_graph(g);
    REQUIRE(gm.graph.vertex_count() == g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
      const Elem a = gm.vertexElements[u];
      CHECK(gm.graph.self_dominating(u) == oracle::generates(g, a, a));
      for (Vertex v = u + 1; v < g.order(); ++v)
        CHECK(gm.graph.adjacent(u, v) == oracle::generates(g, a, gm.vertexElements[v]));
    }
    const auto d = delta_graph(gm);
    for (Vertex v = 0; v < d.graph.vertex_count(); ++v) CHECK(d.graph.degree(v) > 0);
  }
}

TEST_CASE("closed forms match the observed census") {
  struct Expect {
    const char* spec;
    Rational prob;
    std::uint64_t vertices;
    std::uint64_t minDegree;
  };
  for (const auto& e : {Expect{"C2^2 x C9", Rational(1, 3), 27, 12}, Expect{"C12", Rational(2, 3), 12, 4},
                        Expect{"C2^2", Rational(3, 8), 3, 2}, Expect{"Heis3", Rational(16, 27), 24, 18}}) {
    const auto p = degree_profile(make(e.spec));
    CHECK(p.genProbabilityObserved == e.prob);
    CHECK(p.genProbabilityFormula == e.prob);
    CHECK(p.nonisolatedObserved == e.vertices);
    CHECK(p.minDegreeObserved == e.minDegree);
    CHECK(p.minDegreeFormula == Rational(static_cast<std::int64_t>(e.minDegree)));
  }
  // Independent degree tally for C2^2 x C9 by word closure.
  const auto g = make("C2^2 x C9");
  std::map<std::size_t, std::size_t> tally;
  for (Elem a = 0; a < g.order(); ++a) {
    std::size_t d = 0;
    for (Elem b = 0; b < g.order(); ++b)
      if (b != a && oracle::generates(g, a, b)) ++d;
    if (d) ++tally[d];
  }
  const auto p = degree_profile(g);
  std::map<std::size_t, std::size_t> fromProfile;
  for (const auto& c : p.classes)
    if (c.observedDegree) fromProfile[c.observedDegree] += c.observedCount;
  CHECK(tally == fromProfile);
}

TEST_CASE("census needs a nilpotent 2-generated group") {
  CHECK_THROWS(degree_profile(make("C2^3")));
  CHECK_THROWS(degree_profile(make("Ex(1)")));
}

TEST_CASE("lexicographic decomposition over the Frattini quotient") {
  for (const char* s : {"C8", "C12", "C2^2 x C9", "Heis3", "C4 x C3^2", "C36"}) {
    CAPTURE(s);
    CHECK(lex_decomposition(make(s)).equal);
  }
  // Leaving only the Frattini block empty is not enough for cyclic groups.
  CHECK_FALSE(lex_decomposition(make("C12"), true).equal);
  CHECK(lex_decomposition(make("C2^2 x C9"), true).equal);
}

TEST_CASE("Frattini coordinate rule decides generation") {
  for (const char* s : {"C2^2 x C3", "C3^2 x C5", "C2^2 x C3^2"}) {
    const auto g = make(s);
    const auto fc = frattini_coordinates(g);
    const auto& q = fc.quotient.group;
    for (Elem x = 0; x < q.order(); ++x)
      for (Elem y = 0; y < q.order(); ++y) CHECK(frattini_rule_generates(fc, x, y) == oracle::generates(q, x, y));
  }
}

TEST_CASE("cyclic radical is recovered from Delta") {
  CHECK(recover_cyclic_radical(generating_graph(make("C2^2 x C9"))) == 3);
  CHECK(recover_cyclic_radical(generating_graph(make("C4 x C3^2"))) == 2);
  CHECK(recover_cyclic_radical(generating_graph(make("C2^2 x C3^2"))) == 1);
  CHECK(recover_cyclic_radical(generating_graph(make("C5 x C2^2"))) == 5);
}

TEST_CASE("coset bijection carries one generating graph onto another") {
  const auto a = make("C2^2 x C9 x C3");
  const auto b = make("C2^2 x Heis3");
  const auto f = coset_bijection(frattini_coordinates(a), frattini_coordinates(b));
  REQUIRE(f.size() == 108);
  for (Elem x = 0; x < 108; ++x)
    for (Elem y = x; y < 108; ++y) CHECK(is_generating_pair(a, x, y) == is_generating_pair(b, f[x], f[y]));
  CHECK_THROWS_AS(coset_bijection(frattini_coordinates(make("C2^2 x C9")), frattini_coordinates(make("C2^2 x C3^2"))),
                  PreconditionError);
}

TEST_CASE("tuple rules reproduce Delta of the first example group") {
  const auto rule = example_family_graph(1);
  CHECK(rule.graph.vertex_count() == 54);
  CHECK(example_family_vertex_count(1) == 54);
  CHECK(example_family_degree(1) == 24);
  for (Vertex v = 0; v < 54; ++v) CHECK(rule.graph.degree(v) == 24);
  const auto g = example_family_group(1);
  for (Vertex u = 0; u < 54; ++u)
    for (Vertex v = u + 1; v < 54; ++v)
      CHECK(rule.graph.adjacent(u, v) == oracle::generates(g, rule.vertexElements[u], rule.vertexElements[v]));
  CHECK(example_family_vertex_count(2) == 5400);
  CHECK(example_family_degree(2) == 1920);
}
