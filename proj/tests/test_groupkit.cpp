#include "gengraph/errors.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/spec.hpp"
#include "gengraph/structure.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace gengraph;

TEST_CASE("totient and prime counts match gcd counting") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto tp = totient_profile(n);
    CHECK(tp.phi == oracle::totient(n));
    CHECK(tp.pi == oracle::distinct_primes(n));
    std::uint64_t back = 1;
    for (const auto& [p, a] : tp.factorization) {
      CHECK(is_prime(p));
      back *= ipow(p, a);
    }
    CHECK(back == n);
  }
  CHECK(odd_prime(1) == 3);
  CHECK(odd_prime(4) == 11);
  CHECK(radical(72) == 6);
}

TEST_CASE("spec parsing") {
  CHECK(to_string(parse_spec("C2^2 x C9")) == "C2^2 x C9");
  CHECK(to_string(parse_spec("  C4×C3^2 ")) == "C4 x C3^2");
  CHECK(to_string(parse_spec("Heis3 x Ex(1)")) == "Heis3 x Ex(1)");
  CHECK(spec_order(parse_spec("C2^2 x C9 x Heis5")) == 4 * 9 * 125);
  CHECK(spec_order(parse_spec("Ex(2)")) == 13500);
  for (const char* bad : {"", "C", "D4", "C0", "C2^", "C2 x", "Heis4", "Ex(0)", "C2 y C3"})
    CHECK_THROWS_AS(parse_spec(bad), SpecError);
}

TEST_CASE("built groups obey the group axioms") {
  for (const char* s : {"C6", "C2^2 x C3", "Heis3", "C2 x C4", "Ex(1)"}) {
    const auto g = build_group(parse_spec(s));
    const auto n = g.order();
    for (Elem a = 0; a < n; ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, g.inverse(a)) == 0);
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (int t = 0; t < 500; ++t) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
  CHECK_THROWS_AS(build_group(parse_spec("C500")), GroupError);
  CHECK(build_group(parse_spec("C500"), BuildOptions{600}).order() == 500);
}

TEST_CASE("Cayley tables round-trip and the loader insists on identity 0") {
  const auto g = build_group(parse_spec("Heis3"));
  std::stringstream buf;
  write_cayley(buf, g);
  const auto h = read_cayley(buf);
  REQUIRE(h.order() == 27);
  CHECK(std::equal(g.table().begin(), g.table().end(), h.table().begin()));

  // C2 with the identity stored as element 1.
  std::vector<Elem> swapped{1, 0, 0, 1};
  CHECK_THROWS_AS(Group::from_table(swapped), GroupError);
  std::vector<Elem> notAssociative{0, 1, 2, 1, 0, 0, 2, 2, 1};
  CHECK_THROWS_AS(Group::from_table(notAssociative), GroupError);
}

TEST_CASE("two-generation agrees with word closure") {
  for (const char* s : {"C12", "C2^2", "C2^3", "C3^2 x C2", "Heis3", "C2^2 x C4"}) {
    const auto g = build_group(parse_spec(s));
    bool any = false;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = a; b < g.order(); ++b) {
        const bool gen = oracle::generates(g, a, b);
        CHECK(is_generating_pair(g, a, b) == gen);
        any = any || gen;
      }
    CHECK(is_two_generated(g) == any);
  }
}

TEST_CASE("Frattini subgroup: lattice and nilpotent formula agree") {
  for (const char* s : {"C8", "C12", "C2^2 x C9", "Heis3", "C4 x C3^2", "C2 x Heis3"}) {
    const auto g = build_group(parse_spec(s));
    const auto lat = frattini(g, FrattiniMethod::Lattice);
    CHECK(lat == frattini(g, FrattiniMethod::NilpotentFormula));
    CHECK(lat.size() == nilpotent_structure(g).frattini_order());
  }
  const auto heis = build_group(parse_spec("Heis3"));
  CHECK(frattini(heis, FrattiniMethod::Lattice).size() == 3);
}

TEST_CASE("nilpotent structure matches the symbolic reading of the spec") {
  for (const char* s : {"C36", "C2^2 x C9", "C4 x C3^2", "C2^2 x Heis3", "C2^2 x C9 x C3", "C5 x C2^2"}) {
    const auto spec = parse_spec(s);
    const auto g = build_group(spec);
    REQUIRE(is_nilpotent(g));
    const auto ns = nilpotent_structure(g);
    const auto sym = symbolic_structure(spec);
    REQUIRE(sym.has_value());
    CHECK(ns.cyclicSylow == sym->cyclicSylow);
    CHECK(ns.noncyclicSylow == sym->noncyclicSylow);
    CHECK(ns.order() == g.order());
  }
  const auto ex = build_group(parse_spec("Ex(1)"));
  CHECK_FALSE(is_nilpotent(ex));
  CHECK(is_two_generated(ex));
  CHECK_THROWS_AS(nilpotent_structure(ex), NotNilpotent);
}

TEST_CASE("quotient by the Frattini subgroup") {
  const auto g = build_group(parse_spec("C2^2 x C9"));
  const auto q = quotient_mod_frattini(g);
  CHECK(q.group.order() == 12);
  CHECK(q.kernel.size() == 3);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) CHECK(q.cosetOf[g.mul(a, b)] == q.group.mul(q.cosetOf[a], q.cosetOf[b]));
  CHECK(abelian_invariants(q.group) == std::vector<std::uint64_t>{2, 2, 3});
}
