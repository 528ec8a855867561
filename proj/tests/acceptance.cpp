#include "gengraph/cliques.hpp"
#include "gengraph/connectivity.hpp"
#include "gengraph/constructions.hpp"
#include "gengraph/cycles.hpp"
#include "gengraph/domination.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/generating_graph.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/spec.hpp"
#include "gengraph/verifier.hpp"
#include "oracles.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

using namespace gengraph;

namespace {

struct Tally {
  bool pass = true;
  std::size_t cases = 0;
  std::string failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
};

struct Nilpotent {
  std::string name;
  Group group;
  NilpotentStructure structure;
};

const std::vector<Nilpotent>& catalog_nilpotent() {
  static const auto groups = [] {
    std::vector<Nilpotent> out;
    for (const auto& e : default_catalog()) {
      if (e.formulaOnly) continue;
      auto g = build_group(parse_spec(e.spec));
      if (g.order() < 2 || !is_nilpotent(g) || !is_two_generated(g)) continue;
      auto ns = nilpotent_structure(g);
      out.push_back({e.spec, std::move(g), std::move(ns)});
    }
    return out;
  }();
  return groups;
}

Group make(const std::string& s) { return build_group(parse_spec(s)); }

std::size_t min_degree(const Graph& g) {
  std::size_t d = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

Elem least_generator(const Group& g) {
  for (Elem e = 0; e < g.order(); ++e)
    if (g.element_order(e) == g.order()) return e;
  throw PreconditionError("not cyclic");
}

std::uint64_t as_int(const Rational& r) { return static_cast<std::uint64_t>(r.numerator() / r.denominator()); }

Tally maximal_connectivity() {
  Tally o;
  for (const auto& n : catalog_nilpotent()) {
    const auto d = delta_graph(n.group);
    if (d.graph.vertex_count() > 150) continue;
    const auto k = vertex_connectivity(d.graph);
    const auto delta = min_degree(d.graph);
    const auto formula = formula_min_degree(n.structure);
    o.expect(k.kappa == delta && Rational(static_cast<std::int64_t>(delta)) == formula &&
                 (k.cut.complete || verify_certificate(d.graph, Certificate{k.cut})),
             n.name + ": kappa " + std::to_string(k.kappa) + ", delta " + std::to_string(delta));
  }
  return o;
}

Tally special_connectivity() {
  Tally o;
  auto kappa_of = [](const std::string& s) { return vertex_connectivity(delta_graph(make(s)).graph).kappa; };
  for (std::uint64_t n = 2; n <= 36; ++n)
    o.expect(kappa_of("C" + std::to_string(n)) == oracle::totient(n), "C" + std::to_string(n));
  for (std::uint64_t p : {2, 3, 5})
    o.expect(kappa_of("C" + std::to_string(p) + "^2") == p * p - p, "C" + std::to_string(p) + "^2");
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 2}, {2, 3}, {7, 3}}) {
    const auto s = "C" + std::to_string(n) + " x C" + std::to_string(p) + "^2";
    o.expect(kappa_of(s) == oracle::totient(n * p * p), s);
  }
  return o;
}

Tally frattini_scaling() {
  Tally o;
  for (const char* s : {"C8", "C12", "C4 x C3^2", "Heis3", "C2^2 x C9"}) {
    const auto g = make(s);
    const auto q = quotient_mod_frattini(g);
    const auto phi = q.kernel.size();
    const auto gamma = generating_graph(g);
    const auto gammaQ = generating_graph(q.group);
    const auto d = delta_graph(gamma);
    const auto dq = delta_graph(gammaQ);
    const auto kg = vertex_connectivity(d.graph).kappa;
    const auto kq = vertex_connectivity(dq.graph).kappa;
    o.expect(kg == kq * phi, std::string(s) + ": kappa scaling");
    if (g.is_cyclic()) {
      o.expect(min_degree(d.graph) == min_degree(dq.graph) * phi, std::string(s) + ": minimum degree scaling");
      continue;
    }
    const auto vq = gammaQ.vertex_of(q.group.order());
    for (Vertex v = 0; v < gamma.graph.vertex_count(); ++v) {
      const Elem coset = q.cosetOf[gamma.vertexElements[v]];
      o.expect(gamma.graph.degree(v) == gammaQ.graph.degree(static_cast<Vertex>(vq[coset])) * phi,
               std::string(s) + ": degree of " + gamma.labels[v]);
    }
  }
  return o;
}

Tally eulerian() {
  Tally o;
  for (const auto& n : catalog_nilpotent()) {
    const auto d = delta_graph(n.group);
    const bool predicted = !(n.group.is_cyclic() && n.group.order() % 2 == 0);
    const auto r = eulerian_circuit(d.graph);
    o.expect(r.circuit.has_value() == predicted, n.name);
    if (r.circuit) o.expect(verify_certificate(d.graph, Certificate{*r.circuit}), n.name + ": circuit");
  }
  return o;
}

Tally hamiltonicity() {
  Tally o;
  auto check = [&](const std::string& name, const Group& g, const std::vector<Elem>& cycle) {
    const auto d = delta_graph(g);
    o.expect(is_hamiltonian_cycle(d.graph, to_vertices(d, cycle, g.order())), name);
  };
  for (std::size_t n = 3; n <= 36; ++n) {
    const auto g = cyclic_group(n);
    check("C" + std::to_string(n), g, cyclic_hamiltonian(g));
  }
  for (const char* s : {"C2^2", "C3^2", "C5^2", "C7^2", "Heis3"}) {
    const auto g = make(s);
    check(s, g, pgroup_hamiltonian(g).cycle);
  }
  check("C8", make("C8"), cyclic_hamiltonian(make("C8")));
  for (const char* p : {"C3^2", "Heis3"}) {
    const auto pc = c2_times_p_hamiltonian(make(p));
    check(std::string("C2 x ") + p, pc.group, pc.cycle);
  }
  for (const char* s : {"C2^2 x C3", "C2^2 x C3^2", "C12", "C2^2 x C9"}) {
    const auto d = delta_graph(make(s));
    const auto h = hamiltonian(d.graph, SearchBudget{10'000'000});
    o.expect(h.outcome == gengraph::Outcome::Yes && h.cycle && is_hamiltonian_cycle(d.graph, h.cycle->order),
             std::string(s) + ": search");
  }
  o.expect(hamiltonian(delta_graph(make("C2")).graph).outcome == gengraph::Outcome::No, "C2 refused");
  return o;
}

Tally h_certificates() {
  Tally o;
  for (const char* s : {"C3^2", "C5^2", "Heis3"}) {
    const auto g = make(s);
    const auto d = delta_graph(g);
    const auto pc = pgroup_hamiltonian(g);
    if (!pc.witness) {
      o.expect(false, std::string(s) + ": no witness");
      continue;
    }
    const auto& w = *pc.witness;
    const HChords h{HamCycle{to_vertices(d, w.cycle, g.order())}, w.chordOdd, w.chordEven};
    o.expect(w.chordOdd.first % 2 == 1 && w.chordOdd.second % 2 == 1 && w.chordEven.first % 2 == 0 &&
                 w.chordEven.second % 2 == 0 && verify_certificate(d.graph, Certificate{h}),
             s);
  }
  return o;
}

Tally total_domination_values() {
  Tally o;
  for (std::size_t n = 2; n <= 36; ++n) {
    const auto g = cyclic_group(n);
    const auto d = delta_graph(g);
    const std::vector<Elem> one{least_generator(g)};
    o.expect(is_total_dominating(d.graph, to_vertices(d, one, n)) && total_domination(d.graph).gammaT == 1,
             "C" + std::to_string(n));
  }
  for (auto [s, value] : std::vector<std::pair<const char*, std::size_t>>{{"C2^2", 2}, {"C2^2 x C3^2", 3}}) {
    const auto d = delta_graph(make(s));
    o.expect(total_domination(d.graph).gammaT == value, s);
  }
  for (const auto& n : catalog_nilpotent()) {
    if (n.structure.cyclic()) continue;
    const auto d = delta_graph(n.group);
    if (d.graph.vertex_count() > 120) continue;
    const auto direct = total_domination(d.graph);
    const auto reduced = nilpotent_td(n.group);
    o.expect(direct.status == DominationResult::Status::Solved &&
                 reduced.status == DominationResult::Status::Solved && direct.gammaT == reduced.gammaT &&
                 is_total_dominating(d.graph, to_vertices(d, reduced.set, n.group.order())),
             n.name + ": direct vs reduction");
  }
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{3, 4}, {3, 4, 6}, {4, 4, 4}}) {
    const auto b = td_bounds(parts);
    const auto exact = total_domination(complete_product(parts));
    o.expect(exact.status == DominationResult::Status::Solved && b.lower <= exact.gammaT && exact.gammaT <= b.upper,
             "bounds");
  }
  return o;
}

Tally clique_chromatic() {
  Tally o;
  for (std::size_t n = 2; n <= 24; ++n) {
    const auto g = cyclic_group(n);
    const auto gamma = generating_graph(g);
    const auto expected = oracle::totient(n) + oracle::distinct_primes(n);
    const auto cc = cyclic_clique_colouring(n);
    const auto v = gamma.vertex_of(n);
    const Elem gen = least_generator(g);
    auto vertex = [&](std::size_t k) { return static_cast<Vertex>(v[g.power(gen, k)]); };
    std::vector<Vertex> clique;
    for (Elem k : cc.clique) clique.push_back(vertex(k));
    std::vector<std::size_t> colour(n);
    for (std::size_t k = 0; k < n; ++k) colour[vertex(k)] = cc.colour[k];
    const auto w = clique_number(gamma.graph);
    const auto c = chromatic_number(gamma.graph);
    o.expect(clique.size() == expected && cc.classes == expected &&
                 is_clique(gamma.graph, clique) && is_proper_colouring(gamma.graph, colour) && w.exact &&
                 w.omega == expected && c.exact && c.lower == expected,
             "C" + std::to_string(n));
  }
  for (auto [s, value] : std::vector<std::pair<const char*, std::size_t>>{
           {"C2^2", 3}, {"C3^2", 4}, {"C2^2 x C9", 3}, {"C2^2 x C3^2", 3}, {"C4 x C3^2", 4}}) {
    const auto gamma = generating_graph(make(s));
    const auto w = clique_number(gamma.graph);
    const auto c = chromatic_number(gamma.graph);
    o.expect(w.exact && c.exact && w.omega == value && c.lower == value, s);
  }
  return o;
}

Tally census() {
  Tally o;
  for (const auto& n : catalog_nilpotent()) {
    const auto p = degree_profile(n.group);
    // Independent pair count by word closure.
    const auto& g = n.group;
    std::uint64_t ordered = 0, nonisolated = 0, minDeg = g.order();
    for (Elem a = 0; a < g.order(); ++a) {
      std::uint64_t deg = 0;
      for (Elem b = 0; b < g.order(); ++b)
        if (oracle::generates(g, a, b)) {
          ++ordered;
          if (b != a) ++deg;
        }
      if (deg) {
        ++nonisolated;
        minDeg = std::min(minDeg, deg);
      }
    }
    const auto n2 = static_cast<std::int64_t>(g.order() * g.order());
    bool classes = true;
    for (const auto& c : p.classes)
      classes = classes && Rational(static_cast<std::int64_t>(c.observedCount)) == c.alpha &&
                (c.observedCount == 0 || Rational(static_cast<std::int64_t>(c.observedDegree)) == c.beta);
    o.expect(Rational(static_cast<std::int64_t>(ordered), n2) == p.genProbabilityFormula &&
                 nonisolated == as_int(p.nonisolatedFormula) && minDeg == as_int(p.minDegreeFormula) &&
                 p.nonisolatedFormula.denominator() == 1 && p.minDegreeFormula.denominator() == 1 && classes,
             n.name);
  }
  const auto p = degree_profile(make("C2^2 x C9"));
  o.expect(p.genProbabilityObserved == Rational(1, 3) && p.nonisolatedObserved == 27 && p.minDegreeObserved == 12,
           "C2^2 x C9 values");
  return o;
}

Tally example_family() {
  Tally o;
  const auto rule = example_family_graph(1);
  const auto g = example_family_group(1);
  const auto cayley = delta_graph(g);
  bool regular = rule.graph.vertex_count() == 54;
  for (Vertex v = 0; v < rule.graph.vertex_count(); ++v) regular = regular && rule.graph.degree(v) == 24;
  o.expect(regular, "d = 1 regularity");
  o.expect(rule.vertexElements == cayley.vertexElements && rule.graph == cayley.graph, "d = 1 equals Cayley Delta");
  for (Vertex u = 0; u < 54; ++u)
    for (Vertex v = u + 1; v < 54; ++v)
      o.expect(rule.graph.adjacent(u, v) == oracle::generates(g, rule.vertexElements[u], rule.vertexElements[v]),
               "d = 1 closure oracle");
  const auto two = example_family_graph(2);
  bool regular2 = two.graph.vertex_count() == 5400;
  for (Vertex v = 0; v < two.graph.vertex_count(); ++v) regular2 = regular2 && two.graph.degree(v) == 1920;
  o.expect(regular2 && 2 * (3 * 2 * 2) * (5 * 4 * 4) == 1920, "d = 2 regularity");
  return o;
}

Tally frattini_transfer() {
  Tally o;
  const auto a = make("C2^2 x C9 x C3");
  const auto b = make("C2^2 x Heis3");
  const auto fa = frattini_coordinates(a);
  const auto fb = frattini_coordinates(b);
  o.expect(a.order() == 108 && b.order() == 108 && fa.quotient.kernel.size() == 3 && fb.quotient.kernel.size() == 3,
           "orders");
  const auto f = coset_bijection(fa, fb);
  const auto ga = generating_graph(a);
  const auto gb = generating_graph(b);
  const auto va = ga.vertex_of(108);
  const auto vb = gb.vertex_of(108);
  for (Elem x = 0; x < 108; ++x)
    for (Elem y = x + 1; y < 108; ++y)
      o.expect(ga.graph.adjacent(static_cast<Vertex>(va[x]), static_cast<Vertex>(va[y])) ==
                   gb.graph.adjacent(static_cast<Vertex>(vb[f[x]]), static_cast<Vertex>(vb[f[y]])),
               "edge " + std::to_string(x) + "-" + std::to_string(y));
  for (const auto& n : catalog_nilpotent()) {
    if (n.structure.cyclic()) continue;
    o.expect(recover_cyclic_radical(generating_graph(n.group)) == n.structure.cyclic_radical(), n.name);
  }
  return o;
}

Tally edge_connectivity_diameter() {
  Tally o;
  for (const auto& n : catalog_nilpotent()) {
    const auto d = delta_graph(n.group);
    if (d.graph.vertex_count() > 150) continue;
    const auto l = edge_connectivity(d.graph);
    const auto m = basic_metrics(d.graph);
    o.expect(l.lambda == min_degree(d.graph) && m.diameter && *m.diameter <= 2 &&
                 verify_certificate(d.graph, Certificate{l.cut}),
             n.name);
  }
  return o;
}

Tally product_connectivity() {
  Tally o;
  struct Instance {
    std::string name;
    Graph left;
    std::vector<std::size_t> parts;
    std::optional<std::size_t> expected;
  };
  const std::size_t k222[] = {2, 2, 2};
  std::vector<Instance> cases;
  cases.push_back({"K(2,2,2) x K(2,2,2)", complete_multipartite(k222), {2, 2, 2}, 16});
  cases.push_back({"Delta(C3^2) x K(2,2,3)", delta_graph(make("C3^2")).graph, {2, 2, 3}, std::nullopt});
  cases.push_back({"Delta(C2^2 x C3) x K(1,1,1,2)", delta_graph(make("C2^2 x C3")).graph, {1, 1, 1, 2},
                   std::nullopt});
  for (const auto& c : cases) {
    const auto kl = vertex_connectivity(c.left).kappa;
    const auto formula = kappa_product_formula(kl, min_degree(c.left), c.parts);
    const auto product = direct_product(c.left, complete_multipartite(c.parts));
    const auto measured = vertex_connectivity(product);
    o.expect(measured.kappa == formula && (!c.expected || formula == *c.expected) &&
                 verify_certificate(product, Certificate{measured.cut}),
             c.name + ": formula " + std::to_string(formula) + ", measured " + std::to_string(measured.kappa));
  }
  return o;
}

std::string run_cli(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, k);
  return out;
}

Tally determinism(const std::string& cli) {
  Tally o;
  const auto cat = default_catalog();
  const auto one = report_to_json(run_catalog(cat, all_checks(), 1)).dump(2);
  const auto eight = report_to_json(run_catalog(cat, all_checks(), 8)).dump(2);
  o.expect(one == eight, "library reports differ");
  if (!cli.empty()) {
    for (const char* fmt : {"json", "table", "csv"}) {
      const auto base = cli + " verify --catalog default --no-header --format " + fmt;
      const auto a = run_cli(base + " --jobs 1");
      const auto b = run_cli(base + " --jobs 8");
      o.expect(!a.empty() && a == b, std::string("CLI ") + fmt + " output differs");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
      {"maximal connectivity", maximal_connectivity},
      {"special-case connectivity values", special_connectivity},
      {"Frattini scaling", frattini_scaling},
      {"Eulerian criterion", eulerian},
      {"Hamiltonicity", hamiltonicity},
      {"chord certificates", h_certificates},
      {"total domination", total_domination_values},
      {"clique and chromatic numbers", clique_chromatic},
      {"formula census", census},
      {"example family", example_family},
      {"coset transfer and cyclic radical", frattini_transfer},
      {"edge connectivity and diameter", edge_connectivity_diameter},
      {"product connectivity formula", product_connectivity},
      {"determinism", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << "  " << criteria[i].first << "  (" << o.cases
         << " cases)";
    if (!o.pass) line << "  " << o.failure;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
