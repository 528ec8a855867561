#include "gengraph/verifier.hpp"

#include "gengraph/cliques.hpp"
#include "gengraph/connectivity.hpp"
#include "gengraph/constructions.hpp"
#include "gengraph/cycles.hpp"
#include "gengraph/domination.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/generating_graph.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/spec.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

namespace gengraph {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Skipped: return "Skipped";
    case CheckStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> c;
  for (int n = 2; n <= 36; ++n) c.push_back({"C" + std::to_string(n)});
  for (const char* s : {"C60", "C100", "C2^2", "C3^2", "C5^2", "C7^2", "C4 x C3", "C8", "C2 x C6", "C2^2 x C3",
                        "C2^2 x C9", "C2^2 x C3^2", "C4 x C3^2", "C3^2 x C5", "Heis3", "Heis5", "C2^2 x Heis3",
                        "C2^2 x C9 x C3", "C5 x C2^2", "C2 x C3^2", "C7 x C3^2", "C2 x Heis3", "Ex(1)"})
    c.push_back({s});
  for (const char* s : {"C2^2 x C3^2 x C5^2", "C2^2 x C3^2 x C5^2 x C7^2", "Ex(2)"}) c.push_back({s, true});
  return c;
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::vector<CatalogEntry> c;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    CatalogEntry e;
    const std::string marker = "formula-only";
    if (auto m = line.find(marker); m != std::string::npos) {
      e.formulaOnly = true;
      line.erase(m, marker.size());
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    e.spec = line.substr(first, last - first + 1);
    c.push_back(std::move(e));
  }
  return c;
}

const std::vector<std::string>& theorem_checks() {
  static const std::vector<std::string> ids = {
      "THM_1_1",    "THM_1_3_EULER", "THM_1_3_HAM", "THM_1_4_TDN",   "THM_1_5",     "LEM_2_1",
      "EQ_LEX",     "LEM_2_2_DEG",   "COR_2_6_PROD", "REMARK_FACTS", "PROP_2_9",    "LEM_3_1_KAPPA",
      "REM_3_5",    "LEM_5_3_SUB",   "SANDWICH_5_5_5_6", "EX_2_8"};
  return ids;
}

const std::vector<std::string>& question_scans() {
  static const std::vector<std::string> ids = {"Q_CONN", "Q_HAM", "Q_CHROM"};
  return ids;
}

std::vector<std::string> all_checks() {
  auto ids = theorem_checks();
  ids.insert(ids.end(), question_scans().begin(), question_scans().end());
  return ids;
}

bool is_known_check(const std::string& id) {
  const auto ids = all_checks();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

std::string show(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Certificates of passing results are kept only when small; failures keep theirs.
constexpr std::size_t kCertificateLimit = 400;

std::size_t certificate_size(const Certificate& c) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexCut> || std::is_same_v<T, Clique> || std::is_same_v<T, DominatingSet>)
          return x.vertices.size();
        else if constexpr (std::is_same_v<T, EdgeCut>) return x.edges.size();
        else if constexpr (std::is_same_v<T, EulerCircuit>) return x.walk.size();
        else if constexpr (std::is_same_v<T, HamCycle>) return x.order.size();
        else if constexpr (std::is_same_v<T, Colouring>) return x.colour.size();
        else return x.cycle.order.size();
      },
      c);
}

struct SplitProduct {
  Subgroup a;  // Sylow subgroup of the least noncyclic prime
  Subgroup b;  // product of the other Sylow subgroups
  std::vector<Elem> partA;  // element of G -> element of a
  std::vector<Elem> partB;
};

class Context {
 public:
  Context(const CatalogEntry& entry, const VerifyOptions& options) : entry_(entry), options_(options) {
    try {
      spec_ = parse_spec(entry.spec);
      name_ = to_string(*spec_);
    } catch (const Error& e) {
      name_ = entry.spec;
      buildError_ = e.what();
      return;
    }
    symbolic_ = symbolic_structure(*spec_);
    if (entry.formulaOnly) return;
    try {
      group_ = build_group(*spec_, BuildOptions{options.maxOrder});
      nilpotent_ = is_nilpotent(*group_);
      twoGenerated_ = is_two_generated(*group_);
      if (nilpotent_) structure_ = nilpotent_structure(*group_);
    } catch (const Error& e) {
      buildError_ = e.what();
      group_.reset();
    }
  }

  const std::string& name() const { return name_; }
  const CatalogEntry& entry() const { return entry_; }
  const VerifyOptions& options() const { return options_; }
  const std::optional<GroupSpec>& spec() const { return spec_; }
  const std::string& build_error() const { return buildError_; }
  bool built() const { return group_.has_value(); }
  const Group& group() const { return *group_; }
  bool nilpotent() const { return nilpotent_; }
  bool two_generated() const { return twoGenerated_; }
  const NilpotentStructure& structure() const { return *structure_; }
  const std::optional<NilpotentStructure>& symbolic() const { return symbolic_; }

  const GeneratingGraph& gamma() {
    if (!gamma_) gamma_ = generating_graph(*group_);
    return *gamma_;
  }
  const GeneratingGraph& delta() {
    if (!delta_) delta_ = delta_graph(gamma());
    return *delta_;
  }
  const Quotient& quotient() {
    if (!quotient_) quotient_ = quotient_mod_frattini(*group_, options_.maxOrder);
    return *quotient_;
  }
  const GeneratingGraph& gamma_quotient() {
    if (!gammaQ_) gammaQ_ = generating_graph(quotient().group);
    return *gammaQ_;
  }
  const VertexConnectivity& kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(delta().graph);
    return *kappa_;
  }
  std::size_t min_degree() { return basic_metrics(delta().graph).minDegree.value_or(0); }
  const DominationResult& direct_td() {
    if (!directTd_) directTd_ = total_domination(delta().graph, options_.budget);
    return *directTd_;
  }
  const NilpotentTd& reduced_td() {
    if (!reducedTd_) reducedTd_ = nilpotent_td(*group_, options_.budget);
    return *reducedTd_;
  }
  const SplitProduct& split() {
    if (!split_) {
      const auto sylow = sylow_subgroups(*group_);
      const std::uint64_t q = structure().noncyclicSylow.front().first;
      ElementSet first(group_->order());
      std::vector<Elem> others;
      for (const auto& [p, s] : sylow) {
        if (p == q) {
          first = s;
        } else {
          const auto e = s.elements();
          others.insert(others.end(), e.begin(), e.end());
        }
      }
      const ElementSet rest = closure(*group_, others);
      SplitProduct sp{induced_subgroup(*group_, first), induced_subgroup(*group_, rest), {}, {}};
      std::vector<Elem> indexA(group_->order(), 0);
      std::vector<Elem> indexB(group_->order(), 0);
      for (Elem i = 0; i < sp.a.embedding.size(); ++i) indexA[sp.a.embedding[i]] = i;
      for (Elem i = 0; i < sp.b.embedding.size(); ++i) indexB[sp.b.embedding[i]] = i;
      for (Elem x = 0; x < group_->order(); ++x) {
        const Elem xa = sylow_component(*group_, x, q);
        const Elem xb = group_->mul(group_->inverse(xa), x);
        sp.partA.push_back(indexA[xa]);
        sp.partB.push_back(indexB[xb]);
      }
      split_ = std::move(sp);
    }
    return *split_;
  }

 private:
  CatalogEntry entry_;
  VerifyOptions options_;
  std::string name_;
  std::optional<GroupSpec> spec_;
  std::string buildError_;
  std::optional<NilpotentStructure> symbolic_;
  std::optional<Group> group_;
  bool nilpotent_ = false;
  bool twoGenerated_ = false;
  std::optional<NilpotentStructure> structure_;
  std::optional<GeneratingGraph> gamma_;
  std::optional<GeneratingGraph> delta_;
  std::optional<Quotient> quotient_;
  std::optional<GeneratingGraph> gammaQ_;
  std::optional<VertexConnectivity> kappa_;
  std::optional<DominationResult> directTd_;
  std::optional<NilpotentTd> reducedTd_;
  std::optional<SplitProduct> split_;
};

class Verdict {
 public:
  Verdict(Context& ctx, std::string check) {
    r_.group = ctx.name();
    r_.check = std::move(check);
  }
  CheckResult skip(std::string reason) {
    r_.status = CheckStatus::Skipped;
    r_.reason = std::move(reason);
    return r_;
  }
  CheckResult budget(std::string expected, std::string observed, std::uint64_t nodes) {
    r_.status = CheckStatus::BudgetExceeded;
    r_.expected = std::move(expected);
    r_.observed = std::move(observed);
    r_.nodes = nodes;
    return r_;
  }
  Verdict& certificate(const Certificate& c, std::string graph = "delta") {
    cert_ = c;
    graph_ = std::move(graph);
    return *this;
  }
  Verdict& nodes(std::uint64_t n) {
    r_.nodes += n;
    return *this;
  }
  CheckResult decide(bool ok, std::string expected, std::string observed, std::string reason = {}) {
    r_.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r_.expected = std::move(expected);
    r_.observed = std::move(observed);
    if (!ok) r_.reason = std::move(reason);
    if (cert_ && (!ok || certificate_size(*cert_) <= kCertificateLimit)) {
      r_.certificate = certificate_to_json(*cert_);
      r_.certificateGraph = graph_;
    }
    return r_;
  }

 private:
  CheckResult r_;
  std::optional<Certificate> cert_;
  std::string graph_;
};

using Runner = std::function<CheckResult(Context&, Verdict&)>;

std::string yes_no(bool b, const char* yes, const char* no) { return b ? yes : no; }

// Common applicability gates.
std::optional<std::string> needs_group(Context& c) {
  if (!c.built()) return c.entry().formulaOnly ? "formula-only entry" : "build failed: " + c.build_error();
  if (c.group().order() == 1) return "trivial group: Delta is empty";
  if (!c.two_generated()) return "NotTwoGenerated";
  return std::nullopt;
}

std::optional<std::string> needs_nilpotent(Context& c) {
  if (auto why = needs_group(c)) return why;
  if (!c.nilpotent()) return "not nilpotent";
  return std::nullopt;
}

std::optional<std::string> needs_small_delta(Context& c, std::size_t limit) {
  if (c.delta().graph.vertex_count() > limit)
    return "|V(Delta)| = " + std::to_string(c.delta().graph.vertex_count()) + " above " + std::to_string(limit);
  return std::nullopt;
}

CheckResult thm_max_connectivity(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  if (auto why = needs_small_delta(c, c.options().connectivityLimit)) return o.skip(*why);
  const auto formula = formula_min_degree(c.structure());
  const auto& k = c.kappa();
  const std::size_t delta = c.min_degree();
  o.certificate(k.cut);
  const bool ok = formula.denominator() == 1 && k.kappa == delta &&
                  static_cast<std::int64_t>(delta) == formula.numerator() &&
                  (k.cut.complete || verify_certificate(c.delta().graph, k.cut));
  return o.decide(ok, "kappa = delta = " + show(formula),
                  "kappa = " + std::to_string(k.kappa) + ", delta = " + std::to_string(delta),
                  "connectivity differs from the minimum degree formula");
}

CheckResult thm_euler(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  const bool predicted = !(c.group().is_cyclic() && c.group().order() % 2 == 0);
  const auto e = eulerian_circuit(c.delta().graph);
  bool observed = e.circuit.has_value();
  if (observed) {
    o.certificate(*e.circuit);
    observed = verify_certificate(c.delta().graph, *e.circuit);
  }
  return o.decide(predicted == observed, yes_no(predicted, "Eulerian", "not Eulerian"),
                  observed ? "Eulerian (circuit verified)" : "not Eulerian: " + e.reason,
                  "Euler criterion disagrees with Hierholzer");
}

CheckResult thm_hamilton(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  const auto& d = c.delta();
  const bool predicted = c.group().order() != 2;
  if (!predicted) {
    const auto h = hamiltonian(d.graph, c.options().budget);
    o.nodes(h.nodes);
    return o.decide(h.outcome == Outcome::No, "not Hamiltonian", std::string("search: ") + to_string(h.outcome));
  }
  const auto nc = nilpotent_hamiltonian(c.group(), c.options().budget);
  o.nodes(nc.nodes);
  if (nc.outcome == Outcome::BudgetExceeded) return o.budget("Hamiltonian", "budget exhausted", nc.nodes);
  if (nc.outcome == Outcome::No) return o.decide(false, "Hamiltonian", "not Hamiltonian: " + nc.reason);
  HamCycle cycle{to_vertices(d, nc.cycle, c.group().order())};
  bool ok = verify_certificate(d.graph, cycle);
  std::string observed = "Hamiltonian via " + nc.method;
  const auto primes = factorize(c.group().order());
  if (nc.method == "p-group" && primes[0].first % 2 == 1) {
    const auto pc = pgroup_hamiltonian(c.group(), c.options().budget);
    if (pc.witness) {
      HChords w{HamCycle{to_vertices(d, pc.witness->cycle, c.group().order())}, pc.witness->chordOdd,
                pc.witness->chordEven};
      const bool chords = verify_certificate(d.graph, w);
      ok = ok && chords;
      observed += chords ? ", chord witness verified" : ", chord witness invalid";
      o.certificate(w);
    } else {
      o.certificate(cycle);
    }
  } else {
    o.certificate(cycle);
  }
  return o.decide(ok, "Hamiltonian", observed, "cycle failed re-verification");
}

CheckResult thm_tdn(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  const auto& ns = c.structure();
  const auto& d = c.delta();
  const bool direct = d.graph.vertex_count() <= c.options().dominationLimit;
  std::optional<std::size_t> directValue;
  if (direct) {
    const auto& r = c.direct_td();
    o.nodes(r.nodes);
    if (r.status == DominationResult::Status::BudgetExceeded)
      return o.budget("", "direct search exhausted its budget", r.nodes);
    if (r.status == DominationResult::Status::Solved) directValue = r.gammaT;
  }
  const auto& nt = c.reduced_td();
  o.nodes(nt.nodes);
  if (nt.status == DominationResult::Status::BudgetExceeded)
    return o.budget("", "reduction search exhausted its budget", nt.nodes);
  o.certificate(DominatingSet{to_vertices(d, nt.set, c.group().order())});
  const std::size_t value = nt.gammaT;
  std::string observed = "reduction " + std::to_string(value);
  if (directValue) observed += ", direct search " + std::to_string(*directValue);
  const bool agree = !directValue || *directValue == value;
  if (ns.cyclic()) return o.decide(agree && value == 1, "1", observed, "cyclic group without a dominating vertex");
  const std::size_t s = ns.s();
  const bool equality = ns.noncyclicSylow.front().first >= s;
  const bool ok = agree && (equality ? value == s + 1 : value >= s + 1);
  return o.decide(ok, (equality ? "= " : ">= ") + std::to_string(s + 1), observed,
                  agree ? "value outside the stated range" : "reduction and direct search disagree");
}

CheckResult thm_clique(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  const auto& ns = c.structure();
  const std::size_t n = c.group().order();
  std::size_t expected;
  if (ns.cyclic()) {
    const auto tp = totient_profile(n);
    expected = tp.phi + tp.pi;
  } else {
    expected = ns.noncyclicSylow.front().first + 1;
  }
  const auto& g = c.gamma().graph;
  const auto om = clique_number(g, c.options().budget);
  const auto ch = chromatic_number(g, c.options().budget);
  o.nodes(om.nodes + ch.nodes);
  if (!om.exact || !ch.exact)
    return o.budget(std::to_string(expected), "omega in search " + std::to_string(om.omega) + ", chi in [" +
                                                  std::to_string(ch.lower) + ", " + std::to_string(ch.upper) + "]",
                    om.nodes + ch.nodes);
  bool ok = om.omega == expected && ch.lower == expected && verify_certificate(g, om.clique) &&
            verify_certificate(g, ch.colouring);
  std::string observed = "omega = " + std::to_string(om.omega) + ", chi = " + std::to_string(ch.lower);
  if (ns.cyclic()) {
    // The explicit clique and colouring must certify the same value on their own.
    // Element k of C_n is g^k; carried over by the least generator of G.
    const auto cc = cyclic_clique_colouring(n);
    const auto& gm = c.gamma();
    Elem gen = 1;
    while (c.group().element_order(gen) != n) ++gen;
    std::vector<Elem> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = c.group().power(gen, k);
    std::vector<Elem> clique;
    for (Elem k : cc.clique) clique.push_back(image[k]);
    const Clique cl{to_vertices(gm, clique, n)};
    const auto vertexOf = gm.vertex_of(n);
    std::vector<std::size_t> colour(n);
    for (std::size_t k = 0; k < n; ++k) colour[vertexOf[image[k]]] = cc.colour[k];
    const bool witnessed = cc.clique.size() == expected && cc.classes == expected && verify_certificate(g, cl) &&
                           verify_certificate(g, Colouring{colour});
    ok = ok && witnessed;
    observed += witnessed ? ", explicit clique and colouring verified" : ", explicit witnesses invalid";
  }
  o.certificate(om.clique, "gamma");
  return o.decide(ok, "omega = chi = " + std::to_string(expected), observed, "clique or chromatic number differs");
}

CheckResult lem_complete(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  const auto& gr = c.group();
  const bool predicted = (gr.is_cyclic() && is_prime(gr.order())) || (gr.order() == 4 && !gr.is_cyclic());
  const auto& g = c.delta().graph;
  const std::size_t n = g.vertex_count();
  const bool observed = g.edge_count() * 2 == n * (n - 1);
  return o.decide(predicted == observed, yes_no(predicted, "complete", "not complete"),
                  yes_no(observed, "complete", "not complete"));
}

CheckResult eq_lex(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  const auto lex = lex_decomposition(c.group());
  const std::string rule = c.group().is_cyclic() ? "Delta(G/Phi)[K_|Phi|] minus Phi-block edges"
                                                 : "Delta(G/Phi)[null_|Phi|]";
  return o.decide(lex.equal, rule, lex.equal ? "edge sets identical" : "edge sets differ");
}

CheckResult lem_degree(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  const auto& q = c.quotient();
  const auto& gq = c.gamma_quotient();
  const auto& gm = c.gamma();
  const std::size_t phi = q.kernel.elements().size();
  if (c.group().is_cyclic()) {
    const auto dq = delta_graph(gq);
    const std::size_t lhs = c.min_degree();
    const std::size_t rhs = basic_metrics(dq.graph).minDegree.value_or(0) * phi;
    return o.decide(lhs == rhs, "delta(Delta(G)) = delta(Delta(G/Phi)) |Phi| = " + std::to_string(rhs),
                    "delta(Delta(G)) = " + std::to_string(lhs));
  }
  for (Elem x = 0; x < c.group().order(); ++x) {
    const std::size_t lhs = gm.graph.degree(x);
    const std::size_t rhs = gq.graph.degree(q.cosetOf[x]) * phi;
    if (lhs != rhs)
      return o.decide(false, "deg(g) = deg(g Phi) |Phi|",
                      "element " + c.group().label(x) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
  return o.decide(true, "deg(g) = deg(g Phi) |Phi|",
                  "all " + std::to_string(c.group().order()) + " elements agree (|Phi| = " + std::to_string(phi) + ")");
}

std::optional<std::string> needs_split(Context& c) {
  if (auto why = needs_nilpotent(c)) return why;
  if (c.structure().s() < 2) return "fewer than two noncyclic Sylow subgroups";
  return std::nullopt;
}

CheckResult cor_product(Context& c, Verdict& o) {
  if (auto why = needs_split(c)) return o.skip(*why);
  const auto& sp = c.split();
  const auto da = delta_graph(sp.a.group);
  const auto db = delta_graph(sp.b.group);
  const auto prod = direct_product(da.graph, db.graph);
  const auto va = da.vertex_of(sp.a.group.order());
  const auto vb = db.vertex_of(sp.b.group.order());
  const auto& d = c.delta();
  bool ok = d.graph.vertex_count() == prod.vertex_count();
  std::vector<Vertex> image;
  for (Vertex v = 0; v < d.graph.vertex_count() && ok; ++v) {
    const Elem x = d.vertexElements[v];
    const auto ia = va[sp.partA[x]];
    const auto ib = vb[sp.partB[x]];
    ok = ia >= 0 && ib >= 0;
    if (ok) image.push_back(static_cast<Vertex>(ia * static_cast<std::int64_t>(db.graph.vertex_count()) + ib));
  }
  for (Vertex u = 0; u < image.size() && ok; ++u)
    for (Vertex v = u + 1; v < image.size() && ok; ++v)
      ok = d.graph.adjacent(u, v) == prod.adjacent(image[u], image[v]);
  return o.decide(ok,
                  "Delta(G) = Delta(A) x Delta(B), |A| = " + std::to_string(sp.a.group.order()) +
                      ", |B| = " + std::to_string(sp.b.group.order()),
                  ok ? "equal under the component map" : "graphs differ under the component map");
}

CheckResult remark_facts(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  const auto& ns = c.structure();
  const std::string expected = "P = " + show(formula_gen_probability(ns)) +
                               ", |V(Delta)| = " + show(formula_nonisolated(ns)) +
                               ", delta = " + show(formula_min_degree(ns));
  try {
    const auto prof = degree_profile(c.group());
    std::string observed = "P = " + show(prof.genProbabilityObserved) +
                           ", |V(Delta)| = " + std::to_string(prof.nonisolatedObserved) +
                           ", delta = " + std::to_string(prof.minDegreeObserved) + ", " +
                           std::to_string(prof.classes.size()) + " degree classes";
    return o.decide(true, expected, observed);
  } catch (const InternalMismatch& e) {
    return o.decide(false, expected, e.what(), "census disagrees with the closed forms");
  }
}

std::string canonical(const std::string& text) { return to_string(parse_spec(text)); }

CheckResult prop_determine(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  if (c.structure().cyclic()) return o.skip("cyclic");
  const auto expected = c.structure().cyclic_radical();
  std::uint64_t observed = 0;
  std::string observedText;
  try {
    observed = recover_cyclic_radical(c.gamma());
    observedText = "radical statistic " + std::to_string(observed);
  } catch (const PreconditionError& e) {
    observedText = e.what();
  }
  bool ok = observed == expected;
  std::string expectedText = "p_1...p_r = " + std::to_string(expected);

  static const std::vector<std::tuple<std::string, std::string, bool>> pairs = {
      {"C2^2 x C9 x C3", "C2^2 x Heis3", true}, {"C2^2 x C9", "C2^2 x C3^2", false}};
  for (const auto& [mine, partner, same] : pairs) {
    if (c.name() != canonical(mine)) continue;
    const auto other = build_group(parse_spec(partner), BuildOptions{c.options().maxOrder});
    const auto go = generating_graph(other);
    const auto& gm = c.gamma();
    if (same) {
      const auto bij = coset_bijection(frattini_coordinates(c.group()), frattini_coordinates(other));
      bool equal = true;
      for (Elem x = 0; x < c.group().order() && equal; ++x) {
        equal = gm.graph.self_dominating(x) == go.graph.self_dominating(bij[x]);
        for (Elem y = x + 1; y < c.group().order() && equal; ++y)
          equal = gm.graph.adjacent(x, y) == go.graph.adjacent(bij[x], bij[y]);
      }
      ok = ok && equal;
      expectedText += "; Gamma equal to Gamma(" + canonical(partner) + ") under the coset bijection";
      observedText += equal ? "; equal" : "; differ";
    } else {
      auto degrees = [](const Graph& g) {
        std::vector<std::size_t> d;
        for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
      };
      const bool differ = degrees(gm.graph) != degrees(go.graph);
      ok = ok && differ;
      expectedText += "; degree multiset differs from Gamma(" + canonical(partner) + ")";
      observedText += differ ? "; differs" : "; coincides";
    }
  }
  return o.decide(ok, expectedText, observedText);
}

CheckResult lem_kappa_frattini(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  if (auto why = needs_small_delta(c, c.options().connectivityLimit)) return o.skip(*why);
  const auto& q = c.quotient();
  const auto dq = delta_graph(c.gamma_quotient());
  const std::size_t phi = q.kernel.elements().size();
  const std::size_t kq = vertex_connectivity(dq.graph).kappa;
  const std::size_t k = c.kappa().kappa;
  return o.decide(k == kq * phi, "kappa(Delta(G/Phi)) |Phi| = " + std::to_string(kq) + " * " + std::to_string(phi),
                  "kappa(Delta(G)) = " + std::to_string(k));
}

CheckResult rem_edge(Context& c, Verdict& o) {
  if (auto why = needs_nilpotent(c)) return o.skip(*why);
  if (auto why = needs_small_delta(c, c.options().connectivityLimit)) return o.skip(*why);
  const auto& g = c.delta().graph;
  const auto m = basic_metrics(g);
  const auto lam = edge_connectivity(g);
  const std::size_t delta = m.minDegree.value_or(0);
  o.certificate(lam.cut);
  const bool ok = lam.lambda == delta && m.diameter && *m.diameter <= 2 && verify_certificate(g, lam.cut);
  return o.decide(ok, "lambda = delta = " + std::to_string(delta) + ", diameter <= 2",
                  "lambda = " + std::to_string(lam.lambda) + ", diameter " +
                      (m.diameter ? std::to_string(*m.diameter) : std::string("undefined")));
}

CheckResult lem_product_td(Context& c, Verdict& o) {
  if (auto why = needs_split(c)) return o.skip(*why);
  const auto& sp = c.split();
  const auto da = delta_graph(sp.a.group);
  const auto db = delta_graph(sp.b.group);
  const auto ta = total_domination(da.graph, c.options().budget);
  const auto tb = total_domination(db.graph, c.options().budget);
  o.nodes(ta.nodes + tb.nodes);
  if (ta.status != DominationResult::Status::Solved || tb.status != DominationResult::Status::Solved)
    return o.budget("", "factor search exhausted its budget", ta.nodes + tb.nodes);
  const auto& d = c.delta();
  // S x T, as elements of G.
  std::vector<Elem> product;
  for (Vertex a : ta.set.vertices)
    for (Vertex b : tb.set.vertices)
      product.push_back(c.group().mul(sp.a.embedding[da.vertexElements[a]], sp.b.embedding[db.vertexElements[b]]));
  std::sort(product.begin(), product.end());
  const DominatingSet set{to_vertices(d, product, c.group().order())};
  o.certificate(set);
  const bool dominates = verify_certificate(d.graph, set);
  std::size_t value;
  if (d.graph.vertex_count() <= c.options().dominationLimit) {
    const auto& r = c.direct_td();
    o.nodes(r.nodes);
    if (r.status != DominationResult::Status::Solved) return o.budget("", "direct search exhausted its budget", r.nodes);
    value = r.gammaT;
  } else {
    const auto& r = c.reduced_td();
    o.nodes(r.nodes);
    if (r.status != DominationResult::Status::Solved) return o.budget("", "reduction exhausted its budget", r.nodes);
    value = r.gammaT;
  }
  const std::size_t bound = ta.gammaT * tb.gammaT;
  return o.decide(dominates && value <= bound,
                  "gamma_t <= gamma_t(Delta(A)) gamma_t(Delta(B)) = " + std::to_string(ta.gammaT) + " * " +
                      std::to_string(tb.gammaT),
                  "gamma_t = " + std::to_string(value) + yes_no(dominates, ", product set dominates",
                                                                 ", product set does not dominate"));
}

CheckResult sandwich(Context& c, Verdict& o) {
  std::optional<NilpotentStructure> ns;
  if (c.built()) {
    if (auto why = needs_nilpotent(c)) return o.skip(*why);
    ns = c.structure();
  } else if (c.entry().formulaOnly && c.symbolic()) {
    ns = c.symbolic();
  } else {
    return o.skip(c.entry().formulaOnly ? "no prime data for this entry" : "build failed: " + c.build_error());
  }
  if (ns->cyclic()) return o.skip("cyclic");
  std::vector<std::size_t> parts;
  for (const auto& [q, b] : ns->noncyclicSylow) parts.push_back(q + 1);
  std::sort(parts.begin(), parts.end());
  const auto bounds = td_bounds(parts);
  std::string partsText;
  for (auto a : parts) partsText += (partsText.empty() ? "" : ",") + std::to_string(a);
  const std::string expected = std::to_string(bounds.lower) + " <= gamma_t(K(" + partsText + ")) <= " +
                               std::to_string(bounds.upper) + " (t = " + std::to_string(bounds.t) + ")";
  const auto byPartition = complete_product_td(parts, c.options().budget);
  o.nodes(byPartition.nodes);
  if (byPartition.status != DominationResult::Status::Solved)
    return o.budget(expected, "partition search exhausted its budget", byPartition.nodes);
  std::size_t vertices = 1;
  for (auto a : parts) vertices *= a;
  std::string observed = "partition route " + std::to_string(byPartition.gammaT);
  bool ok = bounds.lower <= byPartition.gammaT && byPartition.gammaT <= bounds.upper;
  if (vertices <= 5000) {
    const auto product = complete_product(parts);
    const bool witnessed = verify_certificate(product, byPartition.set);
    ok = ok && witnessed;
    o.certificate(byPartition.set, "product:" + partsText);
    if (!witnessed) observed += " (witness invalid)";
    if (vertices <= c.options().connectivityLimit) {
      const auto search = total_domination(product, c.options().budget);
      o.nodes(search.nodes);
      if (search.status != DominationResult::Status::Solved)
        return o.budget(expected, observed + ", graph search exhausted its budget", search.nodes);
      observed += ", graph search " + std::to_string(search.gammaT);
      ok = ok && search.gammaT == byPartition.gammaT;
    }
  }
  return o.decide(ok, expected, observed);
}

std::optional<unsigned> example_family_degree_of(const Context& c) {
  if (!c.spec() || c.spec()->factors.size() != 1) return std::nullopt;
  const auto& f = c.spec()->factors[0];
  if (f.kind != Factor::Kind::ExampleFamily) return std::nullopt;
  return static_cast<unsigned>(f.n);
}

CheckResult example_family(Context& c, Verdict& o) {
  const auto d = example_family_degree_of(c);
  if (!d) return o.skip("not an example-family group");
  const auto rule = example_family_graph(*d);
  const auto count = example_family_vertex_count(*d);
  const auto degree = example_family_degree(*d);
  const auto& g = rule.graph;
  bool regular = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) regular = regular && g.degree(v) == degree;
  bool ok = g.vertex_count() == count && regular;
  // Ratio |V(Delta)|/|G| = 3/4 prod (1 - 1/p_i).
  Rational ratio(3, 4);
  for (unsigned i = 1; i <= *d; ++i) ratio *= Rational(static_cast<std::int64_t>(odd_prime(i)) - 1, static_cast<std::int64_t>(odd_prime(i)));
  const Rational observedRatio(static_cast<std::int64_t>(g.vertex_count()),
                               static_cast<std::int64_t>(example_family_order(*d)));
  ok = ok && ratio == observedRatio;
  std::string expected = std::to_string(count) + " vertices, " + std::to_string(degree) + "-regular, ratio " + show(ratio);
  std::string observed = "rule graph: " + std::to_string(g.vertex_count()) + " vertices, " +
                         (regular ? std::to_string(degree) + "-regular" : "not regular") + ", ratio " +
                         show(observedRatio);
  if (c.built()) {
    const auto& brute = c.delta();
    const bool same = brute.vertexElements == rule.vertexElements && brute.graph == rule.graph;
    ok = ok && same;
    expected += "; equal to the Cayley-table Delta";
    observed += same ? "; equal to the Cayley-table Delta" : "; differs from the Cayley-table Delta";
  }
  return o.decide(ok, expected, observed);
}

CheckResult scan_conn(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  if (auto why = needs_small_delta(c, c.options().connectivityLimit)) return o.skip(*why);
  const auto& k = c.kappa();
  const std::size_t delta = c.min_degree();
  o.certificate(k.cut);
  return o.decide(k.kappa == delta, "kappa = delta", "kappa = " + std::to_string(k.kappa) + ", delta = " +
                  std::to_string(delta), "COUNTEREXAMPLE: Delta(G) is not maximally connected");
}

CheckResult scan_ham(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  if (c.group().order() == 2) return o.skip("C2 is excluded");
  const auto h = hamiltonian(c.delta().graph, c.options().budget);
  o.nodes(h.nodes);
  if (h.outcome == Outcome::BudgetExceeded) return o.budget("Hamiltonian", "budget exhausted", h.nodes);
  if (h.cycle) o.certificate(*h.cycle);
  const bool ok = h.outcome == Outcome::Yes && verify_certificate(c.delta().graph, *h.cycle);
  return o.decide(ok, "Hamiltonian", ok ? "cycle found and verified" : "search space exhausted",
                  "COUNTEREXAMPLE: Delta(G) is not Hamiltonian");
}

CheckResult scan_chrom(Context& c, Verdict& o) {
  if (auto why = needs_group(c)) return o.skip(*why);
  const auto& g = c.gamma().graph;
  const auto om = clique_number(g, c.options().budget);
  const auto ch = chromatic_number(g, c.options().budget);
  o.nodes(om.nodes + ch.nodes);
  if (!om.exact || !ch.exact)
    return o.budget("omega = chi", "omega >= " + std::to_string(om.omega) + ", chi in [" + std::to_string(ch.lower) +
                                       ", " + std::to_string(ch.upper) + "]",
                    om.nodes + ch.nodes);
  o.certificate(ch.colouring, "gamma");
  const bool ok = om.omega == ch.lower && verify_certificate(g, om.clique) && verify_certificate(g, ch.colouring);
  return o.decide(ok, "omega = chi", "omega = " + std::to_string(om.omega) + ", chi = " + std::to_string(ch.lower),
                  "COUNTEREXAMPLE: omega < chi");
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"THM_1_1", thm_max_connectivity}, {"THM_1_3_EULER", thm_euler},   {"THM_1_3_HAM", thm_hamilton},
      {"THM_1_4_TDN", thm_tdn},          {"THM_1_5", thm_clique},        {"LEM_2_1", lem_complete},
      {"EQ_LEX", eq_lex},                {"LEM_2_2_DEG", lem_degree},    {"COR_2_6_PROD", cor_product},
      {"REMARK_FACTS", remark_facts},    {"PROP_2_9", prop_determine},   {"LEM_3_1_KAPPA", lem_kappa_frattini},
      {"REM_3_5", rem_edge},             {"LEM_5_3_SUB", lem_product_td}, {"SANDWICH_5_5_5_6", sandwich},
      {"EX_2_8", example_family},        {"Q_CONN", scan_conn},          {"Q_HAM", scan_ham},
      {"Q_CHROM", scan_chrom}};
  return m;
}

CheckResult evaluate(Context& c, const std::string& check) {
  Verdict o(c, check);
  const auto it = runners().find(check);
  if (it == runners().end()) return o.skip("unknown check");
  CheckResult r;
  try {
    r = it->second(c, o);
  } catch (const NotTwoGenerated&) {
    return Verdict(c, check).skip("NotTwoGenerated");
  } catch (const Error& e) {
    CheckResult f = Verdict(c, check).skip("");
    f.status = CheckStatus::Fail;
    f.reason = std::string("error: ") + e.what();
    f.observed = f.reason;
    return f;
  }
  const auto& scans = question_scans();
  if (r.status == CheckStatus::Fail && std::find(scans.begin(), scans.end(), check) != scans.end())
    r.counterexample = true;
  return r;
}

}  // namespace

std::vector<CheckResult> run_group(const CatalogEntry& entry, const std::vector<std::string>& checks,
                                   const VerifyOptions& options) {
  Context ctx(entry, options);
  std::vector<CheckResult> out;
  for (const auto& id : checks) out.push_back(evaluate(ctx, id));
  return out;
}

CheckResult run_check(const CatalogEntry& entry, const std::string& check, const VerifyOptions& options) {
  return run_group(entry, {check}, options).front();
}

Report run_catalog(const std::vector<CatalogEntry>& catalog, const std::vector<std::string>& checks, std::size_t jobs,
                   const VerifyOptions& options) {
  Report rep;
  rep.catalog = catalog;
  rep.checks = checks;
  std::vector<std::vector<CheckResult>> perGroup(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) perGroup[i] = run_group(catalog[i], checks, options);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, catalog.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& g : perGroup)
    for (auto& r : g) {
      switch (r.status) {
        case CheckStatus::Pass: ++rep.summary.pass; break;
        case CheckStatus::Fail: ++rep.summary.fail; break;
        case CheckStatus::Skipped: ++rep.summary.skipped; break;
        case CheckStatus::BudgetExceeded: ++rep.summary.budgetExceeded; break;
      }
      if (r.counterexample) ++rep.summary.counterexamples;
      rep.results.push_back(std::move(r));
    }
  return rep;
}

Json result_to_json(const CheckResult& r) {
  Json j;
  j["group"] = r.group;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.counterexample) j["counterexample"] = true;
  if (r.certificate) {
    j["certificate"] = *r.certificate;
    j["certificateGraph"] = r.certificateGraph;
  }
  j["nodes"] = r.nodes;
  return j;
}

Json report_to_json(const Report& report) {
  Json j;
  j["version"] = report.version;
  Json cat = Json::array();
  for (const auto& e : report.catalog) {
    Json x;
    x["spec"] = e.spec;
    if (e.formulaOnly) x["formulaOnly"] = true;
    cat.push_back(x);
  }
  j["catalog"] = cat;
  j["checks"] = report.checks;
  Json res = Json::array();
  for (const auto& r : report.results) res.push_back(result_to_json(r));
  j["results"] = res;
  j["summary"] = {{"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"skipped", report.summary.skipped},
                  {"budgetExceeded", report.summary.budgetExceeded},
                  {"counterexamples", report.summary.counterexamples}};
  return j;
}

std::string report_to_table(const Report& report) {
  std::size_t wg = 5, wc = 5;
  for (const auto& r : report.results) {
    wg = std::max(wg, r.group.size());
    wc = std::max(wc, r.check.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << pad("group", wg) << "  " << pad("check", wc) << "  " << pad("status", 14) << "  detail\n";
  for (const auto& r : report.results) {
    std::string detail = r.status == CheckStatus::Skipped ? r.reason : "expected " + r.expected + "; observed " + r.observed;
    if (r.counterexample) detail = "COUNTEREXAMPLE " + detail;
    out << pad(r.group, wg) << "  " << pad(r.check, wc) << "  " << pad(to_string(r.status), 14) << "  " << detail
        << '\n';
  }
  const auto& s = report.summary;
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped, " << s.budgetExceeded
      << " budget exceeded, " << s.counterexamples << " counterexamples\n";
  return out.str();
}

std::string report_to_csv(const Report& report) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream out;
  out << "group,check,status,expected,observed,reason,nodes\n";
  for (const auto& r : report.results)
    out << quote(r.group) << ',' << r.check << ',' << to_string(r.status) << ',' << quote(r.expected) << ','
        << quote(r.observed) << ',' << quote(r.reason) << ',' << r.nodes << '\n';
  return out.str();
}

}  // namespace gengraph
