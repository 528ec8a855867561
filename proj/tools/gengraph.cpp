#include "gengraph/cliques.hpp"
#include "gengraph/connectivity.hpp"
#include "gengraph/constructions.hpp"
#include "gengraph/cycles.hpp"
#include "gengraph/domination.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/generating_graph.hpp"
#include "gengraph/io.hpp"
#include "gengraph/spec.hpp"
#include "gengraph/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gengraph;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::size_t maxOrder = kDefaultMaxOrder;
  std::uint64_t budget = 10'000'000;
  std::size_t jobs = 1;
  std::string format = "table";
  std::string output;
  bool noHeader = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t resolve_max_order(const CLI::Option* flag, std::size_t flagValue) {
  if (flag->count() > 0) return flagValue;
  if (const char* env = std::getenv("GENGRAPH_MAX_ORDER")) {
    try {
      const auto v = std::stoull(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("GENGRAPH_MAX_ORDER is not a positive integer: ") + env);
  }
  return kDefaultMaxOrder;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("format " + cfg.format + " not available here (use " + list + ")");
}

void emit(const Config& cfg, const std::string& body) {
  std::string text;
  if (!cfg.noHeader && cfg.format == "table") {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    text = std::string("# gengraph ") + kToolVersion + " " + stamp + "\n";
  }
  text += body;
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Group build(const std::string& text, const Config& cfg) {
  return build_group(parse_spec(text), BuildOptions{cfg.maxOrder});
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

std::string prime_list(const std::vector<PrimePower>& pp) {
  std::vector<std::string> parts;
  for (const auto& [p, a] : pp) parts.push_back(std::to_string(p) + "^" + std::to_string(a));
  return parts.empty() ? "-" : join(parts, " ");
}

int cmd_info(const Config& cfg, const std::string& spec) {
  require_format(cfg, {"table", "json"});
  const auto g = build(spec, cfg);
  Json j;
  j["group"] = to_string(parse_spec(spec));
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["cyclic"] = g.is_cyclic();
  j["twoGenerated"] = is_two_generated(g);
  const bool nil = is_nilpotent(g);
  j["nilpotent"] = nil;
  if (g.is_abelian()) j["abelianInvariants"] = abelian_invariants(g);
  j["frattiniOrder"] = frattini(g, nil ? FrattiniMethod::NilpotentFormula : FrattiniMethod::Lattice, cfg.maxOrder).size();
  if (nil) {
    const auto ns = nilpotent_structure(g);
    j["r"] = ns.r();
    j["s"] = ns.s();
    Json cyc = Json::array(), non = Json::array();
    for (const auto& [p, a] : ns.cyclicSylow) cyc.push_back({p, a});
    for (const auto& [q, b] : ns.noncyclicSylow) non.push_back({q, b});
    j["cyclicSylow"] = cyc;
    j["noncyclicSylow"] = non;
  }
  if (cfg.format == "json") {
    emit(cfg, dump(j));
    return kOk;
  }
  std::ostringstream out;
  out << "group          " << j["group"].get<std::string>() << '\n'
      << "order          " << g.order() << '\n'
      << "nilpotent      " << (nil ? "yes" : "no") << '\n'
      << "cyclic         " << (g.is_cyclic() ? "yes" : "no") << '\n'
      << "2-generated    " << (j["twoGenerated"].get<bool>() ? "yes" : "no") << '\n'
      << "|Phi|          " << j["frattiniOrder"].get<std::size_t>() << '\n';
  if (nil) {
    const auto ns = nilpotent_structure(g);
    out << "r s            " << ns.r() << ' ' << ns.s() << '\n'
        << "cyclic Sylow   " << prime_list(ns.cyclicSylow) << '\n'
        << "noncyclic      " << prime_list(ns.noncyclicSylow) << '\n';
  }
  emit(cfg, out.str());
  return kOk;
}

int cmd_graph(const Config& cfg, const std::string& spec, bool gammaOnly) {
  require_format(cfg, {"dot", "json", "table"});
  const auto g = build(spec, cfg);
  auto gm = generating_graph(g);
  if (!gammaOnly) gm = delta_graph(gm);
  if (cfg.format == "json") {
    emit(cfg, dump(graph_to_json(gm.graph, gm.labels)));
  } else if (cfg.format == "dot") {
    std::ostringstream out;
    write_dot(out, gm.graph, gm.labels, gammaOnly ? "Gamma" : "Delta");
    emit(cfg, out.str());
  } else {
    std::ostringstream out;
    for (Vertex v = 0; v < gm.graph.vertex_count(); ++v) {
      std::vector<std::string> nb;
      for (Vertex w : gm.graph.neighbours(v)) nb.push_back(gm.labels[w]);
      out << gm.labels[v] << (gm.graph.self_dominating(v) ? "*" : "") << ": " << join(nb, " ") << '\n';
    }
    emit(cfg, out.str());
  }
  return kOk;
}

std::string show(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int cmd_stats(const Config& cfg, const std::string& spec) {
  require_format(cfg, {"table", "json", "csv"});
  const auto g = build(spec, cfg);
  const auto p = degree_profile(g);
  Json j;
  j["group"] = to_string(parse_spec(spec));
  j["genProbability"] = {{"observed", show(p.genProbabilityObserved)}, {"formula", show(p.genProbabilityFormula)}};
  j["nonisolated"] = {{"observed", p.nonisolatedObserved}, {"formula", show(p.nonisolatedFormula)}};
  j["minDegree"] = {{"observed", p.minDegreeObserved}, {"formula", show(p.minDegreeFormula)}};
  Json classes = Json::array();
  for (const auto& c : p.classes)
    classes.push_back({{"subset", c.subset},
                       {"cosetOrder", c.cosetOrder},
                       {"count", c.observedCount},
                       {"alpha", show(c.alpha)},
                       {"degree", c.observedDegree},
                       {"beta", show(c.beta)},
                       {"epsilon", c.epsilon}});
  j["classes"] = classes;
  if (cfg.format == "json") {
    emit(cfg, dump(j));
    return kOk;
  }
  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "quantity,observed,formula\n"
        << "P_G(2)," << show(p.genProbabilityObserved) << ',' << show(p.genProbabilityFormula) << '\n'
        << "|V(Delta)|," << p.nonisolatedObserved << ',' << show(p.nonisolatedFormula) << '\n'
        << "delta," << p.minDegreeObserved << ',' << show(p.minDegreeFormula) << '\n';
    for (const auto& c : p.classes) {
      const std::string key = "order " + std::to_string(c.cosetOrder);
      out << "count " << key << ',' << c.observedCount << ',' << show(c.alpha) << '\n'
          << "degree " << key << ',' << c.observedDegree << ',' << show(c.beta) << '\n';
    }
  } else {
    out << "quantity                  observed    formula\n";
    auto row = [&](const std::string& k, const std::string& a, const std::string& b) {
      out << k << std::string(26 - std::min<std::size_t>(26, k.size()), ' ') << a
          << std::string(12 - std::min<std::size_t>(12, a.size()), ' ') << b << '\n';
    };
    row("P_G(2)", show(p.genProbabilityObserved), show(p.genProbabilityFormula));
    row("|V(Delta)|", std::to_string(p.nonisolatedObserved), show(p.nonisolatedFormula));
    row("delta", std::to_string(p.minDegreeObserved), show(p.minDegreeFormula));
    for (const auto& c : p.classes) {
      row("count, coset order " + std::to_string(c.cosetOrder), std::to_string(c.observedCount), show(c.alpha));
      row("degree, coset order " + std::to_string(c.cosetOrder), std::to_string(c.observedDegree), show(c.beta));
    }
  }
  emit(cfg, out.str());
  return kOk;
}

std::vector<CatalogEntry> load_catalog(const std::string& source) {
  if (source == "default") return default_catalog();
  std::ifstream in(source);
  if (!in) throw UsageError("cannot read catalog " + source);
  return read_catalog(in);
}

int report_exit(const Report& rep) {
  if (rep.summary.fail > 0) return kFail;
  if (rep.summary.budgetExceeded > 0) return kBudget;
  return kOk;
}

void emit_report(const Config& cfg, const Report& rep) {
  require_format(cfg, {"table", "json", "csv"});
  if (cfg.format == "json") emit(cfg, dump(report_to_json(rep)));
  else if (cfg.format == "csv") emit(cfg, report_to_csv(rep));
  else emit(cfg, report_to_table(rep));
}

VerifyOptions verify_options(const Config& cfg) {
  VerifyOptions o;
  o.budget.maxNodes = cfg.budget;
  o.maxOrder = cfg.maxOrder;
  return o;
}

int cmd_verify(const Config& cfg, const std::string& catalog, const std::vector<std::string>& groups,
               const std::string& checkList) {
  std::vector<CatalogEntry> entries;
  if (!groups.empty()) {
    for (const auto& g : groups) entries.push_back({g});
  } else {
    entries = load_catalog(catalog.empty() ? "default" : catalog);
  }
  std::vector<std::string> checks;
  if (checkList.empty() || checkList == "all") {
    checks = all_checks();
  } else if (checkList == "theorems") {
    checks = theorem_checks();
  } else {
    std::stringstream ss(checkList);
    for (std::string id; std::getline(ss, id, ',');) {
      if (!is_known_check(id)) throw UsageError("unknown check " + id);
      checks.push_back(id);
    }
  }
  const auto rep = run_catalog(entries, checks, cfg.jobs, verify_options(cfg));
  emit_report(cfg, rep);
  return report_exit(rep);
}

int cmd_scan(const Config& cfg, const std::string& question, const std::string& groupsFile,
             const std::vector<std::string>& groups) {
  std::string id;
  if (question == "conn") id = "Q_CONN";
  else if (question == "ham") id = "Q_HAM";
  else if (question == "chrom") id = "Q_CHROM";
  else throw UsageError("question must be conn, ham or chrom");
  std::vector<CatalogEntry> entries;
  for (const auto& g : groups) entries.push_back({g});
  if (!groupsFile.empty()) {
    const auto more = load_catalog(groupsFile);
    entries.insert(entries.end(), more.begin(), more.end());
  }
  if (entries.empty()) entries = default_catalog();
  const auto rep = run_catalog(entries, {id}, cfg.jobs, verify_options(cfg));
  emit_report(cfg, rep);
  return report_exit(rep);
}

int cmd_tdn(const Config& cfg, std::vector<std::size_t> parts) {
  require_format(cfg, {"table", "json"});
  std::sort(parts.begin(), parts.end());
  if (parts.empty() || parts.front() < 2) throw UsageError("parts must be integers >= 2");
  const auto bounds = td_bounds(parts);
  const SearchBudget budget{cfg.budget};
  const auto exact = complete_product_td(parts, budget);
  std::size_t vertices = 1;
  for (auto a : parts) vertices *= a;
  std::optional<DominationResult> search;
  std::optional<Graph> product;
  if (vertices <= 5000) product = complete_product(parts);
  if (vertices <= 1000) search = total_domination(*product, budget);
  std::optional<DominatingSet> diagonal;
  if (parts.front() > parts.size()) diagonal = product_dominating_set(parts);

  const bool solved = exact.status == DominationResult::Status::Solved;
  const bool agree = !search || search->status != DominationResult::Status::Solved || !solved ||
                     search->gammaT == exact.gammaT;
  const bool witnessed = !solved || !product || verify_certificate(*product, exact.set);

  auto tuple = [&](Vertex v) {
    std::vector<std::size_t> digits(parts.size());
    for (std::size_t c = parts.size(); c-- > 0;) {
      digits[c] = v % parts[c] + 1;
      v /= static_cast<Vertex>(parts[c]);
    }
    return digits;
  };
  Json j;
  j["parts"] = parts;
  j["lower"] = bounds.lower;
  j["upper"] = bounds.upper;
  j["t"] = bounds.t;
  if (solved) {
    j["exact"] = exact.gammaT;
    Json w = Json::array();
    for (Vertex v : exact.set.vertices) w.push_back(tuple(v));
    j["witness"] = w;
    j["certificate"] = certificate_to_json(exact.set);
  } else {
    j["exact"] = nullptr;
  }
  j["method"] = "partition search";
  if (search) j["graphSearch"] = search->status == DominationResult::Status::Solved ? Json(search->gammaT) : Json(nullptr);
  if (diagonal) {
    Json w = Json::array();
    for (Vertex v : diagonal->vertices) w.push_back(tuple(v));
    j["diagonal"] = w;
  }
  j["nodes"] = exact.nodes + (search ? search->nodes : 0);

  if (cfg.format == "json") {
    emit(cfg, dump(j));
  } else {
    std::ostringstream out;
    out << "parts   " << join([&] {
      std::vector<std::string> s;
      for (auto a : parts) s.push_back(std::to_string(a));
      return s;
    }(), " ") << '\n';
    out << "lower   " << bounds.lower << '\n' << "upper   " << bounds.upper << " (t = " << bounds.t << ")\n";
    if (solved) {
      out << "exact   " << exact.gammaT << " (search";
      if (search && search->status == DominationResult::Status::Solved) out << ", graph search " << search->gammaT;
      out << ")\n" << "witness";
      for (Vertex v : exact.set.vertices) {
        out << " (";
        const auto d = tuple(v);
        for (std::size_t c = 0; c < d.size(); ++c) out << (c ? "," : "") << d[c];
        out << ")";
      }
      out << '\n';
    } else {
      out << "exact   unknown (budget exhausted)\n";
    }
    emit(cfg, out.str());
  }
  if (!agree || !witnessed) return kFail;
  return solved ? kOk : kBudget;
}

int cmd_hamcycle(const Config& cfg, const std::string& spec) {
  require_format(cfg, {"table", "json"});
  const auto g = build(spec, cfg);
  const auto delta = delta_graph(g);
  const SearchBudget budget{cfg.budget};
  Outcome outcome;
  std::vector<Elem> cycle;
  std::string method;
  std::string reason;
  std::optional<HChords> chords;
  if (is_nilpotent(g) && g.order() >= 3) {
    const auto nc = nilpotent_hamiltonian(g, budget);
    outcome = nc.outcome;
    cycle = nc.cycle;
    method = nc.method;
    reason = nc.reason;
    if (nc.method == "p-group" && factorize(g.order())[0].first % 2 == 1) {
      const auto pc = pgroup_hamiltonian(g, budget);
      if (pc.witness)
        chords = HChords{HamCycle{to_vertices(delta, pc.witness->cycle, g.order())}, pc.witness->chordOdd,
                         pc.witness->chordEven};
    }
  } else {
    const auto h = hamiltonian(delta.graph, budget);
    outcome = h.outcome;
    method = "search";
    reason = h.reason;
    if (h.cycle)
      for (Vertex v : h.cycle->order) cycle.push_back(delta.vertexElements[v]);
  }
  Json j;
  j["group"] = to_string(parse_spec(spec));
  j["outcome"] = to_string(outcome);
  j["method"] = method;
  const HamCycle cert{to_vertices(delta, cycle, g.order())};
  if (outcome == Outcome::Yes) {
    std::vector<std::string> labels;
    for (Elem e : cycle) labels.push_back(g.label(e));
    j["cycle"] = labels;
    j["certificate"] = certificate_to_json(cert);
    if (chords) j["chords"] = certificate_to_json(*chords);
  } else {
    j["reason"] = reason;
  }
  if (cfg.format == "json") {
    emit(cfg, dump(j));
  } else {
    std::ostringstream out;
    out << "outcome " << to_string(outcome) << (method.empty() ? "" : " via " + method) << '\n';
    if (outcome == Outcome::Yes) {
      std::vector<std::string> labels;
      for (Elem e : cycle) labels.push_back(g.label(e));
      out << "cycle   " << join(labels, " ") << '\n';
      if (chords)
        out << "chords  odd (" << chords->chordOdd.first << "," << chords->chordOdd.second << "), even ("
            << chords->chordEven.first << "," << chords->chordEven.second << ")\n";
    } else {
      out << "reason  " << reason << '\n';
    }
    emit(cfg, out.str());
  }
  if (outcome == Outcome::BudgetExceeded) return kBudget;
  if (outcome == Outcome::Yes && !verify_certificate(delta.graph, cert)) return kFail;
  return kOk;
}

Graph graph_for(const std::string& on, const std::string& spec, const std::string& graphFile, const Config& cfg) {
  if (!graphFile.empty()) {
    std::ifstream in(graphFile);
    if (!in) throw UsageError("cannot read " + graphFile);
    return graph_from_json(Json::parse(in));
  }
  if (on.rfind("product:", 0) == 0) {
    std::vector<std::size_t> parts;
    std::stringstream ss(on.substr(8));
    for (std::string a; std::getline(ss, a, ',');) parts.push_back(std::stoull(a));
    return complete_product(parts);
  }
  if (spec.empty()) throw UsageError("check-cert needs a group spec, --graph or --on product:...");
  const auto g = build(spec, cfg);
  if (on == "gamma") return generating_graph(g).graph;
  if (on == "delta") return delta_graph(g).graph;
  throw UsageError("--on must be delta, gamma or product:a1,...,as");
}

int cmd_check_cert(const Config& cfg, const std::string& spec, const std::string& certFile, const std::string& on,
                   const std::string& graphFile) {
  std::ifstream in(certFile);
  if (!in) throw UsageError("cannot read " + certFile);
  Json j = Json::parse(in);
  // Accept a bare certificate or any object carrying one (a check result, hamcycle or tdn output).
  std::string graphKind = on;
  if (!j.contains("type") && j.contains("certificate")) {
    if (graphKind.empty() && j.contains("certificateGraph")) graphKind = j["certificateGraph"].get<std::string>();
    if (graphKind.empty() && j.contains("parts")) {
      std::vector<std::string> p;
      for (const auto& a : j["parts"]) p.push_back(std::to_string(a.get<std::size_t>()));
      graphKind = "product:" + join(p, ",");
    }
    j = j["certificate"];
  }
  if (graphKind.empty()) graphKind = "delta";
  const auto cert = certificate_from_json(j);
  const auto g = graph_for(graphKind, spec, graphFile, cfg);
  const bool ok = verify_certificate(g, cert);
  emit(cfg, std::string(ok ? "valid " : "invalid ") + certificate_kind(cert) + "\n");
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating graphs of finite groups: invariants, constructions and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::size_t maxOrderFlag = kDefaultMaxOrder;
  auto* maxOrderOpt = app.add_option("--max-order", maxOrderFlag, "Largest group order to build")
                          ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Search-node budget per exact search");
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify and scan")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "table, json, csv or dot")
      ->check(CLI::IsMember({"table", "json", "csv", "dot"}));
  app.add_option("--output,-o", cfg.output, "Write output to a file");
  app.add_flag("--no-header", cfg.noHeader, "Omit the timestamp header of table output");

  std::string spec;
  auto* info = app.add_subcommand("info", "Order, nilpotency and prime data of a group");
  info->add_option("spec", spec, "Group spec")->required();

  bool gammaOnly = false;
  auto* graph = app.add_subcommand("graph", "Emit Gamma(G) or Delta(G)");
  graph->add_option("spec", spec)->required();
  auto* gammaFlag = graph->add_flag("--gamma", gammaOnly, "Full generating graph");
  graph->add_flag("--delta", "Isolated vertices removed (default)")->excludes(gammaFlag);

  auto* stats = app.add_subcommand("stats", "Degree census against the closed forms");
  stats->add_option("spec", spec)->required();

  std::string catalog, checks, groupsFile, question, certFile, on, graphFile;
  std::vector<std::string> groups;
  auto* verify = app.add_subcommand("verify", "Run theorem checks over a catalog");
  verify->add_option("--catalog", catalog, "default or a catalog file");
  verify->add_option("--checks", checks, "Comma-separated check ids, 'theorems' or 'all'");
  verify->add_option("--group", groups, "Group spec (repeatable) instead of a catalog");

  auto* scan = app.add_subcommand("scan", "Open-question scan");
  scan->add_option("--question", question, "conn, ham or chrom")->required();
  scan->add_option("--groups", groupsFile, "Catalog file of groups");
  scan->add_option("--group", groups, "Group spec (repeatable)");

  std::vector<std::size_t> parts;
  auto* tdn = app.add_subcommand("tdn", "Total domination of K_{a_1} x ... x K_{a_s}");
  tdn->add_option("parts", parts, "Part sizes a_i >= 2")->required();

  auto* ham = app.add_subcommand("hamcycle", "Hamiltonian cycle of Delta(G)");
  ham->add_option("spec", spec)->required();

  auto* cert = app.add_subcommand("check-cert", "Re-verify a certificate");
  cert->add_option("spec", spec, "Group spec whose graph the certificate refers to");
  cert->add_option("--cert", certFile, "Certificate JSON")->required();
  cert->add_option("--on", on, "delta, gamma or product:a1,...,as");
  cert->add_option("--graph", graphFile, "Graph JSON instead of a group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.maxOrder = resolve_max_order(maxOrderOpt, maxOrderFlag);
    if (*info) return cmd_info(cfg, spec);
    if (*graph) {
      if (cfg.format == "table") cfg.format = "dot";
      return cmd_graph(cfg, spec, gammaOnly);
    }
    if (*stats) return cmd_stats(cfg, spec);
    if (*verify) return cmd_verify(cfg, catalog, groups, checks);
    if (*scan) return cmd_scan(cfg, question, groupsFile, groups);
    if (*tdn) return cmd_tdn(cfg, parts);
    if (*ham) return cmd_hamcycle(cfg, spec);
    if (*cert) return cmd_check_cert(cfg, spec, certFile, on, graphFile);
  } catch (const UsageError& e) {
    std::cerr << "gengraph: " << e.what() << '\n';
    return kUsage;
  } catch (const SpecError& e) {
    std::cerr << "gengraph: " << e.what() << '\n';
    return kUsage;
  } catch (const GroupError& e) {
    std::cerr << "gengraph: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "gengraph: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalMismatch& e) {
    std::cerr << "gengraph: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "gengraph: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
