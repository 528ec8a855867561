#pragma once

#include "gengraph/io.hpp"
#include "gengraph/search.hpp"
#include "gengraph/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gengraph {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Skipped, BudgetExceeded };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string group;
  std::string check;
  CheckStatus status = CheckStatus::Skipped;
  std::string expected;  // formula side
  std::string observed;  // oracle side
  std::string reason;    // why skipped, or what disagreed
  std::optional<Json> certificate;
  std::string certificateGraph;  // "delta", "gamma" or "product:a1,...,as"
  std::uint64_t nodes = 0;
  bool counterexample = false;  // a failed open-question scan
};

struct CatalogEntry {
  std::string spec;
  bool formulaOnly = false;  // beyond the order guard; only checks needing no Cayley table run
};

std::vector<CatalogEntry> default_catalog();
/// One entry per line; a trailing "formula-only" marks a formula-only entry,
/// '#' starts a comment.
std::vector<CatalogEntry> read_catalog(std::istream& in);

const std::vector<std::string>& theorem_checks();
const std::vector<std::string>& question_scans();  // Q_CONN, Q_HAM, Q_CHROM
std::vector<std::string> all_checks();
bool is_known_check(const std::string& id);

struct VerifyOptions {
  SearchBudget budget;
  std::size_t maxOrder = kDefaultMaxOrder;
  std::size_t connectivityLimit = 150;  // |V(Delta)| for flow-based checks
  std::size_t dominationLimit = 120;    // |V(Delta)| for direct domination search
};

/// All requested checks on one catalog entry, in the order given. Build
/// failures become Skipped results.
std::vector<CheckResult> run_group(const CatalogEntry& entry, const std::vector<std::string>& checks,
                                   const VerifyOptions& options = {});

CheckResult run_check(const CatalogEntry& entry, const std::string& check, const VerifyOptions& options = {});

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t budgetExceeded = 0;
  std::size_t counterexamples = 0;
};

struct Report {
  std::string version = kToolVersion;
  std::vector<CatalogEntry> catalog;
  std::vector<std::string> checks;
  std::vector<CheckResult> results;  // catalog order, then check order
  ReportSummary summary;
};

/// Groups are evaluated on `jobs` worker threads; the report does not depend on it.
Report run_catalog(const std::vector<CatalogEntry>& catalog, const std::vector<std::string>& checks,
                   std::size_t jobs = 1, const VerifyOptions& options = {});

Json report_to_json(const Report& report);
Json result_to_json(const CheckResult& r);
std::string report_to_table(const Report& report);
std::string report_to_csv(const Report& report);

}  // namespace gengraph
