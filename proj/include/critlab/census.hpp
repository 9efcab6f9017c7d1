#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/graph.hpp"
#include "json.hpp"

namespace critlab {

enum class Check { thm2, thm1, az_bound, lemma1, lemma2, lemma3, su, extended_rank, equality_census };

std::string to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
/// Every check, equality_census included.
std::set<Check> default_checks();

enum class Source { internal_generator, graph6_stream };

struct CensusConfig {
    int k = 4;
    int n_min = 1;
    int n_max = 8;
    Source source = Source::internal_generator;
    std::set<Check> checks = default_checks();
    int jobs = 1;
};

/// Throws ArgumentError when the config is inconsistent (k < 4, bad vertex range, jobs < 1).
void validate(const CensusConfig& cfg);

struct CensusRow {
    int n = 0;
    long long scanned = 0;
    long long critical = 0;
    std::optional<int> max_t;
    std::map<Check, std::vector<std::string>> violations;
    std::vector<std::string> equality; // canonical graph6, sorted, no duplicates
    std::optional<int> su_min;         // over critical graphs with n > k
    std::vector<std::string> su_findings; // graphs failing the su check where it is report-only
    double elapsed_ms = 0;

    bool passed() const;
    /// All violating graphs across checks, deduplicated in first-seen order.
    std::vector<std::string> all_violations() const;
};

struct CensusReport {
    CensusConfig config;
    std::vector<CensusRow> rows; // one per n in [n_min, n_max]
    long long skipped = 0;       // stream graphs outside the vertex range
    double elapsed_ms = 0;

    bool passed() const;
    const CensusRow* row(int n) const;
};

/// Why the filter rejected a graph as k-critical, in the order the stages run.
enum class Rejection {
    none,
    isolated_vertex,
    low_degree,
    proper_clique,
    greedy_colorable,
    chi_not_k,
    edge_not_critical
};

std::string to_string(Rejection r);

/// Staged k-criticality filter; `Rejection::none` iff g is k-critical.
Rejection filter_critical(const Graph& g, int k);

/// Checks run on one k-critical graph.
struct GraphAudit {
    int t = 0; // t_{k-1}(G)
    std::set<Check> failed;
    bool equality = false;
    std::optional<int> su_d; // min per-edge clique count, for n > k
    bool su_finding = false; // su check failed where it is report-only
};

/// `g` must already be k-critical.
GraphAudit audit_critical_graph(const Graph& g, int k, const std::set<Check>& checks);

/// Internal generator source.
CensusReport run_census(const CensusConfig& cfg);
/// graph6 lines; blank lines are skipped. Throws StreamError with the line number on bad input.
CensusReport run_census(const CensusConfig& cfg, std::istream& graph6_lines);
/// Pre-materialised graphs (used to audit several k over one enumeration).
CensusReport run_census(const CensusConfig& cfg, std::span<const Graph> graphs);

nlohmann::json report_to_json(const CensusReport& report, bool include_timing = true);

struct EqualitySummary {
    std::map<int, std::vector<std::string>> by_n;
    /// For k = 4: equality graphs not isomorphic to the odd wheel W(n-1, 1).
    std::vector<std::string> flagged;
};

EqualitySummary equality_census(const CensusReport& report, int k);

/// Graph6 used in reports: canonical form when n <= 16, the graph as given otherwise.
std::string report_graph6(const Graph& g);

} // namespace critlab
