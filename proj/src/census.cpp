#include "critlab/census.hpp"

#include <algorithm>
#include <chrono>

#include "critlab/canonical.hpp"
#include "critlab/cliques.hpp"
#include "critlab/coloring.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/generate.hpp"
#include "critlab/gf2.hpp"
#include "critlab/graph6.hpp"
#include "critlab/trace.hpp"
#include "parallel.hpp"

namespace critlab {

namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::thm2, "thm2"},
    {Check::thm1, "thm1"},
    {Check::az_bound, "az_bound"},
    {Check::lemma1, "lemma1"},
    {Check::lemma2, "lemma2"},
    {Check::lemma3, "lemma3"},
    {Check::su, "su"},
    {Check::extended_rank, "extended_rank"},
    {Check::equality_census, "equality_census"},
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// su failures are violations for 4 <= k <= 7 and findings otherwise.
bool su_is_enforced(int k) { return k >= 4 && k <= 7; }

struct Outcome {
    bool critical = false;
    GraphAudit audit;
};

void process(const CensusConfig& cfg, std::span<const Graph> graphs, CensusRow& row)
{
    std::vector<Outcome> outcomes(graphs.size());
    detail::parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
        if (filter_critical(graphs[i], cfg.k) != Rejection::none) return;
        outcomes[i].critical = true;
        outcomes[i].audit = audit_critical_graph(graphs[i], cfg.k, cfg.checks);
    });

    std::set<std::string> equality(row.equality.begin(), row.equality.end());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++row.scanned;
        const auto& out = outcomes[i];
        if (!out.critical) continue;
        ++row.critical;
        const auto& a = out.audit;
        row.max_t = std::max(row.max_t.value_or(a.t), a.t);
        if (a.su_d) row.su_min = std::min(row.su_min.value_or(*a.su_d), *a.su_d);
        if (a.failed.empty() && !a.equality && !a.su_finding) continue;
        const std::string g6 = report_graph6(graphs[i]);
        for (auto c : a.failed) row.violations[c].push_back(g6);
        if (a.equality) equality.insert(g6);
        if (a.su_finding) row.su_findings.push_back(g6);
    }
    row.equality.assign(equality.begin(), equality.end());
}

CensusReport census_over(const CensusConfig& cfg, std::span<const Graph> graphs, long long skipped)
{
    validate(cfg);
    const auto start = Clock::now();
    CensusReport report;
    report.config = cfg;
    report.skipped = skipped;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const auto row_start = Clock::now();
        std::vector<Graph> bucket;
        for (const auto& g : graphs)
            if (g.order() == n) bucket.push_back(g);
        CensusRow row;
        row.n = n;
        process(cfg, bucket, row);
        row.elapsed_ms = ms_since(row_start);
        report.rows.push_back(std::move(row));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

} // namespace

std::string to_string(Check c)
{
    for (const auto& [check, name] : kCheckNames)
        if (check == c) return std::string(name);
    return "unknown";
}

std::optional<Check> parse_check(std::string_view name)
{
    for (const auto& [check, n] : kCheckNames)
        if (n == name) return check;
    return std::nullopt;
}

std::set<Check> default_checks()
{
    std::set<Check> all;
    for (const auto& entry : kCheckNames) all.insert(entry.first);
    return all;
}

void validate(const CensusConfig& cfg)
{
    if (cfg.k < 4) throw ArgumentError("census checks need k >= 4");
    if (cfg.n_min < 1 || cfg.n_max > kMaxVertices || cfg.n_min > cfg.n_max)
        throw ArgumentError("vertex range must satisfy 1 <= n_min <= n_max <= 64");
    if (cfg.source == Source::internal_generator && cfg.n_max > kMaxGeneratedVertices)
        throw ArgumentError("the internal generator is limited to n <= 10; use a graph6 stream");
    if (cfg.jobs < 1) throw ArgumentError("jobs must be >= 1");
}

bool CensusRow::passed() const
{
    return std::all_of(violations.begin(), violations.end(), [](const auto& kv) { return kv.second.empty(); });
}

std::vector<std::string> CensusRow::all_violations() const
{
    std::vector<std::string> out;
    for (const auto& [check, graphs] : violations)
        for (const auto& g6 : graphs)
            if (std::find(out.begin(), out.end(), g6) == out.end()) out.push_back(g6);
    return out;
}

bool CensusReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.passed(); });
}

const CensusRow* CensusReport::row(int n) const
{
    for (const auto& r : rows)
        if (r.n == n) return &r;
    return nullptr;
}

std::string to_string(Rejection r)
{
    switch (r) {
    case Rejection::none: return "none";
    case Rejection::isolated_vertex: return "isolated_vertex";
    case Rejection::low_degree: return "low_degree";
    case Rejection::proper_clique: return "proper_clique";
    case Rejection::greedy_colorable: return "greedy_colorable";
    case Rejection::chi_not_k: return "chi_not_k";
    case Rejection::edge_not_critical: return "edge_not_critical";
    }
    return "unknown";
}

Rejection filter_critical(const Graph& g, int k)
{
    const int n = g.order();
    if (n > 1)
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0) return Rejection::isolated_vertex;
    if (g.min_degree() < k - 1) return Rejection::low_degree;
    if (n > k && has_clique(g, k)) return Rejection::proper_clique;
    if (greedy_coloring(g).palette <= k - 1) return Rejection::greedy_colorable;
    if (k_colorable(g, k - 1) || !k_colorable(g, k)) return Rejection::chi_not_k;
    for (auto e : g.edges())
        if (!k_colorable(g.without_edge(e), k - 1)) return Rejection::edge_not_critical;
    return Rejection::none;
}

GraphAudit audit_critical_graph(const Graph& g, int k, const std::set<Check>& checks)
{
    const int n = g.order();
    const auto enabled = [&](Check c) { return checks.count(c) > 0; };
    GraphAudit a;
    const CliqueCatalog catalog = enumerate_cliques(g, k - 1);
    a.t = catalog.count();
    const int t = a.t;

    if (enabled(Check::thm2) && n > k && t > n - k + 3) a.failed.insert(Check::thm2);
    // t < n - 3k/5 + 2, scaled by 5
    if (enabled(Check::thm1) && n > k && !(5 * t < 5 * n - 3 * k + 10)) a.failed.insert(Check::thm1);
    if (enabled(Check::az_bound)) {
        const bool complete = n == k && g.edge_count() == n * (n - 1) / 2;
        if (t > n || (t == n && !complete)) a.failed.insert(Check::az_bound);
    }

    const bool need_w = enabled(Check::lemma1) || enabled(Check::lemma2);
    const bool has_w = need_w && contains_any_W(g, k - 3).has_value();
    if (enabled(Check::lemma1) && has_w) {
        const int ell = n - k + 3;
        bool ok = ell % 2 == 1;
        if (ok) {
            const WParams p{ell, k - 3};
            ok = n <= kMaxCanonicalVertices ? is_isomorphic(g, construct_W(p)) : w_isomorphism(g, p).has_value();
        }
        if (!ok) a.failed.insert(Check::lemma1);
    }
    if (enabled(Check::lemma2) && !has_w && rank(incidence_matrix(catalog)) != t) a.failed.insert(Check::lemma2);

    if (enabled(Check::lemma3) || enabled(Check::su)) {
        const EdgeBoundAudit audit = lemma_ks_audit(g, k, catalog);
        if (enabled(Check::lemma3) && !audit.passes()) a.failed.insert(Check::lemma3);
        if (enabled(Check::su) && n > k) {
            a.su_d = su_statistic(audit);
            if (*a.su_d > 1) {
                if (su_is_enforced(k))
                    a.failed.insert(Check::su);
                else
                    a.su_finding = true;
            }
        }
    }

    if (enabled(Check::extended_rank) && n > k) {
        try {
            const auto cert = build_trace(g, k, /*assume_critical=*/true);
            const auto verdict = check_trace(g, k, cert);
            if (!verdict.ok) a.failed.insert(Check::extended_rank);
            if (cert.branch == Branch::rank_bound && (cert.rank != cert.r + k - 3 || cert.rank > n))
                a.failed.insert(Check::extended_rank);
        } catch (const FalsificationError&) {
            a.failed.insert(Check::extended_rank);
        }
    }

    if (enabled(Check::equality_census) && n > k && t == n - k + 3) a.equality = true;
    return a;
}

CensusReport run_census(const CensusConfig& cfg)
{
    validate(cfg);
    if (cfg.source != Source::internal_generator)
        throw ArgumentError("graph6 stream source needs an input stream");
    const auto start = Clock::now();
    CensusReport report;
    report.config = cfg;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const auto row_start = Clock::now();
        CensusRow row;
        row.n = n;
        generate_batches(n, cfg.jobs, [&](std::vector<Graph>&& batch) { process(cfg, batch, row); });
        row.elapsed_ms = ms_since(row_start);
        report.rows.push_back(std::move(row));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

CensusReport run_census(const CensusConfig& cfg, std::istream& graph6_lines)
{
    validate(cfg);
    std::vector<Graph> graphs;
    long long skipped = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(graph6_lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const DecodeError& e) {
            throw StreamError(e.what(), line_no);
        }
        if (g.order() < cfg.n_min || g.order() > cfg.n_max) {
            ++skipped;
            continue;
        }
        graphs.push_back(std::move(g));
    }
    return census_over(cfg, graphs, skipped);
}

CensusReport run_census(const CensusConfig& cfg, std::span<const Graph> graphs)
{
    long long skipped = 0;
    for (const auto& g : graphs)
        if (g.order() < cfg.n_min || g.order() > cfg.n_max) ++skipped;
    return census_over(cfg, graphs, skipped);
}

nlohmann::json report_to_json(const CensusReport& report, bool include_timing)
{
    using nlohmann::json;
    const auto& cfg = report.config;
    json checks = json::array();
    for (auto c : cfg.checks) checks.push_back(to_string(c));
    json out;
    out["config"] = {
        {"k", cfg.k},
        {"n_min", cfg.n_min},
        {"n_max", cfg.n_max},
        {"source", cfg.source == Source::internal_generator ? "gen" : "stream"},
        {"checks", checks},
    };
    json rows = json::array();
    for (const auto& row : report.rows) {
        json by_check = json::object();
        for (const auto& [check, graphs] : row.violations) by_check[to_string(check)] = graphs;
        json r = {
            {"n", row.n},
            {"scanned", row.scanned},
            {"critical", row.critical},
            {"max_t", row.max_t ? json(*row.max_t) : json(nullptr)},
            {"violations", row.all_violations()},
            {"violations_by_check", by_check},
            {"equality", row.equality},
            {"su_min", row.su_min ? json(*row.su_min) : json(nullptr)},
            {"su_findings", row.su_findings},
        };
        if (include_timing) r["elapsed_ms"] = row.elapsed_ms;
        rows.push_back(std::move(r));
    }
    out["per_n"] = std::move(rows);
    out["skipped"] = report.skipped;
    out["passed"] = report.passed();
    if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

EqualitySummary equality_census(const CensusReport& report, int k)
{
    EqualitySummary summary;
    for (const auto& row : report.rows) {
        if (row.equality.empty()) continue;
        summary.by_n[row.n] = row.equality;
        if (k != 4) continue;
        for (const auto& g6 : row.equality) {
            const Graph g = graph6_decode(g6);
            const int ell = g.order() - 1;
            bool wheel = ell >= 3 && ell % 2 == 1;
            if (wheel) {
                const WParams p{ell, 1};
                wheel = g.order() <= kMaxCanonicalVertices ? is_isomorphic(g, construct_W(p))
                                                           : w_isomorphism(g, p).has_value();
            }
            if (!wheel) summary.flagged.push_back(g6);
        }
    }
    return summary;
}

std::string report_graph6(const Graph& g)
{
    return graph6_encode(g.order() <= kMaxCanonicalVertices ? canonical_form(g) : g);
}

} // namespace critlab
