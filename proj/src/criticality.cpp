#include "critlab/criticality.hpp"

#include <algorithm>

#include "critlab/coloring.hpp"
#include "critlab/errors.hpp"

namespace critlab {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::critical: return "critical";
    case Verdict::not_chromatic_k: return "not_chromatic_k";
    case Verdict::edge_not_critical: return "edge_not_critical";
    case Verdict::isolated_vertex: return "isolated_vertex";
    }
    return "unknown";
}

CriticalityReport is_k_critical(const Graph& g, int k)
{
    if (k < 2) throw ArgumentError("is_k_critical needs k >= 2");
    if (g.order() < 1) throw ArgumentError("is_k_critical needs at least one vertex");

    CriticalityReport report;
    report.k = k;
    report.chi = chromatic_number(g);
    report.min_degree = g.min_degree();

    if (report.chi == k) {
        for (auto e : g.edges())
            report.edge_chi[e] = k_colorable(g.without_edge(e), k - 1) ? k - 1 : k;
    }

    if (report.chi != k) {
        report.verdict = Verdict::not_chromatic_k;
        return report;
    }
    if (g.order() > 1) {
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 0) {
                report.verdict = Verdict::isolated_vertex;
                report.isolated = v;
                return report;
            }
        }
    }
    for (const auto& [e, chi] : report.edge_chi) {
        if (chi != k - 1) {
            report.verdict = Verdict::edge_not_critical;
            report.failing_edge = e;
            return report;
        }
    }
    report.verdict = Verdict::critical;
    return report;
}

bool EdgeBoundAudit::passes() const
{
    return std::all_of(implied_bounds.begin(), implied_bounds.end(),
                       [&](const auto& kv) { return total <= kv.second; });
}

EdgeBoundAudit lemma_ks_audit(const Graph& g, int k, const CliqueCatalog& catalog)
{
    if (catalog.ell != k - 1 || catalog.order != g.order())
        throw ArgumentError("catalog must list the (k-1)-cliques of the graph");
    const CliqueStats stats(catalog);
    EdgeBoundAudit audit;
    audit.n = g.order();
    audit.k = k;
    audit.total = stats.total();
    audit.min_d = g.edge_count() == 0 ? 0 : kMaxVertices * kMaxVertices;
    for (auto e : g.edges()) {
        const int d = stats.edge_count(e);
        audit.per_edge_d[e] = d;
        audit.implied_bounds[e] = audit.n - (k - 2 - d);
        audit.min_d = std::min(audit.min_d, d);
        if (d <= 1 && !audit.su_witness) audit.su_witness = e;
    }
    return audit;
}

int su_statistic(const EdgeBoundAudit& audit)
{
    return audit.min_d;
}

} // namespace critlab
