#pragma once

#include <map>
#include <optional>
#include <string>

#include "critlab/cliques.hpp"
#include "critlab/graph.hpp"

namespace critlab {

enum class Verdict { critical, not_chromatic_k, edge_not_critical, isolated_vertex };

std::string to_string(Verdict v);

struct CriticalityReport {
    int k = 0;
    int chi = 0;
    int min_degree = 0;
    /// chi(G - e) per edge; only filled when chi == k (then each value is k-1 or k).
    std::map<Edge, int> edge_chi;
    Verdict verdict = Verdict::not_chromatic_k;
    std::optional<Edge> failing_edge; // set for edge_not_critical
    std::optional<int> isolated;      // set for isolated_vertex

    bool critical() const { return verdict == Verdict::critical; }
};

/// Criticality through single-edge deletions, guarded against isolated vertices.
CriticalityReport is_k_critical(const Graph& g, int k);

/// Per-edge counts of (k-1)-cliques and the bound t_{k-1} <= n - (k - 2 - d) each implies.
struct EdgeBoundAudit {
    int n = 0;
    int k = 0;
    int total = 0; // t_{k-1}(G)
    std::map<Edge, int> per_edge_d;
    std::map<Edge, int> implied_bounds;
    int min_d = 0;
    std::optional<Edge> su_witness; // an edge with d <= 1, lowest first

    /// Every implied bound holds.
    bool passes() const;
};

/// `catalog` must hold the (k-1)-cliques of g.
EdgeBoundAudit lemma_ks_audit(const Graph& g, int k, const CliqueCatalog& catalog);

/// Smallest per-edge clique count over all edges.
int su_statistic(const EdgeBoundAudit& audit);

} // namespace critlab
