#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// All ell-cliques of a graph, sorted lexicographically by their increasing vertex lists.
struct CliqueCatalog {
    int ell = 0;
    int order = 0; // vertex count of the ambient graph
    std::vector<VertexSet> members;

    int count() const { return static_cast<int>(members.size()); }
};

/// Per-vertex and per-pair clique counts. Pairs that are not edges count 0.
class CliqueStats {
public:
    CliqueStats() = default;
    CliqueStats(const CliqueCatalog& catalog);

    int ell() const { return ell_; }
    int total() const { return total_; }
    int order() const { return static_cast<int>(per_vertex_.size()); }
    const std::vector<int>& per_vertex() const { return per_vertex_; }
    int vertex_count(int v) const { return per_vertex_[v]; }
    int edge_count(int u, int v) const;
    int edge_count(Edge e) const { return edge_count(e.u, e.v); }

private:
    int ell_ = 0;
    int total_ = 0;
    std::vector<int> per_vertex_;
    std::vector<int> per_pair_; // n * n, symmetric
};

CliqueCatalog enumerate_cliques(const Graph& g, int ell);
CliqueStats clique_stats(const Graph& g, int ell);
int clique_number(const Graph& g);
bool has_clique(const Graph& g, int ell);

/// Lowest-index vertex with the fewest cliques. Throws ArgumentError on an empty graph.
int min_t_vertex(const CliqueStats& stats);

/// GF(2) incidence vectors: clique rows first, then unit rows for the singletons.
struct IncidenceMatrix {
    int width = 0;
    int clique_rows = 0;
    std::vector<std::uint64_t> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
};

/// Throws ArgumentError when a singleton index is outside the ambient vertex range.
IncidenceMatrix incidence_matrix(const CliqueCatalog& catalog, const std::vector<int>& singletons = {});

/// A d-clique together with a cycle in the common neighbourhood of that clique.
struct WWitness {
    VertexSet clique;
    std::vector<int> cycle;
};

/// Some W(ell, d) subgraph for any ell >= 3, located through a non-forest common neighbourhood.
std::optional<WWitness> contains_any_W(const Graph& g, int d);

/// A W(p.ell, p.d) subgraph; the cycle has exactly p.ell vertices.
std::optional<WWitness> contains_W(const Graph& g, WParams p);

/// A map m with construct_W(p) == g.permuted(m), found through a spanning W witness.
std::optional<std::vector<int>> w_isomorphism(const Graph& g, WParams p);

} // namespace critlab
