#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critlab/coloring.hpp"
#include "critlab/graph.hpp"
#include "json.hpp"

namespace critlab {

enum class Branch { w_isomorphic, empty_edge, rank_bound };

std::string to_string(Branch b);

/// Instance-level record of why t_{k-1}(G) <= n - k + 3 holds for one k-critical graph.
///
/// w_isomorphic: G is W(ell, k-3) with ell odd; `isomorphism` maps G onto construct_W.
/// empty_edge:   `edge` lies in no (k-1)-clique, so the per-edge bound gives n - k + 2.
/// rank_bound:   u has the fewest (k-1)-cliques, v and x are non-adjacent neighbours of u,
///               `phi` colours G - uv with phi(u) = phi(v) = k-1, every (k-1)-clique meets
///               colour class k-2, A is a (k-1)-clique through x avoiding u and v whose
///               colour-i vertex is a_i, and the clique rows plus the unit rows of
///               a_1..a_{k-3} have full GF(2) rank r + k - 3 <= n.
struct TraceCertificate {
    Branch branch = Branch::rank_bound;
    int bound = 0;

    int ell = 0;
    std::vector<int> isomorphism;

    std::optional<Edge> edge;

    int u = -1;
    int v = -1;
    int x = -1;
    Coloring phi;
    std::vector<VertexSet> classes; // classes[i] = vertices of colour i+1
    int surviving_color = 0;
    VertexSet clique_a;
    std::vector<int> singletons;
    int rank = 0;
    int r = 0;

    bool operator==(const TraceCertificate&) const = default;
};

struct TraceCheck {
    bool ok = true;
    std::vector<std::string> reasons;
};

/// Requires n > k >= 4 and a k-critical g (verified unless `assume_critical`); throws
/// ArgumentError otherwise. A failing step on a critical input throws FalsificationError.
TraceCertificate build_trace(const Graph& g, int k, bool assume_critical = false);

/// Recomputes every certificate invariant from g without re-running the searches.
TraceCheck check_trace(const Graph& g, int k, const TraceCertificate& cert);

/// JSON with the graph's graph6 and k embedded; vertex sets as sorted index lists.
nlohmann::json certificate_to_json(const Graph& g, int k, const TraceCertificate& cert);

struct ParsedCertificate {
    Graph graph;
    int k = 0;
    TraceCertificate cert;
};

/// Throws ArgumentError on structurally malformed JSON (missing or mistyped fields).
ParsedCertificate certificate_from_json(const nlohmann::json& j);

} // namespace critlab
