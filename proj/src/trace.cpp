#include "critlab/trace.hpp"

#include <algorithm>

#include "critlab/cliques.hpp"
#include "critlab/criticality.hpp"
#include "critlab/errors.hpp"
#include "critlab/gf2.hpp"
#include "critlab/graph6.hpp"

namespace critlab {

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::w_isomorphic: return "w_isomorphic";
    case Branch::empty_edge: return "empty_edge";
    case Branch::rank_bound: return "rank_bound";
    }
    return "unknown";
}

namespace {

std::optional<Edge> first_empty_edge(const Graph& g, const CliqueStats& stats)
{
    for (auto e : g.edges())
        if (stats.edge_count(e) == 0) return e;
    return std::nullopt;
}

// First catalog clique through x that avoids u and v.
std::optional<VertexSet> find_clique_a(const CliqueCatalog& catalog, int u, int v, int x)
{
    for (auto c : catalog.members)
        if (c.contains(x) && !c.contains(u) && !c.contains(v)) return c;
    return std::nullopt;
}

// Lexicographically first ordered pair (v, x) of non-adjacent neighbours of u admitting A.
std::optional<std::pair<int, int>> first_admissible_pair(const Graph& g, const CliqueCatalog& catalog, int u)
{
    const VertexSet nbrs = g.neighbors(u);
    for (int v : nbrs)
        for (int x : nbrs - g.neighbors(v) - VertexSet::single(v))
            if (find_clique_a(catalog, u, v, x)) return std::make_pair(v, x);
    return std::nullopt;
}

bool meets_all(const CliqueCatalog& catalog, VertexSet cls)
{
    return std::all_of(catalog.members.begin(), catalog.members.end(),
                       [&](VertexSet c) { return !(c & cls).empty(); });
}

bool is_clique(const Graph& g, VertexSet s)
{
    for (int v : s)
        if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

// Fields owned by `b`'s siblings must keep their default values.
bool foreign_fields_clear(const TraceCertificate& c, Branch b)
{
    const bool w_clear = c.ell == 0 && c.isomorphism.empty();
    const bool edge_clear = !c.edge.has_value();
    const bool rank_clear = c.u == -1 && c.v == -1 && c.x == -1 && c.phi == Coloring{} && c.classes.empty() &&
                            c.surviving_color == 0 && c.clique_a.empty() && c.singletons.empty() && c.rank == 0 &&
                            c.r == 0;
    switch (b) {
    case Branch::w_isomorphic: return edge_clear && rank_clear;
    case Branch::empty_edge: return w_clear && rank_clear;
    case Branch::rank_bound: return w_clear && edge_clear;
    }
    return false;
}

void check_scope(const Graph& g, int k)
{
    if (k < 4 || g.order() <= k) throw ArgumentError("trace needs n > k >= 4");
}

} // namespace

TraceCertificate build_trace(const Graph& g, int k, bool assume_critical)
{
    check_scope(g, k);
    if (!assume_critical && !is_k_critical(g, k).critical())
        throw ArgumentError("trace input is not " + std::to_string(k) + "-critical");

    const int n = g.order();
    const auto fail = [&](const std::string& what) { return FalsificationError(what, graph6_encode(g)); };

    TraceCertificate cert;

    if (contains_any_W(g, k - 3)) {
        const int ell = n - k + 3;
        if (ell % 2 == 0) throw fail("W(ell, k-3) subgraph present but n - k + 3 is even");
        auto iso = w_isomorphism(g, {ell, k - 3});
        if (!iso) throw fail("W(ell, k-3) subgraph present but G is not W(n-k+3, k-3)");
        cert.branch = Branch::w_isomorphic;
        cert.ell = ell;
        cert.isomorphism = std::move(*iso);
        cert.bound = n - k + 3;
        return cert;
    }

    const CliqueCatalog catalog = enumerate_cliques(g, k - 1);
    const CliqueStats stats(catalog);

    if (auto e = first_empty_edge(g, stats)) {
        cert.branch = Branch::empty_edge;
        cert.edge = *e;
        cert.bound = n - k + 2;
        return cert;
    }

    const int r = catalog.count();
    if (r > n - 1) throw fail("more than n - 1 cliques in a W-free critical graph");
    const int u = min_t_vertex(stats);
    if (stats.vertex_count(u) > k - 2) throw fail("minimum per-vertex clique count exceeds k - 2");

    const VertexSet nbrs = g.neighbors(u);
    for (int v : nbrs) {
        for (int x : nbrs - g.neighbors(v) - VertexSet::single(v)) {
            if (stats.edge_count(u, v) > k - 3) throw fail("edge uv lies in more than k - 3 cliques");
            const auto a = find_clique_a(catalog, u, v, x);
            if (!a) continue;

            const auto phi0 = identified_coloring(g, Edge(u, v), k - 1);
            if (!phi0) throw fail("G - uv has no (k-1)-colouring identifying u and v");
            const int cu = phi0->assignment[u];
            const auto classes0 = color_classes(*phi0);
            int c = 0;
            for (int col = 1; col <= k - 1 && c == 0; ++col)
                if (col != cu && meets_all(catalog, classes0[col - 1])) c = col;
            if (c == 0) throw fail("no colour class meets every clique");

            // cu -> k-1, c -> k-2, remaining colours keep their order as 1..k-3.
            std::vector<int> relabel(k, 0);
            relabel[cu] = k - 1;
            relabel[c] = k - 2;
            for (int col = 1, next = 1; col <= k - 1; ++col)
                if (col != cu && col != c) relabel[col] = next++;
            cert.phi = Coloring{std::vector<int>(n), k - 1};
            for (int w = 0; w < n; ++w) cert.phi.assignment[w] = relabel[phi0->assignment[w]];
            cert.classes = color_classes(cert.phi);

            std::vector<int> by_color(k, -1);
            for (int w : *a) by_color[cert.phi.assignment[w]] = w;
            if (std::count(by_color.begin() + 1, by_color.end(), -1) != 0)
                throw fail("clique A does not use every colour once");

            cert.branch = Branch::rank_bound;
            cert.u = u;
            cert.v = v;
            cert.x = x;
            cert.surviving_color = k - 2;
            cert.clique_a = *a;
            cert.singletons.assign(by_color.begin() + 1, by_color.begin() + (k - 2));
            cert.r = r;
            cert.rank = rank(incidence_matrix(catalog, cert.singletons));
            cert.bound = n - k + 3;
            if (cert.rank != r + k - 3) throw fail("clique and singleton incidence vectors are dependent");
            return cert;
        }
    }
    throw fail("no pair of non-adjacent neighbours of u admits the clique A");
}

TraceCheck check_trace(const Graph& g, int k, const TraceCertificate& cert)
{
    TraceCheck out;
    const auto require = [&](bool cond, const char* reason) {
        if (!cond) {
            out.ok = false;
            out.reasons.emplace_back(reason);
        }
        return cond;
    };
    const int n = g.order();
    if (!require(k >= 4 && n > k, "instance outside n > k >= 4")) return out;
    if (!require(g.valid(), "graph invalid")) return out;

    const bool has_w = contains_any_W(g, k - 3).has_value();
    require(foreign_fields_clear(cert, cert.branch), "fields of another branch are set");

    if (cert.branch == Branch::w_isomorphic) {
        require(cert.ell == n - k + 3, "ell differs from n - k + 3");
        require(cert.ell % 2 == 1, "ell is even");
        require(cert.bound == n - k + 3, "bound differs from n - k + 3");
        std::vector<int> seen(n, 0);
        bool bijective = static_cast<int>(cert.isomorphism.size()) == n;
        for (int i = 0; bijective && i < n; ++i) {
            const int t = cert.isomorphism[i];
            bijective = t >= 0 && t < n && !seen[t]++;
        }
        if (require(bijective, "isomorphism is not a bijection") && cert.ell == n - k + 3) {
            const WParams p{cert.ell, k - 3};
            if (require(g.permuted(cert.isomorphism) == construct_W(p), "isomorphism does not map G onto W(ell, k-3)"))
                require(w_isomorphism(g, p) == cert.isomorphism, "isomorphism is not the witness-derived map");
        }
        return out;
    }

    require(!has_w, "G contains W(ell, k-3), so the W branch applies");
    const CliqueCatalog catalog = enumerate_cliques(g, k - 1);
    const CliqueStats stats(catalog);
    const auto empty_edge = first_empty_edge(g, stats);

    if (cert.branch == Branch::empty_edge) {
        require(cert.bound == n - k + 2, "bound differs from n - k + 2");
        if (!require(cert.edge.has_value(), "missing edge")) return out;
        const Edge e = *cert.edge;
        if (!require(e.u >= 0 && e.v < n && e.u != e.v && g.has_edge(e.u, e.v), "edge not in G")) return out;
        require(stats.edge_count(e) == 0, "edge lies in a (k-1)-clique");
        require(empty_edge == e, "edge is not the first clique-free edge");
        require(stats.total() <= n - k + 2, "clique count exceeds n - k + 2");
        return out;
    }

    require(!empty_edge.has_value(), "G has a clique-free edge, so the empty-edge branch applies");
    const int r = catalog.count();
    require(cert.r == r, "r differs from the clique count");
    require(r <= n - 1, "more than n - 1 cliques");
    require(cert.bound == n - k + 3, "bound differs from n - k + 3");

    const int u = cert.u, v = cert.v, x = cert.x;
    if (!require(u >= 0 && u < n && v >= 0 && v < n && x >= 0 && x < n, "u, v or x out of range")) return out;
    require(stats.vertex_count(u) <= k - 2, "t(u) exceeds k - 2");
    require(u == min_t_vertex(stats), "u is not the lowest-index minimiser of t(., G)");
    if (!require(v != x && g.has_edge(u, v) && g.has_edge(u, x) && !g.has_edge(v, x),
                 "v, x are not non-adjacent neighbours of u"))
        return out;
    require(stats.edge_count(u, v) <= k - 3, "t(uv) exceeds k - 3");

    // Colouring of G - uv.
    const auto& phi = cert.phi;
    if (!require(phi.palette == k - 1 && static_cast<int>(phi.assignment.size()) == n,
                 "colouring has the wrong palette or length"))
        return out;
    require(phi.assignment[u] == phi.assignment[v], "identified coloring endpoints differ");
    require(phi.assignment[u] == k - 1, "u is not coloured k - 1");
    require(verify_coloring(g, phi, Edge(u, v)), "colouring is not proper on G - uv");
    require(cert.classes == color_classes(phi), "colour classes disagree with the colouring");
    require(cert.surviving_color == k - 2, "surviving colour is not k - 2");
    const auto classes = color_classes(phi);
    require(meets_all(catalog, classes[k - 3]), "some clique misses colour class k - 2");

    // Clique A.
    const VertexSet a = cert.clique_a;
    const bool a_ok = a.subset_of(g.vertices()) && a.size() == k - 1 && is_clique(g, a);
    require(a_ok, "A is not a (k-1)-clique");
    require(a.contains(x) && !a.contains(u) && !a.contains(v), "A must contain x and avoid u and v");
    require(find_clique_a(catalog, u, v, x) == a, "A is not the first clique through x avoiding u and v");
    require(first_admissible_pair(g, catalog, u) == std::make_pair(v, x),
            "(v, x) is not the first admissible pair");

    std::vector<int> by_color(k, -1);
    bool rainbow = a_ok;
    for (int w : a) {
        const int col = phi.assignment[w];
        if (col < 1 || col > k - 1 || by_color[col] != -1) rainbow = false;
        else by_color[col] = w;
    }
    if (require(rainbow, "A does not use each colour exactly once"))
        require(by_color[k - 1] != u && by_color[k - 1] != v, "A's colour k-1 vertex is u or v");
    bool singles_ok = static_cast<int>(cert.singletons.size()) == k - 3;
    for (int j = 0; singles_ok && j < k - 3; ++j) singles_ok = cert.singletons[j] == by_color[j + 1];
    if (!require(singles_ok, "singletons are not a_1..a_{k-3}")) return out;

    const int computed = rank(incidence_matrix(catalog, cert.singletons));
    require(cert.rank == computed, "rank differs from the recomputed rank");
    require(computed == r + k - 3, "incidence vectors are not independent");
    require(r + k - 3 <= n, "r + k - 3 exceeds n");
    return out;
}

nlohmann::json certificate_to_json(const Graph& g, int k, const TraceCertificate& cert)
{
    nlohmann::json j;
    j["graph6"] = graph6_encode(g);
    j["k"] = k;
    j["branch"] = to_string(cert.branch);
    j["bound"] = cert.bound;
    switch (cert.branch) {
    case Branch::w_isomorphic:
        j["ell"] = cert.ell;
        j["isomorphism"] = cert.isomorphism;
        break;
    case Branch::empty_edge:
        if (cert.edge) j["edge"] = {cert.edge->u, cert.edge->v};
        break;
    case Branch::rank_bound: {
        j["u"] = cert.u;
        j["v"] = cert.v;
        j["x"] = cert.x;
        j["phi"] = cert.phi.assignment;
        j["palette"] = cert.phi.palette;
        auto classes = nlohmann::json::array();
        for (auto c : cert.classes) classes.push_back(c.to_vector());
        j["classes"] = classes;
        j["surviving_color"] = cert.surviving_color;
        j["A"] = cert.clique_a.to_vector();
        j["singletons"] = cert.singletons;
        j["rank"] = cert.rank;
        j["r"] = cert.r;
        break;
    }
    }
    return j;
}

namespace {

VertexSet set_from_json(const nlohmann::json& j)
{
    VertexSet s;
    for (const auto& v : j) {
        const int i = v.get<int>();
        if (i < 0 || i >= kMaxVertices) throw ArgumentError("vertex index out of range in certificate");
        s.insert(i);
    }
    return s;
}

} // namespace

ParsedCertificate certificate_from_json(const nlohmann::json& j)
{
    try {
        ParsedCertificate p;
        p.graph = graph6_decode(j.at("graph6").get<std::string>());
        p.k = j.at("k").get<int>();
        auto& c = p.cert;
        const auto branch = j.at("branch").get<std::string>();
        c.bound = j.at("bound").get<int>();
        if (branch == "w_isomorphic") {
            c.branch = Branch::w_isomorphic;
            c.ell = j.at("ell").get<int>();
            c.isomorphism = j.at("isomorphism").get<std::vector<int>>();
        } else if (branch == "empty_edge") {
            c.branch = Branch::empty_edge;
            const auto e = j.at("edge").get<std::vector<int>>();
            if (e.size() != 2) throw ArgumentError("edge must have two endpoints");
            c.edge = Edge(e[0], e[1]);
        } else if (branch == "rank_bound") {
            c.branch = Branch::rank_bound;
            c.u = j.at("u").get<int>();
            c.v = j.at("v").get<int>();
            c.x = j.at("x").get<int>();
            c.phi = Coloring{j.at("phi").get<std::vector<int>>(), j.at("palette").get<int>()};
            for (const auto& cls : j.at("classes")) c.classes.push_back(set_from_json(cls));
            c.surviving_color = j.at("surviving_color").get<int>();
            c.clique_a = set_from_json(j.at("A"));
            c.singletons = j.at("singletons").get<std::vector<int>>();
            c.rank = j.at("rank").get<int>();
            c.r = j.at("r").get<int>();
        } else {
            throw ArgumentError("unknown branch '" + branch + "'");
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace critlab
