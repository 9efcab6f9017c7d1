#include "critlab/graph.hpp"

#include <algorithm>

#include "critlab/errors.hpp"

namespace critlab {

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw ArgumentError("vertex count must be in 0..64, got " + std::to_string(n));
    adj_.assign(n, 0);
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows)
{
    if (rows.size() > kMaxVertices) throw ArgumentError("more than 64 rows");
    Graph g;
    g.adj_ = std::move(rows);
    if (!g.valid()) throw ArgumentError("rows do not describe a simple undirected graph");
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw ArgumentError("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

int Graph::min_degree() const
{
    int best = order() == 0 ? 0 : kMaxVertices;
    for (auto row : adj_) best = std::min(best, std::popcount(row));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
    return out;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

Graph Graph::without_edge(Edge e) const
{
    Graph h = *this;
    h.remove_edge(e.u, e.v);
    return h;
}

Graph Graph::without_vertex(int v) const
{
    check_vertex(v);
    return induced(vertices() - VertexSet::single(v));
}

Graph Graph::induced(VertexSet keep) const
{
    const auto kept = keep.to_vector();
    std::vector<int> index(order(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (int w : neighbors(kept[i]) & keep) h.adj_[i] |= std::uint64_t{1} << index[w];
    return h;
}

Graph Graph::permuted(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != order()) throw ArgumentError("permutation size mismatch");
    Graph h(order());
    for (int i = 0; i < order(); ++i)
        for (int j : neighbors(i)) h.adj_[perm[i]] |= std::uint64_t{1} << perm[j];
    return h;
}

bool Graph::valid() const
{
    const int n = order();
    if (n > kMaxVertices) return false;
    const auto mask = VertexSet::range(n).bits();
    for (int i = 0; i < n; ++i) {
        if (adj_[i] & ~mask) return false;
        if (has_edge(i, i)) return false;
        for (int j : neighbors(i))
            if (!has_edge(j, i)) return false;
    }
    return true;
}

Graph construct_W(WParams p)
{
    if (p.ell < 3 || p.d < 0 || p.ell + p.d > kMaxVertices)
        throw ArgumentError("W(ell, d) needs ell >= 3, d >= 0, ell + d <= 64");
    Graph g(p.ell + p.d);
    for (int i = 0; i < p.d; ++i)
        for (int j = i + 1; j < g.order(); ++j) g.add_edge(i, j);
    for (int i = 0; i < p.ell; ++i) g.add_edge(p.d + i, p.d + (i + 1) % p.ell);
    return g;
}

Graph complete_graph(int n)
{
    if (n < 1 || n > kMaxVertices) throw ArgumentError("complete graph needs 1 <= n <= 64");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int ell)
{
    if (ell < 3) throw ArgumentError("cycle length must be >= 3");
    return construct_W({ell, 0});
}

Graph wheel_graph(int ell)
{
    if (ell < 3) throw ArgumentError("wheel rim length must be >= 3");
    return construct_W({ell, 1});
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph construct_family(Family family, int size)
{
    switch (family) {
    case Family::complete: return complete_graph(size);
    case Family::cycle: return cycle_graph(size);
    case Family::wheel: return wheel_graph(size);
    }
    throw ArgumentError("unknown family");
}

Graph hajos_join(const Graph& g1, Edge e1, const Graph& g2, Edge e2)
{
    if (!g1.has_edge(e1.u, e1.v) || e1.u == e1.v) throw ArgumentError("e1 is not an edge of g1");
    if (!g2.has_edge(e2.u, e2.v) || e2.u == e2.v) throw ArgumentError("e2 is not an edge of g2");
    const int n1 = g1.order();
    const int n = n1 + g2.order() - 1;
    if (n > kMaxVertices) throw ArgumentError("Hajos join exceeds 64 vertices");

    // a = e1.u, b = e1.v, c = e2.u, d = e2.v
    std::vector<int> map2(g2.order());
    int next = n1;
    for (int w = 0; w < g2.order(); ++w) map2[w] = (w == e2.u) ? e1.u : next++;

    Graph h(n);
    for (auto e : g1.edges())
        if (e != e1) h.add_edge(e.u, e.v);
    for (auto e : g2.edges())
        if (e != e2) h.add_edge(map2[e.u], map2[e.v]);
    h.add_edge(e1.v, map2[e2.v]);
    return h;
}

} // namespace critlab
