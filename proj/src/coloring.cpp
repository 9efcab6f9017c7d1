#include "critlab/coloring.hpp"

#include <algorithm>

#include "critlab/cliques.hpp"
#include "critlab/errors.hpp"

namespace critlab {

namespace {

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, int k)
        : g_(g), limit_(std::min(k, g.order())), color_(g.order(), 0), classes_(limit_ + 1)
    {
    }

    bool run() { return extend(g_.vertices(), 0); }
    std::vector<int> assignment() const { return color_; }

private:
    int saturation(int v, int used) const
    {
        int s = 0;
        for (int c = 1; c <= used; ++c)
            if (!(g_.neighbors(v) & classes_[c]).empty()) ++s;
        return s;
    }

    // Highest saturation, ties to the lowest index.
    int pick(VertexSet uncolored, int used, int& sat) const
    {
        int best = -1;
        sat = -1;
        for (int v : uncolored) {
            const int s = saturation(v, used);
            if (s > sat) {
                sat = s;
                best = v;
            }
        }
        return best;
    }

    bool extend(VertexSet uncolored, int used)
    {
        if (uncolored.empty()) return true;
        int sat = 0;
        const int v = pick(uncolored, used, sat);
        if (sat >= limit_) return false;
        uncolored.erase(v);
        const int top = std::min(limit_, used + 1);
        for (int c = 1; c <= top; ++c) {
            if (!(g_.neighbors(v) & classes_[c]).empty()) continue;
            color_[v] = c;
            classes_[c].insert(v);
            if (extend(uncolored, std::max(used, c))) return true;
            classes_[c].erase(v);
            color_[v] = 0;
        }
        return false;
    }

    const Graph& g_;
    int limit_;
    std::vector<int> color_;
    std::vector<VertexSet> classes_;
};

} // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k)
{
    if (g.order() == 0) return Coloring{{}, std::max(k, 0)};
    if (k < 1) return std::nullopt;
    DsaturSearch search(g, k);
    if (!search.run()) return std::nullopt;
    return Coloring{search.assignment(), k};
}

Coloring greedy_coloring(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(n, 0);
    std::vector<VertexSet> classes(n + 1);
    int used = 0;
    VertexSet uncolored = g.vertices();
    while (!uncolored.empty()) {
        int best = -1;
        int best_sat = -1;
        for (int v : uncolored) {
            int s = 0;
            for (int c = 1; c <= used; ++c)
                if (!(g.neighbors(v) & classes[c]).empty()) ++s;
            if (s > best_sat) {
                best_sat = s;
                best = v;
            }
        }
        int c = 1;
        while (!(g.neighbors(best) & classes[c]).empty()) ++c;
        color[best] = c;
        classes[c].insert(best);
        used = std::max(used, c);
        uncolored.erase(best);
    }
    return Coloring{std::move(color), used};
}

int chromatic_number(const Graph& g)
{
    if (g.order() == 0) return 0;
    const int lower = clique_number(g);
    const int upper = greedy_coloring(g).palette;
    for (int k = lower; k < upper; ++k)
        if (k_colorable(g, k)) return k;
    return upper;
}

Graph identify_vertices(const Graph& g, Edge e)
{
    const VertexSet merged = (g.neighbors(e.u) | g.neighbors(e.v)) - VertexSet::single(e.u) -
                             VertexSet::single(e.v);
    Graph h = g;
    for (int w : g.neighbors(e.v)) h.remove_edge(e.v, w);
    for (int w : merged) h.add_edge(e.u, w);
    return h.without_vertex(e.v);
}

std::optional<Coloring> identified_coloring(const Graph& g, Edge e, int palette)
{
    if (e.u == e.v || e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v))
        throw ArgumentError("identified_coloring needs an edge of the graph");
    const auto quotient = k_colorable(identify_vertices(g, e), palette);
    if (!quotient) return std::nullopt;
    // Quotient vertices are the original ones with v removed.
    Coloring c{std::vector<int>(g.order()), palette};
    for (int w = 0, q = 0; w < g.order(); ++w) {
        if (w == e.v) continue;
        c.assignment[w] = quotient->assignment[q++];
    }
    c.assignment[e.v] = c.assignment[e.u];
    return c;
}

bool verify_coloring(const Graph& g, const Coloring& c, std::optional<Edge> skip)
{
    if (static_cast<int>(c.assignment.size()) != g.order()) return false;
    for (int color : c.assignment)
        if (color < 1 || color > c.palette) return false;
    for (auto e : g.edges()) {
        if (skip && *skip == e) continue;
        if (c.assignment[e.u] == c.assignment[e.v]) return false;
    }
    return true;
}

std::vector<VertexSet> color_classes(const Coloring& c)
{
    std::vector<VertexSet> classes(std::max(c.palette, 0));
    for (std::size_t v = 0; v < c.assignment.size(); ++v) {
        const int color = c.assignment[v];
        if (color >= 1 && color <= c.palette) classes[color - 1].insert(static_cast<int>(v));
    }
    return classes;
}

} // namespace critlab
