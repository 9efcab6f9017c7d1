#include "critlab/cliques.hpp"

#include <algorithm>
#include <functional>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

// Visits cliques of size `ell` in lexicographic order of their vertex lists.
template <class Visit>
void for_each_clique(const Graph& g, int ell, Visit&& visit)
{
    if (ell == 0) {
        visit(VertexSet{});
        return;
    }
    std::function<void(VertexSet, VertexSet, int)> extend = [&](VertexSet clique, VertexSet cand, int need) {
        if (need == 0) {
            visit(clique);
            return;
        }
        while (cand.size() >= need) {
            const int v = cand.first();
            cand.erase(v);
            VertexSet next = clique;
            next.insert(v);
            // Candidates above v keep the order lexicographic.
            extend(next, cand & g.neighbors(v), need - 1);
        }
    };
    extend(VertexSet{}, g.vertices(), ell);
}

VertexSet common_neighbourhood(const Graph& g, VertexSet clique)
{
    VertexSet common = g.vertices();
    for (int v : clique) common &= g.neighbors(v);
    return common - clique;
}

// Some cycle of the subgraph induced on `inside`, found by depth-first search.
std::optional<std::vector<int>> find_any_cycle(const Graph& g, VertexSet inside)
{
    std::vector<int> parent(g.order(), -1);
    VertexSet seen;
    for (int root : inside) {
        if (seen.contains(root)) continue;
        std::vector<int> stack{root};
        seen.insert(root);
        parent[root] = root;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v) & inside) {
                if (w == parent[v]) continue;
                if (seen.contains(w)) {
                    // Non-tree edge v-w: join the two tree paths at their common ancestor.
                    std::vector<int> up_v{v};
                    while (up_v.back() != root) up_v.push_back(parent[up_v.back()]);
                    std::vector<int> up_w{w};
                    while (std::find(up_v.begin(), up_v.end(), up_w.back()) == up_v.end())
                        up_w.push_back(parent[up_w.back()]);
                    const int meet = up_w.back();
                    std::vector<int> cycle;
                    for (int x : up_v) {
                        cycle.push_back(x);
                        if (x == meet) break;
                    }
                    for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) cycle.push_back(*it);
                    return cycle;
                }
                seen.insert(w);
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return std::nullopt;
}

// A cycle on exactly `length` vertices of the subgraph induced on `inside`.
std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, VertexSet inside, int length)
{
    if (inside.size() < length) return std::nullopt;
    std::vector<int> path;
    path.reserve(length);
    std::function<bool(VertexSet)> grow = [&](VertexSet allowed) {
        const int last = path.back();
        if (static_cast<int>(path.size()) == length) return g.has_edge(last, path.front());
        for (int w : g.neighbors(last) & allowed) {
            path.push_back(w);
            VertexSet rest = allowed;
            rest.erase(w);
            if (grow(rest)) return true;
            path.pop_back();
        }
        return false;
    };
    // The start is the smallest cycle vertex.
    for (int s : inside) {
        const VertexSet above = inside - VertexSet::range(s + 1);
        if (above.size() < length - 1) break;
        path.assign(1, s);
        if (grow(above)) return path;
    }
    return std::nullopt;
}

} // namespace

CliqueStats::CliqueStats(const CliqueCatalog& catalog)
    : ell_(catalog.ell), total_(catalog.count()), per_vertex_(catalog.order, 0),
      per_pair_(static_cast<std::size_t>(catalog.order) * catalog.order, 0)
{
    const int n = catalog.order;
    for (auto clique : catalog.members) {
        for (int v : clique) {
            ++per_vertex_[v];
            for (int w : clique - VertexSet::range(v + 1)) {
                ++per_pair_[v * n + w];
                ++per_pair_[w * n + v];
            }
        }
    }
}

int CliqueStats::edge_count(int u, int v) const
{
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ArgumentError("vertex out of range");
    return per_pair_[u * n + v];
}

CliqueCatalog enumerate_cliques(const Graph& g, int ell)
{
    if (ell < 1 || ell > kMaxVertices) throw ArgumentError("clique size must be in 1..64");
    CliqueCatalog catalog{ell, g.order(), {}};
    for_each_clique(g, ell, [&](VertexSet c) { catalog.members.push_back(c); });
    return catalog;
}

CliqueStats clique_stats(const Graph& g, int ell)
{
    return CliqueStats(enumerate_cliques(g, ell));
}

int clique_number(const Graph& g)
{
    int best = 0;
    std::function<void(int, VertexSet)> grow = [&](int size, VertexSet cand) {
        if (cand.empty()) {
            best = std::max(best, size);
            return;
        }
        while (!cand.empty() && size + cand.size() > best) {
            const int v = cand.first();
            cand.erase(v);
            grow(size + 1, cand & g.neighbors(v));
        }
    };
    grow(0, g.vertices());
    return best;
}

bool has_clique(const Graph& g, int ell)
{
    if (ell <= 0) return true;
    std::function<bool(int, VertexSet)> grow = [&](int need, VertexSet cand) {
        if (need == 0) return true;
        while (cand.size() >= need) {
            const int v = cand.first();
            cand.erase(v);
            if (grow(need - 1, cand & g.neighbors(v))) return true;
        }
        return false;
    };
    return grow(ell, g.vertices());
}

int min_t_vertex(const CliqueStats& stats)
{
    const auto& counts = stats.per_vertex();
    if (counts.empty()) throw ArgumentError("min_t_vertex on an empty graph");
    return static_cast<int>(std::min_element(counts.begin(), counts.end()) - counts.begin());
}

IncidenceMatrix incidence_matrix(const CliqueCatalog& catalog, const std::vector<int>& singletons)
{
    IncidenceMatrix m;
    m.width = catalog.order;
    m.clique_rows = catalog.count();
    m.rows.reserve(catalog.members.size() + singletons.size());
    for (auto c : catalog.members) m.rows.push_back(c.bits());
    for (int v : singletons) {
        if (v < 0 || v >= catalog.order)
            throw ArgumentError("singleton index " + std::to_string(v) + " out of range");
        m.rows.push_back(VertexSet::single(v).bits());
    }
    return m;
}

std::optional<WWitness> contains_any_W(const Graph& g, int d)
{
    if (d < 0) throw ArgumentError("W clique size must be >= 0");
    std::optional<WWitness> found;
    for_each_clique(g, d, [&](VertexSet clique) {
        if (found) return;
        const VertexSet common = common_neighbourhood(g, clique);
        if (common.size() < 3) return;
        if (auto cycle = find_any_cycle(g, common)) found = WWitness{clique, std::move(*cycle)};
    });
    return found;
}

std::optional<WWitness> contains_W(const Graph& g, WParams p)
{
    if (p.ell < 3 || p.d < 0) throw ArgumentError("W(ell, d) needs ell >= 3, d >= 0");
    if (p.ell + p.d > g.order()) return std::nullopt;
    std::optional<WWitness> found;
    for_each_clique(g, p.d, [&](VertexSet clique) {
        if (found) return;
        const VertexSet common = common_neighbourhood(g, clique);
        if (auto cycle = find_cycle_of_length(g, common, p.ell)) found = WWitness{clique, std::move(*cycle)};
    });
    return found;
}

std::optional<std::vector<int>> w_isomorphism(const Graph& g, WParams p)
{
    if (p.ell + p.d != g.order()) return std::nullopt;
    const Graph target = construct_W(p);
    if (g.edge_count() != target.edge_count()) return std::nullopt;
    const auto witness = contains_W(g, p);
    if (!witness) return std::nullopt;
    std::vector<int> map(g.order(), -1);
    int next = 0;
    for (int v : witness->clique) map[v] = next++;
    for (int v : witness->cycle) map[v] = next++;
    if (g.permuted(map) != target) return std::nullopt;
    return map;
}

} // namespace critlab
