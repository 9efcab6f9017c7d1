#include "critlab/generate.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "canon_engine.hpp"
#include "critlab/errors.hpp"
#include "parallel.hpp"

namespace critlab {

namespace {

using detail::SmallGraph;
using Packed = std::uint64_t; // upper triangle, pair (i < j) at bit j(j-1)/2 + i

constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

Packed pack(const detail::SmallRows& rows, int n)
{
    Packed p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((rows[j] >> i) & 1U) p |= Packed{1} << pair_bit(i, j);
    return p;
}

SmallGraph unpack(Packed p, int n)
{
    SmallGraph g;
    g.n = n;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((p >> pair_bit(i, j)) & 1U) {
                g.rows[i] |= 1U << j;
                g.rows[j] |= 1U << i;
            }
    return g;
}

SmallGraph remove_vertex(const SmallGraph& g, int w)
{
    SmallGraph h;
    h.n = g.n - 1;
    const std::uint32_t low = (1U << w) - 1;
    for (int v = 0, t = 0; v < g.n; ++v) {
        if (v == w) continue;
        const std::uint32_t row = g.rows[v];
        h.rows[t++] = (row & low) | ((row >> 1) & ~low);
    }
    return h;
}

// Children of a canonical parent on m vertices, each the canonical form of a graph
// on m + 1 vertices whose canonical deletion vertex gives back the parent.
std::vector<Packed> children(Packed parent, int m)
{
    const SmallGraph p = unpack(parent, m);
    std::array<int, 16> degree{};
    for (int v = 0; v < m; ++v) degree[v] = std::popcount(p.rows[v]);

    std::vector<Packed> out;
    std::unordered_set<Packed> seen;
    for (std::uint32_t s = 0; s < (1U << m); ++s) {
        // The canonical labeling puts a maximum-degree vertex last.
        const int new_degree = std::popcount(s);
        bool feasible = true;
        for (int v = 0; v < m && feasible; ++v) feasible = degree[v] + static_cast<int>((s >> v) & 1U) <= new_degree;
        if (!feasible) continue;

        SmallGraph g = p;
        g.n = m + 1;
        g.rows[m] = s;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) g.rows[std::countr_zero(rest)] |= 1U << m;

        const auto canon = detail::canonicalize(g);
        int last = 0;
        while (canon.label[last] != m) ++last;
        if (last != m) {
            const auto reduced = detail::canonicalize(remove_vertex(g, last));
            if (pack(reduced.form, m) != parent) continue;
        }
        const Packed child = pack(canon.form, m + 1);
        if (seen.insert(child).second) out.push_back(child);
    }
    return out;
}

Graph to_graph(Packed p, int n)
{
    const SmallGraph s = unpack(p, n);
    std::vector<std::uint64_t> rows(s.rows.begin(), s.rows.begin() + n);
    return Graph::from_rows(std::move(rows));
}

std::vector<Packed> level(int n, int jobs)
{
    std::vector<Packed> current{0}; // the single graph on 0 vertices
    for (int m = 0; m < n; ++m) {
        std::vector<std::vector<Packed>> per_parent(current.size());
        detail::parallel_for(current.size(), jobs, [&](std::size_t i) { per_parent[i] = children(current[i], m); });
        std::vector<Packed> next;
        for (auto& kids : per_parent) next.insert(next.end(), kids.begin(), kids.end());
        current = std::move(next);
    }
    return current;
}

void check_size(int n)
{
    if (n < 0 || n > kMaxGeneratedVertices)
        throw UnsupportedSize("internal generation supports 0..10 vertices, got " + std::to_string(n));
}

} // namespace

std::vector<Graph> generate_all(int n, int jobs)
{
    std::vector<Graph> out;
    generate_batches(n, jobs, [&](std::vector<Graph>&& batch) {
        for (auto& g : batch) out.push_back(std::move(g));
    });
    return out;
}

void generate_batches(int n, int jobs, const std::function<void(std::vector<Graph>&&)>& sink)
{
    check_size(n);
    if (jobs < 1) throw ArgumentError("jobs must be >= 1");
    if (n == 0) {
        sink({Graph(0)});
        return;
    }
    const std::vector<Packed> parents = level(n - 1, jobs);
    constexpr std::size_t kParentsPerBatch = 512;
    for (std::size_t start = 0; start < parents.size(); start += kParentsPerBatch) {
        const std::size_t stop = std::min(parents.size(), start + kParentsPerBatch);
        std::vector<std::vector<Packed>> per_parent(stop - start);
        detail::parallel_for(stop - start, jobs,
                             [&](std::size_t i) { per_parent[i] = children(parents[start + i], n - 1); });
        std::vector<Graph> batch;
        for (const auto& kids : per_parent)
            for (auto p : kids) batch.push_back(to_graph(p, n));
        sink(std::move(batch));
    }
}

} // namespace critlab
