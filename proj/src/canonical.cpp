#include "critlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "canon_engine.hpp"
#include "critlab/errors.hpp"

namespace critlab {
namespace detail {

namespace {

struct Partition {
    std::array<std::uint8_t, 16> cell{}; // ordered cell index of each vertex
    int cells = 1;
};

void refine(const SmallGraph& g, Partition& p)
{
    const int n = g.n;
    while (true) {
        std::array<std::uint32_t, 16> masks{};
        for (int v = 0; v < n; ++v) masks[p.cell[v]] |= 1U << v;

        // Signature: current cell, then neighbour counts into each cell in cell order.
        // Counts are <= 15, so 16 nibbles fit one word.
        std::array<std::uint64_t, 16> counts{};
        std::array<std::uint8_t, 16> order{};
        for (int v = 0; v < n; ++v) {
            std::uint64_t packed = 0;
            for (int c = 0; c < p.cells; ++c)
                packed |= static_cast<std::uint64_t>(std::popcount(g.rows[v] & masks[c])) << (4 * (15 - c));
            counts[v] = packed;
            order[v] = static_cast<std::uint8_t>(v);
        }
        auto less = [&](std::uint8_t a, std::uint8_t b) {
            if (p.cell[a] != p.cell[b]) return p.cell[a] < p.cell[b];
            return counts[a] < counts[b];
        };
        std::sort(order.begin(), order.begin() + n, less);

        Partition next;
        int id = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && less(order[i - 1], order[i])) ++id;
            next.cell[order[i]] = static_cast<std::uint8_t>(id);
        }
        next.cells = n == 0 ? 0 : id + 1;
        if (next.cells == p.cells) return;
        p = next;
    }
}

Partition individualize(const Partition& p, int n, int x, int target)
{
    Partition q = p;
    for (int v = 0; v < n; ++v) {
        if (p.cell[v] > target || (p.cell[v] == target && v != x)) ++q.cell[v];
    }
    ++q.cells;
    return q;
}

using Perm = std::array<std::uint8_t, 16>;

class Search {
public:
    explicit Search(const SmallGraph& g) : g_(g) {}

    SmallCanon run()
    {
        Partition root;
        root.cells = g_.n == 0 ? 0 : 1;
        refine(g_, root);
        search(root, 0);
        SmallCanon out;
        out.form = best_rows_;
        out.label = best_label_;
        return out;
    }

private:
    int search(const Partition& p, int depth)
    {
        const int n = g_.n;
        if (p.cells == n) return leaf(p, depth);

        std::array<int, 16> sizes{};
        for (int v = 0; v < n; ++v) ++sizes[p.cell[v]];
        int target = 0;
        while (sizes[target] == 1) ++target;

        std::uint32_t members = 0;
        for (int v = 0; v < n; ++v)
            if (p.cell[v] == target) members |= 1U << v;

        std::uint32_t explored = 0;
        for (std::uint32_t rest = members; rest; rest &= rest - 1) {
            const int x = std::countr_zero(rest);
            if (explored && equivalent_to_explored(x, explored, depth)) continue;
            explored |= 1U << x;
            path_[depth] = static_cast<std::uint8_t>(x);
            Partition child = individualize(p, n, x, target);
            refine(g_, child);
            const int resume = search(child, depth + 1);
            if (resume < depth) return resume;
        }
        return depth - 1;
    }

    int leaf(const Partition& p, int depth)
    {
        const int n = g_.n;
        Perm label{};
        for (int v = 0; v < n; ++v) label[v] = p.cell[v];
        SmallRows rows{};
        for (int v = 0; v < n; ++v) {
            std::uint32_t r = 0;
            for (std::uint32_t nb = g_.rows[v]; nb; nb &= nb - 1) r |= 1U << label[std::countr_zero(nb)];
            rows[label[v]] = r;
        }

        if (!have_first_) {
            have_first_ = true;
            first_rows_ = best_rows_ = rows;
            first_label_ = best_label_ = label;
            first_path_ = best_path_ = path_;
            first_depth_ = best_depth_ = depth;
            return depth - 1;
        }
        if (rows == first_rows_) {
            record_automorphism(label, first_label_);
            return common_prefix(first_path_, first_depth_, depth);
        }
        if (rows == best_rows_) {
            record_automorphism(label, best_label_);
            return common_prefix(best_path_, best_depth_, depth);
        }
        if (rows < best_rows_) {
            best_rows_ = rows;
            best_label_ = label;
            best_path_ = path_;
            best_depth_ = depth;
        }
        return depth - 1;
    }

    // gamma maps this leaf's labeling onto the reference one: ref(gamma(v)) = cur(v).
    void record_automorphism(const Perm& cur, const Perm& ref)
    {
        Perm inverse_ref{};
        for (int v = 0; v < g_.n; ++v) inverse_ref[ref[v]] = static_cast<std::uint8_t>(v);
        Perm gamma{};
        for (int v = 0; v < g_.n; ++v) gamma[v] = inverse_ref[cur[v]];
        automorphisms_.push_back(gamma);
    }

    int common_prefix(const Perm& other, int other_depth, int depth) const
    {
        const int limit = std::min(other_depth, depth);
        int j = 0;
        while (j < limit && other[j] == path_[j]) ++j;
        return j;
    }

    // Orbits of the group generated by known automorphisms fixing path_[0..depth).
    bool equivalent_to_explored(int x, std::uint32_t explored, int depth) const
    {
        const int n = g_.n;
        std::array<std::uint8_t, 16> parent{};
        for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n; ++v) {
                const int a = find(v);
                const int b = find(gamma[v]);
                if (a != b) parent[a] = static_cast<std::uint8_t>(b);
            }
        }
        if (!any) return false;
        const int root = find(x);
        for (std::uint32_t rest = explored; rest; rest &= rest - 1)
            if (find(std::countr_zero(rest)) == root) return true;
        return false;
    }

    const SmallGraph& g_;
    Perm path_{};
    bool have_first_ = false;
    SmallRows first_rows_{}, best_rows_{};
    Perm first_label_{}, best_label_{};
    Perm first_path_{}, best_path_{};
    int first_depth_ = 0, best_depth_ = 0;
    std::vector<Perm> automorphisms_;
};

} // namespace

SmallCanon canonicalize(const SmallGraph& g)
{
    return Search(g).run();
}

} // namespace detail

namespace {

detail::SmallGraph to_small(const Graph& g)
{
    if (g.order() > kMaxCanonicalVertices)
        throw UnsupportedSize("canonical labeling supports at most 16 vertices, got " +
                              std::to_string(g.order()));
    detail::SmallGraph s;
    s.n = g.order();
    for (int v = 0; v < s.n; ++v) s.rows[v] = static_cast<std::uint32_t>(g.rows()[v]);
    return s;
}

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g)
{
    const auto canon = detail::canonicalize(to_small(g));
    CanonicalLabeling out;
    out.label.assign(canon.label.begin(), canon.label.begin() + g.order());
    std::vector<std::uint64_t> rows(canon.form.begin(), canon.form.begin() + g.order());
    out.form = Graph::from_rows(std::move(rows));
    return out;
}

Graph canonical_form(const Graph& g)
{
    return canonical_labeling(g).form;
}

bool is_isomorphic(const Graph& g1, const Graph& g2)
{
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    return canonical_form(g1) == canonical_form(g2);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2)
{
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    const auto c1 = canonical_labeling(g1);
    const auto c2 = canonical_labeling(g2);
    if (c1.form != c2.form) return std::nullopt;
    std::vector<int> inverse2(g2.order());
    for (int v = 0; v < g2.order(); ++v) inverse2[c2.label[v]] = v;
    std::vector<int> map(g1.order());
    for (int v = 0; v < g1.order(); ++v) map[v] = inverse2[c1.label[v]];
    return map;
}

} // namespace critlab
