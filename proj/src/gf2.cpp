#include "critlab/gf2.hpp"

#include <algorithm>
#include <bit>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

// Row-combination bookkeeping for more than 64 rows.
class Combination {
public:
    explicit Combination(std::size_t rows) : words_((rows + 63) / 64, 0) {}

    static Combination unit(std::size_t rows, std::size_t i)
    {
        Combination c(rows);
        c.words_[i / 64] |= std::uint64_t{1} << (i % 64);
        return c;
    }
    void add(const Combination& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    }
    int weight() const
    {
        int w = 0;
        for (auto x : words_) w += std::popcount(x);
        return w;
    }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

private:
    std::vector<std::uint64_t> words_;
};

} // namespace

int rank(const IncidenceMatrix& m)
{
    // pivots[b] holds a reduced row whose lowest set bit is b.
    std::uint64_t pivots[64] = {};
    int r = 0;
    for (auto row : m.rows) {
        while (row) {
            const int b = std::countr_zero(row);
            if (!pivots[b]) {
                pivots[b] = row;
                ++r;
                break;
            }
            row ^= pivots[b];
        }
    }
    return r;
}

std::optional<Dependency> find_dependency(const IncidenceMatrix& m)
{
    const std::size_t count = m.rows.size();
    std::uint64_t pivots[64] = {};
    std::vector<std::optional<Combination>> pivot_combo(64);
    std::optional<Combination> best;

    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t row = m.rows[i];
        Combination combo = Combination::unit(count, i);
        while (row) {
            const int b = std::countr_zero(row);
            if (!pivots[b]) break;
            row ^= pivots[b];
            combo.add(*pivot_combo[b]);
        }
        if (row) {
            const int b = std::countr_zero(row);
            pivots[b] = row;
            pivot_combo[b] = std::move(combo);
        } else if (!best || combo.weight() < best->weight()) {
            best = std::move(combo);
        }
    }
    if (!best) return std::nullopt;

    Dependency d;
    for (std::size_t i = 0; i < count; ++i) {
        if (!best->test(i)) continue;
        if (static_cast<int>(i) < m.clique_rows)
            d.clique_indices.push_back(static_cast<int>(i));
        else
            d.singleton_indices.push_back(static_cast<int>(i) - m.clique_rows);
    }
    return d;
}

bool verify_dependency(const IncidenceMatrix& m, const Dependency& d)
{
    if (d.size() == 0) return false;
    std::vector<int> rows;
    for (int i : d.clique_indices) {
        if (i < 0 || i >= m.clique_rows) return false;
        rows.push_back(i);
    }
    for (int j : d.singleton_indices) {
        if (j < 0 || m.clique_rows + j >= m.row_count()) return false;
        rows.push_back(m.clique_rows + j);
    }
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) return false;
    std::uint64_t sum = 0;
    for (int i : rows) sum ^= m.rows[i];
    return sum == 0;
}

int ParityProfile::pair_count(int u, int v) const
{
    const auto it = edge_count.find({std::min(u, v), std::max(u, v)});
    return it == edge_count.end() ? 0 : it->second;
}

ParityProfile parity_profile(const Graph& g, const CliqueCatalog& catalog, const std::vector<int>& family,
                             VertexSet focus_class)
{
    if (!focus_class.subset_of(g.vertices())) throw ArgumentError("focus class outside the vertex range");
    ParityProfile p;
    for (int idx : family) {
        if (idx < 0 || idx >= catalog.count()) throw ArgumentError("family index out of range");
        const VertexSet clique = catalog.members[idx];
        ++p.family_size;
        p.vertex_parity = p.vertex_parity ^ clique;
        p.lambda += (clique & focus_class).size();
        for (int v : clique)
            for (int w : clique - VertexSet::range(v + 1)) ++p.edge_count[{v, w}];
    }
    p.family_size_parity = p.family_size % 2;
    return p;
}

} // namespace critlab
