#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace critlab {

inline constexpr int kMaxVertices = 64;

/// Subset of 0..63 stored as one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Lowest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Undirected vertex pair, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    constexpr Edge() = default;
    constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on at most 64 vertices, one neighbor bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds from neighbor rows; throws ArgumentError unless the rows are symmetric,
    /// loop-free and confined to 0..n-1.
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    const std::vector<std::uint64_t>& rows() const { return adj_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int edge_count() const;
    int min_degree() const;
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    Graph without_edge(Edge e) const;
    Graph without_vertex(int v) const;
    /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
    Graph induced(VertexSet keep) const;
    /// new_graph has edge {perm[i], perm[j]} for every edge {i, j}.
    Graph permuted(const std::vector<int>& perm) const;

    /// Checks symmetry, irreflexivity and the high-bit invariant.
    bool valid() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::uint64_t> adj_;
};

/// W(ell, d): clique K_d on 0..d-1 joined to the cycle d, d+1, ..., d+ell-1.
struct WParams {
    int ell = 3;
    int d = 0;
};

Graph construct_W(WParams p);
Graph complete_graph(int n);
Graph cycle_graph(int ell);
/// Wheel with rim length ell; identical to construct_W({ell, 1}).
Graph wheel_graph(int ell);
Graph path_graph(int n);

enum class Family { complete, cycle, wheel };
Graph construct_family(Family family, int size);

/// Hajós join: disjoint union, delete a-b and c-d, identify a with c, add b-d.
/// Vertices of g1 keep their labels; g2's vertices follow, with c merged into a.
Graph hajos_join(const Graph& g1, Edge e1, const Graph& g2, Edge e2);

} // namespace critlab
