#pragma once

#include <optional>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

inline constexpr int kMaxCanonicalVertices = 16;

/// `form == g.permuted(label)`; isomorphic inputs share the same `form`.
struct CanonicalLabeling {
    Graph form;
    std::vector<int> label;
};

/// Throws UnsupportedSize when g has more than 16 vertices.
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);

/// Equality of canonical forms; graphs of different order are simply not isomorphic.
bool is_isomorphic(const Graph& g1, const Graph& g2);

/// A bijection `map` with g2 == g1.permuted(map), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);

} // namespace critlab
