#pragma once

#include <optional>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// Vertex colours are 1..palette.
struct Coloring {
    std::vector<int> assignment;
    int palette = 0;

    bool operator==(const Coloring&) const = default;
};

/// Exact DSATUR backtracking. Returns a proper colouring using at most k colours, if any.
std::optional<Coloring> k_colorable(const Graph& g, int k);

/// DSATUR without backtracking; an upper bound for the chromatic number.
Coloring greedy_coloring(const Graph& g);

int chromatic_number(const Graph& g);

/// Graph with v merged into u: u keeps N(u) | N(v) minus {u, v}; v is removed.
Graph identify_vertices(const Graph& g, Edge e);

/// Proper colouring of g - uv with u and v sharing a colour, found by colouring
/// the quotient graph. Throws ArgumentError when e is not an edge.
std::optional<Coloring> identified_coloring(const Graph& g, Edge e, int palette);

/// All edges except `skip` have differently coloured ends; all colours within the palette.
bool verify_coloring(const Graph& g, const Coloring& c, std::optional<Edge> skip = std::nullopt);

/// Class i-1 holds the vertices of colour i.
std::vector<VertexSet> color_classes(const Coloring& c);

} // namespace critlab
