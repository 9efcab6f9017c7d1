#pragma once

// Canonical labeling for graphs on at most 16 vertices.
//
// The ordered partition is refined by neighbour counts into every cell until
// stable, a vertex of the first non-singleton cell is individualized, and the
// search tree is walked depth first. The canonical leaf is the one whose
// relabelled adjacency rows are lexicographically smallest. Leaves that
// reproduce the first or the best leaf yield automorphisms; those are used to
// jump back to the divergence point and to skip orbit-equivalent children.

#include <array>
#include <cstdint>

namespace critlab::detail {

using SmallRows = std::array<std::uint32_t, 16>;

struct SmallGraph {
    int n = 0;
    SmallRows rows{};
};

struct SmallCanon {
    SmallRows form{};                 // rows of the canonical graph
    std::array<std::uint8_t, 16> label{}; // vertex -> canonical position
};

SmallCanon canonicalize(const SmallGraph& g);

} // namespace critlab::detail
