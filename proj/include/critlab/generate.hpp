#pragma once

#include <functional>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

inline constexpr int kMaxGeneratedVertices = 10;

/// One canonical representative per isomorphism class of graphs on n vertices,
/// by canonical augmentation. Throws UnsupportedSize for n > 10.
std::vector<Graph> generate_all(int n, int jobs = 1);

/// Streaming form of generate_all: batches arrive in a fixed order regardless of `jobs`.
void generate_batches(int n, int jobs, const std::function<void(std::vector<Graph>&&)>& sink);

} // namespace critlab
