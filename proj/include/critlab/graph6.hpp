#pragma once

#include <string>
#include <string_view>

#include "critlab/graph.hpp"

namespace critlab {

/// Strict graph6 decoding: shortest-form header, bytes in 63..126, exact length,
/// zero padding bits. Throws DecodeError otherwise or when n > 64.
Graph graph6_decode(std::string_view text);

/// Canonical graph6 text (no trailing newline).
std::string graph6_encode(const Graph& g);

} // namespace critlab
