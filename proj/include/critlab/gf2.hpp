#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "critlab/cliques.hpp"

namespace critlab {

/// A nonempty set of rows summing to zero over GF(2). Clique indices refer to
/// catalog order; singleton indices count from the first singleton row.
struct Dependency {
    std::vector<int> clique_indices;
    std::vector<int> singleton_indices;

    int size() const { return static_cast<int>(clique_indices.size() + singleton_indices.size()); }
};

int rank(const IncidenceMatrix& m);

/// Empty iff the rows are linearly independent. Among the zero combinations met
/// during elimination the one with the fewest rows is returned.
std::optional<Dependency> find_dependency(const IncidenceMatrix& m);

bool verify_dependency(const IncidenceMatrix& m, const Dependency& d);

/// Parities and counts of a clique subfamily.
struct ParityProfile {
    int family_size = 0;
    int family_size_parity = 0;
    VertexSet vertex_parity;                  // bit w set iff w lies in an odd number of members
    std::map<std::pair<int, int>, int> edge_count; // pairs covered by at least one member
    int lambda = 0;                           // incidences (z, T) with z in the focus class

    int vertex_parity_of(int w) const { return vertex_parity.contains(w) ? 1 : 0; }
    int pair_count(int u, int v) const;
};

/// `family` indexes into `catalog`; throws ArgumentError on a bad index.
ParityProfile parity_profile(const Graph& g, const CliqueCatalog& catalog, const std::vector<int>& family,
                             VertexSet focus_class);

} // namespace critlab
