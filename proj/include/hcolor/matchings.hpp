#pragma once

#include <optional>
#include <vector>

#include "hcolor/graph.hpp"

namespace hcolor {

// True iff no two edges in s share a vertex.
bool is_matching(const CubicMultigraph& g, EdgeSubset s);

bool is_perfect_matching(const CubicMultigraph& g, EdgeSubset s);

// Spanning edge set in which every vertex has even degree.
bool is_even_subgraph(const CubicMultigraph& g, EdgeSubset s);

// Complete list of perfect matchings by backtracking on the lowest-indexed
// uncovered vertex; deterministic order. Capped at n <= 16.
std::vector<EdgeSubset> enumerate_perfect_matchings(const CubicMultigraph& g);

bool has_perfect_matching(const CubicMultigraph& g);

// All matchings of g, the empty one included. Intended for small graphs.
std::vector<EdgeSubset> enumerate_matchings(const CubicMultigraph& g);

// 3 iff a proper 3-edge-coloring exists (complete backtracking); otherwise 4
// (the Shannon bound for maximum degree 3 caps the index at 4).
int chromatic_index_cubic(const CubicMultigraph& g);

// Proper 3-edge-coloring as three disjoint color classes covering E(g), or
// nullopt if none exists.
std::optional<std::vector<EdgeSubset>> find_3_edge_coloring(
    const CubicMultigraph& g);

// Fundamental cycles of a spanning forest; dimension m - n + #components.
std::vector<EdgeSubset> even_subgraph_basis(const CubicMultigraph& g);

// k members of the cycle space (repetition allowed) covering every edge
// exactly `multiplicity` times, or nullopt if exhaustive search fails.
// Bounded to n <= 12 and k <= 6.
std::optional<std::vector<EdgeSubset>> find_even_cover(const CubicMultigraph& g,
                                                       int k, int multiplicity);

}  // namespace hcolor
