#pragma once

#include <string>
#include <vector>

#include "hcolor/graph.hpp"

namespace hcolor {

// Isomorphism-invariant byte string: two multigraphs get equal forms iff
// they are isomorphic, respecting edge multiplicities. Capped at n <= 16.
std::string canonical_form(const CubicMultigraph& g);

std::string canonical_hex(const CubicMultigraph& g);

bool isomorphic(const CubicMultigraph& a, const CubicMultigraph& b);

// New graph with vertex v renamed perm[v]. Edge ids keep their order.
CubicMultigraph relabel(const CubicMultigraph& g, const std::vector<int>& perm);

// All vertex permutations preserving adjacency multiplicities. Intended for
// small graphs (n <= 12).
std::vector<std::vector<int>> automorphisms(const CubicMultigraph& g);

// Orbit index per edge under the automorphism group acting on edges.
// Parallel edges always share an orbit. Orbit ids are dense, numbered by
// smallest member edge.
std::vector<int> edge_orbits(const CubicMultigraph& g);

}  // namespace hcolor
