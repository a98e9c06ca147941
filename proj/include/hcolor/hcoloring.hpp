#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcolor/graph.hpp"

namespace hcolor {

// Total map from edges of g to edges of h. Valid when proper (adjacent
// edges of g map to distinct edges of h) and every vertex star of g maps
// onto some vertex star of h.
struct HColoring {
  CubicMultigraph g;
  CubicMultigraph h;
  std::vector<EdgeId> map;  // size g.edge_count(), values in [0, h.edge_count())
};

struct CheckResult {
  bool ok = false;
  std::string violation;  // names the violating vertex or edge pair
  explicit operator bool() const { return ok; }
};

// True iff both the properness and the star condition hold. Throws
// GraphMismatch if the map is not total over E(g) or refers to edges
// outside E(h).
CheckResult check(const HColoring& f);

struct SolveOptions {
  bool enumerate_all = false;
  int max_solutions = 1 << 20;
  bool symmetry_break = false;
  std::uint64_t node_limit = 1'000'000'000;
};

enum class SolveStatus { Found, ExhaustedNone, NodeLimit };

const char* solve_status_name(SolveStatus s);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t micros = 0;
  bool complete = false;  // search tree fully explored
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::ExhaustedNone;
  std::vector<std::vector<EdgeId>> witnesses;
  SolveStats stats;

  HColoring witness(const CubicMultigraph& g, const CubicMultigraph& h,
                    std::size_t i = 0) const {
    return HColoring{g, h, witnesses.at(i)};
  }
};

// Complete backtracking over assignments edge-of-g -> edge-of-h with
// per-vertex star-consistency propagation. ExhaustedNone certifies
// nonexistence; NodeLimit is inconclusive and never reported as
// nonexistence.
SolveOutcome solve(const CubicMultigraph& g, const CubicMultigraph& h,
                   const SolveOptions& opts = {});

// Exact preimage of a subset of E(h) under f.
EdgeSubset preimage(const HColoring& f, EdgeSubset s_of_h);

// Image of the map: edges of h with nonempty preimage.
EdgeSubset used_edges(const HColoring& f);

// True iff every edge of h adjacent to a used edge is used.
bool check_adjacency_closure(const HColoring& f);

// True iff adjacent edges of g always map to adjacent edges of h. Does not
// require properness or the star condition; a constant map fails because an
// edge is not adjacent to itself.
bool is_adjacency_preserving(const CubicMultigraph& g, const CubicMultigraph& h,
                             const std::vector<EdgeId>& map);

// Pull the perfect matchings of h back through f. Requires h to be the
// Petersen graph (up to isomorphism); yields 6 perfect matchings of g with
// every edge of g in exactly 2 of them.
std::vector<EdgeSubset> derive_bf_cover(const HColoring& f);

// Pull a (5,2) even cover of h back through f. Requires h to be the
// Petersen graph; yields 5 even subgraphs of g with every edge in exactly 2.
std::vector<EdgeSubset> derive_52_cover(const HColoring& f);

}  // namespace hcolor
