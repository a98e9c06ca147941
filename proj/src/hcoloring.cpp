#include "hcolor/hcoloring.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <mutex>

#include "hcolor/canonical.hpp"
#include "hcolor/matchings.hpp"

namespace hcolor {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "Found";
    case SolveStatus::ExhaustedNone: return "Exhausted-None";
    case SolveStatus::NodeLimit: return "NodeLimit";
  }
  return "Unknown";
}

CheckResult check(const HColoring& f) {
  const auto& g = f.g;
  const auto& h = f.h;
  if (static_cast<int>(f.map.size()) != g.edge_count())
    throw Error(ErrorCode::GraphMismatch,
                "map covers " + std::to_string(f.map.size()) + " edges, g has " +
                    std::to_string(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (f.map[e] < 0 || f.map[e] >= h.edge_count())
      throw Error(ErrorCode::GraphMismatch,
                  "image of edge " + std::to_string(e) + " out of range");

  // Properness: adjacent edges of g get distinct images. Every pair of
  // adjacent edges shares a vertex, so checking per star suffices.
  for (int x = 0; x < g.vertex_count(); ++x) {
    const auto& inc = g.incident(x);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (f.map[inc[i]] == f.map[inc[j]])
          return {false, "edges " + std::to_string(inc[i]) + " and " +
                             std::to_string(inc[j]) + " at vertex " +
                             std::to_string(x) + " share image " +
                             std::to_string(f.map[inc[i]])};
  }

  // Star condition: the image of each star of g equals some star of h.
  for (int x = 0; x < g.vertex_count(); ++x) {
    EdgeSubset image;
    for (EdgeId e : g.incident(x)) image.set(f.map[e]);
    bool found = false;
    for (int y = 0; y < h.vertex_count() && !found; ++y)
      if (h.star(y) == image) found = true;
    if (!found)
      return {false,
              "star of vertex " + std::to_string(x) + " maps to no star of h"};
  }
  return {true, ""};
}

namespace {

struct Solver {
  const CubicMultigraph& g;
  const CubicMultigraph& h;
  SolveOptions opts;

  int mg, mh, ng, nh;
  std::vector<EdgeId> order;            // edges of g in BFS order
  std::vector<int> rank;                // position of each edge in `order`
  std::vector<std::uint32_t> star_h;    // per h-vertex, mask over E(h)
  std::vector<std::pair<int, int>> h_ends;

  std::vector<int> assignment;          // per g-edge, image or -1
  std::vector<std::uint32_t> cand;      // per g-vertex, candidate h-vertices
  std::vector<std::uint32_t> used_at;   // per g-vertex, images used at it

  std::vector<std::vector<EdgeId>> witnesses;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool done = false;

  Solver(const CubicMultigraph& g_, const CubicMultigraph& h_,
         const SolveOptions& o)
      : g(g_), h(h_), opts(o) {
    mg = g.edge_count();
    mh = h.edge_count();
    ng = g.vertex_count();
    nh = h.vertex_count();
    star_h.resize(nh);
    for (int y = 0; y < nh; ++y)
      star_h[y] = static_cast<std::uint32_t>(h.star(y).bits);
    h_ends = h.edges();

    // Edge order: BFS over vertices of g, each vertex contributing its not
    // yet listed incident edges in id order.
    std::vector<char> seen_v(ng, 0), seen_e(mg, 0);
    for (int root = 0; root < ng; ++root) {
      if (seen_v[root]) continue;
      std::vector<int> queue = {root};
      seen_v[root] = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (EdgeId e : g.incident(v)) {
          if (!seen_e[e]) {
            seen_e[e] = 1;
            order.push_back(e);
          }
          int w = g.other_endpoint(e, v);
          if (!seen_v[w]) {
            seen_v[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    rank.assign(mg, 0);
    for (int i = 0; i < mg; ++i) rank[order[i]] = i;

    assignment.assign(mg, -1);
    cand.assign(ng, (nh >= 32) ? ~0u : ((1u << nh) - 1));
    used_at.assign(ng, 0);
  }

  std::uint32_t allowed_at(int x) const {
    std::uint32_t mask = 0;
    std::uint32_t cs = cand[x];
    while (cs) {
      int y = std::countr_zero(cs);
      cs &= cs - 1;
      mask |= star_h[y];
    }
    return mask & ~used_at[x];
  }

  std::uint32_t domain(EdgeId e) const {
    auto [u, v] = g.endpoints(e);
    return allowed_at(u) & allowed_at(v);
  }

  // Assign image c to edge e; returns false on an empty candidate set.
  bool apply(EdgeId e, int c) {
    assignment[e] = c;
    auto [cu, cv] = h_ends[c];
    std::uint32_t ends = (1u << cu) | (1u << cv);
    auto [u, v] = g.endpoints(e);
    for (int x : {u, v}) {
      cand[x] &= ends;
      used_at[x] |= (1u << c);
      if (cand[x] == 0) return false;
    }
    return true;
  }

  void record_witness() {
    witnesses.push_back(assignment);
    if (!opts.enumerate_all ||
        static_cast<int>(witnesses.size()) >= opts.max_solutions)
      done = true;
  }

  void search() {
    if (done || aborted) return;
    // MRV: smallest domain, ties by BFS rank.
    int best_edge = -1, best_count = 33;
    std::uint32_t best_domain = 0;
    for (int i = 0; i < mg; ++i) {
      EdgeId e = order[i];
      if (assignment[e] != -1) continue;
      std::uint32_t d = domain(e);
      int c = std::popcount(d);
      if (c < best_count) {
        best_count = c;
        best_edge = e;
        best_domain = d;
        if (c == 0) break;
      }
    }
    if (best_edge == -1) {
      record_witness();
      return;
    }
    if (best_count == 0) return;

    std::uint32_t d = best_domain;
    while (d) {
      int c = std::countr_zero(d);
      d &= d - 1;
      if (++nodes > opts.node_limit) {
        aborted = true;
        return;
      }
      auto saved_assignment = assignment[best_edge];
      auto saved_cand = cand;
      auto saved_used = used_at;
      if (apply(best_edge, c)) search();
      assignment[best_edge] = saved_assignment;
      cand = saved_cand;
      used_at = saved_used;
      if (done || aborted) return;
    }
  }

  // Root branching with optional symmetry breaking: the first edge in BFS
  // order may be restricted to one representative per edge-orbit of h,
  // because composing a coloring with an edge automorphism of h again
  // yields a valid coloring.
  void run() {
    if (mg == 0) {
      record_witness();
      return;
    }
    EdgeId first = order[0];
    std::vector<int> values;
    if (opts.symmetry_break) {
      std::vector<int> orbit = edge_orbits(h);
      std::vector<char> seen(mh, 0);
      for (int c = 0; c < mh; ++c)
        if (!seen[orbit[c]]) {
          seen[orbit[c]] = 1;
          values.push_back(c);
        }
    } else {
      for (int c = 0; c < mh; ++c) values.push_back(c);
    }
    for (int c : values) {
      if (++nodes > opts.node_limit) {
        aborted = true;
        return;
      }
      auto saved_cand = cand;
      auto saved_used = used_at;
      if (apply(first, c)) search();
      assignment[first] = -1;
      cand = saved_cand;
      used_at = saved_used;
      if (done || aborted) return;
    }
  }
};

}  // namespace

SolveOutcome solve(const CubicMultigraph& g, const CubicMultigraph& h,
                   const SolveOptions& opts) {
  if (!g.is_cubic() || !h.is_cubic())
    throw Error(ErrorCode::NotCubic, "solve needs cubic graphs on both sides");
  if (g.edge_count() > 32 || h.edge_count() > 32)
    throw Error(ErrorCode::SizeLimitExceeded, "solver capped at m <= 32");
  if (opts.node_limit < 1 || opts.max_solutions < 1)
    throw Error(ErrorCode::BadArguments, "solver caps must be positive");

  auto start = std::chrono::steady_clock::now();
  Solver solver(g, h, opts);
  solver.run();
  auto stop = std::chrono::steady_clock::now();

  SolveOutcome out;
  out.witnesses = std::move(solver.witnesses);
  out.stats.nodes = solver.nodes;
  out.stats.micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
          .count());
  out.stats.complete = !solver.aborted &&
                       !(solver.done && opts.enumerate_all &&
                         static_cast<int>(out.witnesses.size()) >=
                             opts.max_solutions);
  if (!out.witnesses.empty())
    out.status = SolveStatus::Found;
  else
    out.status = solver.aborted ? SolveStatus::NodeLimit
                                : SolveStatus::ExhaustedNone;
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

EdgeSubset preimage(const HColoring& f, EdgeSubset s_of_h) {
  EdgeSubset out;
  for (EdgeId e = 0; e < f.g.edge_count(); ++e)
    if (s_of_h.test(f.map[e])) out.set(e);
  return out;
}

EdgeSubset used_edges(const HColoring& f) {
  EdgeSubset out;
  for (EdgeId e = 0; e < f.g.edge_count(); ++e) out.set(f.map[e]);
  return out;
}

bool check_adjacency_closure(const HColoring& f) {
  EdgeSubset used = used_edges(f);
  for (EdgeId e : edge_ids(used))
    for (EdgeId other = 0; other < f.h.edge_count(); ++other)
      if (f.h.edges_adjacent(e, other) && !used.test(other)) return false;
  return true;
}

bool is_adjacency_preserving(const CubicMultigraph& g, const CubicMultigraph& h,
                             const std::vector<EdgeId>& map) {
  if (static_cast<int>(map.size()) != g.edge_count())
    throw Error(ErrorCode::GraphMismatch, "map not total over E(g)");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (map[e] < 0 || map[e] >= h.edge_count())
      throw Error(ErrorCode::GraphMismatch, "image out of range");
  for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1)
    for (EdgeId e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
      if (!g.edges_adjacent(e1, e2)) continue;
      if (map[e1] == map[e2]) return false;  // an edge is not self-adjacent
      if (!h.edges_adjacent(map[e1], map[e2])) return false;
    }
  return true;
}

namespace {

// Base covers of the color graph, recomputed once per isomorphism class and
// memoized; nothing is hardcoded from literature.
struct PetersenBase {
  std::vector<EdgeSubset> perfect_matchings;
  std::vector<EdgeSubset> even_cover_52;
  bool has_52 = false;
};

const PetersenBase& petersen_base_for(const CubicMultigraph& h) {
  static std::mutex mutex;
  static std::map<std::string, PetersenBase> cache;
  std::lock_guard<std::mutex> lock(mutex);
  std::string key = canonical_form(h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PetersenBase base;
  base.perfect_matchings = enumerate_perfect_matchings(h);
  auto cover = find_even_cover(h, 5, 2);
  base.has_52 = cover.has_value();
  if (base.has_52) base.even_cover_52 = *cover;
  return cache.emplace(std::move(key), std::move(base)).first->second;
}

void require_valid_petersen_coloring(const HColoring& f) {
  if (!isomorphic(f.h, petersen()))
    throw Error(ErrorCode::InvalidColoring,
                "cover derivation needs the Petersen graph as color graph");
  CheckResult r = check(f);
  if (!r.ok)
    throw Error(ErrorCode::InvalidColoring, "invalid coloring: " + r.violation);
}

}  // namespace

std::vector<EdgeSubset> derive_bf_cover(const HColoring& f) {
  require_valid_petersen_coloring(f);
  const PetersenBase& base = petersen_base_for(f.h);
  std::vector<EdgeSubset> cover;
  cover.reserve(base.perfect_matchings.size());
  for (EdgeSubset pm : base.perfect_matchings) cover.push_back(preimage(f, pm));
  return cover;
}

std::vector<EdgeSubset> derive_52_cover(const HColoring& f) {
  require_valid_petersen_coloring(f);
  const PetersenBase& base = petersen_base_for(f.h);
  if (!base.has_52)
    throw Error(ErrorCode::NoBaseCover,
                "no (5,2) even cover of the color graph was found");
  std::vector<EdgeSubset> cover;
  cover.reserve(base.even_cover_52.size());
  for (EdgeSubset c : base.even_cover_52) cover.push_back(preimage(f, c));
  return cover;
}

}  // namespace hcolor
