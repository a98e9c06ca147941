#include "hcolor/matchings.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace hcolor {

bool is_matching(const CubicMultigraph& g, EdgeSubset s) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((g.star(v) & s).count() > 1) return false;
  return true;
}

bool is_perfect_matching(const CubicMultigraph& g, EdgeSubset s) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((g.star(v) & s).count() != 1) return false;
  return true;
}

bool is_even_subgraph(const CubicMultigraph& g, EdgeSubset s) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((g.star(v) & s).count() % 2 != 0) return false;
  return true;
}

namespace {

void perfect_matchings_rec(const CubicMultigraph& g, EdgeSubset current,
                           EdgeSubset covered, int from,
                           std::vector<EdgeSubset>& out) {
  int n = g.vertex_count();
  int v = from;
  while (v < n && (covered.bits >> v) & 1) ++v;
  if (v == n) {
    out.push_back(current);
    return;
  }
  for (EdgeId e : g.incident(v)) {
    VertexId w = g.other_endpoint(e, v);
    if ((covered.bits >> w) & 1) continue;
    EdgeSubset next = current;
    next.set(e);
    EdgeSubset cov = covered;
    cov.bits |= (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
    perfect_matchings_rec(g, next, cov, v + 1, out);
  }
}

}  // namespace

std::vector<EdgeSubset> enumerate_perfect_matchings(const CubicMultigraph& g) {
  if (g.vertex_count() > 16)
    throw Error(ErrorCode::SizeLimitExceeded,
                "perfect matching enumeration capped at n <= 16");
  if (g.vertex_count() % 2 != 0) return {};
  std::vector<EdgeSubset> out;
  perfect_matchings_rec(g, EdgeSubset{}, EdgeSubset{}, 0, out);
  // Parallel edges at the lowest uncovered vertex are explored in incident
  // order, which already follows edge ids; keep the output sorted anyway.
  std::sort(out.begin(), out.end());
  return out;
}

bool has_perfect_matching(const CubicMultigraph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  // Short-circuiting variant of the enumeration.
  struct Search {
    const CubicMultigraph& g;
    bool found = false;
    void run(EdgeSubset covered, int from) {
      if (found) return;
      int n = g.vertex_count();
      int v = from;
      while (v < n && (covered.bits >> v) & 1) ++v;
      if (v == n) {
        found = true;
        return;
      }
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_endpoint(e, v);
        if ((covered.bits >> w) & 1) continue;
        EdgeSubset cov = covered;
        cov.bits |= (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
        run(cov, v + 1);
        if (found) return;
      }
    }
  } search{g};
  search.run(EdgeSubset{}, 0);
  return search.found;
}

std::vector<EdgeSubset> enumerate_matchings(const CubicMultigraph& g) {
  std::vector<EdgeSubset> out;
  int m = g.edge_count();
  // Include/exclude each edge in id order, keeping endpoints disjoint.
  auto rec = [&](auto&& self, EdgeId e, EdgeSubset current,
                 std::uint64_t covered_vertices) -> void {
    if (e == m) {
      out.push_back(current);
      return;
    }
    self(self, e + 1, current, covered_vertices);
    auto [u, v] = g.endpoints(e);
    std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if ((covered_vertices & uv) == 0) {
      EdgeSubset next = current;
      next.set(e);
      self(self, e + 1, next, covered_vertices | uv);
    }
  };
  rec(rec, 0, EdgeSubset{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Backtracking over proper 3-edge-colorings. Color symmetry is broken by
// fixing the star of vertex 0 to colors 0, 1, 2 in edge-id order; any proper
// 3-edge-coloring of a cubic graph uses all three colors on every star, so
// this loses nothing.
struct ThreeColorSearch {
  const CubicMultigraph& g;
  std::vector<int> color;  // per edge, -1 unassigned
  std::array<EdgeSubset, 3> classes;
  bool found = false;

  explicit ThreeColorSearch(const CubicMultigraph& graph)
      : g(graph), color(graph.edge_count(), -1) {}

  bool color_ok(EdgeId e, int c) const {
    auto [u, v] = g.endpoints(e);
    for (EdgeId f : g.incident(u))
      if (f != e && color[f] == c) return false;
    for (EdgeId f : g.incident(v))
      if (f != e && color[f] == c) return false;
    return true;
  }

  void run(EdgeId e) {
    if (found) return;
    int m = g.edge_count();
    while (e < m && color[e] != -1) ++e;
    if (e == m) {
      found = true;
      return;
    }
    for (int c = 0; c < 3; ++c) {
      if (!color_ok(e, c)) continue;
      color[e] = c;
      run(e);
      if (found) return;
      color[e] = -1;
    }
  }
};

}  // namespace

std::optional<std::vector<EdgeSubset>> find_3_edge_coloring(
    const CubicMultigraph& g) {
  if (!g.is_cubic())
    throw Error(ErrorCode::NotCubic, "3-edge-coloring needs a cubic graph");
  if (g.vertex_count() == 0) return std::vector<EdgeSubset>(3);
  ThreeColorSearch search(g);
  const auto& star0 = g.incident(0);
  assert(star0.size() == 3);
  std::vector<EdgeId> sorted_star(star0.begin(), star0.end());
  std::sort(sorted_star.begin(), sorted_star.end());
  for (int i = 0; i < 3; ++i) search.color[sorted_star[i]] = i;
  search.run(0);
  if (!search.found) return std::nullopt;
  std::vector<EdgeSubset> classes(3);
  for (EdgeId e = 0; e < g.edge_count(); ++e) classes[search.color[e]].set(e);
  return classes;
}

int chromatic_index_cubic(const CubicMultigraph& g) {
  return find_3_edge_coloring(g).has_value() ? 3 : 4;
}

std::vector<EdgeSubset> even_subgraph_basis(const CubicMultigraph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  // Spanning forest by BFS over edge ids; every non-forest edge contributes
  // its fundamental cycle. A parallel copy of a forest edge yields the
  // expected 2-cycle.
  std::vector<int> comp(n, -1);
  std::vector<EdgeId> to_parent(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<char> in_forest(m, 0);
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = root;
    std::vector<int> queue = {root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (EdgeId e : g.incident(v)) {
        int w = g.other_endpoint(e, v);
        if (comp[w] == -1) {
          comp[w] = root;
          parent[w] = v;
          to_parent[w] = e;
          in_forest[e] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  auto forest_path = [&](int u, int v) {
    // XOR of the two root paths gives the u-v path in the forest.
    EdgeSubset path;
    for (int x = u; parent[x] != -1; x = parent[x]) {
      if (path.test(to_parent[x]))
        path.reset(to_parent[x]);
      else
        path.set(to_parent[x]);
    }
    for (int x = v; parent[x] != -1; x = parent[x]) {
      if (path.test(to_parent[x]))
        path.reset(to_parent[x]);
      else
        path.set(to_parent[x]);
    }
    return path;
  };
  std::vector<EdgeSubset> basis;
  for (EdgeId e = 0; e < m; ++e) {
    if (in_forest[e]) continue;
    auto [u, v] = g.endpoints(e);
    EdgeSubset cycle = forest_path(u, v);
    cycle.set(e);
    basis.push_back(cycle);
  }
  return basis;
}

namespace {

std::vector<EdgeSubset> span_of(const std::vector<EdgeSubset>& basis) {
  std::vector<EdgeSubset> members = {EdgeSubset{}};
  for (EdgeSubset b : basis) {
    std::size_t sz = members.size();
    for (std::size_t i = 0; i < sz; ++i) members.push_back(members[i] ^ b);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::optional<std::vector<EdgeSubset>> find_even_cover(const CubicMultigraph& g,
                                                       int k, int multiplicity) {
  if (k < 0 || multiplicity < 0)
    throw Error(ErrorCode::BadArguments, "cover parameters must be >= 0");
  if (g.vertex_count() > 12 || k > 6)
    throw Error(ErrorCode::SizeLimitExceeded,
                "even-cover search bounded to n <= 12 and k <= 6");
  int m = g.edge_count();
  if (k == 0) {
    if (multiplicity == 0) return std::vector<EdgeSubset>{};
    return std::nullopt;
  }
  std::vector<EdgeSubset> members = span_of(even_subgraph_basis(g));
  // Largest members first so deficits shrink early.
  std::sort(members.begin(), members.end(), [](EdgeSubset a, EdgeSubset b) {
    return a.count() > b.count();
  });

  std::vector<int> count(m, 0);
  std::vector<EdgeSubset> chosen;
  int max_size = members.empty() ? 0 : members.front().count();

  // Multisets in non-decreasing member index, pruned by per-edge counts and
  // a total-deficit bound.
  auto rec = [&](auto&& self, std::size_t from, int slots) -> bool {
    if (slots == 0) {
      for (int e = 0; e < m; ++e)
        if (count[e] != multiplicity) return false;
      return true;
    }
    int deficit = 0;
    for (int e = 0; e < m; ++e) {
      int need = multiplicity - count[e];
      if (need < 0) return false;
      if (need > slots) return false;
      deficit += need;
    }
    if (deficit > slots * max_size) return false;
    for (std::size_t i = from; i < members.size(); ++i) {
      EdgeSubset s = members[i];
      bool fits = true;
      for (EdgeId e : edge_ids(s)) {
        if (count[e] + 1 > multiplicity) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (EdgeId e : edge_ids(s)) ++count[e];
      chosen.push_back(s);
      if (self(self, i, slots - 1)) return true;
      chosen.pop_back();
      for (EdgeId e : edge_ids(s)) --count[e];
    }
    return false;
  };
  if (rec(rec, 0, k)) return chosen;
  return std::nullopt;
}

}  // namespace hcolor
