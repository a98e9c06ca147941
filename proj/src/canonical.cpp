#include "hcolor/canonical.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

namespace hcolor {

namespace {

constexpr int kMaxCanonicalVertices = 16;

using MultMatrix = std::vector<std::array<std::uint8_t, kMaxCanonicalVertices>>;

MultMatrix multiplicity_matrix(const CubicMultigraph& g) {
  MultMatrix mult(g.vertex_count());
  for (auto& row : mult) row.fill(0);
  for (auto [u, v] : g.edges()) {
    ++mult[u][v];
    ++mult[v][u];
  }
  return mult;
}

// Ordered partition of the vertices. Cell order is part of the state and is
// derived only from label-independent invariants, so the search tree below
// is the same for any relabeling of the input.
struct Partition {
  std::vector<std::vector<int>> cells;

  bool discrete() const {
    for (const auto& c : cells)
      if (c.size() > 1) return false;
    return true;
  }
};

// Split every cell by the multiset of edge multiplicities its vertices send
// into each splitter cell, iterating until stable (1-dimensional refinement).
void refine(const MultMatrix& mult, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.cells.size(); ++s) {
      // Key per vertex: count of splitter-cell neighbors at multiplicity
      // 1, 2 and 3. Encoded into one int for sorting.
      std::vector<std::vector<int>> next;
      next.reserve(p.cells.size());
      bool split_here = false;
      for (const auto& cell : p.cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          int c1 = 0, c2 = 0, c3 = 0;
          for (int w : p.cells[s]) {
            switch (mult[v][w]) {
              case 1: ++c1; break;
              case 2: ++c2; break;
              case 3: ++c3; break;
              default: break;
            }
          }
          keyed.emplace_back((c1 << 10) | (c2 << 5) | c3, v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) {
                           return a.first < b.first;
                         });
        std::vector<int> sub = {keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(sub));
            sub.clear();
            split_here = true;
          }
          sub.push_back(keyed[i].second);
        }
        next.push_back(std::move(sub));
      }
      if (split_here) {
        p.cells = std::move(next);
        changed = true;
        break;  // restart with the new cell list
      }
    }
  }
}

std::string encode_by_order(const MultMatrix& mult, const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  std::string s;
  s.reserve(1 + n * (n - 1) / 2);
  s.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s.push_back(static_cast<char>(mult[order[i]][order[j]]));
  return s;
}

struct CanonSearch {
  const MultMatrix& mult;
  std::string best;
  bool have_best = false;

  void run(Partition p) {
    refine(mult, p);
    if (p.discrete()) {
      std::vector<int> order;
      order.reserve(p.cells.size());
      for (const auto& c : p.cells) order.push_back(c[0]);
      std::string s = encode_by_order(mult, order);
      if (!have_best || s < best) {
        best = std::move(s);
        have_best = true;
      }
      return;
    }
    std::size_t target = 0;
    while (p.cells[target].size() == 1) ++target;
    for (int v : p.cells[target]) {
      Partition child;
      child.cells.reserve(p.cells.size() + 1);
      for (std::size_t i = 0; i < p.cells.size(); ++i) {
        if (i != target) {
          child.cells.push_back(p.cells[i]);
          continue;
        }
        child.cells.push_back({v});
        std::vector<int> rest;
        for (int w : p.cells[i])
          if (w != v) rest.push_back(w);
        child.cells.push_back(std::move(rest));
      }
      run(std::move(child));
    }
  }
};

Partition initial_partition(const CubicMultigraph& g, const MultMatrix& mult) {
  int n = g.vertex_count();
  // Initial invariant: degree plus the sorted incident multiplicity profile.
  std::vector<std::pair<int, int>> keyed(n);
  for (int v = 0; v < n; ++v) {
    int c1 = 0, c2 = 0, c3 = 0;
    for (int w = 0; w < n; ++w) {
      switch (mult[v][w]) {
        case 1: ++c1; break;
        case 2: ++c2; break;
        case 3: ++c3; break;
        default: break;
      }
    }
    int deg = c1 + 2 * c2 + 3 * c3;
    keyed[v] = {(deg << 15) | (c1 << 10) | (c2 << 5) | c3, v};
  }
  std::stable_sort(keyed.begin(), keyed.end());
  Partition p;
  std::vector<int> cell;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keyed[i].first != keyed[i - 1].first) {
      p.cells.push_back(std::move(cell));
      cell.clear();
    }
    cell.push_back(keyed[i].second);
  }
  if (!cell.empty()) p.cells.push_back(std::move(cell));
  return p;
}

std::vector<std::vector<int>> connected_components(const CubicMultigraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> members, stack = {root};
    comp[root] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (EdgeId e : g.incident(v)) {
        int w = g.other_endpoint(e, v);
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

CubicMultigraph induced_subgraph(const CubicMultigraph& g,
                                 const std::vector<int>& vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  for (auto [u, v] : g.edges())
    if (index[u] != -1 && index[v] != -1)
      pairs.emplace_back(index[u], index[v]);
  return CubicMultigraph::build(static_cast<int>(vertices.size()), pairs,
                                /*require_cubic=*/false);
}

std::string canonical_form_connected(const CubicMultigraph& g) {
  MultMatrix mult = multiplicity_matrix(g);
  CanonSearch search{mult, "", false};
  search.run(initial_partition(g, mult));
  return search.best;
}

}  // namespace

std::string canonical_form(const CubicMultigraph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices)
    throw Error(ErrorCode::SizeLimitExceeded,
                "canonical form capped at n <= 16, got n = " +
                    std::to_string(g.vertex_count()));
  if (g.vertex_count() == 0) return std::string(1, '\0');
  auto comps = connected_components(g);
  if (comps.size() == 1) return canonical_form_connected(g);
  // A disjoint union is determined by the multiset of component forms.
  std::vector<std::string> parts;
  parts.reserve(comps.size());
  for (const auto& members : comps)
    parts.push_back(canonical_form_connected(induced_subgraph(g, members)));
  std::sort(parts.begin(), parts.end());
  std::string out(1, static_cast<char>(g.vertex_count()));
  for (const auto& part : parts) {
    out.push_back('\xff');  // component separator; never a multiplicity byte
    out += part;
  }
  return out;
}

std::string canonical_hex(const CubicMultigraph& g) {
  static const char* digits = "0123456789abcdef";
  std::string bytes = canonical_form(g);
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

bool isomorphic(const CubicMultigraph& a, const CubicMultigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

CubicMultigraph relabel(const CubicMultigraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw Error(ErrorCode::BadArguments, "permutation size mismatch");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) pairs.emplace_back(perm[u], perm[v]);
  return CubicMultigraph::build(g.vertex_count(), pairs,
                                /*require_cubic=*/false);
}

std::vector<std::vector<int>> automorphisms(const CubicMultigraph& g) {
  int n = g.vertex_count();
  MultMatrix mult = multiplicity_matrix(g);
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> out;

  // Plain backtracking over vertex images with pairwise multiplicity checks.
  auto search = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (mult[v][u] != mult[w][image[u]]) ok = false;
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
      image[v] = -1;
    }
  };
  search(search, 0);
  return out;
}

std::vector<int> edge_orbits(const CubicMultigraph& g) {
  int m = g.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // Parallel edges between the same endpoints are interchangeable.
  std::vector<std::vector<EdgeId>> by_pair;
  {
    std::vector<std::pair<std::pair<int, int>, EdgeId>> keyed;
    for (EdgeId e = 0; e < m; ++e) {
      auto [u, v] = g.endpoints(e);
      keyed.push_back({{std::min(u, v), std::max(u, v)}, e});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first == keyed[i - 1].first)
        unite(keyed[i].second, keyed[i - 1].second);
    }
  }

  // Representative edge id per endpoint pair, used to push vertex
  // automorphisms down to edges.
  auto rep_edge = [&](int u, int v) {
    for (EdgeId e = 0; e < m; ++e) {
      auto [a, b] = g.endpoints(e);
      if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return -1;
  };

  for (const auto& perm : automorphisms(g)) {
    for (EdgeId e = 0; e < m; ++e) {
      auto [u, v] = g.endpoints(e);
      EdgeId img = rep_edge(perm[u], perm[v]);
      assert(img >= 0);
      unite(e, img);
    }
  }

  std::vector<int> orbit(m);
  std::vector<int> seen_root;
  for (EdgeId e = 0; e < m; ++e) {
    int root = find(e);
    auto it = std::find(seen_root.begin(), seen_root.end(), root);
    if (it == seen_root.end()) {
      seen_root.push_back(root);
      orbit[e] = static_cast<int>(seen_root.size()) - 1;
    } else {
      orbit[e] = static_cast<int>(it - seen_root.begin());
    }
  }
  return orbit;
}

}  // namespace hcolor
