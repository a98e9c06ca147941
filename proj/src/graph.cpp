#include "hcolor/graph.hpp"

#include <algorithm>

namespace hcolor {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::NoBaseCover: return "NoBaseCover";
    case ErrorCode::BadArguments: return "BadArguments";
  }
  return "UnknownError";
}

std::vector<EdgeId> edge_ids(EdgeSubset s) {
  std::vector<EdgeId> out;
  std::uint64_t bits = s.bits;
  while (bits) {
    out.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return out;
}

CubicMultigraph CubicMultigraph::build(
    int n, const std::vector<std::pair<int, int>>& pairs, bool require_cubic) {
  if (n < 0) throw Error(ErrorCode::BadArguments, "negative vertex count");
  if (require_cubic && pairs.empty())
    throw Error(ErrorCode::NotCubic, "cubic graph needs edges");
  CubicMultigraph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  g.incident_.assign(n, {});
  g.star_.assign(n, EdgeSubset{});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(i) + " endpoint out of range");
    if (u == v)
      throw Error(ErrorCode::LoopEdge,
                  "edge " + std::to_string(i) + " is a loop at vertex " +
                      std::to_string(u));
    EdgeId e = static_cast<EdgeId>(i);
    g.edges_.emplace_back(u, v);
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
    g.star_[u].set(e);
    g.star_[v].set(e);
  }
  if (require_cubic) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) != 3)
        throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) +
                                             " has degree " +
                                             std::to_string(g.degree(v)));
  }
  return g;
}

bool CubicMultigraph::edges_adjacent(EdgeId a, EdgeId b) const {
  check_edge(a);
  check_edge(b);
  if (a == b) return false;
  auto [u1, v1] = edges_[a];
  auto [u2, v2] = edges_[b];
  return u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
}

bool CubicMultigraph::is_cubic() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

bool CubicMultigraph::is_simple() const {
  for (int v = 0; v < n_; ++v) {
    for (EdgeId e1 : incident_[v])
      for (EdgeId e2 : incident_[v])
        if (e1 < e2 && endpoints(e1) == endpoints(e2)) return false;
  }
  return true;
}

int CubicMultigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  int count = 0;
  for (EdgeId e : incident_[u])
    if (other_endpoint(e, u) == v) ++count;
  return count;
}

bool CubicMultigraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[v]) {
      VertexId w = other_endpoint(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

namespace {

// Iterative lowlink bridge search. Skips the incoming edge by id, not by
// endpoint, so a parallel copy still supplies the back edge.
struct BridgeSearch {
  const CubicMultigraph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> parent_edge;
  EdgeSubset out;
  int timer = 0;

  explicit BridgeSearch(const CubicMultigraph& graph)
      : g(graph),
        disc(graph.vertex_count(), -1),
        low(graph.vertex_count(), 0),
        parent_edge(graph.vertex_count(), -1) {}

  void run(VertexId root) {
    struct Frame {
      VertexId v;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == parent_edge[f.v]) continue;
        VertexId w = g.other_endpoint(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          parent_edge[w] = e;
          stack.push_back({w});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        VertexId v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.set(parent_edge[v]);
        }
      }
    }
  }
};

}  // namespace

EdgeSubset CubicMultigraph::bridges() const {
  BridgeSearch search(*this);
  for (int v = 0; v < n_; ++v)
    if (search.disc[v] == -1) search.run(v);
  return search.out;
}

CubicMultigraph petersen() {
  // Outer 5-cycle on 0..4, spokes i -- 5+i, inner pentagram 5+i -- 5+(i+2)%5.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, 5 + i);
  for (int i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  return CubicMultigraph::build(10, pairs);
}

CubicMultigraph sylvester() {
  // Center 0; gadget i on {1+3i, 2+3i, 3+3i}: a bridge from the center to
  // the gadget apex, two apex edges, and a doubled edge closing the gadget.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i) {
    int w = 1 + 3 * i, x = 2 + 3 * i, y = 3 + 3 * i;
    pairs.emplace_back(0, w);
    pairs.emplace_back(w, x);
    pairs.emplace_back(w, y);
    pairs.emplace_back(x, y);
    pairs.emplace_back(x, y);
  }
  return CubicMultigraph::build(10, pairs);
}

CubicMultigraph k4() {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
  return CubicMultigraph::build(4, pairs);
}

CubicMultigraph k33() {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) pairs.emplace_back(u, v);
  return CubicMultigraph::build(6, pairs);
}

CubicMultigraph triple_edge() {
  return CubicMultigraph::build(2, {{0, 1}, {0, 1}, {0, 1}});
}

}  // namespace hcolor
