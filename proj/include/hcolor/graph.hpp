#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcolor {

using VertexId = int;
using EdgeId = int;

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  NotCubic,
  SizeLimitExceeded,
  ParseError,
  GraphMismatch,
  InvalidColoring,
  NoBaseCover,
  BadArguments,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Set of edge ids as a bitmask. Edge counts stay tiny here (m <= 18 for
// generated graphs, m <= 24 under the canonical-form size cap), so 64 bits
// are plenty.
struct EdgeSubset {
  std::uint64_t bits = 0;

  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t b) : bits(b) {}

  bool test(EdgeId e) const { return (bits >> e) & 1u; }
  void set(EdgeId e) { bits |= std::uint64_t{1} << e; }
  void reset(EdgeId e) { bits &= ~(std::uint64_t{1} << e); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(EdgeSubset other) const { return (other.bits & ~bits) == 0; }

  friend constexpr EdgeSubset operator&(EdgeSubset a, EdgeSubset b) {
    return EdgeSubset(a.bits & b.bits);
  }
  friend constexpr EdgeSubset operator|(EdgeSubset a, EdgeSubset b) {
    return EdgeSubset(a.bits | b.bits);
  }
  friend constexpr EdgeSubset operator^(EdgeSubset a, EdgeSubset b) {
    return EdgeSubset(a.bits ^ b.bits);
  }
  friend constexpr bool operator==(EdgeSubset a, EdgeSubset b) {
    return a.bits == b.bits;
  }
  friend constexpr bool operator!=(EdgeSubset a, EdgeSubset b) {
    return a.bits != b.bits;
  }
  friend constexpr bool operator<(EdgeSubset a, EdgeSubset b) {
    return a.bits < b.bits;
  }
};

std::vector<EdgeId> edge_ids(EdgeSubset s);

// Loopless multigraph with dense vertex and edge ids. Parallel edges are
// distinct first-class edges (they carry distinct ids and can carry distinct
// colors). Instances are immutable after build(); all queries are const and
// safe to use concurrently.
class CubicMultigraph {
 public:
  CubicMultigraph() = default;

  // Validates endpoints and rejects loops. With require_cubic, every vertex
  // must have degree exactly 3 (counting multiplicity).
  static CubicMultigraph build(int n,
                               const std::vector<std::pair<int, int>>& pairs,
                               bool require_cubic = true);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    check_edge(e);
    return edges_[e];
  }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  int degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(incident_[v].size());
  }
  const std::vector<EdgeId>& incident(VertexId v) const {
    check_vertex(v);
    return incident_[v];
  }

  // The set of edges incident to v; exactly 3 in a cubic graph, with
  // parallel edges contributing separately.
  EdgeSubset star(VertexId v) const {
    check_vertex(v);
    return star_[v];
  }

  VertexId other_endpoint(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    return a == v ? b : a;
  }

  // True iff the two distinct edges share at least one endpoint. Parallel
  // edges are adjacent; an edge is not adjacent to itself.
  bool edges_adjacent(EdgeId a, EdgeId b) const;

  bool is_cubic() const;
  bool is_simple() const;
  int multiplicity(VertexId u, VertexId v) const;

  bool is_connected() const;

  // The set of cut edges. An edge inside a parallel class of size >= 2 is
  // never a bridge.
  EdgeSubset bridges() const;

  EdgeSubset all_edges_mask() const {
    return EdgeSubset((edge_count() >= 64)
                          ? ~std::uint64_t{0}
                          : ((std::uint64_t{1} << edge_count()) - 1));
  }

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [0," +
                      std::to_string(n_) + ")");
  }
  void check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count())
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(e) + " not in [0," +
                      std::to_string(edge_count()) + ")");
  }

  int n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<EdgeSubset> star_;
};

// Fixed literal labelings so reports and counterexample dumps are stable
// across runs.
CubicMultigraph petersen();
CubicMultigraph sylvester();
CubicMultigraph k4();
CubicMultigraph k33();
CubicMultigraph triple_edge();

}  // namespace hcolor
