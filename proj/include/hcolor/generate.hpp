#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hcolor/graph.hpp"
#include "hcolor/hcoloring.hpp"

namespace hcolor {

struct GenFilter {
  int max_n = 10;  // even, 2 <= max_n <= 12
  bool connected = true;
  bool bridgeless = false;
  bool simple_only = false;

  std::string describe() const;
};

// Two architecturally independent generation routes; they must produce the
// same isomorphism classes and are cross-validated against each other and
// against the half-edge pairing oracle below.
enum class GenStrategy {
  VertexAugmentation,  // grow one vertex at a time over partial graphs
  EdgeAugmentation,    // expand smaller cubic graphs by edge insertions
};

// Exactly one representative per isomorphism class of cubic multigraphs
// with vertex count <= filter.max_n satisfying the filter, in a
// deterministic order (by vertex count, then canonical form).
std::vector<CubicMultigraph> gen_cubic(const GenFilter& filter,
                                       GenStrategy strategy =
                                           GenStrategy::VertexAugmentation);

// Independent oracle: enumerate all pairings of labelled half-edges, keep
// loopless ones, and reduce to connected isomorphism classes. Exponential;
// capped at n <= 6.
std::vector<CubicMultigraph> enumerate_by_half_edge_pairing(int n);

struct ReportEntry {
  std::string canonical;  // canonical form, hex
  int n = 0;
  std::string detail;
};

struct ResultRow {
  std::string canonical;
  int n = 0;
  std::string status;
  std::string detail;
};

// Structured outcome of a verifier or scan run. `failures` is empty iff the
// verified statement held on the examined universe; node-limit entries are
// listed separately as inconclusive, never as refutations.
struct VerificationReport {
  std::string task;
  int max_n = 0;
  std::string filters;
  std::string note;
  int examined = 0;
  std::vector<ResultRow> rows;
  std::vector<ReportEntry> hits;
  std::vector<ReportEntry> failures;
  std::vector<ReportEntry> inconclusive;
  std::uint64_t solver_nodes = 0;
  std::uint64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct RunOptions {
  int workers = 0;  // 0 = hardware concurrency
  std::uint64_t node_limit = 1'000'000'000;
  bool symmetry_break = true;
  GenStrategy strategy = GenStrategy::VertexAugmentation;
  std::string dump_dir;  // write counterexample graphs here ("" = off)
  // Invoked for every H-coloring the run discovers (serialized; may be
  // called from the aggregation thread only).
  std::function<void(const HColoring&)> on_witness;
};

// Proposition check: among connected bridgeless cubic multigraphs with
// n <= max_n, the non-3-edge-colorable ones are exactly the Petersen graph.
VerificationReport verify_prop1(int max_n = 10, const RunOptions& opts = {});

// Proposition check: among connected cubic multigraphs with n <= max_n,
// the ones without a perfect matching are exactly the Sylvester graph.
VerificationReport verify_prop2(int max_n = 10, const RunOptions& opts = {});

// Theorem check: a coloring of the Petersen graph by edges of G exists for
// exactly one class (G = Petersen); every Found witness must also satisfy
// the used-edge adjacency closure.
VerificationReport verify_thm1(int max_n = 10, const RunOptions& opts = {});

// Theorem check: a coloring of the Sylvester graph by edges of G exists for
// exactly one class (G = Sylvester).
VerificationReport verify_thm2(int max_n = 10, const RunOptions& opts = {});

// Scan: every connected bridgeless cubic multigraph up to max_n admits a
// Petersen coloring, and each witness yields a validated 6-perfect-matching
// double cover and a validated (5,2) even-subgraph double cover.
VerificationReport scan_jaeger(int max_n, const RunOptions& opts = {});

// Scan: every connected cubic multigraph up to max_n admits a Sylvester
// coloring.
VerificationReport scan_sylvester(int max_n, const RunOptions& opts = {});

}  // namespace hcolor
