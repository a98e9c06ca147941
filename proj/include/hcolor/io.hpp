#pragma once

#include <iosfwd>
#include <string>

#include "hcolor/generate.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/hcoloring.hpp"

namespace hcolor {

// Text edge-list interchange format: line 1 `n m`, then m lines `u v` with
// 0-based vertex indices; repeated lines encode parallel edges; `#` starts
// a comment. Writers emit edges sorted by (min endpoint, max endpoint).
CubicMultigraph parse_graph_text(std::istream& in, bool require_cubic = true);
CubicMultigraph parse_graph_file(const std::string& path,
                                 bool require_cubic = true);
std::string write_graph_text(const CubicMultigraph& g);
void write_graph_file(const std::string& path, const CubicMultigraph& g);

// FNV-1a 64-bit digest of the canonical interchange encoding, in hex.
std::string graph_hash_hex(const CubicMultigraph& g);

// Coloring format: header `hcol <g-hash> <h-hash>`, then one line
// `g_edge_index h_edge_index` per edge of g.
std::string write_coloring_text(const HColoring& f);
void write_coloring_file(const std::string& path, const HColoring& f);
HColoring parse_coloring_text(std::istream& in, const CubicMultigraph& g,
                              const CubicMultigraph& h);
HColoring parse_coloring_file(const std::string& path,
                              const CubicMultigraph& g,
                              const CubicMultigraph& h);

// Named-graph selector: petersen | sylvester | k4 | k33 | triple |
// file:<path>.
CubicMultigraph named_graph(const std::string& selector);

// JSON document with stable key order. The timestamp field (and the elapsed
// time under stats) are the only run-dependent parts.
std::string report_to_json_string(const VerificationReport& rep,
                                  bool include_timestamp = true);

}  // namespace hcolor
