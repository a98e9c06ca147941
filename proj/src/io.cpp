#include "hcolor/io.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hcolor {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

// Reads lines, strips `#` comments, and yields whitespace tokens along with
// their line numbers.
std::vector<std::pair<std::string, int>> tokenize(std::istream& in) {
  std::vector<std::pair<std::string, int>> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.emplace_back(tok, line_no);
  }
  return tokens;
}

int parse_int(const std::pair<std::string, int>& token, const char* what) {
  const auto& [text, line] = token;
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(text, &consumed);
  } catch (const std::exception&) {
    parse_fail(line, std::string("expected ") + what + ", got '" + text + "'");
  }
  if (consumed != text.size())
    parse_fail(line, std::string("expected ") + what + ", got '" + text + "'");
  return value;
}

}  // namespace

CubicMultigraph parse_graph_text(std::istream& in, bool require_cubic) {
  auto tokens = tokenize(in);
  if (tokens.size() < 2) parse_fail(1, "missing `n m` header");
  int n = parse_int(tokens[0], "vertex count");
  int m = parse_int(tokens[1], "edge count");
  if (n < 0 || m < 0) parse_fail(tokens[0].second, "negative header values");
  if (static_cast<int>(tokens.size()) != 2 + 2 * m)
    parse_fail(tokens.back().second,
               "expected " + std::to_string(2 * m) + " endpoint tokens, got " +
                   std::to_string(tokens.size() - 2));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = parse_int(tokens[2 + 2 * i], "vertex index");
    int v = parse_int(tokens[3 + 2 * i], "vertex index");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(tokens[2 + 2 * i].second, "vertex index out of range");
    pairs.emplace_back(u, v);
  }
  return CubicMultigraph::build(n, pairs, require_cubic);
}

CubicMultigraph parse_graph_file(const std::string& path, bool require_cubic) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_graph_text(in, require_cubic);
}

std::string write_graph_text(const CubicMultigraph& g) {
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : sorted)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void write_graph_file(const std::string& path, const CubicMultigraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << write_graph_text(g);
}

std::string graph_hash_hex(const CubicMultigraph& g) {
  std::string text = write_graph_text(g);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string write_coloring_text(const HColoring& f) {
  std::string out =
      "hcol " + graph_hash_hex(f.g) + " " + graph_hash_hex(f.h) + "\n";
  for (EdgeId e = 0; e < f.g.edge_count(); ++e)
    out += std::to_string(e) + " " + std::to_string(f.map[e]) + "\n";
  return out;
}

void write_coloring_file(const std::string& path, const HColoring& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << write_coloring_text(f);
}

HColoring parse_coloring_text(std::istream& in, const CubicMultigraph& g,
                              const CubicMultigraph& h) {
  auto tokens = tokenize(in);
  if (tokens.size() < 3 || tokens[0].first != "hcol")
    parse_fail(tokens.empty() ? 1 : tokens[0].second,
               "expected header `hcol <g-hash> <h-hash>`");
  if (tokens[1].first != graph_hash_hex(g))
    throw Error(ErrorCode::GraphMismatch,
                "coloring was produced for a different source graph");
  if (tokens[2].first != graph_hash_hex(h))
    throw Error(ErrorCode::GraphMismatch,
                "coloring was produced for a different color graph");
  int mg = g.edge_count();
  if (static_cast<int>(tokens.size()) != 3 + 2 * mg)
    parse_fail(tokens.back().second,
               "expected " + std::to_string(mg) + " assignment lines");
  HColoring f{g, h, std::vector<EdgeId>(mg, -1)};
  for (int i = 0; i < mg; ++i) {
    int e = parse_int(tokens[3 + 2 * i], "edge index");
    int c = parse_int(tokens[4 + 2 * i], "edge index");
    if (e < 0 || e >= mg)
      parse_fail(tokens[3 + 2 * i].second, "source edge index out of range");
    if (c < 0 || c >= h.edge_count())
      parse_fail(tokens[4 + 2 * i].second, "color edge index out of range");
    if (f.map[e] != -1)
      parse_fail(tokens[3 + 2 * i].second,
                 "duplicate assignment for edge " + std::to_string(e));
    f.map[e] = c;
  }
  return f;
}

HColoring parse_coloring_file(const std::string& path,
                              const CubicMultigraph& g,
                              const CubicMultigraph& h) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_coloring_text(in, g, h);
}

CubicMultigraph named_graph(const std::string& selector) {
  if (selector == "petersen") return petersen();
  if (selector == "sylvester") return sylvester();
  if (selector == "k4") return k4();
  if (selector == "k33") return k33();
  if (selector == "triple") return triple_edge();
  if (selector.rfind("file:", 0) == 0)
    return parse_graph_file(selector.substr(5));
  throw Error(ErrorCode::BadArguments,
              "unknown graph selector '" + selector +
                  "' (use petersen|sylvester|k4|k33|triple|file:<path>)");
}

std::string report_to_json_string(const VerificationReport& rep,
                                  bool include_timestamp) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["task"] = rep.task;
  doc["universe"] = {
      {"max_n", rep.max_n}, {"filters", rep.filters}, {"count", rep.examined}};
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json r;
    r["canonical"] = row.canonical;
    r["n"] = row.n;
    r["status"] = row.status;
    if (!row.detail.empty()) r["detail"] = row.detail;
    rows.push_back(std::move(r));
  }
  doc["results"] = std::move(rows);
  auto entries = [](const std::vector<ReportEntry>& list) {
    json arr = json::array();
    for (const auto& entry : list)
      arr.push_back({{"canonical", entry.canonical},
                     {"n", entry.n},
                     {"detail", entry.detail}});
    return arr;
  };
  doc["hits"] = entries(rep.hits);
  doc["counterexamples"] = entries(rep.failures);
  doc["inconclusive"] = entries(rep.inconclusive);
  doc["note"] = rep.note;
  doc["passed"] = rep.passed();
  doc["stats"] = {{"solver_nodes", rep.solver_nodes},
                  {"elapsed_ms", rep.elapsed_ms}};
  if (include_timestamp) {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    doc["timestamp"] = buf;
  }
  return doc.dump(2) + "\n";
}

}  // namespace hcolor
