// Acceptance suite: every statement the library is expected to establish,
// run end to end at full scale, one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hcolor/canonical.hpp"
#include "hcolor/generate.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/hcoloring.hpp"
#include "hcolor/io.hpp"
#include "hcolor/matchings.hpp"

using namespace hcolor;

namespace {

int failures_total = 0;

struct Criterion {
  const char* name;
  std::chrono::steady_clock::time_point start;
  bool ok = true;
  std::string detail;

  explicit Criterion(const char* n)
      : name(n), start(std::chrono::steady_clock::now()) {}

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }

  ~Criterion() {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::printf("%s %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name,
                static_cast<long long>(elapsed), detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures_total;
  }
};

std::vector<EdgeId> identity_map(const CubicMultigraph& g) {
  std::vector<EdgeId> map(g.edge_count());
  std::iota(map.begin(), map.end(), 0);
  return map;
}

// Same chronological generate-and-test oracle as in the solver unit tests.
std::vector<std::vector<EdgeId>> naive_all_colorings(const CubicMultigraph& g,
                                                     const CubicMultigraph& h) {
  int mg = g.edge_count();
  int mh = h.edge_count();
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> map(mg, -1);
  auto star_done_ok = [&](int x) {
    for (EdgeId e : g.incident(x))
      if (map[e] == -1) return true;
    EdgeSubset image;
    for (EdgeId e : g.incident(x)) image.set(map[e]);
    for (int y = 0; y < h.vertex_count(); ++y)
      if (h.star(y) == image) return true;
    return false;
  };
  auto rec = [&](auto&& self, EdgeId e) -> void {
    if (e == mg) {
      out.push_back(map);
      return;
    }
    for (int c = 0; c < mh; ++c) {
      bool ok = true;
      for (EdgeId f = 0; f < e && ok; ++f)
        if (map[f] == c && g.edges_adjacent(e, f)) ok = false;
      if (!ok) continue;
      map[e] = c;
      auto [u, v] = g.endpoints(e);
      if (star_done_ok(u) && star_done_ok(v)) self(self, e + 1);
      map[e] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void criterion_1_prop1() {
  Criterion c("criterion 1 [prop1: only Petersen is non-3-edge-colorable, n <= 10]");
  VerificationReport rep = verify_prop1(10);
  c.require(rep.passed(), "report failed");
  c.require(rep.hits.size() == 1, "expected exactly one flagged class");
  c.require(!rep.hits.empty() && rep.hits[0].canonical == canonical_hex(petersen()),
            "flagged class is not the Petersen graph");
}

void criterion_2_prop2() {
  Criterion c("criterion 2 [prop2: only Sylvester lacks a perfect matching, n <= 10]");
  VerificationReport rep = verify_prop2(10);
  c.require(rep.passed(), "report failed");
  c.require(rep.hits.size() == 1, "expected exactly one flagged class");
  c.require(!rep.hits.empty() && rep.hits[0].canonical == canonical_hex(sylvester()),
            "flagged class is not the Sylvester graph");
}

void criterion_3_and_5_part(std::vector<HColoring>& witnesses) {
  Criterion c("criterion 3 [thm1: P-sourced colorings exist only for P, with closure]");
  RunOptions opts;
  opts.on_witness = [&](const HColoring& f) { witnesses.push_back(f); };
  VerificationReport rep = verify_thm1(10, opts);
  c.require(rep.passed(), "report failed");
  c.require(rep.inconclusive.empty(), "inconclusive entries present");
  c.require(rep.hits.size() == 1, "expected exactly one Found class");
  c.require(!rep.hits.empty() && rep.hits[0].canonical == canonical_hex(petersen()),
            "Found class is not the Petersen graph");
  int found_rows = 0, none_rows = 0;
  for (const auto& row : rep.rows) {
    if (row.status == "Found") ++found_rows;
    if (row.status == "Exhausted-None") ++none_rows;
  }
  c.require(found_rows == 1 && found_rows + none_rows == rep.examined,
            "not every other class carries an Exhausted-None certificate");
  // The identity map on the fixed Petersen labelling is itself a witness.
  SolveOptions all;
  all.enumerate_all = true;
  SolveOutcome self = solve(petersen(), petersen(), all);
  c.require(std::find(self.witnesses.begin(), self.witnesses.end(),
                      identity_map(petersen())) != self.witnesses.end(),
            "identity witness missing for G = P");
}

void criterion_4_and_5_part(std::vector<HColoring>& witnesses) {
  Criterion c("criterion 4 [thm2: S-sourced colorings exist only for S]");
  RunOptions opts;
  opts.on_witness = [&](const HColoring& f) { witnesses.push_back(f); };
  VerificationReport rep = verify_thm2(10, opts);
  c.require(rep.passed(), "report failed");
  c.require(rep.inconclusive.empty(), "inconclusive entries present");
  c.require(rep.hits.size() == 1, "expected exactly one Found class");
  c.require(!rep.hits.empty() && rep.hits[0].canonical == canonical_hex(sylvester()),
            "Found class is not the Sylvester graph");
}

void criterion_6_scans(std::vector<HColoring>& witnesses) {
  Criterion c("criterion 6 [scans: no counterexample, covers validated, n <= 10]");
  RunOptions opts;
  opts.on_witness = [&](const HColoring& f) { witnesses.push_back(f); };
  VerificationReport jaeger = scan_jaeger(10, opts);
  c.require(jaeger.passed(), "jaeger scan failed");
  c.require(jaeger.inconclusive.empty(), "jaeger scan inconclusive entries");
  // Cover validation happens inside the scan; a failure would appear above.
  VerificationReport sylv = scan_sylvester(10, opts);
  c.require(sylv.passed(), "sylvester scan failed");
  c.require(sylv.inconclusive.empty(), "sylvester scan inconclusive entries");
}

void criterion_5_lemma(const std::vector<HColoring>& witnesses) {
  Criterion c("criterion 5 [lemma pullbacks over every discovered coloring]");
  c.require(!witnesses.empty(), "no witnesses were collected");
  // Cache per color graph: its matchings and chromatic index.
  std::map<std::string, std::pair<std::vector<EdgeSubset>, int>> cache;
  long long checked = 0;
  for (const HColoring& f : witnesses) {
    if (!check(f).ok) {
      c.require(false, "collected coloring fails validation");
      break;
    }
    std::string key = write_graph_text(f.h);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::make_pair(enumerate_matchings(f.h),
                                             chromatic_index_cubic(f.h)))
               .first;
    const auto& [matchings, chi_h] = it->second;
    for (EdgeSubset m : matchings) {
      EdgeSubset pre = preimage(f, m);
      if (!is_matching(f.g, pre)) {
        c.require(false, "a matching pulled back to a non-matching");
        return;
      }
      if (is_perfect_matching(f.h, m) && !is_perfect_matching(f.g, pre)) {
        c.require(false, "a perfect matching pulled back to a non-perfect one");
        return;
      }
      ++checked;
    }
    if (chromatic_index_cubic(f.g) > chi_h) {
      c.require(false, "chromatic index rose along a coloring");
      return;
    }
  }
  c.require(checked > 0, "no matchings checked");
}

void criterion_7_base_facts() {
  Criterion c("criterion 7 [derived base facts about P recomputed]");
  CubicMultigraph p = petersen();
  auto pms = enumerate_perfect_matchings(p);
  c.require(pms.size() == 6, "P must have exactly 6 perfect matchings");
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    int covered = 0;
    for (EdgeSubset pm : pms) covered += pm.test(e) ? 1 : 0;
    if (covered != 2) {
      c.require(false, "edge not in exactly 2 perfect matchings");
      break;
    }
  }
  c.require(even_subgraph_basis(p).size() == 6, "cycle space dimension != 6");
  auto cover = find_even_cover(p, 5, 2);
  c.require(cover.has_value(), "no (5,2) even cover found by search");
  if (cover) {
    for (EdgeSubset s : *cover)
      if (!is_even_subgraph(p, s)) c.require(false, "cover member not even");
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
      int covered = 0;
      for (EdgeSubset s : *cover) covered += s.test(e) ? 1 : 0;
      if (covered != 2) c.require(false, "cover multiplicity violated");
    }
  }
}

void criterion_8_solver_oracle() {
  Criterion c("criterion 8 [solver equals naive oracle, n(G) <= 6]");
  GenFilter filter;
  filter.max_n = 6;
  std::vector<CubicMultigraph> sources = gen_cubic(filter);
  std::vector<CubicMultigraph> targets = {k4(), k33(), triple_edge(),
                                          sylvester()};
  int pairs = 0;
  for (const CubicMultigraph& g : sources) {
    for (const CubicMultigraph& h : targets) {
      auto expected = naive_all_colorings(g, h);
      SolveOptions opts;
      opts.enumerate_all = true;
      SolveOutcome out = solve(g, h, opts);
      if (!(out.stats.complete && out.witnesses == expected)) {
        c.require(false, "witness set mismatch");
        return;
      }
      SolveOptions sym;
      sym.symmetry_break = true;
      SolveOutcome with_sym = solve(g, h, sym);
      if ((with_sym.status == SolveStatus::Found) != !expected.empty()) {
        c.require(false, "symmetry breaking changed the verdict");
        return;
      }
      ++pairs;
    }
  }
  c.require(pairs == static_cast<int>(sources.size() * targets.size()),
            "not all pairs were examined");
}

void criterion_9_generator() {
  Criterion c("criterion 9 [generator dual-strategy and oracle agreement]");
  // Canonical sets for n <= 8, every filter combination.
  for (bool connected : {true, false}) {
    for (bool bridgeless : {false, true}) {
      for (bool simple_only : {false, true}) {
        GenFilter filter;
        filter.max_n = 8;
        filter.connected = connected;
        filter.bridgeless = bridgeless;
        filter.simple_only = simple_only;
        std::set<std::string> a, b;
        for (const auto& g : gen_cubic(filter, GenStrategy::VertexAugmentation))
          a.insert(canonical_form(g));
        for (const auto& g : gen_cubic(filter, GenStrategy::EdgeAugmentation))
          b.insert(canonical_form(g));
        if (a != b) {
          c.require(false, "strategy disagreement at n <= 8 (" +
                               filter.describe() + ")");
          return;
        }
      }
    }
  }
  // Counts at n = 10, every filter combination.
  for (bool connected : {true, false}) {
    for (bool bridgeless : {false, true}) {
      for (bool simple_only : {false, true}) {
        GenFilter filter;
        filter.max_n = 10;
        filter.connected = connected;
        filter.bridgeless = bridgeless;
        filter.simple_only = simple_only;
        std::map<int, int> a, b;
        for (const auto& g : gen_cubic(filter, GenStrategy::VertexAugmentation))
          ++a[g.vertex_count()];
        for (const auto& g : gen_cubic(filter, GenStrategy::EdgeAugmentation))
          ++b[g.vertex_count()];
        if (a != b) {
          c.require(false, "strategy count disagreement at n = 10 (" +
                               filter.describe() + ")");
          return;
        }
      }
    }
  }
  // Half-edge pairing oracle at n <= 6.
  for (int n : {2, 4, 6}) {
    std::set<std::string> oracle;
    for (const auto& g : enumerate_by_half_edge_pairing(n))
      oracle.insert(canonical_form(g));
    GenFilter filter;
    filter.max_n = n;
    std::set<std::string> generated;
    for (const auto& g : gen_cubic(filter))
      if (g.vertex_count() == n) generated.insert(canonical_form(g));
    if (oracle != generated) {
      c.require(false, "half-edge oracle disagreement at n = " +
                           std::to_string(n));
      return;
    }
  }
}

}  // namespace

int main() {
  std::printf("acceptance suite: exhaustive checks over cubic multigraphs, n <= 10\n");
  criterion_1_prop1();
  criterion_2_prop2();
  std::vector<HColoring> witnesses;
  criterion_3_and_5_part(witnesses);
  criterion_4_and_5_part(witnesses);
  criterion_6_scans(witnesses);
  criterion_5_lemma(witnesses);
  criterion_7_base_facts();
  criterion_8_solver_oracle();
  criterion_9_generator();
  if (failures_total == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures_total);
  return 1;
}
