#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hcolor/canonical.hpp"
#include "hcolor/generate.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/hcoloring.hpp"
#include "hcolor/matchings.hpp"

using namespace hcolor;

namespace {

std::vector<EdgeId> identity_map(const CubicMultigraph& g) {
  std::vector<EdgeId> map(g.edge_count());
  std::iota(map.begin(), map.end(), 0);
  return map;
}

// K4 colored by one fixed star of P: each 3-edge-coloring class goes to one
// edge of the star, so every K4 vertex sees the whole star.
HColoring star_construction_k4_to_p() {
  CubicMultigraph g = k4();
  CubicMultigraph h = petersen();
  auto classes = find_3_edge_coloring(g);
  REQUIRE(classes.has_value());
  std::vector<EdgeId> star0 = edge_ids(h.star(0));
  REQUIRE(star0.size() == 3);
  std::vector<EdgeId> map(g.edge_count(), -1);
  for (int c = 0; c < 3; ++c)
    for (EdgeId e : edge_ids((*classes)[c])) map[e] = star0[c];
  return HColoring{g, h, map};
}

// Chronological generate-and-test oracle: fixed edge order, properness
// checked against earlier assignments, the star condition checked as soon
// as a vertex has all three incident edges assigned. No domains, no
// propagation, no ordering heuristics.
std::vector<std::vector<EdgeId>> naive_all_colorings(const CubicMultigraph& g,
                                                     const CubicMultigraph& h) {
  int mg = g.edge_count();
  int mh = h.edge_count();
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> map(mg, -1);

  auto star_done_ok = [&](int x) {
    for (EdgeId e : g.incident(x))
      if (map[e] == -1) return true;  // not complete yet, nothing to check
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

}  // namespace

TEST_CASE("check accepts identity colorings") {
  for (const CubicMultigraph& g : {petersen(), sylvester(), k4(), triple_edge()}) {
    HColoring f{g, g, identity_map(g)};
    CHECK(check(f).ok);
  }
}

TEST_CASE("check accepts the star construction") {
  HColoring f = star_construction_k4_to_p();
  CHECK(check(f).ok);
  CHECK(used_edges(f) == f.h.star(0));
  CHECK_FALSE(check_adjacency_closure(f));
}

TEST_CASE("check rejects violations with a description") {
  CubicMultigraph g = k4();
  HColoring f{g, petersen(), identity_map(g)};
  // Edges 0 and 1 of K4 share vertex 0 but identity sends them to the two
  // adjacent outer edges (0,1),(1,2) of P -- proper, but no star matches.
  CheckResult r = check(f);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("star") != std::string::npos);

  HColoring improper{g, petersen(), std::vector<EdgeId>(6, 0)};
  CheckResult r2 = check(improper);
  CHECK_FALSE(r2.ok);
  CHECK(r2.violation.find("share image") != std::string::npos);

  HColoring broken{g, petersen(), std::vector<EdgeId>(6, 99)};
  CHECK_THROWS_AS((void)check(broken), Error);
  HColoring partial{g, petersen(), std::vector<EdgeId>(3, 0)};
  CHECK_THROWS_AS((void)check(partial), Error);
}

TEST_CASE("preimage behaves like an inverse image") {
  CubicMultigraph p = petersen();
  HColoring id{p, p, identity_map(p)};
  auto pms = enumerate_perfect_matchings(p);
  for (EdgeSubset pm : pms) CHECK(preimage(id, pm) == pm);
  CHECK(preimage(id, EdgeSubset{}).empty());

  HColoring star = star_construction_k4_to_p();
  // Whole star pulls back to all of E(K4): not a matching.
  EdgeSubset all = preimage(star, star.h.star(0));
  CHECK(all == star.g.all_edges_mask());
  CHECK_FALSE(is_matching(star.g, all));
  // A single star edge pulls back to one color class: a perfect matching.
  for (EdgeId e : edge_ids(star.h.star(0))) {
    EdgeSubset single;
    single.set(e);
    EdgeSubset cls = preimage(star, single);
    CHECK(is_perfect_matching(star.g, cls));
  }
}

TEST_CASE("used_edges and closure on identity") {
  CubicMultigraph p = petersen();
  HColoring id{p, p, identity_map(p)};
  CHECK(used_edges(id) == p.all_edges_mask());
  CHECK(check_adjacency_closure(id));
}

TEST_CASE("adjacency preservation decisions") {
  CubicMultigraph g = k4();
  CubicMultigraph p = petersen();

  HColoring star = star_construction_k4_to_p();
  CHECK(is_adjacency_preserving(g, p, star.map));

  // Constant maps are not adjacency-preserving: an edge is not adjacent to
  // itself.
  CHECK_FALSE(is_adjacency_preserving(g, p, std::vector<EdgeId>(6, 3)));

  // K4 -> K4 collapsing the star of vertex 0 onto the triangle {ab, bc, ca}:
  // adjacency-preserving, but the image of a star is a triangle, not a star.
  CubicMultigraph h = k4();
  // K4 edge order: 0=(0,1) 1=(0,2) 2=(0,3) 3=(1,2) 4=(1,3) 5=(2,3).
  // Send star(0) to the triangle on h-vertices {0,1,2}: edges 0,3,1.
  std::vector<EdgeId> tri_map = {0, 3, 1, 4, 2, 5};
  CHECK(is_adjacency_preserving(g, h, tri_map));
  CHECK_FALSE(check(HColoring{g, h, tri_map}).ok);
}

TEST_CASE("triangle-free converse: adjacency-preserving maps into P pass check") {
  CubicMultigraph p = petersen();

  // Exhaustive for the triple edge: all ordered triples of pairwise
  // adjacent distinct edges of P.
  CubicMultigraph triple = triple_edge();
  int tested = 0;
  for (EdgeId a = 0; a < 15; ++a)
    for (EdgeId b = 0; b < 15; ++b)
      for (EdgeId c = 0; c < 15; ++c) {
        std::vector<EdgeId> map = {a, b, c};
        if (!(p.edges_adjacent(a, b) && p.edges_adjacent(a, c) &&
              p.edges_adjacent(b, c)))
          continue;
        REQUIRE(is_adjacency_preserving(triple, p, map));
        CHECK(check(HColoring{triple, p, map}).ok);
        ++tested;
      }
  CHECK(tested > 0);

  // Random greedy extension for larger sources.
  std::mt19937 rng(7);
  for (const CubicMultigraph& g : {k4(), k33(), petersen()}) {
    int built = 0;
    for (int attempt = 0; attempt < 4000 && built < 100; ++attempt) {
      std::vector<EdgeId> map(g.edge_count(), -1);
      bool dead = false;
      for (EdgeId e = 0; e < g.edge_count() && !dead; ++e) {
        std::vector<int> options;
        for (int c = 0; c < p.edge_count(); ++c) {
          bool ok = true;
          for (EdgeId f = 0; f < e && ok; ++f)
            if (g.edges_adjacent(e, f) &&
                (map[f] == c || !p.edges_adjacent(map[f], c)))
              ok = false;
          if (ok) options.push_back(c);
        }
        if (options.empty()) {
          dead = true;
          break;
        }
        map[e] = options[rng() % options.size()];
      }
      if (dead) continue;
      ++built;
      REQUIRE(is_adjacency_preserving(g, p, map));
      CHECK(check(HColoring{g, p, map}).ok);
    }
    CHECK(built > 0);
  }
}

TEST_CASE("solve finds and refutes the expected small cases") {
  SolveOutcome k4_to_p = solve(k4(), petersen());
  CHECK(k4_to_p.status == SolveStatus::Found);
  CHECK(check(k4_to_p.witness(k4(), petersen())).ok);

  SolveOutcome p_to_k4 = solve(petersen(), k4());
  CHECK(p_to_k4.status == SolveStatus::ExhaustedNone);
  CHECK(p_to_k4.witnesses.empty());
  CHECK(p_to_k4.stats.complete);

  SolveOutcome triple_to_p = solve(triple_edge(), petersen());
  CHECK(triple_to_p.status == SolveStatus::Found);

  SolveOutcome s_to_s = solve(sylvester(), sylvester());
  CHECK(s_to_s.status == SolveStatus::Found);
}

TEST_CASE("solve(P, P) finds the identity among all witnesses") {
  CubicMultigraph p = petersen();
  SolveOptions opts;
  opts.enumerate_all = true;
  SolveOutcome out = solve(p, p, opts);
  REQUIRE(out.status == SolveStatus::Found);
  std::vector<EdgeId> id = identity_map(p);
  CHECK(std::find(out.witnesses.begin(), out.witnesses.end(), id) !=
        out.witnesses.end());
  for (const auto& w : out.witnesses) {
    HColoring f{p, p, w};
    CHECK(check(f).ok);
    CHECK(check_adjacency_closure(f));
  }
  // Every witness is induced by an automorphism (all 15 edges used), so the
  // count matches the automorphism group order.
  CHECK(out.witnesses.size() == 120);
}

TEST_CASE("node limit reports inconclusive, never nonexistence") {
  SolveOptions opts;
  opts.node_limit = 3;
  SolveOutcome out = solve(petersen(), k4(), opts);
  CHECK(out.status == SolveStatus::NodeLimit);
  CHECK_FALSE(out.stats.complete);
}

TEST_CASE("solver agrees with the naive oracle on all small cases") {
  GenFilter filter;
  filter.max_n = 6;
  std::vector<CubicMultigraph> sources = gen_cubic(filter);
  CHECK(sources.size() == 9);
  std::vector<CubicMultigraph> targets = {k4(), k33(), triple_edge(),
                                          sylvester()};
  for (const CubicMultigraph& g : sources) {
    for (const CubicMultigraph& h : targets) {
      auto expected = naive_all_colorings(g, h);
      SolveOptions opts;
      opts.enumerate_all = true;
      SolveOutcome out = solve(g, h, opts);
      CHECK(out.stats.complete);
      CHECK(out.witnesses == expected);

      SolveOptions sym = opts;
      sym.enumerate_all = false;
      sym.symmetry_break = true;
      SolveOutcome with_sym = solve(g, h, sym);
      CHECK((with_sym.status == SolveStatus::Found) == !expected.empty());
    }
  }
}

TEST_CASE("lemma pullbacks over assorted valid colorings") {
  CubicMultigraph p = petersen();
  std::vector<HColoring> colorings;
  colorings.push_back(HColoring{p, p, identity_map(p)});
  colorings.push_back(star_construction_k4_to_p());
  {
    SolveOutcome out = solve(k33(), p);
    REQUIRE(out.status == SolveStatus::Found);
    colorings.push_back(out.witness(k33(), p));
  }

  for (const HColoring& f : colorings) {
    REQUIRE(check(f).ok);
    // All matchings of h pull back to matchings; perfect to perfect.
    for (EdgeSubset m : enumerate_matchings(f.h)) {
      EdgeSubset pre = preimage(f, m);
      CHECK(is_matching(f.g, pre));
      if (is_perfect_matching(f.h, m)) CHECK(is_perfect_matching(f.g, pre));
    }
    // chromatic index is monotone along a coloring.
    CHECK(chromatic_index_cubic(f.g) <= chromatic_index_cubic(f.h));
    // Even subgraphs pull back to even subgraphs.
    std::vector<EdgeSubset> members = {EdgeSubset{}};
    for (EdgeSubset b : even_subgraph_basis(f.h)) {
      std::size_t size = members.size();
      for (std::size_t i = 0; i < size; ++i) members.push_back(members[i] ^ b);
    }
    for (EdgeSubset c : members)
      CHECK(is_even_subgraph(f.g, preimage(f, c)));
  }
}

TEST_CASE("bf cover derivation") {
  CubicMultigraph p = petersen();
  HColoring id{p, p, identity_map(p)};
  auto cover = derive_bf_cover(id);
  CHECK(cover == enumerate_perfect_matchings(p));

  HColoring star = star_construction_k4_to_p();
  auto k4_cover = derive_bf_cover(star);
  CHECK(k4_cover.size() == 6);
  for (EdgeSubset pm : k4_cover) CHECK(is_perfect_matching(star.g, pm));
  for (EdgeId e = 0; e < star.g.edge_count(); ++e) {
    int covered = 0;
    for (EdgeSubset pm : k4_cover) covered += pm.test(e) ? 1 : 0;
    CHECK(covered == 2);
  }
}

TEST_CASE("(5,2) cover derivation") {
  CubicMultigraph p = petersen();
  HColoring id{p, p, identity_map(p)};
  auto base = derive_52_cover(id);
  CHECK(base.size() == 5);

  HColoring star = star_construction_k4_to_p();
  auto cover = derive_52_cover(star);
  CHECK(cover.size() == 5);
  for (EdgeSubset c : cover) CHECK(is_even_subgraph(star.g, c));
  for (EdgeId e = 0; e < star.g.edge_count(); ++e) {
    int covered = 0;
    for (EdgeSubset c : cover) covered += c.test(e) ? 1 : 0;
    CHECK(covered == 2);
  }
}

TEST_CASE("cover derivation rejects wrong inputs") {
  CubicMultigraph g = k4();
  CHECK_THROWS_AS((void)derive_bf_cover(HColoring{g, g, identity_map(g)}),
                  Error);
  HColoring bad{g, petersen(), std::vector<EdgeId>(6, 0)};
  CHECK_THROWS_AS((void)derive_bf_cover(bad), Error);
}
