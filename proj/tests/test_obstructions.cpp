#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "pivd/generator.hpp"
#include "pivd/obstructions.hpp"
#include "pivd/proper_interval.hpp"
#include "test_support.hpp"

using namespace pivd;

namespace {

bool matches_kind(const Graph& g, const Obstruction& o) {
  switch (o.kind) {
    case ObstructionKind::claw: return support::induces_claw(g, o.vertices);
    case ObstructionKind::hole:
      return support::induces_hole(g, o.vertices) &&
             o.hole_length == static_cast<int>(o.vertices.size());
    case ObstructionKind::net: return support::induces_net(g, o.vertices);
    case ObstructionKind::tent: return support::induces_tent(g, o.vertices);
  }
  return false;
}

}  // namespace

TEST_CASE("find_small_obstruction on the canonical patterns") {
  auto claw = find_small_obstruction(support::claw_graph());
  REQUIRE(claw.has_value());
  CHECK(claw->kind == ObstructionKind::claw);
  CHECK(claw->vertices == VertexSet{0, 1, 2, 3});

  auto hole8 = find_small_obstruction(support::cycle_graph(8));
  REQUIRE(hole8.has_value());
  CHECK(hole8->kind == ObstructionKind::hole);
  CHECK(hole8->hole_length == 8);
  CHECK(hole8->vertices.size() == 8);

  CHECK_FALSE(find_small_obstruction(support::cycle_graph(9)).has_value());

  auto net = find_small_obstruction(support::net_graph());
  REQUIRE(net.has_value());
  CHECK(net->kind == ObstructionKind::net);

  auto tent = find_small_obstruction(support::tent_graph());
  REQUIRE(tent.has_value());
  CHECK(tent->kind == ObstructionKind::tent);
}

TEST_CASE("small obstruction detection matches brute force on random graphs") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 1200; ++round) {
    int n = 4 + static_cast<int>(rng() % 5);  // up to 8
    double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = support::random_graph(n, p, rng);
    CAPTURE(round, n, p);
    auto found = find_small_obstruction(g);
    REQUIRE(found.has_value() == support::has_small_obstruction_brute(g));
    if (found) REQUIRE(matches_kind(g, *found));
  }
}

TEST_CASE("find_small_obstruction returns the least witness of the least kind") {
  std::mt19937_64 rng(78);
  for (int round = 0; round < 400; ++round) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph g = support::random_graph(n, 0.4, rng);
    auto found = find_small_obstruction(g);
    if (!found) continue;
    // brute-force least witness for each kind present
    std::optional<std::pair<ObstructionKind, VertexSet>> expect;
    auto consider = [&](ObstructionKind kind, const VertexSet& s) {
      if (!expect || kind < expect->first || (kind == expect->first && s < expect->second))
        expect = {kind, s};
    };
    support::for_each_subset(g.vertices(), 4, std::min<std::size_t>(8, n), [&](const VertexSet& s) {
      if (support::induces_claw(g, s)) consider(ObstructionKind::claw, s);
      if (support::induces_hole(g, s)) consider(ObstructionKind::hole, s);
      if (support::induces_net(g, s)) consider(ObstructionKind::net, s);
      if (support::induces_tent(g, s)) consider(ObstructionKind::tent, s);
    });
    REQUIRE(expect.has_value());
    CHECK(found->kind == expect->first);
    CHECK(found->vertices == expect->second);
  }
}

TEST_CASE("enumeration on proper interval graphs is empty") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 30; ++round) {
    Instance inst = generate_instance(4 + static_cast<int>(rng() % 20), 0, rng());
    CHECK(enumerate_small_obstructions(inst.graph).family.size() == 0);
  }
}

TEST_CASE("a star with four leaves holds four claws") {
  auto fam = enumerate_small_obstructions(support::star_graph(4));
  CHECK_FALSE(fam.truncated);
  REQUIRE(fam.family.size() == 4);
  CHECK(fam.family.sets == support::small_obstruction_sets_brute(support::star_graph(4)));
}

TEST_CASE("enumeration equals brute force on random graphs up to ten vertices") {
  std::mt19937_64 rng(80);
  for (int round = 0; round < 250; ++round) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to 10
    double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = support::random_graph(n, p, rng);
    CAPTURE(round, n, p);
    auto fam = enumerate_small_obstructions(g);
    CHECK_FALSE(fam.truncated);
    REQUIRE(fam.family.sets == support::small_obstruction_sets_brute(g));
  }
}

TEST_CASE("no vertex set carries two obstruction kinds") {
  std::mt19937_64 rng(81);
  for (int round = 0; round < 300; ++round) {
    Graph g = support::random_graph(6 + static_cast<int>(rng() % 3), 0.45, rng);
    std::vector<std::pair<VertexSet, ObstructionKind>> seen;
    for_each_small_obstruction(g, [&](const Obstruction& o) {
      for (const auto& [s, k] : seen)
        if (s == o.vertices) CHECK(k == o.kind);
      seen.emplace_back(o.vertices, o.kind);
      return true;
    });
  }
}

TEST_CASE("truncation stops the enumeration and reports it") {
  Graph g = support::star_graph(6);  // C(6,3) = 20 claws
  auto fam = enumerate_small_obstructions(g, 5);
  CHECK(fam.truncated);
  CHECK(fam.family.size() == 5);
  auto full = enumerate_small_obstructions(g);
  CHECK_FALSE(full.truncated);
  CHECK(full.family.size() == 20);
}

TEST_CASE("find_any_hole basics") {
  auto long_hole = find_any_hole(support::cycle_graph(12), 9);
  REQUIRE(long_hole.has_value());
  CHECK(long_hole->hole_length == 12);
  CHECK(long_hole->vertices.size() == 12);
  CHECK(support::induces_hole(support::cycle_graph(12), long_hole->vertices));

  // chordal graphs have no holes
  CHECK_FALSE(find_any_hole(support::complete_graph(5), 4).has_value());
  CHECK_FALSE(find_any_hole(support::path_graph(6), 4).has_value());
  CHECK_FALSE(find_any_hole(support::net_graph(), 4).has_value());

  // C6 plus a chord splitting it: some C4 comes back
  Graph split = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  auto hole = find_any_hole(split, 4);
  REQUIRE(hole.has_value());
  CHECK(hole->hole_length == 4);
  CHECK(support::induces_hole(split, hole->vertices));

  CHECK_THROWS_AS(find_any_hole(split, 3), std::invalid_argument);
}

TEST_CASE("find_any_hole agrees with brute-force hole existence") {
  std::mt19937_64 rng(82);
  for (int round = 0; round < 800; ++round) {
    int n = 4 + static_cast<int>(rng() % 5);
    double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = support::random_graph(n, p, rng);
    CAPTURE(round, n, p);
    auto hole = find_any_hole(g, 4);
    REQUIRE(hole.has_value() == support::has_hole_brute(g));
    if (hole) {
      REQUIRE(support::induces_hole(g, hole->vertices));
      REQUIRE(hole->vertices.size() >= 4);
    }
  }
}

TEST_CASE("find_any_hole honours the minimum length") {
  // two C4s sharing nothing plus a C9; only the C9 clears min_length 9
  Graph g = support::disjoint_union(support::cycle_graph(4), support::cycle_graph(9));
  auto hole = find_any_hole(g, 9);
  REQUIRE(hole.has_value());
  CHECK(hole->hole_length == 9);
  CHECK_FALSE(find_any_hole(support::cycle_graph(8), 9).has_value());
}

TEST_CASE("streamed obstructions are sound and deterministic") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 100; ++round) {
    Graph g = support::random_graph(8, 0.4, rng);
    std::vector<VertexSet> first, second;
    for_each_small_obstruction(g, [&](const Obstruction& o) {
      REQUIRE(matches_kind(g, o));
      first.push_back(o.vertices);
      return true;
    });
    for_each_small_obstruction(g, [&](const Obstruction& o) {
      second.push_back(o.vertices);
      return true;
    });
    CHECK(first == second);
  }
}
