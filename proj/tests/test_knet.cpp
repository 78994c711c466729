#include <random>

#include "doctest.h"
#include "support/systems.hpp"
#include "supertopo/cliques.hpp"
#include "supertopo/error.hpp"
#include "supertopo/knet.hpp"
#include "supertopo/realization.hpp"

using namespace supertopo;

namespace {

using Names = std::vector<std::vector<std::string>>;

std::vector<NamedSet> family(std::size_t ground, const systems::Group& sets) {
  std::vector<NamedSet> out;
  const auto g = systems::ground_of(ground);
  for (const auto& [name, members] : sets) {
    ElementSet s(ground);
    for (const auto& m : members) s.set(std::stoul(m) - 1);
    out.push_back(NamedSet{name, s});
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned density) {
  Graph g(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 100 < density) {
        g[i].set(j);
        g[j].set(i);
      }
    }
  }
  return g;
}

// Maximal cliques by checking every vertex subset.
std::vector<std::vector<std::size_t>> cliques_by_subsets(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> clique_masks;
  auto is_clique = [&](std::size_t mask) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((mask >> i & 1) && (mask >> j & 1) && !g[i][j]) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (!is_clique(mask)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!(mask >> v & 1) && is_clique(mask | (std::size_t{1} << v))) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> c;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) c.push_back(v);
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("knet") {
  TEST_CASE("maximal cliques: serial, parallel and subset enumeration agree") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = random_graph(rng, rng() % 12, static_cast<unsigned>(rng() % 101));
      const auto serial = maximal_cliques(g, Execution::serial);
      CHECK(serial == maximal_cliques(g, Execution::parallel));
      CHECK(serial == cliques_by_subsets(g));
    }
    CHECK(maximal_cliques(Graph{}).empty());
  }

  TEST_CASE("verify binary examples") {
    const auto helly = verify_binary(family(3, {{"A", {"1", "2"}}, {"B", {"2", "3"}}, {"C", {"1", "3"}}}));
    CHECK_FALSE(helly.binary);
    CHECK(helly.violations == Names{{"A", "B", "C"}});
    CHECK(verify_binary(family(3, {{"A", {"1", "2"}}, {"B", {"2", "3"}}, {"C", {"2"}}})).binary);
    CHECK(verify_binary(family(4, {{"A", {"1"}}, {"B", {"2", "3"}}, {"C", {"4"}}})).binary);
    CHECK(verify_binary({}).binary);
  }

  TEST_CASE("clique check agrees with subset enumeration") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t ground = 1 + rng() % 6;
      std::vector<NamedSet> f;
      const std::size_t count = rng() % 8;
      for (std::size_t i = 0; i < count; ++i) {
        f.push_back(NamedSet{"F" + std::to_string(i), systems::random_subset(rng, ground)});
      }
      const auto serial = verify_binary(f, Execution::serial);
      const auto parallel = verify_binary(f, Execution::parallel);
      CHECK(serial.binary == binary_by_subsets(f));
      CHECK(serial.violations == parallel.violations);
      CHECK(serial.checked_subfamilies == parallel.checked_subfamilies);
    }
  }

  TEST_CASE("key refinement examples") {
    const auto f = systems::make(4, {{{"A", {"1", "2", "3", "4"}}}});
    const auto kr = key_refinement(f, f.subset({"1", "2"}));
    REQUIRE(kr.blocks.size() == 1);
    CHECK(f.tokens(kr.blocks[0]) == std::vector<std::string>{"1", "2"});
    CHECK(kr.bases[0].size() == 1);

    const auto g = systems::make(5, {{{"A", {"1", "2"}}, {"B", {"3"}}}});
    const auto apart = key_refinement(g, g.subset({"4", "5"}));
    REQUIRE(apart.blocks.size() == 1);
    CHECK(g.tokens(apart.blocks[0]) == std::vector<std::string>{"4", "5"});

    const auto split = key_refinement(g, g.subset({"2", "3", "4"}));
    Names blocks;
    for (const auto& b : split.blocks) blocks.push_back(g.tokens(b));
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks == Names{{"2"}, {"3"}, {"4"}});
    CHECK_THROWS_AS(key_refinement(g, g.empty_set()), ContractError);
  }

  TEST_CASE("key refinement blocks are fibers of the minimal member") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t ground = 1 + rng() % 8;
      const auto f = systems::random_system(rng, ground, 4, 2);
      const ElementSet c = systems::random_subset(rng, ground);
      const auto kr = key_refinement(f, c);
      ElementSet all(ground);
      for (const auto& b : kr.blocks) {
        CHECK_FALSE(b.intersects(all));
        all |= b;
      }
      CHECK(all == c);
      // same block iff same minimal member in F u {C}
      auto groups = f.groups();
      groups.push_back({NamedSet{"@C", c}});
      const auto l = meet_semilattice(SetSystem::from_sets(f.ground(), groups));
      for (const auto& b : kr.blocks) {
        const auto xs = positions(b);
        for (std::size_t x : xs) CHECK(minimal_member(x, l) == minimal_member(xs.front(), l));
      }
      std::vector<NamedSet> blocks;
      for (std::size_t i = 0; i < kr.blocks.size(); ++i) blocks.push_back({"G" + std::to_string(i), kr.blocks[i]});
      CHECK(refinement_violations(f.flattened(), blocks).empty());
    }
  }

  TEST_CASE("synthesize a disjoint system") {
    const auto n = systems::make(3, {{{"A", {"1", "2"}}, {"B", {"3"}}}});
    const auto r = synthesize(n);
    CHECK(r.family.flattened().size() == 2);
    CHECK(r.family.flattened()[0].name == "A");
    CHECK(r.global.binary);
    CHECK(verify_refinement(r, n));
  }

  TEST_CASE("synthesize two levels") {
    const auto n = systems::make(3, {{{"N0", {"1", "2", "3"}}}, {{"N1", {"1", "2"}}, {"N2", {"3"}}}});
    const auto r = synthesize(n);
    CHECK(r.global.binary);
    CHECK(r.global.violations.empty());
    CHECK(verify_refinement(r, n));
    CHECK(r.refinement_table.at("N1") == std::vector<std::string>{"N1#1"});
    CHECK(r.discreteness_bound == std::vector<std::size_t>{2, 4});
    CHECK(r.achieved_groups == std::vector<std::size_t>{1, 1});
    for (const auto& step : r.steps) CHECK(step.violations.empty());
  }

  TEST_CASE("synthesis removes a Helly failure") {
    const auto n = systems::make(3, {{{"A", {"1", "2"}}}, {{"B", {"2", "3"}}}, {{"C", {"1", "3"}}}});
    CHECK_FALSE(verify_binary(n.flattened()).binary);
    const auto r = synthesize(n);
    CHECK(r.global.binary);
    CHECK(verify_refinement(r, n));
    CHECK(r.refinement_table.at("C") == std::vector<std::string>{"C#1", "C#2"});
  }

  TEST_CASE("synthesis is the identity on one level") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto n = systems::random_system(rng, 1 + rng() % 8, 5, 1);
      const auto r = synthesize(n);
      CHECK(r.family.flattened().size() == n.flattened().size());
      for (std::size_t i = 0; i < n.flattened().size(); ++i) {
        CHECK(r.family.flattened()[i].members == n.flattened()[i].members);
      }
    }
  }

  TEST_CASE("verify refinement rejects a dropped block") {
    const auto n = systems::make(3, {{{"A", {"1", "2"}}}, {{"B", {"2", "3"}}}, {{"C", {"1", "3"}}}});
    auto r = synthesize(n);
    r.refinement_table["C"].pop_back();
    CHECK_FALSE(verify_refinement(r, n));
    const auto empty = SetSystem::make({}, {});
    CHECK(verify_refinement(synthesize(empty), empty));
  }

  TEST_CASE("synthesis on random layered systems") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = systems::random_system(rng, 1 + rng() % 10, 8, 3);
      const auto r = synthesize(n);
      CHECK(r.global.binary);
      CHECK(verify_refinement(r, n));
      for (const auto& step : r.steps) CHECK(step.violations.empty());
      const auto serial = synthesize(n, Execution::serial);
      CHECK(serial.global.violations == r.global.violations);
      CHECK(serial.refinement_table == r.refinement_table);
    }
  }
}
