#pragma once

// Set-system helpers for tests: literal construction and random generators.

#include <random>
#include <string>
#include <vector>

#include "supertopo/setsystem.hpp"

namespace systems {

using namespace supertopo;

using Group = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline std::vector<std::string> ground_of(std::size_t n) {
  std::vector<std::string> g;
  for (std::size_t i = 1; i <= n; ++i) g.push_back(std::to_string(i));
  return g;
}

inline SetSystem make(std::size_t ground, const std::vector<Group>& groups) {
  return SetSystem::make(ground_of(ground), groups);
}

/// Random layered system: each group is a random partial partition of the
/// ground (pairwise disjoint nonempty blocks).
inline SetSystem random_system(std::mt19937_64& rng, std::size_t ground, std::size_t max_sets,
                               std::size_t max_groups) {
  std::vector<std::vector<NamedSet>> groups;
  std::size_t sets = 0;
  const std::size_t group_count = 1 + rng() % max_groups;
  for (std::size_t g = 0; g < group_count && sets < max_sets; ++g) {
    // assign each element a block label in [0, blocks] where label 0 means "unused"
    const std::size_t blocks = 1 + rng() % 3;
    std::vector<ElementSet> parts(blocks, ElementSet(ground));
    for (std::size_t x = 0; x < ground; ++x) {
      const std::size_t label = rng() % (blocks + 1);
      if (label) parts[label - 1].set(x);
    }
    auto& out = groups.emplace_back();
    for (auto& p : parts) {
      if (p.none() || sets == max_sets) continue;
      out.push_back(NamedSet{"S" + std::to_string(sets++), std::move(p)});
    }
    if (out.empty()) groups.pop_back();
  }
  return SetSystem::from_sets(ground_of(ground), std::move(groups));
}

inline ElementSet random_subset(std::mt19937_64& rng, std::size_t ground, bool nonempty = true) {
  ElementSet s(ground);
  do {
    for (std::size_t x = 0; x < ground; ++x) s[x] = rng() % 2;
  } while (nonempty && s.none());
  return s;
}

}  // namespace systems
