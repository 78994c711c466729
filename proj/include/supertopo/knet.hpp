#pragma once

#include <map>
#include <string>
#include <vector>

#include "supertopo/complex.hpp"
#include "supertopo/parallel.hpp"
#include "supertopo/setsystem.hpp"

namespace supertopo {

struct BinaryReport {
  bool binary = true;
  /// Maximal cliques of the intersection graph that were checked.
  std::size_t checked_subfamilies = 0;
  /// Pairwise-intersecting subfamilies with empty intersection, as sorted
  /// name lists, sorted. Each is a maximal clique.
  std::vector<std::vector<std::string>> violations;
};

/// Binary iff every maximal clique of the intersection graph has nonempty
/// total intersection.
BinaryReport verify_binary(const std::vector<NamedSet>& family, Execution exec = Execution::parallel);

/// Reference check over every subfamily (at most 20 members).
bool binary_by_subsets(const std::vector<NamedSet>& family);

struct KeyRefinement {
  std::vector<ElementSet> blocks;  // nonempty, pairwise disjoint, union = C
  std::vector<Simplex> bases;      // star base tau of each block
  std::size_t stars = 0;           // members of the star cover of assign(C)
};

/// Realizes F u {C}, covers assign(C) by the stars St^2(b_tau, assign(C))
/// and pulls them back through point_map. Throws ContractError if C is
/// empty or not over F's ground set.
KeyRefinement key_refinement(const SetSystem& f, const ElementSet& c);

/// Every pairwise-intersecting L inside earlier u blocks that contains a
/// block has nonempty intersection. Returns offending maximal cliques.
std::vector<std::vector<std::string>> refinement_violations(const std::vector<NamedSet>& earlier,
                                                           const std::vector<NamedSet>& blocks,
                                                           std::size_t* checked = nullptr,
                                                           Execution exec = Execution::parallel);

struct SynthesisStep {
  std::size_t level = 0;
  std::string input;                 // name of the refined set
  std::vector<std::string> blocks;   // names of its blocks
  std::size_t stars = 0;
  std::size_t checked_subfamilies = 0;
  std::vector<std::vector<std::string>> violations;
};

struct SynthesisReport {
  SetSystem family;  // group i holds F_i
  std::map<std::string, std::vector<std::string>> refinement_table;
  std::vector<SynthesisStep> steps;
  /// Per level: the infinite construction's discreteness bound 2^(level+1) and the number of
  /// disjoint groups this construction produced.
  std::vector<std::size_t> discreteness_bound;
  std::vector<std::size_t> achieved_groups;
  BinaryReport global;
};

/// F_0 = N_0; each set N of a later level is replaced by key_refinement of
/// the union of earlier levels and N. Block names are "N#1", "N#2", ...
SynthesisReport synthesize(const SetSystem& n, Execution exec = Execution::parallel);

/// Every set of `n` is exactly the union of its blocks in the table.
bool verify_refinement(const SynthesisReport& report, const SetSystem& n);

}  // namespace supertopo
