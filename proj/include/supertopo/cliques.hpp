#pragma once

#include <cstddef>
#include <vector>

#include "supertopo/parallel.hpp"
#include "supertopo/setsystem.hpp"

namespace supertopo {

/// Undirected simple graph as adjacency bitsets.
using Graph = std::vector<boost::dynamic_bitset<>>;

/// Graph whose vertices are the sets, adjacent when they intersect.
Graph intersection_graph(const std::vector<ElementSet>& sets);

/// All maximal cliques, each sorted ascending, the list sorted
/// lexicographically. The serial path is Bron-Kerbosch with Tomita
/// pivoting; the parallel path splits on the first clique vertex.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g,
                                                      Execution exec = Execution::parallel);

}  // namespace supertopo
