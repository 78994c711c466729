#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supertopo/complex.hpp"
#include "supertopo/setsystem.hpp"

namespace supertopo {

/// All nonempty intersections of subfamilies of the flattened system, plus
/// the ground set (the empty intersection), in canonical order.
struct MeetSemilattice {
  std::vector<ElementSet> elements;
  std::size_t top = 0;
  /// labels[i]: names of listed sets equal to elements[i].
  std::vector<std::vector<std::string>> labels;

  std::optional<std::size_t> find(const ElementSet& s) const;
};

MeetSemilattice meet_semilattice(const SetSystem& s);

struct RankStratification {
  std::vector<std::vector<std::size_t>> layers;  // element indexes, canonical order
  std::vector<std::size_t> rank;                 // per element
  std::size_t bound = 0;                         // n + 1
};

/// Repeated minimal-element stripping. Verifies that two distinct elements
/// of one layer meet, if at all, in a strictly earlier layer, and that there
/// are at most n + 1 layers; throws ContractError otherwise.
RankStratification rank_strata(const MeetSemilattice& l, std::size_t n);

/// Least element containing ground position x.
std::size_t minimal_member(std::size_t x, const MeetSemilattice& l);

struct Realization {
  SetSystem system;
  MeetSemilattice lattice;
  RankStratification strata;
  bool top_included = false;
  /// Order complex: vertices are lattice elements, simplexes are chains.
  SimplicialComplex complex;
  /// Vertex of each element; empty id for the top when it is excluded.
  std::vector<VertexId> vertex_of;

  /// Full subcomplex on the elements contained in element `g`.
  SimplicialComplex assign(std::size_t g) const;
  /// delta of the minimal member of ground position x.
  Point point_map(std::size_t x) const;
};

/// "@" followed by the JSON array of the element's tokens in ground order.
VertexId element_vertex(const SetSystem& s, const ElementSet& e);

/// The top is a vertex when `include_top` is set, when a listed set equals
/// the ground, or when some ground element lies in no listed set (its
/// point_map needs the top).
Realization realize(const SetSystem& s, bool include_top = false);

}  // namespace supertopo
