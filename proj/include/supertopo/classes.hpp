#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supertopo/knet.hpp"
#include "supertopo/setsystem.hpp"

namespace supertopo {

// Order-convex sets (GO-spaces)

/// Positions in a linearly ordered ground. Throws ContractError naming the
/// set if it is empty or not order-convex.
void require_convex(const NamedSet& s);

struct GoWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  /// x_AB = min(A n B) for every ordered pair (i, j), including i == j.
  std::vector<std::vector<std::size_t>> x;
  std::vector<std::size_t> a_l, b_l;
};

/// a = max_L min_B x_LB, b = min_L max_B x_LB. Throws ContractError naming a
/// disjoint pair, a non-convex set, or an empty input.
GoWitness go_witness(const std::vector<NamedSet>& sets);

struct GoFamily {
  std::vector<NamedSet> family;  // every interval [i, j], named "[x,y]" by tokens
  BinaryReport report;
  /// One witness per maximal clique, aligned with the clique list.
  std::vector<std::vector<std::string>> cliques;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
};

/// Throws ContractError if the ground is larger than `bound`.
GoFamily go_binary_family(const std::vector<std::string>& order, std::size_t bound = 32,
                          Execution exec = Execution::parallel);

// Products

struct Factor {
  std::string name;
  std::vector<std::string> ground;
  std::vector<NamedSet> family;
};

struct ProductSpec {
  std::vector<Factor> factors;
  /// Rows of the dense set as ground positions per factor; empty means the
  /// full product.
  std::optional<std::vector<std::vector<std::size_t>>> dense;
  /// Largest number of constrained coordinates in a cylinder and in a
  /// density pattern; defaults to the number of factors.
  std::optional<std::size_t> depth;
};

struct Cylinder {
  std::string name;
  /// Per factor: index into the augmented factor family (whole factor for
  /// unconstrained coordinates).
  std::vector<std::size_t> box;
  ElementSet rows;  // over the dense set
};

struct CliqueWitness {
  std::vector<std::string> names;
  /// Per factor: x_alpha from the factor clique intersection, or nothing
  /// if the coordinate is unconstrained.
  std::vector<std::optional<std::size_t>> point;
  std::optional<std::size_t> row;  // dense row index
  bool by_pattern = true;          // false: found by searching the factor intersections
};

struct ProductResult {
  std::vector<Factor> factors;  // families augmented with the whole factor
  std::vector<std::size_t> whole;  // index of the whole factor in each family
  std::vector<std::vector<std::size_t>> dense;
  std::size_t depth = 0;
  std::vector<Cylinder> cylinders;
  BinaryReport report;
  std::vector<CliqueWitness> witnesses;  // one per maximal clique
};

/// Throws ContractError when a factor family is not binary (naming the
/// factor and the violating subfamily) or when the dense set misses a
/// coordinate pattern of at most `depth` coordinates (naming the pattern).
ProductResult product_knetwork(const ProductSpec& spec, Execution exec = Execution::parallel);

}  // namespace supertopo
