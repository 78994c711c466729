#pragma once

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <string>
#include <vector>

namespace supertopo {

/// Subset of a finite ground set, indexed by ground position.
using ElementSet = boost::dynamic_bitset<>;

struct NamedSet {
  std::string name;
  ElementSet members;
};

/// Canonical order on subsets: by cardinality, then lexicographic on the
/// sorted list of member positions.
bool canonical_less(const ElementSet& a, const ElementSet& b);

/// Finite ground set of element tokens with named subsets arranged in groups.
/// Within a group the sets are pairwise disjoint.
class SetSystem {
 public:
  SetSystem() = default;

  /// Throws InputError on a duplicate ground token and ContractError on a
  /// duplicate name, a member outside the ground, an empty set, or two
  /// intersecting sets in one group.
  static SetSystem make(std::vector<std::string> ground,
                        const std::vector<std::vector<std::pair<std::string, std::vector<std::string>>>>& groups);

  /// Same checks, for sets already expressed over this ground.
  static SetSystem from_sets(std::vector<std::string> ground, std::vector<std::vector<NamedSet>> groups);

  const std::vector<std::string>& ground() const noexcept { return ground_; }
  const std::vector<std::vector<NamedSet>>& groups() const noexcept { return groups_; }
  std::size_t n() const noexcept { return groups_.size(); }
  std::vector<NamedSet> flattened() const;

  ElementSet empty_set() const { return ElementSet(ground_.size()); }
  ElementSet full_set() const { return ~empty_set(); }

  /// Position of a ground token; throws ContractError if absent.
  std::size_t index_of(const std::string& token) const;
  ElementSet subset(const std::vector<std::string>& tokens) const;
  /// Member tokens in ground order.
  std::vector<std::string> tokens(const ElementSet& s) const;

 private:
  std::vector<std::string> ground_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<NamedSet>> groups_;
};

std::vector<std::size_t> positions(const ElementSet& s);

}  // namespace supertopo
