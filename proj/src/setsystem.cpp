#include "supertopo/setsystem.hpp"

#include <set>

#include "supertopo/error.hpp"

namespace supertopo {

std::vector<std::size_t> positions(const ElementSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return positions(a) < positions(b);
}

SetSystem SetSystem::make(
    std::vector<std::string> ground,
    const std::vector<std::vector<std::pair<std::string, std::vector<std::string>>>>& groups) {
  SetSystem shell;
  shell.ground_ = ground;
  for (std::size_t i = 0; i < shell.ground_.size(); ++i) {
    if (!shell.index_.emplace(shell.ground_[i], i).second) {
      throw InputError("ground lists element \"" + shell.ground_[i] + "\" twice");
    }
  }
  std::vector<std::vector<NamedSet>> sets;
  for (const auto& group : groups) {
    auto& out = sets.emplace_back();
    for (const auto& [name, members] : group) {
      ElementSet s = shell.empty_set();
      for (const std::string& m : members) {
        const std::size_t i = shell.index_of(m);
        if (s.test(i)) throw InputError("set \"" + name + "\" lists \"" + m + "\" twice");
        s.set(i);
      }
      out.push_back(NamedSet{name, std::move(s)});
    }
  }
  return from_sets(std::move(ground), std::move(sets));
}

SetSystem SetSystem::from_sets(std::vector<std::string> ground,
                               std::vector<std::vector<NamedSet>> groups) {
  SetSystem sys;
  sys.ground_ = std::move(ground);
  for (std::size_t i = 0; i < sys.ground_.size(); ++i) {
    if (!sys.index_.emplace(sys.ground_[i], i).second) {
      throw InputError("ground lists element \"" + sys.ground_[i] + "\" twice");
    }
  }
  std::set<std::string> names;
  for (const auto& group : groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      const NamedSet& s = group[i];
      if (!names.insert(s.name).second) {
        throw ContractError("set name \"" + s.name + "\" is used twice", "\"" + s.name + "\"");
      }
      if (s.members.size() != sys.ground_.size()) {
        throw ContractError("set \"" + s.name + "\" is not over the ground set");
      }
      if (s.members.none()) {
        throw ContractError("set \"" + s.name + "\" is empty", "\"" + s.name + "\"");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (group[j].members.intersects(s.members)) {
          throw ContractError("sets \"" + group[j].name + "\" and \"" + s.name +
                                  "\" share a group but intersect",
                              "[\"" + group[j].name + "\",\"" + s.name + "\"]");
        }
      }
    }
  }
  sys.groups_ = std::move(groups);
  return sys;
}

std::vector<NamedSet> SetSystem::flattened() const {
  std::vector<NamedSet> out;
  for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::size_t SetSystem::index_of(const std::string& token) const {
  auto it = index_.find(token);
  if (it == index_.end()) {
    throw ContractError("element \"" + token + "\" is not in the ground set", "\"" + token + "\"");
  }
  return it->second;
}

ElementSet SetSystem::subset(const std::vector<std::string>& tokens) const {
  ElementSet s = empty_set();
  for (const std::string& t : tokens) s.set(index_of(t));
  return s;
}

std::vector<std::string> SetSystem::tokens(const ElementSet& s) const {
  std::vector<std::string> out;
  for (std::size_t i : positions(s)) out.push_back(ground_[i]);
  return out;
}

}  // namespace supertopo
