#include "supertopo/knet.hpp"

#include <algorithm>
#include <set>

#include "supertopo/cliques.hpp"
#include "supertopo/error.hpp"
#include "supertopo/realization.hpp"
#include "supertopo/star.hpp"

namespace supertopo {

namespace {

std::vector<std::string> names_of(const std::vector<NamedSet>& family,
                                  const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(family[i].name);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet meet_of(const std::vector<NamedSet>& family, const std::vector<std::size_t>& idx) {
  ElementSet meet = family[idx.front()].members;
  for (std::size_t i : idx) meet &= family[i].members;
  return meet;
}

}  // namespace

BinaryReport verify_binary(const std::vector<NamedSet>& family, Execution exec) {
  BinaryReport report;
  std::vector<ElementSet> sets;
  for (const NamedSet& s : family) sets.push_back(s.members);
  for (const auto& clique : maximal_cliques(intersection_graph(sets), exec)) {
    ++report.checked_subfamilies;
    if (meet_of(family, clique).none()) report.violations.push_back(names_of(family, clique));
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.binary = report.violations.empty();
  return report;
}

bool binary_by_subsets(const std::vector<NamedSet>& family) {
  const std::size_t n = family.size();
  if (n > 20) throw ContractError("subset enumeration is limited to 20 sets");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    }
    bool linked = true;
    for (std::size_t a = 0; a < idx.size() && linked; ++a) {
      for (std::size_t b = a + 1; b < idx.size() && linked; ++b) {
        linked = family[idx[a]].members.intersects(family[idx[b]].members);
      }
    }
    if (linked && meet_of(family, idx).none()) return false;
  }
  return true;
}

KeyRefinement key_refinement(const SetSystem& f, const ElementSet& c) {
  if (c.size() != f.ground().size()) throw ContractError("C is not a subset of the ground set");
  if (c.none()) throw ContractError("C is empty");
  std::string cname = "@C";
  std::set<std::string> taken;
  for (const NamedSet& s : f.flattened()) taken.insert(s.name);
  while (taken.count(cname)) cname += "'";
  auto groups = f.groups();
  groups.push_back({NamedSet{cname, c}});
  const Realization r = realize(SetSystem::from_sets(f.ground(), std::move(groups)));
  const std::size_t c_elem = *r.lattice.find(c);
  const SimplicialComplex kc = r.assign(c_elem);
  const StarFamily cover = star_cover(kc, r.complex);

  KeyRefinement out;
  out.stars = cover.member_count();
  std::vector<std::pair<std::size_t, Point>> points;
  for (std::size_t x : positions(c)) points.emplace_back(x, r.point_map(x));
  ElementSet seen = f.empty_set();
  for (const auto& group : cover.groups) {
    for (const Simplex& tau : group) {
      ElementSet block = f.empty_set();
      for (const auto& [x, p] : points) {
        if (st2_membership(p, tau, kc)) block.set(x);
      }
      if (block.none()) continue;
      // On a finite ground the pullbacks are fibers of minimal_member.
      if (block.intersects(seen)) {
        throw ContractError("star pullbacks overlap at base " + to_string(tau));
      }
      seen |= block;
      out.blocks.push_back(std::move(block));
      out.bases.push_back(tau);
    }
  }
  if (seen != c) throw ContractError("star pullbacks do not cover C");
  return out;
}

std::vector<std::vector<std::string>> refinement_violations(const std::vector<NamedSet>& earlier,
                                                           const std::vector<NamedSet>& blocks,
                                                           std::size_t* checked, Execution exec) {
  std::vector<NamedSet> all = earlier;
  all.insert(all.end(), blocks.begin(), blocks.end());
  std::vector<ElementSet> sets;
  for (const NamedSet& s : all) sets.push_back(s.members);
  std::vector<std::vector<std::string>> out;
  std::size_t count = 0;
  for (const auto& clique : maximal_cliques(intersection_graph(sets), exec)) {
    if (clique.back() < earlier.size()) continue;  // no block in it
    ++count;
    if (meet_of(all, clique).none()) out.push_back(names_of(all, clique));
  }
  if (checked) *checked = count;
  std::sort(out.begin(), out.end());
  return out;
}

SynthesisReport synthesize(const SetSystem& n, Execution exec) {
  SynthesisReport report;
  std::vector<std::vector<NamedSet>> levels;
  for (std::size_t level = 0; level < n.n(); ++level) {
    const auto& group = n.groups()[level];
    report.discreteness_bound.push_back(std::size_t{1} << (level + 1));
    if (level == 0) {
      levels.push_back(group);
      for (const NamedSet& s : group) report.refinement_table[s.name] = {s.name};
      report.achieved_groups.push_back(1);
      continue;
    }
    std::vector<NamedSet> earlier;
    for (const auto& l : levels) earlier.insert(earlier.end(), l.begin(), l.end());
    const SetSystem previous = SetSystem::from_sets(n.ground(), levels);
    std::vector<NamedSet> produced;
    for (const NamedSet& s : group) {
      const KeyRefinement kr = key_refinement(previous, s.members);
      SynthesisStep step;
      step.level = level;
      step.input = s.name;
      step.stars = kr.stars;
      std::vector<NamedSet> blocks;
      for (std::size_t i = 0; i < kr.blocks.size(); ++i) {
        blocks.push_back(NamedSet{s.name + "#" + std::to_string(i + 1), kr.blocks[i]});
        step.blocks.push_back(blocks.back().name);
      }
      step.violations = refinement_violations(earlier, blocks, &step.checked_subfamilies, exec);
      report.refinement_table[s.name] = step.blocks;
      produced.insert(produced.end(), blocks.begin(), blocks.end());
      report.steps.push_back(std::move(step));
    }
    levels.push_back(std::move(produced));
    report.achieved_groups.push_back(1);
  }
  report.family = SetSystem::from_sets(n.ground(), std::move(levels));
  report.global = verify_binary(report.family.flattened(), exec);
  return report;
}

bool verify_refinement(const SynthesisReport& report, const SetSystem& n) {
  std::map<std::string, const ElementSet*> blocks;
  for (const auto& g : report.family.groups()) {
    for (const NamedSet& s : g) blocks[s.name] = &s.members;
  }
  for (const NamedSet& s : n.flattened()) {
    auto it = report.refinement_table.find(s.name);
    if (it == report.refinement_table.end()) return false;
    ElementSet acc(s.members.size());
    for (const std::string& b : it->second) {
      auto bt = blocks.find(b);
      if (bt == blocks.end() || bt->second->size() != acc.size()) return false;
      if (!bt->second->is_subset_of(s.members)) return false;
      acc |= *bt->second;
    }
    if (acc != s.members) return false;
  }
  return true;
}

}  // namespace supertopo
