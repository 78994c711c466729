#include "supertopo/realization.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"
#include "supertopo/error.hpp"

namespace supertopo {

std::optional<std::size_t> MeetSemilattice::find(const ElementSet& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s, canonical_less);
  if (it == elements.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

MeetSemilattice meet_semilattice(const SetSystem& s) {
  const ElementSet ground = s.full_set();
  std::vector<ElementSet> elements{ground};
  std::set<std::vector<std::size_t>> seen{positions(ground)};
  const auto flat = s.flattened();
  // Close {ground} under intersection with each listed set.
  for (const NamedSet& f : flat) {
    const std::size_t count = elements.size();
    for (std::size_t i = 0; i < count; ++i) {
      ElementSet meet = elements[i] & f.members;
      if (meet.none()) continue;
      if (seen.insert(positions(meet)).second) elements.push_back(std::move(meet));
    }
  }
  std::sort(elements.begin(), elements.end(), canonical_less);
  MeetSemilattice l;
  l.elements = std::move(elements);
  l.top = l.elements.size() - 1;
  l.labels.resize(l.elements.size());
  for (const NamedSet& f : flat) l.labels[*l.find(f.members)].push_back(f.name);
  return l;
}

RankStratification rank_strata(const MeetSemilattice& l, std::size_t n) {
  const std::size_t m = l.elements.size();
  RankStratification out;
  out.bound = n + 1;
  out.rank.assign(m, 0);
  std::vector<bool> placed(m, false);
  std::size_t remaining = m;
  while (remaining) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < m; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < m && minimal; ++j) {
        if (j != i && !placed[j] && l.elements[j].is_proper_subset_of(l.elements[i])) minimal = false;
      }
      if (minimal) layer.push_back(i);
    }
    for (std::size_t i : layer) {
      placed[i] = true;
      out.rank[i] = out.layers.size();
    }
    remaining -= layer.size();
    out.layers.push_back(std::move(layer));
  }
  for (const auto& layer : out.layers) {
    for (std::size_t a = 0; a < layer.size(); ++a) {
      for (std::size_t b = a + 1; b < layer.size(); ++b) {
        const ElementSet meet = l.elements[layer[a]] & l.elements[layer[b]];
        if (meet.none()) continue;
        const auto idx = l.find(meet);
        if (!idx || out.rank[*idx] >= out.rank[layer[a]]) {
          throw ContractError("same-layer elements meet outside an earlier layer");
        }
      }
    }
  }
  if (out.layers.size() > out.bound) {
    throw ContractError("semilattice has " + std::to_string(out.layers.size()) +
                        " rank layers, more than n + 1 = " + std::to_string(out.bound));
  }
  return out;
}

std::size_t minimal_member(std::size_t x, const MeetSemilattice& l) {
  ElementSet meet = l.elements[l.top];
  for (const ElementSet& e : l.elements) {
    if (e.test(x)) meet &= e;
  }
  return *l.find(meet);
}

VertexId element_vertex(const SetSystem& s, const ElementSet& e) {
  return VertexId("@" + nlohmann::json(s.tokens(e)).dump());
}

SimplicialComplex Realization::assign(std::size_t g) const {
  std::set<VertexId> keep;
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    if (i == lattice.top && !top_included) continue;
    if (lattice.elements[i].is_subset_of(lattice.elements[g])) keep.insert(vertex_of[i]);
  }
  return complex.induced(keep);
}

Point Realization::point_map(std::size_t x) const {
  const std::size_t m = minimal_member(x, lattice);
  if (m == lattice.top && !top_included) {
    throw ContractError("element has no vertex: the top is excluded from the complex");
  }
  return Point::vertex(vertex_of[m]);
}

Realization realize(const SetSystem& s, bool include_top) {
  Realization r;
  r.system = s;
  r.lattice = meet_semilattice(s);
  r.strata = rank_strata(r.lattice, s.n());
  const auto& elems = r.lattice.elements;
  const std::size_t m = elems.size();
  ElementSet covered = s.empty_set();
  for (const NamedSet& f : s.flattened()) covered |= f.members;
  r.top_included = include_top || !r.lattice.labels[r.lattice.top].empty() || !covered.all();
  r.vertex_of.resize(m);
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == r.lattice.top && !r.top_included) continue;
    r.vertex_of[i] = element_vertex(s, elems[i]);
    vertices.push_back(i);
  }
  // Maximal chains: start at minimal vertices, climb along covering pairs.
  auto covers = [&](std::size_t lo, std::size_t hi) {
    if (!elems[lo].is_proper_subset_of(elems[hi])) return false;
    for (std::size_t mid : vertices) {
      if (elems[lo].is_proper_subset_of(elems[mid]) && elems[mid].is_proper_subset_of(elems[hi])) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> up(m);
  std::vector<bool> has_lower(m, false);
  for (std::size_t lo : vertices) {
    for (std::size_t hi : vertices) {
      if (covers(lo, hi)) {
        up[lo].push_back(hi);
        has_lower[hi] = true;
      }
    }
  }
  std::vector<Simplex> chains;
  std::vector<VertexId> chain;
  std::function<void(std::size_t)> climb = [&](std::size_t at) {
    chain.push_back(r.vertex_of[at]);
    if (up[at].empty()) chains.emplace_back(chain);
    for (std::size_t next : up[at]) climb(next);
    chain.pop_back();
  };
  for (std::size_t v : vertices) {
    if (!has_lower[v]) climb(v);
  }
  r.complex = SimplicialComplex::closure_of(chains);
  return r;
}

}  // namespace supertopo
