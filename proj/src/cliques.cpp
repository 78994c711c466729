#include "supertopo/cliques.hpp"

#include <omp.h>

#include <algorithm>

namespace supertopo {

Graph intersection_graph(const std::vector<ElementSet>& sets) {
  const std::size_t n = sets.size();
  Graph g(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sets[i].intersects(sets[j])) {
        g[i].set(j);
        g[j].set(i);
      }
    }
  }
  return g;
}

namespace {

using Bits = boost::dynamic_bitset<>;

void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r, Bits p, Bits x,
                   std::vector<std::vector<std::size_t>>& out) {
  if (p.none()) {
    if (x.none()) {
      out.push_back(r);
      std::sort(out.back().begin(), out.back().end());
    }
    return;
  }
  // pivot: vertex of P u X with most neighbours in P
  const Bits px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = 0;
  for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
    const std::size_t c = (p & g[u]).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  const Bits candidates = p - g[pivot];
  for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g[v], x & g[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g, Execution exec) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  if (exec == Execution::serial) {
    std::vector<std::size_t> r;
    Bits all(n);
    all.set();
    bron_kerbosch(g, r, all, Bits(n), out);
  } else {
    // Branch v collects the maximal cliques whose smallest vertex is v.
    std::vector<std::vector<std::vector<std::size_t>>> per_vertex(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t v = 0; v < n; ++v) {
      Bits later(n), earlier(n);
      for (std::size_t u = 0; u < n; ++u) (u < v ? earlier : later).set(u);
      later.reset(v);
      std::vector<std::size_t> r{v};
      bron_kerbosch(g, r, g[v] & later, g[v] & earlier, per_vertex[v]);
    }
    for (auto& part : per_vertex) {
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace supertopo
