#pragma once

// Test-only brute-force machinery. Nothing here calls the closed-form star
// membership test; stars are materialized extensionally from Sd^2 cells.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "supertopo/complex.hpp"
#include "supertopo/rational.hpp"

namespace oracle {

using namespace supertopo;

inline const char* vertex_name(int i) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  return names[i];
}

inline Simplex simplex_of_mask(unsigned mask) {
  std::vector<VertexId> vs;
  for (int i = 0; i < 8; ++i) {
    if (mask & (1u << i)) vs.emplace_back(vertex_name(i));
  }
  return Simplex(std::move(vs));
}

inline unsigned mask_of(const Simplex& s) {
  unsigned m = 0;
  for (const VertexId& v : s.vertices()) m |= 1u << (v.str()[0] - 'a');
  return m;
}

/// Every simplicial complex whose vertex set is exactly {a, ..., } (k vertices),
/// as lists of simplex bitmasks. Built by deciding subsets in order of size;
/// a subset may be included only if all its facets are.
inline std::vector<std::vector<unsigned>> complexes_on(int k) {
  std::vector<unsigned> candidates;
  for (unsigned m = 1; m < (1u << k); ++m) {
    if (__builtin_popcount(m) >= 2) candidates.push_back(m);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::vector<unsigned>> out;
  std::vector<char> present(1u << k, 0);
  std::vector<unsigned> chosen;
  for (int i = 0; i < k; ++i) {
    present[1u << i] = 1;
    chosen.push_back(1u << i);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == candidates.size()) {
      out.push_back(chosen);
      return;
    }
    rec(idx + 1);
    const unsigned m = candidates[idx];
    for (int i = 0; i < k; ++i) {
      if ((m & (1u << i)) && !present[m & ~(1u << i)]) return;
    }
    present[m] = 1;
    chosen.push_back(m);
    rec(idx + 1);
    chosen.pop_back();
    present[m] = 0;
  };
  rec(0);
  return out;
}

inline SimplicialComplex complex_of_masks(const std::vector<unsigned>& masks) {
  std::vector<Simplex> gens;
  for (unsigned m : masks) gens.push_back(simplex_of_mask(m));
  return SimplicialComplex::closure_of(gens);
}

/// All complexes on 1..max_vertices vertices (vertex set {a, b, ...} of each size).
inline std::vector<SimplicialComplex> all_complexes(int max_vertices) {
  std::vector<SimplicialComplex> out;
  for (int k = 1; k <= max_vertices; ++k) {
    for (const auto& masks : complexes_on(k)) out.push_back(complex_of_masks(masks));
  }
  return out;
}

/// All points of |K| whose coordinates share a denominator d <= max_den.
inline std::vector<Point> lattice_points(const SimplicialComplex& k, int max_den) {
  std::map<std::string, Point> seen;
  for (const Simplex& s : k.simplexes()) {
    const int n = static_cast<int>(s.size());
    for (int d = 1; d <= max_den; ++d) {
      // compositions of d into n positive parts (interior of s)
      std::vector<int> parts(n, 1);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
          parts[i] = left;
          std::vector<Point::Coord> coords;
          for (int j = 0; j < n; ++j) coords.emplace_back(s.vertices()[j], Rational(parts[j], d));
          for (auto& c : coords) c.second.canonicalize();
          Point p = Point::from_coords(coords);
          seen.emplace(to_string(p), p);
          return;
        }
        for (int v = 1; v <= left - (n - 1 - i); ++v) {
          parts[i] = v;
          rec(i + 1, left - v);
        }
      };
      if (d >= n) rec(0, d);
    }
  }
  std::vector<Point> out;
  for (auto& [key, p] : seen) out.push_back(p);
  return out;
}

/// One top Sd^2 cell: its vertex points, in prefix order.
struct Cell {
  std::vector<Point> vertices;
  std::vector<std::string> keys;
};

/// Every top cell of Sd^2 of the closed simplex `s`, built from all orderings
/// of the vertices (Sd cells) and all orderings of their barycenters.
inline std::vector<Cell> all_sd2_cells(const Simplex& s) {
  static std::map<Simplex, std::vector<Cell>> memo;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  std::vector<Cell> out;
  std::vector<VertexId> perm = s.vertices();
  do {
    std::vector<Point> bs;
    std::vector<VertexId> prefix;
    for (const VertexId& v : perm) {
      prefix.push_back(v);
      bs.push_back(barycenter(Simplex(prefix)));
    }
    std::vector<std::size_t> order(bs.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      Cell cell;
      std::vector<Point> chosen;
      for (std::size_t j = 0; j < order.size(); ++j) {
        chosen.push_back(bs[order[j]]);
        std::vector<Rational> w(chosen.size(), Rational(1, static_cast<unsigned long>(j + 1)));
        cell.vertices.push_back(Point::combination(chosen, w));
        cell.keys.push_back(to_string(cell.vertices.back()));
      }
      out.push_back(std::move(cell));
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  memo.emplace(s, out);
  return out;
}

/// Extensional St^2(b_tau, K): the top cells of maximal simplexes that have
/// b_tau among their vertices.
inline std::vector<Cell> star_cells_bruteforce(const Simplex& tau, const SimplicialComplex& k) {
  const std::string key = to_string(barycenter(tau));
  std::vector<Cell> out;
  for (const Simplex& top : k.maximal_simplexes()) {
    for (const Cell& c : all_sd2_cells(top)) {
      if (std::find(c.keys.begin(), c.keys.end(), key) != c.keys.end()) out.push_back(c);
    }
  }
  return out;
}

/// Sd^2 vertices lying in St^2(b_tau, K), keyed by their canonical string.
inline std::map<std::string, Point> star_vertices(const Simplex& tau, const SimplicialComplex& k) {
  std::map<std::string, Point> out;
  for (const Cell& c : star_cells_bruteforce(tau, k)) {
    for (std::size_t i = 0; i < c.keys.size(); ++i) out.emplace(c.keys[i], c.vertices[i]);
  }
  return out;
}

/// Two stars (unions of closed cells of one triangulation) meet iff they
/// share an Sd^2 vertex.
inline bool stars_meet_bruteforce(const std::map<std::string, Point>& a,
                                  const std::map<std::string, Point>& b) {
  for (const auto& [key, p] : a) {
    if (b.count(key)) return true;
  }
  return false;
}

inline std::vector<Simplex> simplexes_of(const SimplicialComplex& k) {
  return {k.simplexes().begin(), k.simplexes().end()};
}

/// Every chain (strictly increasing sequence) of simplexes of K.
inline void for_each_chain(const SimplicialComplex& k,
                           const std::function<void(const std::vector<Simplex>&)>& visit) {
  const auto all = simplexes_of(k);
  std::vector<Simplex> chain;
  std::function<void()> rec = [&]() {
    if (!chain.empty()) visit(chain);
    for (const Simplex& s : all) {
      if (chain.empty() || (chain.back().is_face_of(s) && chain.back().size() < s.size())) {
        chain.push_back(s);
        rec();
        chain.pop_back();
      }
    }
  };
  rec();
}

inline Point random_point(const Simplex& s, std::mt19937_64& rng, int max_den = 12) {
  std::uniform_int_distribution<int> den_dist(static_cast<int>(s.size()), max_den);
  const int d = std::max(den_dist(rng), static_cast<int>(s.size()));
  // random composition of d into |s| positive parts
  std::vector<int> cuts(d - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(s.size() - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Point::Coord> coords;
  int prev = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int next = i + 1 < s.size() ? cuts[i] : d;
    Rational q(next - prev, d);
    q.canonicalize();
    coords.emplace_back(s.vertices()[i], q);
    prev = next;
  }
  return Point::from_coords(coords);
}

}  // namespace oracle
