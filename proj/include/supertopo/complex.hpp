#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supertopo/rational.hpp"

namespace supertopo {

/// Opaque, nonempty vertex token. Fresh vertices minted by constructions
/// start with '@' followed by the canonical serialization of their source.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string id);

  const std::string& str() const noexcept { return id_; }

  auto operator<=>(const VertexId&) const = default;

 private:
  std::string id_;
};

/// Finite nonempty vertex set, stored sorted.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<const char*> names);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  bool contains(const VertexId& v) const;
  bool is_face_of(const Simplex& other) const;

  /// Lexicographic on the sorted vertex list.
  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

std::string to_string(const Simplex& s);

/// Union of two vertex sets (either may be empty).
Simplex simplex_union(const Simplex& a, const Simplex& b);

/// Every nonempty subset of `s`.
std::vector<Simplex> faces(const Simplex& s);

/// Downward-closed family of simplexes together with its vertex set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `generators`; `extra_vertices` adds isolated vertices.
  static SimplicialComplex closure_of(std::span<const Simplex> generators,
                                      std::span<const VertexId> extra_vertices = {});

  const std::set<VertexId>& vertices() const noexcept { return vertices_; }
  const std::set<Simplex>& simplexes() const noexcept { return simplexes_; }
  std::size_t size() const noexcept { return simplexes_.size(); }
  bool empty() const noexcept { return simplexes_.empty(); }
  bool contains(const Simplex& s) const { return simplexes_.count(s) != 0; }

  /// Members not properly contained in another member, in canonical order.
  std::vector<Simplex> maximal_simplexes() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;

  /// Full subcomplex spanned by the vertices in `keep`.
  SimplicialComplex induced(const std::set<VertexId>& keep) const;

  SimplicialComplex intersection(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex& other) const {
    return simplexes_ == other.simplexes_ && vertices_ == other.vertices_;
  }

 private:
  std::set<VertexId> vertices_;
  std::set<Simplex> simplexes_;
};

/// Point of a geometric realization in l1 coordinates. Only strictly
/// positive coordinates are stored; they sum to exactly 1.
class Point {
 public:
  using Coord = std::pair<VertexId, Rational>;

  Point() = default;

  /// Validates nonnegativity, unit sum and uniqueness; drops zeros.
  static Point from_coords(std::vector<Coord> coords);
  static Point vertex(const VertexId& v);

  /// Exact convex combination sum_i weights[i] * points[i]. Weights must be
  /// nonnegative and sum to 1.
  static Point combination(std::span<const Point> points, std::span<const Rational> weights);

  const std::vector<Coord>& coords() const noexcept { return coords_; }
  Rational operator[](const VertexId& v) const;
  Simplex support() const;

  bool operator==(const Point& other) const { return coords_ == other.coords_; }

 private:
  std::vector<Coord> coords_;
};

std::string to_string(const Point& p);

// Operations

/// Downward closure of the listed maximal simplexes. Throws InputError on an
/// empty simplex.
SimplicialComplex make_complex(std::span<const Simplex> maximal_simplexes);
SimplicialComplex make_complex(std::initializer_list<Simplex> maximal_simplexes);

/// max |s| - 1. Throws ContractError on the empty complex.
int dimension(const SimplicialComplex& k);

/// b_s = sum_{v in s} (1/|s|) delta_v.
Point barycenter(const Simplex& s);

/// Join of complexes with disjoint vertex sets. Throws ContractError on overlap.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Cone over `k` with apex `apex`.
SimplicialComplex cone(const SimplicialComplex& k, const VertexId& apex);

Rational l1_distance(const Point& p, const Point& q);

/// Minimal simplex whose closure contains `p`: its support. Throws
/// ContractError if the support is not a simplex of `k`.
Simplex carrier(const Point& p, const SimplicialComplex& k);

}  // namespace supertopo
