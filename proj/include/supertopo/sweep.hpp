#pragma once

#include <vector>

#include "supertopo/complex.hpp"

namespace supertopo {

/// The point where the ray from `c` through `x` leaves the closed simplex
/// sigma. Throws ContractError unless carrier(c) == sigma, x != c and
/// carrier(x) is a face of sigma.
Point radial_retraction(const Simplex& sigma, const Point& c, const Point& x);

struct Puncture {
  Simplex simplex;
  Point point;  // d_sigma, interior to simplex and outside A and K
};

/// Collapse of L onto a subcomplex containing K, keeping the images of A.
class SweepResult {
 public:
  const SimplicialComplex& reduced() const noexcept { return reduced_; }
  /// rounds()[n] lists the maximal simplexes removed in round n with their punctures.
  const std::vector<std::vector<Puncture>>& rounds() const noexcept { return rounds_; }
  /// Images of the input points, in input order.
  const std::vector<Point>& images() const noexcept { return images_; }

  /// Composite retraction. Throws ContractError if p is outside |L| or is
  /// sent onto a puncture (outside the domain of the retraction).
  Point evaluate(const Point& p) const;

 private:
  friend SweepResult sweep_out(const SimplicialComplex&, const SimplicialComplex&,
                               const std::vector<Point>&);
  SimplicialComplex ambient_;
  SimplicialComplex reduced_;
  std::vector<std::vector<Puncture>> rounds_;
  std::vector<Point> images_;
};

/// Each round removes every maximal simplex sigma of the current complex
/// whose closure is not inside A_n and |K|, radially from a puncture d_sigma.
/// Throws ContractError if K is not a subcomplex of L or a point of A is not in |L|.
SweepResult sweep_out(const SimplicialComplex& l, const SimplicialComplex& k,
                      const std::vector<Point>& a);

/// d_sigma: the barycenter if admissible, else the midpoint of the barycenter
/// and the first admissible interior lattice point at denominator
/// 1 + |sigma| (1 + |avoid|), lattice points taken in lexicographic order.
/// A vertex's puncture is the vertex itself.
Point choose_puncture(const Simplex& sigma, const std::vector<Point>& avoid);

}  // namespace supertopo
