#pragma once

#include <optional>
#include <span>
#include <vector>

#include "supertopo/complex.hpp"
#include "supertopo/rational.hpp"

namespace supertopo {

using Matrix = std::vector<std::vector<Rational>>;

/// minimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
  Matrix a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase dense simplex method with Bland's rule, exact arithmetic.
LpSolution solve_lp(const LinearProgram& lp);

/// Solves the (possibly overdetermined) system A x = b exactly by Gaussian
/// elimination. Returns nullopt if inconsistent or if the solution is not unique.
std::optional<std::vector<Rational>> solve_linear_system(Matrix a, std::vector<Rational> b);

/// Exact minimum l1 distance between the convex hulls of two finite point
/// sets, with a pair of points attaining it.
struct HullDistance {
  Rational distance;
  Point x;
  Point y;
};

HullDistance hull_l1_distance(std::span<const Point> p, std::span<const Point> q);

/// Cheap lower bound on hull_l1_distance from per-coordinate ranges.
Rational hull_l1_lower_bound(std::span<const Point> p, std::span<const Point> q);

bool hulls_intersect(std::span<const Point> p, std::span<const Point> q);

}  // namespace supertopo
