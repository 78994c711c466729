#include "supertopo/sweep.hpp"

#include <algorithm>
#include <optional>

#include "supertopo/error.hpp"

namespace supertopo {

Point radial_retraction(const Simplex& sigma, const Point& c, const Point& x) {
  if (c.support() != sigma) {
    throw ContractError("center " + to_string(c) + " is not interior to " + to_string(sigma),
                        to_string(c));
  }
  if (!x.support().is_face_of(sigma)) {
    throw ContractError("point " + to_string(x) + " is not in the closure of " + to_string(sigma),
                        to_string(x));
  }
  if (x == c) throw ContractError("radial retraction is undefined at its center", to_string(c));
  // c + t (x - c) first hits a zero coordinate at t = min c_v / (c_v - x_v).
  std::optional<Rational> t;
  for (const VertexId& v : sigma.vertices()) {
    const Rational cv = c[v];
    const Rational xv = x[v];
    if (xv >= cv) continue;
    Rational tv = cv / (cv - xv);
    if (!t || tv < *t) t = std::move(tv);
  }
  std::vector<Point::Coord> out;
  for (const VertexId& v : sigma.vertices()) {
    const Rational cv = c[v];
    out.emplace_back(v, Rational(cv + *t * (x[v] - cv)));
  }
  return Point::from_coords(std::move(out));
}

Point choose_puncture(const Simplex& sigma, const std::vector<Point>& avoid) {
  const Point b = barycenter(sigma);
  auto admissible = [&](const Point& p) {
    return std::find(avoid.begin(), avoid.end(), p) == avoid.end();
  };
  if (sigma.size() == 1 || admissible(b)) return b;
  const std::size_t n = sigma.size();
  const unsigned long den = 1 + n * (1 + avoid.size());
  // Interior lattice points: positive numerators summing to den, in
  // lexicographic order of the numerator vector.
  std::vector<unsigned long> num(n, 1);
  num.back() = den - (n - 1);
  for (;;) {
    std::vector<Point::Coord> coords;
    for (std::size_t i = 0; i < n; ++i) {
      coords.emplace_back(sigma.vertices()[i], make_rational(static_cast<long>(num[i]),
                                                             static_cast<long>(den)));
    }
    const Point lattice = Point::from_coords(std::move(coords));
    const std::vector<Point> ends{b, lattice};
    const std::vector<Rational> half{make_rational(1, 2), make_rational(1, 2)};
    Point mid = Point::combination(ends, half);
    if (admissible(mid)) return mid;
    // next composition in lexicographic order
    std::size_t i = n - 1;
    while (i > 0 && num[i] == 1) --i;
    if (i == 0) break;
    // move one unit from the tail into position i - 1, reset the tail
    unsigned long tail = 0;
    for (std::size_t j = i; j < n; ++j) tail += num[j];
    ++num[i - 1];
    --tail;
    for (std::size_t j = i; j + 1 < n; ++j) num[j] = 1;
    num[n - 1] = tail - (n - 1 - i);
  }
  throw ContractError("no admissible puncture in " + to_string(sigma));
}

SweepResult sweep_out(const SimplicialComplex& l, const SimplicialComplex& k,
                      const std::vector<Point>& a) {
  if (!k.is_subcomplex_of(l)) throw ContractError("sweep: K is not a subcomplex of L");
  for (const Point& p : a) {
    if (!l.contains(p.support())) {
      throw ContractError("sweep: point " + to_string(p) + " is not in |L|", to_string(p));
    }
  }
  SweepResult result;
  result.ambient_ = l;
  result.images_ = a;
  SimplicialComplex current = l;
  for (;;) {
    std::vector<Puncture> round;
    for (const Simplex& sigma : current.maximal_simplexes()) {
      if (k.contains(sigma)) continue;
      // A finite A covers the closure of a non-K simplex only for a vertex.
      if (sigma.size() == 1 &&
          std::find(result.images_.begin(), result.images_.end(), barycenter(sigma)) !=
              result.images_.end()) {
        continue;
      }
      round.push_back(Puncture{sigma, choose_puncture(sigma, result.images_)});
    }
    if (round.empty()) break;
    for (Point& p : result.images_) {
      for (const Puncture& d : round) {
        if (p.support() == d.simplex) {
          p = radial_retraction(d.simplex, d.point, p);
          break;
        }
      }
    }
    std::vector<Simplex> kept;
    for (const Simplex& s : current.simplexes()) {
      if (std::none_of(round.begin(), round.end(),
                       [&](const Puncture& d) { return d.simplex == s; })) {
        kept.push_back(s);
      }
    }
    current = SimplicialComplex::closure_of(kept);
    result.rounds_.push_back(std::move(round));
  }
  result.reduced_ = std::move(current);
  return result;
}

Point SweepResult::evaluate(const Point& p) const {
  if (!ambient_.contains(p.support())) {
    throw ContractError("point " + to_string(p) + " is not in |L|", to_string(p));
  }
  Point x = p;
  for (const auto& round : rounds_) {
    for (const Puncture& d : round) {
      if (x.support() != d.simplex) continue;
      if (x == d.point) {
        throw ContractError("point " + to_string(p) + " is outside the retraction's domain",
                            to_string(p));
      }
      x = radial_retraction(d.simplex, d.point, x);
      break;
    }
  }
  return x;
}

}  // namespace supertopo
