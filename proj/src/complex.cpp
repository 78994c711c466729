#include "supertopo/complex.hpp"

#include <algorithm>
#include <iterator>

#include "supertopo/error.hpp"

namespace supertopo {

VertexId::VertexId(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw InputError("vertex id must be nonempty");
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("simplex lists a vertex twice: " + to_string(*this));
  }
}

Simplex::Simplex(std::initializer_list<const char*> names) {
  std::vector<VertexId> vs;
  vs.reserve(names.size());
  for (const char* n : names) vs.emplace_back(n);
  *this = Simplex(std::move(vs));
}

bool Simplex::contains(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s.vertices()[i].str();
  }
  return out + "}";
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> merged;
  std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                 b.vertices().end(), std::back_inserter(merged));
  return Simplex(std::move(merged));
}

std::vector<Simplex> faces(const Simplex& s) {
  const auto& vs = s.vertices();
  const std::size_t n = vs.size();
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
    }
    out.emplace_back(std::move(sub));
  }
  return out;
}

SimplicialComplex SimplicialComplex::closure_of(std::span<const Simplex> generators,
                                                std::span<const VertexId> extra_vertices) {
  SimplicialComplex k;
  for (const Simplex& g : generators) {
    if (g.empty()) throw InputError("empty simplex in input");
    if (k.contains(g)) continue;
    for (Simplex& f : faces(g)) k.simplexes_.insert(std::move(f));
    k.vertices_.insert(g.vertices().begin(), g.vertices().end());
  }
  for (const VertexId& v : extra_vertices) {
    k.vertices_.insert(v);
    k.simplexes_.insert(Simplex(std::vector<VertexId>{v}));
  }
  return k;
}

std::vector<Simplex> SimplicialComplex::maximal_simplexes() const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplexes_) {
    bool maximal = true;
    for (const VertexId& v : vertices_) {
      if (s.contains(v)) continue;
      std::vector<VertexId> bigger = s.vertices();
      bigger.push_back(v);
      if (contains(Simplex(std::move(bigger)))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.simplexes_.begin(), other.simplexes_.end(), simplexes_.begin(),
                       simplexes_.end()) &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

SimplicialComplex SimplicialComplex::induced(const std::set<VertexId>& keep) const {
  SimplicialComplex k;
  for (const Simplex& s : simplexes_) {
    if (std::all_of(s.vertices().begin(), s.vertices().end(),
                    [&](const VertexId& v) { return keep.count(v) != 0; })) {
      k.simplexes_.insert(s);
    }
  }
  for (const VertexId& v : vertices_) {
    if (keep.count(v)) k.vertices_.insert(v);
  }
  return k;
}

SimplicialComplex SimplicialComplex::intersection(const SimplicialComplex& other) const {
  SimplicialComplex k;
  std::set_intersection(simplexes_.begin(), simplexes_.end(), other.simplexes_.begin(),
                        other.simplexes_.end(),
                        std::inserter(k.simplexes_, k.simplexes_.end()));
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::inserter(k.vertices_, k.vertices_.end()));
  return k;
}

Point Point::from_coords(std::vector<Coord> coords) {
  std::sort(coords.begin(), coords.end(),
            [](const Coord& a, const Coord& b) { return a.first < b.first; });
  Point p;
  Rational sum = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i && coords[i].first == coords[i - 1].first) {
      throw InputError("point lists vertex " + coords[i].first.str() + " twice");
    }
    if (sgn(coords[i].second) < 0) {
      throw InputError("negative coordinate at vertex " + coords[i].first.str());
    }
    sum += coords[i].second;
    if (sgn(coords[i].second) > 0) p.coords_.push_back(coords[i]);
  }
  if (sum != 1) throw InputError("point coordinates sum to " + to_string(sum) + ", not 1");
  return p;
}

Point Point::vertex(const VertexId& v) {
  Point p;
  p.coords_.emplace_back(v, Rational(1));
  return p;
}

Point Point::combination(std::span<const Point> points, std::span<const Rational> weights) {
  std::map<VertexId, Rational> acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    for (const auto& [v, c] : points[i].coords()) acc[v] += weights[i] * c;
  }
  std::vector<Coord> coords(acc.begin(), acc.end());
  return from_coords(std::move(coords));
}

Rational Point::operator[](const VertexId& v) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), v,
                             [](const Coord& c, const VertexId& key) { return c.first < key; });
  if (it != coords_.end() && it->first == v) return it->second;
  return 0;
}

Simplex Point::support() const {
  std::vector<VertexId> vs;
  vs.reserve(coords_.size());
  for (const auto& c : coords_) vs.push_back(c.first);
  return Simplex(std::move(vs));
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ", ";
    out += p.coords()[i].first.str() + ":" + to_string(p.coords()[i].second);
  }
  return out + ")";
}

SimplicialComplex make_complex(std::span<const Simplex> maximal_simplexes) {
  return SimplicialComplex::closure_of(maximal_simplexes);
}

SimplicialComplex make_complex(std::initializer_list<Simplex> maximal_simplexes) {
  return SimplicialComplex::closure_of(
      std::span<const Simplex>(maximal_simplexes.begin(), maximal_simplexes.size()));
}

int dimension(const SimplicialComplex& k) {
  if (k.empty()) throw ContractError("dimension of the empty complex is undefined");
  std::size_t best = 0;
  for (const Simplex& s : k.simplexes()) best = std::max(best, s.size());
  return static_cast<int>(best) - 1;
}

Point barycenter(const Simplex& s) {
  if (s.empty()) throw ContractError("barycenter of an empty simplex");
  const Rational w(1, static_cast<unsigned long>(s.size()));
  std::vector<Point::Coord> coords;
  coords.reserve(s.size());
  for (const VertexId& v : s.vertices()) coords.emplace_back(v, w);
  return Point::from_coords(std::move(coords));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  for (const VertexId& v : k1.vertices()) {
    if (k2.vertices().count(v)) {
      throw ContractError("join requires disjoint vertex sets; both contain " + v.str());
    }
  }
  if (k1.empty()) return k2;
  if (k2.empty()) return k1;
  std::vector<Simplex> generators;
  for (const Simplex& a : k1.maximal_simplexes()) {
    for (const Simplex& b : k2.maximal_simplexes()) generators.push_back(simplex_union(a, b));
  }
  return SimplicialComplex::closure_of(generators);
}

SimplicialComplex cone(const SimplicialComplex& k, const VertexId& apex) {
  const Simplex tip(std::vector<VertexId>{apex});
  return join(k, make_complex({tip}));
}

Rational l1_distance(const Point& p, const Point& q) {
  Rational total = 0;
  auto a = p.coords().begin();
  auto b = q.coords().begin();
  while (a != p.coords().end() || b != q.coords().end()) {
    if (b == q.coords().end() || (a != p.coords().end() && a->first < b->first)) {
      total += a->second;
      ++a;
    } else if (a == p.coords().end() || b->first < a->first) {
      total += b->second;
      ++b;
    } else {
      total += abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return total;
}

Simplex carrier(const Point& p, const SimplicialComplex& k) {
  Simplex s = p.support();
  if (!k.contains(s)) {
    throw ContractError("point " + to_string(p) + " has support " + to_string(s) +
                        ", which is not a simplex of the complex",
                        to_string(p));
  }
  return s;
}

}  // namespace supertopo
