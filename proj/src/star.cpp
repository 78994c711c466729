#include "supertopo/star.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "supertopo/error.hpp"
#include "supertopo/lp.hpp"

namespace supertopo {

Chain::Chain(std::vector<Simplex> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("chain must have at least one member");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].empty()) throw InputError("chain member is an empty simplex");
    if (i && !(members_[i - 1].is_face_of(members_[i]) &&
               members_[i - 1].size() < members_[i].size())) {
      throw InputError("chain is not strictly increasing at " + to_string(members_[i - 1]) +
                       " -> " + to_string(members_[i]));
    }
  }
}

bool Chain::saturated() const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].size() != i + 1) return false;
  }
  return true;
}

std::string to_string(const Chain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " < ";
    out += to_string(c.members()[i]);
  }
  return out;
}

std::vector<Point> Sd2Cell::vertices() const {
  std::vector<Point> out;
  out.reserve(order.size());
  std::vector<Point> prefix;
  for (std::size_t j = 0; j < order.size(); ++j) {
    prefix.push_back(barycenter(sd_cell.members()[order[j]]));
    const std::vector<Rational> w(prefix.size(), Rational(1, static_cast<unsigned long>(j + 1)));
    out.push_back(Point::combination(prefix, w));
  }
  return out;
}

namespace {

void require_member(const Simplex& s, const SimplicialComplex& k) {
  if (!k.contains(s)) {
    throw ContractError("simplex " + to_string(s) + " is not in the complex", to_string(s));
  }
}

Chain prefix_chain(const std::vector<VertexId>& ordering) {
  std::vector<Simplex> members;
  members.reserve(ordering.size());
  std::vector<VertexId> prefix;
  for (const VertexId& v : ordering) {
    prefix.push_back(v);
    members.emplace_back(prefix);
  }
  return Chain(std::move(members));
}

// Canonical base order: by cardinality, then lexicographic.
bool base_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Chain> sd_cells(const Simplex& s, const SimplicialComplex& k) {
  require_member(s, k);
  std::vector<VertexId> ordering = s.vertices();
  std::vector<Chain> out;
  do {
    out.push_back(prefix_chain(ordering));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return out;
}

bool in_sd_cell(const Point& p, const Chain& c) {
  if (!c.saturated()) {
    throw ContractError("Sd cell membership needs a saturated chain", to_string(c));
  }
  if (!p.support().is_face_of(c.top())) return false;
  Rational previous = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    // v_i is the vertex added at step i.
    const auto& cur = c.members()[i].vertices();
    VertexId added = cur.front();
    if (i) {
      for (const VertexId& v : cur) {
        if (!c.members()[i - 1].contains(v)) {
          added = v;
          break;
        }
      }
    }
    const Rational value = p[added];
    if (value > previous) return false;
    previous = value;
  }
  return true;
}

bool st1_membership(const Point& p, const VertexId& u, const SimplicialComplex& k) {
  carrier(p, k);
  const Rational pu = p[u];
  for (const auto& c : p.coords()) {
    if (c.second > pu) return false;
  }
  return sgn(pu) > 0;
}

std::vector<Sd2Cell> star_cells(const Simplex& tau, const SimplicialComplex& k) {
  require_member(tau, k);
  std::vector<Sd2Cell> out;
  for (const Simplex& top : k.maximal_simplexes()) {
    if (!tau.is_face_of(top)) continue;
    std::vector<VertexId> inner = tau.vertices();
    std::vector<VertexId> outer;
    for (const VertexId& v : top.vertices()) {
      if (!tau.contains(v)) outer.push_back(v);
    }
    const std::size_t m = tau.size();
    do {
      std::vector<VertexId> rest = outer;
      do {
        std::vector<VertexId> ordering = inner;
        ordering.insert(ordering.end(), rest.begin(), rest.end());
        Chain chain = prefix_chain(ordering);
        std::vector<std::size_t> others;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          if (i != m - 1) others.push_back(i);
        }
        do {
          Sd2Cell cell{chain, {m - 1}};
          cell.order.insert(cell.order.end(), others.begin(), others.end());
          out.push_back(std::move(cell));
        } while (std::next_permutation(others.begin(), others.end()));
      } while (std::next_permutation(rest.begin(), rest.end()));
    } while (std::next_permutation(inner.begin(), inner.end()));
  }
  return out;
}

StarMembership st2_membership_detail(const Point& p, const Simplex& tau,
                                     const SimplicialComplex& k) {
  require_member(tau, k);
  carrier(p, k);
  StarMembership out;
  // Weakly decreasing coordinates. Among ties tau's vertices go first: tied
  // orderings share the same value sequence, so the only thing a different
  // tie order could change is whether the |tau|-prefix equals tau.
  std::vector<Point::Coord> sorted = p.coords();
  std::sort(sorted.begin(), sorted.end(), [&](const Point::Coord& a, const Point::Coord& b) {
    if (a.second != b.second) return a.second > b.second;
    const bool ta = tau.contains(a.first), tb = tau.contains(b.first);
    if (ta != tb) return ta;
    return a.first < b.first;
  });
  const std::size_t n = sorted.size();
  for (const auto& c : sorted) {
    out.ordering.push_back(c.first);
    out.values.push_back(c.second);
  }
  Rational best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational next = i + 1 < n ? out.values[i + 1] : Rational(0);
    out.gaps.push_back(Rational(static_cast<unsigned long>(i + 1)) * (out.values[i] - next));
    if (out.gaps.back() > best) best = out.gaps.back();
  }
  const std::size_t m = tau.size();
  if (m > n) return out;
  for (std::size_t i = 0; i < m; ++i) {
    if (!tau.contains(out.ordering[i])) return out;
  }
  out.member = out.gaps[m - 1] == best;
  return out;
}

bool st2_membership(const Point& p, const Simplex& tau, const SimplicialComplex& k) {
  return st2_membership_detail(p, tau, k).member;
}

namespace {

// Weights t with p = sum_i t_i b_{chain_i}, if the chain's barycenters span p.
std::optional<std::vector<Rational>> barycentric_weights(const Point& p,
                                                         const std::vector<Simplex>& chain) {
  const auto& top = chain.back().vertices();
  Matrix a(top.size() + 1, std::vector<Rational>(chain.size()));
  std::vector<Rational> b(top.size() + 1);
  for (std::size_t r = 0; r < top.size(); ++r) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (chain[i].contains(top[r])) {
        a[r][i] = Rational(1, static_cast<unsigned long>(chain[i].size()));
      }
    }
    b[r] = p[top[r]];
  }
  for (std::size_t i = 0; i < chain.size(); ++i) a[top.size()][i] = 1;
  b[top.size()] = 1;
  return solve_linear_system(std::move(a), std::move(b));
}

bool chain_representation(const Point& p, const Simplex& support, std::size_t tau_size,
                           std::vector<Simplex>& chain, const SimplicialComplex& k) {
  if (chain.size() >= tau_size && support.is_face_of(chain.back())) {
    if (auto t = barycentric_weights(p, chain)) {
      const bool nonnegative =
          std::all_of(t->begin(), t->end(), [](const Rational& x) { return sgn(x) >= 0; });
      if (nonnegative && (*t)[tau_size - 1] == *std::max_element(t->begin(), t->end())) {
        return true;
      }
    }
  }
  for (const VertexId& v : k.vertices()) {
    if (chain.back().contains(v)) continue;
    std::vector<VertexId> bigger = chain.back().vertices();
    bigger.push_back(v);
    Simplex next(std::move(bigger));
    if (!k.contains(next)) continue;
    chain.push_back(std::move(next));
    const bool found = chain_representation(p, support, tau_size, chain, k);
    chain.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

bool st2_membership_oracle(const Point& p, const Simplex& tau, const SimplicialComplex& k) {
  require_member(tau, k);
  const Simplex support = carrier(p, k);
  std::vector<VertexId> ordering = tau.vertices();
  do {
    std::vector<Simplex> chain = prefix_chain(ordering).members();
    if (chain_representation(p, support, tau.size(), chain, k)) return true;
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return false;
}

Point chain_witness(const Chain& c) {
  std::vector<Point> bs;
  bs.reserve(c.size());
  for (const Simplex& s : c.members()) bs.push_back(barycenter(s));
  const std::vector<Rational> w(c.size(), Rational(1, static_cast<unsigned long>(c.size())));
  return Point::combination(bs, w);
}

std::optional<Point> stars_meet(const Simplex& a, const Simplex& b, const SimplicialComplex& k) {
  require_member(a, k);
  require_member(b, k);
  // Meeting stars have comparable bases; comparable bases are both met by
  // the chain witness of {a, b}.
  if (!a.is_face_of(b) && !b.is_face_of(a)) return std::nullopt;
  std::vector<Simplex> members{a};
  if (a != b) members.push_back(b);
  std::sort(members.begin(), members.end(), base_less);
  Point w = chain_witness(Chain(std::move(members)));
  if (!st2_membership(w, a, k) || !st2_membership(w, b, k)) {
    throw ContractError("chain witness failed star membership for " + to_string(a) + ", " +
                        to_string(b));
  }
  return w;
}

LinkedStarsResult linked_stars_chain(std::vector<Simplex> bases, const SimplicialComplex& k) {
  if (bases.empty()) throw ContractError("linked_stars_chain needs at least one base");
  std::sort(bases.begin(), bases.end(), base_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  LinkedStarsResult out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (!stars_meet(bases[i], bases[j], k)) {
        out.disjoint_pair = {bases[i], bases[j]};
        return out;
      }
    }
  }
  out.chain = Chain(std::move(bases));
  return out;
}

bool star_meets_subcomplex(const Simplex& sigma, const Simplex& tau, const SimplicialComplex& k) {
  require_member(sigma, k);
  require_member(tau, k);
  if (!tau.is_face_of(sigma)) return false;
  return st2_membership(barycenter(tau), tau, k);
}

std::size_t StarFamily::member_count() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.size();
  return total;
}

StarFamily star_cover(const SimplicialComplex& c, const SimplicialComplex& k) {
  if (!c.is_subcomplex_of(k)) throw ContractError("star cover: C is not a subcomplex of K");
  StarFamily family;
  family.ambient = c;
  family.groups.resize(static_cast<std::size_t>(dimension(c)) + 1);
  for (const Simplex& s : c.simplexes()) family.groups[s.size() - 1].push_back(s);
  return family;
}

namespace {

struct CellPairBest {
  std::size_t index = 0;
  bool found = false;
  HullDistance hull;
};

void consider(CellPairBest& best, std::size_t index, HullDistance&& d) {
  if (!best.found || d.distance < best.hull.distance ||
      (d.distance == best.hull.distance && index < best.index)) {
    best.found = true;
    best.index = index;
    best.hull = std::move(d);
  }
}

}  // namespace

PairSeparation star_distance(const Simplex& a, const Simplex& b, const SimplicialComplex& k,
                             Execution exec) {
  std::vector<std::vector<Point>> va, vb;
  for (const Sd2Cell& c : star_cells(a, k)) va.push_back(c.vertices());
  for (const Sd2Cell& c : star_cells(b, k)) vb.push_back(c.vertices());
  const std::size_t total = va.size() * vb.size();
  CellPairBest best;
  if (exec == Execution::serial) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      consider(best, idx, hull_l1_distance(va[idx / vb.size()], vb[idx % vb.size()]));
    }
  } else {
    // A pair is skipped only when its lower bound strictly exceeds the
    // thread's best, so every pair attaining the global minimum is solved and
    // the (distance, index) tie-break matches the serial reference.
    std::vector<CellPairBest> per_thread(available_threads());
#pragma omp parallel
    {
      CellPairBest& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
      for (std::size_t idx = 0; idx < total; ++idx) {
        const auto& p = va[idx / vb.size()];
        const auto& q = vb[idx % vb.size()];
        if (local.found && hull_l1_lower_bound(p, q) > local.hull.distance) continue;
        consider(local, idx, hull_l1_distance(p, q));
      }
    }
    for (auto& local : per_thread) {
      if (local.found) consider(best, local.index, std::move(local.hull));
    }
  }
  return PairSeparation{a, b, best.hull.distance, best.hull.x, best.hull.y};
}

DiscretenessCertificate discreteness_certificate(const StarFamily& f, Execution exec) {
  DiscretenessCertificate cert;
  cert.n = f.n();
  cert.bound = Rational(1, static_cast<unsigned long>(cert.n * cert.n));
  for (std::size_t g = 0; g < f.groups.size(); ++g) {
    GroupSeparation sep;
    sep.cardinality = g + 1;
    sep.size = f.groups[g].size();
    for (std::size_t i = 0; i < f.groups[g].size(); ++i) {
      for (std::size_t j = i + 1; j < f.groups[g].size(); ++j) {
        sep.pairs.push_back(star_distance(f.groups[g][i], f.groups[g][j], f.ambient, exec));
        if (!sep.min_distance || sep.pairs.back().distance < *sep.min_distance) {
          sep.min_distance = sep.pairs.back().distance;
        }
      }
    }
    cert.groups.push_back(std::move(sep));
  }
  return cert;
}

Point linked_intersection_witness(const StarFamily& family, const std::vector<Simplex>& star_bases,
                                  const std::vector<SimplicialComplex>& subcomplexes) {
  if (star_bases.empty()) throw ContractError("linked family has no star member");
  const SimplicialComplex& c = family.ambient;
  for (const Simplex& s : star_bases) require_member(s, c);
  LinkedStarsResult linked = linked_stars_chain(star_bases, c);
  if (!linked.chain) {
    const auto& [x, y] = *linked.disjoint_pair;
    throw ContractError("family is not linked: stars of " + to_string(x) + " and " +
                            to_string(y) + " are disjoint",
                        "[" + to_string(x) + "," + to_string(y) + "]");
  }
  for (std::size_t i = 0; i < subcomplexes.size(); ++i) {
    const SimplicialComplex& f = subcomplexes[i];
    for (const Simplex& s : star_bases) {
      if (!f.contains(s)) {
        throw ContractError("family is not linked: subcomplex #" + std::to_string(i) +
                                " misses the star of " + to_string(s),
                            to_string(s));
      }
    }
    for (std::size_t j = i + 1; j < subcomplexes.size(); ++j) {
      const auto& a = f.vertices();
      const auto& b = subcomplexes[j].vertices();
      if (std::none_of(a.begin(), a.end(), [&](const VertexId& v) { return b.count(v) != 0; })) {
        throw ContractError("family is not linked: subcomplexes #" + std::to_string(i) + " and #" +
                            std::to_string(j) + " are disjoint");
      }
    }
  }
  Point w = chain_witness(*linked.chain);
  for (const Simplex& s : linked.chain->members()) {
    if (!st2_membership(w, s, c)) {
      throw ContractError("witness " + to_string(w) + " left the star of " + to_string(s));
    }
  }
  const Simplex& top = linked.chain->top();
  for (const SimplicialComplex& f : subcomplexes) {
    if (!f.contains(top)) throw ContractError("witness carrier left a subcomplex");
  }
  return w;
}

}  // namespace supertopo
