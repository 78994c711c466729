#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supertopo/complex.hpp"
#include "supertopo/parallel.hpp"

namespace supertopo {

/// Strictly increasing (by inclusion) sequence of simplexes.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Simplex> members);

  const std::vector<Simplex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Simplex& top() const { return members_.back(); }

  /// |members[i]| == i + 1 for every i: the chain indexes a cell of Sd.
  bool saturated() const;

  bool operator==(const Chain&) const = default;

 private:
  std::vector<Simplex> members_;
};

std::string to_string(const Chain& c);

/// A top cell of the second barycentric subdivision: a saturated chain
/// (a cell of Sd) plus an ordering of its barycenters. The cell is the hull
/// of the prefix averages of the ordered barycenters.
struct Sd2Cell {
  Chain sd_cell;
  std::vector<std::size_t> order;

  const Simplex& first_base() const { return sd_cell.members()[order.front()]; }
  std::vector<Point> vertices() const;
};

// Subdivision structure

/// All |s|! saturated chains ending at `s`. Throws ContractError if s is not in k.
std::vector<Chain> sd_cells(const Simplex& s, const SimplicialComplex& k);

/// True iff p is a convex combination of the barycenters of the saturated chain.
/// Throws ContractError on a non-saturated chain.
bool in_sd_cell(const Point& p, const Chain& c);

/// St^1(delta_u, K): p(u) is the largest coordinate of p.
bool st1_membership(const Point& p, const VertexId& u, const SimplicialComplex& k);

/// Top Sd^2 cells of the maximal simplexes of `k` that contain b_tau, i.e. the
/// cells whose union is St^2(b_tau, k).
std::vector<Sd2Cell> star_cells(const Simplex& tau, const SimplicialComplex& k);

// Stars

/// Ordering and gap profile certifying St^2 membership in closed form.
struct StarMembership {
  bool member = false;
  std::vector<VertexId> ordering;  // support, weakly decreasing coordinates, tau first
  std::vector<Rational> values;    // s_1 >= ... >= s_n
  std::vector<Rational> gaps;      // k (s_k - s_{k+1}), s_{n+1} = 0
};

/// Coordinate characterization of St^2(b_tau, k).
StarMembership st2_membership_detail(const Point& p, const Simplex& tau, const SimplicialComplex& k);
bool st2_membership(const Point& p, const Simplex& tau, const SimplicialComplex& k);

/// Independent decision by enumerating saturated chains through tau and
/// solving exactly for the barycentric weights on each.
bool st2_membership_oracle(const Point& p, const Simplex& tau, const SimplicialComplex& k);

/// sum_i (1/n) b_{c_i}: lies in the star of every chain member.
Point chain_witness(const Chain& c);

/// Whether St^2(b_a) and St^2(b_b) meet; returns the meeting point if so.
std::optional<Point> stars_meet(const Simplex& a, const Simplex& b, const SimplicialComplex& k);

struct LinkedStarsResult {
  std::optional<Chain> chain;
  /// Set on failure: the first pair (canonical order) whose stars are disjoint.
  std::optional<std::pair<Simplex, Simplex>> disjoint_pair;
};

/// If the stars of `bases` pairwise meet, the bases sorted into a chain.
LinkedStarsResult linked_stars_chain(std::vector<Simplex> bases, const SimplicialComplex& k);

/// Whether closure(sigma) meets St^2(b_tau, k).
bool star_meets_subcomplex(const Simplex& sigma, const Simplex& tau, const SimplicialComplex& k);

// Star covers

/// One star St^2(b_tau, ambient) per simplex tau of the ambient complex,
/// grouped by |tau|: groups[i] holds the bases of cardinality i + 1.
struct StarFamily {
  SimplicialComplex ambient;
  std::vector<std::vector<Simplex>> groups;

  std::size_t member_count() const;
  /// 1 + dim(ambient).
  int n() const { return static_cast<int>(groups.size()); }
};

/// Star cover of subcomplex `c` of `k`. Throws ContractError if c is not a subcomplex.
StarFamily star_cover(const SimplicialComplex& c, const SimplicialComplex& k);

struct PairSeparation {
  Simplex a;
  Simplex b;
  Rational distance;  // exact min l1 distance between the two stars
  Point x;            // in St^2(b_a)
  Point y;            // in St^2(b_b), l1(x, y) == distance
};

struct GroupSeparation {
  std::size_t cardinality = 0;
  std::size_t size = 0;
  std::vector<PairSeparation> pairs;
  std::optional<Rational> min_distance;  // empty for groups with one member
};

struct DiscretenessCertificate {
  int n = 0;
  Rational bound;  // 1 / n^2
  std::vector<GroupSeparation> groups;
};

/// Exact min distance between two stars: min over pairs of their Sd^2 cells
/// of the l1 hull distance (exact LP).
PairSeparation star_distance(const Simplex& a, const Simplex& b, const SimplicialComplex& k,
                             Execution exec = Execution::parallel);

DiscretenessCertificate discreteness_certificate(const StarFamily& f,
                                                 Execution exec = Execution::parallel);

/// Common point of a pairwise-intersecting family consisting of stars of
/// `family` (given by their bases) and subcomplexes of the ambient complex.
/// Throws ContractError if the family is not pairwise intersecting, has no
/// star member, or the witness fails its membership re-check.
Point linked_intersection_witness(const StarFamily& family, const std::vector<Simplex>& star_bases,
                                  const std::vector<SimplicialComplex>& subcomplexes);

}  // namespace supertopo
