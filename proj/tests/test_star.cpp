#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "supertopo/error.hpp"
#include "supertopo/lp.hpp"
#include "supertopo/star.hpp"

using namespace supertopo;

namespace {

Rational q(long p, unsigned long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Point pt(std::initializer_list<std::pair<const char*, Rational>> cs) {
  std::vector<Point::Coord> coords;
  for (const auto& [v, x] : cs) coords.emplace_back(VertexId(v), x);
  return Point::from_coords(coords);
}

const SimplicialComplex& edge() {
  static const auto k = make_complex({Simplex{"a", "b"}});
  return k;
}

const SimplicialComplex& triangle() {
  static const auto k = make_complex({Simplex{"a", "b", "c"}});
  return k;
}

SimplicialComplex full_simplex(int k) {
  std::vector<VertexId> vs;
  for (int i = 0; i < k; ++i) vs.emplace_back(oracle::vertex_name(i));
  return make_complex({Simplex(vs)});
}

}  // namespace

TEST_SUITE("star") {
  TEST_CASE("chain validation") {
    CHECK_THROWS_AS(Chain(std::vector<Simplex>{}), InputError);
    CHECK_THROWS_AS(Chain({Simplex{"a", "b"}, Simplex{"a"}}), InputError);
    CHECK_THROWS_AS(Chain({Simplex{"a"}, Simplex{"a"}}), InputError);
    CHECK(Chain({Simplex{"a"}, Simplex{"a", "b"}}).saturated());
    CHECK_FALSE(Chain({Simplex{"a"}, Simplex{"a", "b", "c"}}).saturated());
  }

  TEST_CASE("sd_cells") {
    CHECK(sd_cells(Simplex{"a"}, triangle()) == std::vector<Chain>{Chain({Simplex{"a"}})});
    const auto two = sd_cells(Simplex{"a", "b"}, triangle());
    CHECK(two.size() == 2);
    CHECK(two[0] == Chain({Simplex{"a"}, Simplex{"a", "b"}}));
    CHECK(two[1] == Chain({Simplex{"b"}, Simplex{"a", "b"}}));
    CHECK(sd_cells(Simplex{"a", "b", "c"}, triangle()).size() == 6);
    CHECK_THROWS_AS(sd_cells(Simplex{"a", "d"}, triangle()), ContractError);
  }

  TEST_CASE("in_sd_cell") {
    const Chain c({Simplex{"a"}, Simplex{"a", "b"}});
    CHECK(in_sd_cell(barycenter(Simplex{"a", "b"}), c));
    CHECK_FALSE(in_sd_cell(Point::vertex(VertexId("b")), c));
    CHECK(in_sd_cell(pt({{"a", q(2, 3)}, {"b", q(1, 3)}}), c));
    CHECK_THROWS_AS(in_sd_cell(Point::vertex(VertexId("a")),
                               Chain({Simplex{"a"}, Simplex{"a", "b", "c"}})),
                    ContractError);
  }

  TEST_CASE("st1 membership") {
    CHECK(st1_membership(pt({{"a", q(1, 2)}, {"b", q(1, 2)}}), VertexId("a"), edge()));
    CHECK_FALSE(st1_membership(pt({{"a", q(1, 3)}, {"b", q(2, 3)}}), VertexId("a"), edge()));
  }

  TEST_CASE("st2 membership examples") {
    const Point p = pt({{"a", q(2, 3)}, {"b", q(1, 3)}});
    CHECK(st2_membership(Point::vertex(VertexId("a")), Simplex{"a"}, edge()));
    CHECK_FALSE(st2_membership(p, Simplex{"a"}, edge()));
    CHECK(st2_membership(p, Simplex{"a", "b"}, edge()));
    for (const Simplex& tau : triangle().simplexes()) {
      CHECK(st2_membership(barycenter(tau), tau, triangle()));
    }
    // the vertex star of an edge is {p(a) >= 3/4}
    CHECK(st2_membership(pt({{"a", q(3, 4)}, {"b", q(1, 4)}}), Simplex{"a"}, edge()));
    CHECK_FALSE(st2_membership(pt({{"a", q(74, 100)}, {"b", q(26, 100)}}), Simplex{"a"}, edge()));
    CHECK_THROWS_AS(st2_membership(p, Simplex{"a", "c"}, edge()), ContractError);
  }

  TEST_CASE("st2 membership detail records the gap profile") {
    const Point p = pt({{"a", q(1, 2)}, {"b", q(1, 3)}, {"c", q(1, 6)}});
    const auto d = st2_membership_detail(p, Simplex{"a", "b"}, triangle());
    CHECK_FALSE(d.member);
    CHECK(d.ordering == std::vector<VertexId>{VertexId("a"), VertexId("b"), VertexId("c")});
    CHECK(d.values == std::vector<Rational>{q(1, 2), q(1, 3), q(1, 6)});
    CHECK(d.gaps == std::vector<Rational>{q(1, 6), q(1, 3), q(1, 2)});
    CHECK(st2_membership_detail(p, Simplex{"a", "b", "c"}, triangle()).member);
    // ties: the gap sequence does not depend on how tied vertices are ordered
    const Point tied = pt({{"a", q(3, 7)}, {"b", q(3, 7)}, {"c", q(1, 7)}});
    CHECK(st2_membership(tied, Simplex{"b"}, triangle()) ==
          st2_membership(tied, Simplex{"a"}, triangle()));
    CHECK(st2_membership(tied, Simplex{"a", "b"}, triangle()));
  }

  TEST_CASE("st2 oracle examples") {
    CHECK_FALSE(st2_membership_oracle(Point::vertex(VertexId("b")), Simplex{"a"}, edge()));
    const std::vector<Point> pts{barycenter(Simplex{"a"}), barycenter(Simplex{"a", "b"})};
    const Point mid = Point::combination(pts, std::vector<Rational>{q(1, 2), q(1, 2)});
    CHECK(st2_membership_oracle(mid, Simplex{"a"}, edge()));
  }

  TEST_CASE("closed form agrees with the chain oracle on complexes up to 3 vertices") {
    int checked = 0;
    for (const auto& k : oracle::all_complexes(3)) {
      for (const Point& p : oracle::lattice_points(k, 6)) {
        for (const Simplex& tau : k.simplexes()) {
          CHECK(st2_membership(p, tau, k) == st2_membership_oracle(p, tau, k));
          ++checked;
        }
      }
    }
    CHECK(checked > 1000);
  }

  TEST_CASE("closed form agrees with extensional Sd^2 cells on the triangle") {
    for (const Point& p : oracle::lattice_points(triangle(), 6)) {
      for (const Simplex& tau : triangle().simplexes()) {
        bool inside = false;
        for (const Sd2Cell& cell : star_cells(tau, triangle())) {
          const auto vs = cell.vertices();
          if (hulls_intersect(vs, std::vector<Point>{p})) {
            inside = true;
            break;
          }
        }
        CHECK(st2_membership(p, tau, triangle()) == inside);
      }
    }
  }

  TEST_CASE("star_cells match the brute-force cell list") {
    const auto k = full_simplex(4);
    for (const Simplex& tau : k.simplexes()) {
      std::set<std::string> ours, brute;
      for (const Sd2Cell& c : star_cells(tau, k)) {
        std::string key;
        for (const Point& v : c.vertices()) key += to_string(v) + ";";
        ours.insert(key);
      }
      for (const auto& c : oracle::star_cells_bruteforce(tau, k)) {
        std::string key;
        for (const auto& s : c.keys) key += s + ";";
        brute.insert(key);
      }
      CHECK(ours == brute);
    }
  }

  TEST_CASE("chain witness") {
    CHECK(chain_witness(Chain({Simplex{"a"}})) == Point::vertex(VertexId("a")));
    CHECK(chain_witness(Chain({Simplex{"a"}, Simplex{"a", "b"}})) ==
          pt({{"a", q(3, 4)}, {"b", q(1, 4)}}));
    const Chain c({Simplex{"a"}, Simplex{"a", "b"}, Simplex{"a", "b", "c"}});
    const Point w = chain_witness(c);
    CHECK(w == pt({{"a", q(11, 18)}, {"b", q(5, 18)}, {"c", q(2, 18)}}));
    for (const Simplex& s : c.members()) CHECK(st2_membership(w, s, triangle()));
  }

  TEST_CASE("stars meet exactly for comparable bases") {
    for (const auto& k : oracle::all_complexes(4)) {
      std::map<Simplex, std::map<std::string, Point>> verts;
      for (const Simplex& s : k.simplexes()) verts[s] = oracle::star_vertices(s, k);
      for (const Simplex& a : k.simplexes()) {
        for (const Simplex& b : k.simplexes()) {
          const auto w = stars_meet(a, b, k);
          CHECK(w.has_value() == oracle::stars_meet_bruteforce(verts[a], verts[b]));
          if (w) {
            CHECK(st2_membership_oracle(*w, a, k));
            CHECK(st2_membership_oracle(*w, b, k));
          }
        }
      }
    }
  }

  TEST_CASE("linked stars chain") {
    auto r = linked_stars_chain({Simplex{"a", "b"}, Simplex{"a"}}, edge());
    REQUIRE(r.chain);
    CHECK(*r.chain == Chain({Simplex{"a"}, Simplex{"a", "b"}}));
    r = linked_stars_chain({Simplex{"a"}, Simplex{"b"}}, edge());
    CHECK_FALSE(r.chain);
    REQUIRE(r.disjoint_pair);
    CHECK(r.disjoint_pair->first == Simplex{"a"});
    CHECK(r.disjoint_pair->second == Simplex{"b"});
    CHECK_THROWS_AS(linked_stars_chain({}, edge()), ContractError);
  }

  TEST_CASE("star meets subcomplex") {
    CHECK(star_meets_subcomplex(Simplex{"a", "b", "c"}, Simplex{"a", "b"}, triangle()));
    CHECK_FALSE(star_meets_subcomplex(Simplex{"a"}, Simplex{"a", "b"}, triangle()));
  }

  TEST_CASE("star meets subcomplex agrees with Sd^2 vertices") {
    for (const auto& k : oracle::all_complexes(4)) {
      for (const Simplex& tau : k.simplexes()) {
        const auto verts = oracle::star_vertices(tau, k);
        for (const Simplex& sigma : k.simplexes()) {
          bool brute = false;
          for (const auto& [key, p] : verts) brute = brute || p.support().is_face_of(sigma);
          CHECK(star_meets_subcomplex(sigma, tau, k) == brute);
        }
      }
    }
  }

  TEST_CASE("star cover") {
    const StarFamily f = star_cover(triangle(), triangle());
    CHECK(f.member_count() == 7);
    CHECK(f.n() == 3);
    CHECK(f.groups[0].size() == 3);
    CHECK(f.groups[1].size() == 3);
    CHECK(f.groups[2].size() == 1);
    const auto v = make_complex({Simplex{"a"}});
    const StarFamily single = star_cover(v, triangle());
    CHECK(single.member_count() == 1);
    const auto cells = star_cells(Simplex{"a"}, v);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].vertices() == std::vector<Point>{Point::vertex(VertexId("a"))});
    CHECK_THROWS_AS(star_cover(make_complex({Simplex{"a", "d"}}), triangle()), ContractError);
  }

  TEST_CASE("every Sd^2 cell lies in the star of its first barycenter") {
    for (const auto& k : oracle::all_complexes(3)) {
      for (const Simplex& top : k.maximal_simplexes()) {
        for (const auto& cell : oracle::all_sd2_cells(top)) {
          const Simplex base = cell.vertices.front().support();
          for (const Point& v : cell.vertices) CHECK(st2_membership(v, base, k));
        }
      }
    }
  }

  TEST_CASE("separation of the edge cover") {
    const StarFamily f = star_cover(edge(), edge());
    const DiscretenessCertificate cert = discreteness_certificate(f);
    CHECK(cert.n == 2);
    CHECK(cert.bound == q(1, 4));
    REQUIRE(cert.groups.size() == 2);
    CHECK(*cert.groups[0].min_distance == 1);
    CHECK_FALSE(cert.groups[1].min_distance);
    const PairSeparation& s = cert.groups[0].pairs.at(0);
    CHECK(l1_distance(s.x, s.y) == s.distance);
    CHECK(st2_membership(s.x, s.a, edge()));
    CHECK(st2_membership(s.y, s.b, edge()));
  }

  TEST_CASE("separation of the triangle cover") {
    const DiscretenessCertificate cert = discreteness_certificate(star_cover(triangle(), triangle()));
    CHECK(cert.bound == q(1, 9));
    CHECK(*cert.groups[0].min_distance == q(2, 3));
    CHECK(*cert.groups[1].min_distance == q(1, 3));
    CHECK_FALSE(cert.groups[2].min_distance);
    for (const auto& g : cert.groups) {
      for (const auto& s : g.pairs) {
        CHECK(s.distance >= cert.bound);
        CHECK(l1_distance(s.x, s.y) == s.distance);
      }
    }
  }

  TEST_CASE("parallel star distance matches the serial reference") {
    const auto k = full_simplex(3);
    for (const Simplex& a : k.simplexes()) {
      for (const Simplex& b : k.simplexes()) {
        if (a.size() != b.size() || !(a < b)) continue;
        const auto s = star_distance(a, b, k, Execution::serial);
        const auto p = star_distance(a, b, k, Execution::parallel);
        CHECK(s.distance == p.distance);
        CHECK(s.x == p.x);
        CHECK(s.y == p.y);
      }
    }
  }

  TEST_CASE("linked intersection witness") {
    const StarFamily f = star_cover(edge(), edge());
    CHECK(linked_intersection_witness(f, {Simplex{"a"}, Simplex{"a", "b"}}, {}) ==
          pt({{"a", q(3, 4)}, {"b", q(1, 4)}}));
    const Point w = linked_intersection_witness(f, {Simplex{"a"}}, {edge()});
    CHECK(Simplex{"a"}.is_face_of(w.support()));
    CHECK(edge().contains(w.support()));
    CHECK_THROWS_AS(linked_intersection_witness(f, {Simplex{"a"}, Simplex{"b"}}, {}), ContractError);
    CHECK_THROWS_AS(linked_intersection_witness(f, {}, {edge()}), ContractError);
    CHECK_THROWS_AS(
        linked_intersection_witness(f, {Simplex{"a"}}, {make_complex({Simplex{"b"}})}),
        ContractError);
  }
}

TEST_SUITE("star") {
  TEST_CASE("separation of the tetrahedron cover") {
    const auto k = full_simplex(4);
    const DiscretenessCertificate cert = discreteness_certificate(star_cover(k, k));
    CHECK(cert.bound == q(1, 16));
    CHECK(*cert.groups[0].min_distance == q(1, 2));
    CHECK(*cert.groups[1].min_distance == q(1, 4));
    CHECK(*cert.groups[2].min_distance == q(1, 6));
    CHECK_FALSE(cert.groups[3].min_distance);
  }
}
