#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "supertopo/complex.hpp"
#include "supertopo/error.hpp"

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

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("rational text round trip") {
    CHECK(to_string(q(2, 4)) == "1/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(parse_rational("6/8") == q(3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-1/3") == q(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("0.5"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
  }

  TEST_CASE("make_complex closes downward") {
    CHECK(make_complex({Simplex{"a", "b", "c"}}).size() == 7);
    const auto v = make_complex({Simplex{"a"}});
    CHECK(v.size() == 1);
    CHECK(v.contains(Simplex{"a"}));
    const auto path = make_complex({Simplex{"a", "b"}, Simplex{"b", "c"}});
    CHECK(path.size() == 5);
    CHECK(dimension(path) == 1);
    CHECK_THROWS_AS(make_complex({Simplex{}}), InputError);
    CHECK_THROWS_AS(Simplex({VertexId("a"), VertexId("a")}), InputError);
  }

  TEST_CASE("dimension") {
    CHECK(dimension(make_complex({Simplex{"a", "b", "c"}})) == 2);
    CHECK(dimension(make_complex({Simplex{"a"}})) == 0);
    CHECK(dimension(make_complex({Simplex{"a", "b"}, Simplex{"c", "d"}})) == 1);
    CHECK_THROWS_AS(dimension(SimplicialComplex{}), ContractError);
  }

  TEST_CASE("maximal simplexes and subcomplexes") {
    const auto k = make_complex({Simplex{"a", "b"}, Simplex{"b", "c"}, Simplex{"a"}});
    CHECK(k.maximal_simplexes() == std::vector<Simplex>{Simplex{"a", "b"}, Simplex{"b", "c"}});
    CHECK(make_complex({Simplex{"a", "b"}}).is_subcomplex_of(k));
    CHECK_FALSE(make_complex({Simplex{"a", "c"}}).is_subcomplex_of(k));
    const auto tri = make_complex({Simplex{"a", "b", "c"}});
    CHECK(tri.induced({VertexId("a"), VertexId("b")}) == make_complex({Simplex{"a", "b"}}));
    CHECK(tri.intersection(k) == k);
  }

  TEST_CASE("barycenter") {
    CHECK(barycenter(Simplex{"a"}) == Point::vertex(VertexId("a")));
    CHECK(barycenter(Simplex{"a", "b"}) == pt({{"a", q(1, 2)}, {"b", q(1, 2)}}));
    CHECK(barycenter(Simplex{"a", "b", "c"}) ==
          pt({{"a", q(1, 3)}, {"b", q(1, 3)}, {"c", q(1, 3)}}));
  }

  TEST_CASE("point validation") {
    CHECK_THROWS_AS(pt({{"a", q(1, 2)}}), InputError);
    CHECK_THROWS_AS(pt({{"a", q(3, 2)}, {"b", q(-1, 2)}}), InputError);
    CHECK_THROWS_AS(pt({{"a", q(1, 2)}, {"a", q(1, 2)}}), InputError);
    const Point p = pt({{"a", Rational(1)}, {"b", Rational(0)}});
    CHECK(p.coords().size() == 1);
    CHECK(p.support() == Simplex{"a"});
    CHECK(to_string(pt({{"b", q(1, 3)}, {"a", q(2, 3)}})) == "(a:2/3, b:1/3)");
  }

  TEST_CASE("join and cone") {
    CHECK(join(make_complex({Simplex{"a"}}), make_complex({Simplex{"b"}})) ==
          make_complex({Simplex{"a", "b"}}));
    CHECK(join(make_complex({Simplex{"a", "b"}}), make_complex({Simplex{"c"}})) ==
          make_complex({Simplex{"a", "b", "c"}}));
    CHECK(cone(make_complex({Simplex{"a", "b"}, Simplex{"c"}}), VertexId("x")) ==
          make_complex({Simplex{"a", "b", "x"}, Simplex{"c", "x"}}));
    CHECK_THROWS_AS(join(make_complex({Simplex{"a"}}), make_complex({Simplex{"a", "b"}})),
                    ContractError);
  }

  TEST_CASE("join dimension adds") {
    const auto p = make_complex({Simplex{"a", "b"}, Simplex{"b", "c"}});
    const auto t = make_complex({Simplex{"x", "y", "z"}});
    const auto s = make_complex({Simplex{"u"}, Simplex{"v"}});
    CHECK(dimension(join(p, t)) == dimension(p) + dimension(t) + 1);
    CHECK(join(join(p, t), s) == join(p, join(t, s)));
    CHECK(join(p, s).size() == p.size() + s.size() + p.size() * s.size());
  }

  TEST_CASE("l1 distance") {
    const Point a = Point::vertex(VertexId("a"));
    const Point b = Point::vertex(VertexId("b"));
    CHECK(l1_distance(a, a) == 0);
    CHECK(l1_distance(a, b) == 2);
    CHECK(l1_distance(barycenter(Simplex{"a", "b"}), a) == 1);
  }

  TEST_CASE("l1 distance is a metric on random rational points") {
    std::mt19937_64 rng(7);
    const auto k = make_complex({Simplex{"a", "b", "c", "d"}});
    const auto all = oracle::simplexes_of(k);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const Point x = oracle::random_point(all[pick(rng)], rng);
      const Point y = oracle::random_point(all[pick(rng)], rng);
      const Point z = oracle::random_point(all[pick(rng)], rng);
      CHECK(l1_distance(x, y) == l1_distance(y, x));
      CHECK(l1_distance(x, z) <= l1_distance(x, y) + l1_distance(y, z));
      CHECK((l1_distance(x, y) == 0) == (x == y));
    }
  }

  TEST_CASE("carrier") {
    const auto tri = make_complex({Simplex{"a", "b", "c"}});
    CHECK(carrier(Point::vertex(VertexId("a")), tri) == Simplex{"a"});
    CHECK(carrier(barycenter(Simplex{"a", "b"}), tri) == Simplex{"a", "b"});
    CHECK(carrier(barycenter(Simplex{"a", "b", "c"}), tri) == Simplex{"a", "b", "c"});
    const auto path = make_complex({Simplex{"a", "b"}, Simplex{"b", "c"}});
    CHECK_THROWS_AS(carrier(barycenter(Simplex{"a", "c"}), path), ContractError);
  }

  TEST_CASE("complex enumeration counts") {
    CHECK(oracle::complexes_on(1).size() == 1);
    CHECK(oracle::complexes_on(2).size() == 2);
    CHECK(oracle::complexes_on(3).size() == 9);
    CHECK(oracle::complexes_on(4).size() == 114);
  }
}
