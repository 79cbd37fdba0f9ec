#include <doctest.h>

#include <map>
#include <set>

#include "linkage/catalog.hpp"
#include "linkage/errors.hpp"
#include "oracles.hpp"

using namespace linkage;

TEST_CASE("quadrilateral fixture table") {
  const std::map<std::string, std::string> table = {
      {"2,3,2,4", "interval"}, {"3,2,3,4", "circle"},   {"4,1,4,5", "circle"},
      {"5,3,5,2", "circle"},   {"1,3,1,3", "wedge"},    {"3,1,1,3", "circle-with-diameter"},
      {"1,1,1,1", "interval"}, {"3,3,1,3", "circle"},   {"2,3,2,5", "interval"},
      {"3,4,3,5", "interval"}};
  for (auto& [lengths, type] : table) {
    CAPTURE(lengths);
    QuadCase c = classify_quadrilateral(LengthVector::parse(lengths));
    CHECK(c.homeomorphism == type);
    CHECK(c.cross_check);
    CHECK(c.s >= c.p);
    CHECK(c.s >= c.q);
    CHECK(c.s >= c.r);
  }
  auto wedge = classify_quadrilateral(LengthVector::parse("1,3,1,3"));
  CHECK(wedge.computed.degree1 == 1);
  CHECK(wedge.computed.b1 == 1);
  auto diam = classify_quadrilateral(LengthVector::parse("3,1,1,3"));
  CHECK(diam.computed.degree3plus == 2);
  CHECK(diam.computed.b1 == 2);
}

TEST_CASE("boundary equality s+q = 2p falls in the circle case") {
  // p = r = 3, q = 2, s = 4: s + q = 6 = 2p
  QuadCase c = classify_quadrilateral(LengthVector::parse("3,2,3,4"));
  CHECK(c.tag == "ii");
  CHECK(c.witness.back() == "s+q<=2p");
  QuadCase d = classify_quadrilateral(LengthVector::parse("2,3,2,4"));
  CHECK(d.tag == "i");
}

TEST_CASE("exhaustive grid: prediction and computed quotient agree") {
  int symmetric = 0, asymmetric = 0;
  std::set<std::string> cases, subcases;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c)
        for (int d = 1; d <= 5; ++d) {
          std::vector<Rational> v{a, b, c, d};
          LengthVector l(v);
          Rational mx = std::max({v[0], v[1], v[2], v[3]});
          if (2 * mx >= l.total()) {
            CHECK_THROWS_AS(classify_quadrilateral(l), Error);
            continue;
          }
          QuadCase q = classify_quadrilateral(l);
          CAPTURE(l.str());
          REQUIRE(q.cross_check);
          subcases.insert(q.reduced_subcase);
          if (q.aut_order > 1) {
            ++symmetric;
            cases.insert(q.tag);
            CHECK(q.shape != QuadShape::Asymmetric);
          } else {
            ++asymmetric;
            CHECK(q.shape == QuadShape::Asymmetric);
          }
        }
  CHECK(symmetric >= 40);
  CHECK(asymmetric > 0);
  CHECK(cases == std::set<std::string>{"i", "ii", "iii", "iv", "v"});
  CHECK(subcases == std::set<std::string>{"i", "ii", "iii", "iv", "v", "vi"});
}

TEST_CASE("degenerate quadrilaterals") {
  for (const char* s : {"1,1,1,3", "1,1,1,5"}) {
    try {
      classify_quadrilateral(LengthVector::parse(s));
      FAIL("expected DegenerateLinkage");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateLinkage);
    }
  }
}

TEST_CASE("square: three collinear vertices of degree four") {
  auto l = LengthVector::parse("1,1,1,1");
  AnnotatedGraph g = quadrilateral_structure(l);
  CHECK(g.vertices.size() == 3);
  for (auto& v : g.vertices) CHECK(v.collinear);
  CHECK(g.arcs.size() == 6);
  CHECK(g.invariants.b1 == 4);
  CHECK(g.invariants.degrees == std::vector<int>{4, 4, 4});
  // independent enumeration
  auto o = oracle::quadrilateral_graph({1, 1, 1, 1});
  CHECK(o.vertices == 3);
  CHECK(o.collinear == 3);
  CHECK(o.edges == 6);
  CHECK(o.b1 == 4);
  for (int deg : o.degree) CHECK(deg == 4);
  CHECK(classify_quadrilateral(l).homeomorphism == "interval");
  CHECK(g.actions.size() == 7);
}

TEST_CASE("quadrilateral graphs agree with the brute-force graph") {
  for (const char* s : {"2,3,2,4", "3,1,1,3", "1,3,1,3", "3,2,3,4", "2,3,4,6", "3,3,1,2", "1,2,2,3"}) {
    CAPTURE(s);
    auto l = LengthVector::parse(s);
    AnnotatedGraph g = quadrilateral_structure(l);
    std::vector<oracle::Q> q;
    for (auto& x : l.values()) q.emplace_back(x);
    auto o = oracle::quadrilateral_graph(q);
    CHECK(static_cast<int>(g.vertices.size()) == o.vertices);
    CHECK(static_cast<int>(g.arcs.size()) == o.edges);
    CHECK(g.invariants.b0 == o.b0);
    CHECK(g.invariants.b1 == o.b1);
  }
}

TEST_CASE("quadrilateral structures: deltoid and isosceles") {
  auto deltoid = quadrilateral_structure(LengthVector::parse("3,1,1,3"));
  CHECK(deltoid.invariants.b1 == 3);
  CHECK(deltoid.invariants.degrees == std::vector<int>{4, 4});
  CHECK(deltoid.invariants.arcs == 4);
  REQUIRE(deltoid.actions.size() == 1);
  CHECK(std::count(deltoid.actions[0].arcs.begin(), deltoid.actions[0].arcs.end(), "fixed") == 2);

  auto iso = quadrilateral_structure(LengthVector::parse("2,3,2,4"));
  CHECK(iso.invariants.b1 == 1);
  REQUIRE(iso.actions.size() == 1);
  CHECK(iso.actions[0].fixed_points == 2);

  auto para = quadrilateral_structure(LengthVector::parse("1,3,1,3"));
  CHECK(para.actions.size() == 3);
}

TEST_CASE("surface check on small complexes") {
  auto disc = SimplicialComplex::from_simplices({"a", "b", "c", "d"}, {{0, 1, 2}, {0, 2, 3}});
  auto s = surface_check(disc);
  CHECK(s.pure);
  CHECK(s.links_ok);
  CHECK(s.boundary_components == 1);
  CHECK(s.boundary_is_circles);
  auto book = SimplicialComplex::from_simplices({"a", "b", "c", "d", "e"}, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK_FALSE(surface_check(book).links_ok);
}

TEST_CASE("pentagon report") {
  PentagonReport r = pentagon_report(200);
  CHECK(r.reduced_f == std::vector<int>{30, 60, 24});
  CHECK(r.reduced.euler == -6);
  CHECK(r.fully_reduced.euler == -3);
  CHECK(r.symmetric.euler == 1);
  CHECK(r.symmetric_group_order == 20);
  CHECK(r.symmetric_mod2.betti == std::vector<long>{1, 0, 0});
  CHECK(r.symmetric_links.pure);
  CHECK(r.symmetric_links.links_ok);
  CHECK(r.symmetric_links.boundary_components == 1);
  CHECK(r.dihedral_types == 4);
  // every sign vector occurs as exactly one region; the all-minus and all-plus
  // vectors split in two
  CHECK(r.census.cells.size() == 34);
  for (auto& c : r.census.cells) CHECK(c.components == 1);
  CHECK(r.census.total == 34);
  CHECK(r.census.per_type.at("I") == 1);
  CHECK(r.census.per_type.at("II") == 2);
  CHECK(r.census.per_type.at("III") == 10);
  CHECK(r.census.per_type.at("IV") == 10);
  CHECK(r.census.per_type.at("V") == 10);
  // walls change one sign
  for (auto& a : r.census.adjacency) {
    int diff = 0;
    for (int k = 0; k < 5; ++k) diff += a[0][k] != a[1][k];
    CHECK(diff == 1);
  }
}

TEST_CASE("hexagon report") {
  HexagonReport h = hexagon_report();
  CHECK(h.boundary_f == std::vector<int>{5, 9, 6});
  CHECK(h.boundary_euler == 2);
  CHECK(h.fine_cells == 12);
  CHECK(h.star_types.size() == 3);
  CHECK(h.barycenter_stabilizer == 12);
  CHECK(h.realized.size() + h.not_realized.size() == 16);
  CHECK(h.not_realized.size() == 3);
}
