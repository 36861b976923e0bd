#include <vector>

#include "doctest.h"
#include "monopath/errors.hpp"
#include "monopath/families.hpp"
#include "monopath/polytope.hpp"

using namespace monopath;

namespace {

Polytope cube() { return *monopath::make({Family::hypercube, 3}).polytope; }

}  // namespace

TEST_CASE("cube passes validation with the expected counts") {
  const Polytope p = cube();
  CHECK(p.dim == 3);
  CHECK(p.n == 8);
  CHECK(p.edges.size() == 12);
  CHECK(p.faces2.size() == 6);
  CHECK_NOTHROW(validate_polytope(p));
  const auto deg = degrees(p);
  for (int d : deg) CHECK(d == 3);
  const auto adj = adjacency(p);
  CHECK(adj[0] == std::vector<int>{1, 2, 4});  // bit ids: neighbors flip one bit
}

TEST_CASE("validation rejects malformed edge lists") {
  Polytope p = cube();
  SUBCASE("unnormalized edge") {
    p.edges[0] = {1, 0};
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("duplicate edge") {
    p.edges.push_back(p.edges.back());
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("vertex id out of range") {
    p.edges[0] = {0, 99};
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("unsorted edge list") {
    std::swap(p.edges[0], p.edges[1]);
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
}

TEST_CASE("validation rejects broken face data in dim 3") {
  Polytope p = cube();
  SUBCASE("dropping a facet breaks Euler's relation") {
    p.faces2.pop_back();
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("face cycle must walk along edges") {
    // 0 and 3 differ in two bits: not an edge of the cube.
    p.faces2[0] = {0, 3, 5};
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("face cycle must not repeat a vertex") {
    p.faces2[0] = {0, 1, 0, 1};
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("faces of fewer than 3 vertices are rejected") {
    p.faces2[0] = {0, 1};
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
}

TEST_CASE("disconnected graphs are rejected") {
  Polytope p;
  p.dim = 3;
  p.n = 4;
  p.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
}

TEST_CASE("coordinate shape checks") {
  Polytope p = cube();
  REQUIRE(p.coords.has_value());
  SUBCASE("row count must be n") {
    p.coords->pop_back();
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("row width must be dim") {
    (*p.coords)[0].push_back(Rational(0));
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
  SUBCASE("edges joining coincident points are rejected") {
    (*p.coords)[1] = (*p.coords)[0];
    CHECK_THROWS_AS(validate_polytope(p), InvalidPolytope);
  }
}

TEST_CASE("a dim-2 polygon with a single 2-face validates") {
  Polytope sq;
  sq.dim = 2;
  sq.n = 4;
  sq.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  sq.faces2 = {{0, 1, 2, 3}};
  CHECK_NOTHROW(validate_polytope(sq));
}

TEST_CASE("make_polytope freezes validated data") {
  const PolytopePtr p = make_polytope(cube());
  CHECK(p->n == 8);
  Polytope bad = cube();
  bad.edges.clear();
  CHECK_THROWS_AS(make_polytope(bad), InvalidPolytope);
}
