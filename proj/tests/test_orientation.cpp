#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "monopath/errors.hpp"
#include "monopath/families.hpp"
#include "monopath/functional.hpp"
#include "monopath/orientation.hpp"
#include "monopath/sampling.hpp"

using namespace monopath;

TEST_CASE("unit cube under (1, 1/2, 1/4): outdegrees match the h-vector") {
  const auto inst = make({Family::hypercube, 3});
  const auto o = orient(inst.polytope, inst.functional);
  CHECK(outdegree_sequence(o) == std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3});
  CHECK(h_vector(o) == std::vector<long long>{1, 3, 3, 1});
  CHECK(o.source() == 0);
  CHECK(o.sink() == 7);
  CHECK(validate_lp_admissible(o).pass);
}

TEST_CASE("3-simplex: any generic order gives outdegrees {3,2,1,0}") {
  const auto inst = make({Family::simplex, 3});
  const auto o = orient(inst.polytope, inst.functional);
  CHECK(outdegree_sequence(o) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("4-cube h-vector is (1,4,6,4,1)") {
  const auto o = canonical_orientation({Family::hypercube, 4});
  CHECK(h_vector(o) == std::vector<long long>{1, 4, 6, 4, 1});
}

TEST_CASE("arcs strictly increase rank and sum of outdegrees is |edges|") {
  for (const FamilySpec spec : {FamilySpec{Family::stacked_x, 9},
                                FamilySpec{Family::prism, 5},
                                FamilySpec{Family::pyramid, 6},
                                FamilySpec{Family::hypercube, 4},
                                FamilySpec{Family::wedge_edge, 5}}) {
    const auto o = canonical_orientation(spec);
    std::size_t arcs = 0;
    for (int u = 0; u < o.n(); ++u) {
      for (int w : o.arcs[u]) {
        CHECK(o.rank[u] < o.rank[w]);
        CHECK(o.has_arc(u, w));
        CHECK_FALSE(o.has_arc(w, u));
      }
      arcs += o.arcs[u].size();
    }
    CHECK(arcs == o.polytope->edges.size());
  }
}

TEST_CASE("X(6) canonical order orients (i,j) for j-i in {1,2,3}") {
  const auto o = canonical_orientation({Family::stacked_x, 6});
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      CHECK(o.has_arc(i, j) == (j - i <= 3));
    }
  }
}

TEST_CASE("vector-form functionals reject ties instead of breaking them") {
  const auto inst = make({Family::hypercube, 3});
  const auto flat = Functional::from_vector(
      {Rational(1), Rational(0), Rational(0)});
  CHECK_THROWS_AS(orient(inst.polytope, flat), NonGenericFunctional);
  const auto wrong_width = Functional::from_vector({Rational(1)});
  CHECK_THROWS_AS(orient(inst.polytope, wrong_width), BadParams);
}

TEST_CASE("vector form requires coordinates") {
  const auto inst = make({Family::complete_dag, 5});
  CHECK_FALSE(inst.polytope->coords.has_value());
  const auto f = Functional::from_vector(
      {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)});
  CHECK_THROWS_AS(orient(inst.polytope, f), NonGenericFunctional);
}

TEST_CASE("order form must be a permutation of the vertex ids") {
  const auto p = make({Family::hypercube, 3}).polytope;
  CHECK_THROWS_AS(orient(p, Functional::from_order({0, 1, 2})),
                  OrderArityMismatch);
  CHECK_THROWS_AS(orient(p, Functional::from_order({0, 1, 2, 3, 4, 5, 6, 6})),
                  OrderArityMismatch);
  CHECK_THROWS_AS(orient(p, Functional::from_order({0, 1, 2, 3, 4, 5, 6, 9})),
                  OrderArityMismatch);
}

TEST_CASE("some order on a quadrilateral fails the 2-face check") {
  Polytope sq;
  sq.dim = 2;
  sq.n = 4;
  sq.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  sq.faces2 = {{0, 1, 2, 3}};
  const auto p = make_polytope(sq);

  int failing = 0, passing = 0;
  std::vector<int> order = {0, 1, 2, 3};
  do {
    const auto o = orient(p, Functional::from_order(order));
    const auto rep = validate_lp_admissible(o);
    (rep.pass ? passing : failing)++;
    // A 4-cycle has one local min and one local max, or two of each.
    REQUIRE(rep.faces.size() == 1);
    CHECK(rep.faces[0].sources.size() == rep.faces[0].sinks.size());
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(failing == 8);   // opposite corners ranked {0,1}: 2 choices * 2 * 2
  CHECK(passing == 16);
}

TEST_CASE("validate_lp_admissible passes on every shipped coordinate family") {
  for (const FamilySpec spec :
       {FamilySpec{Family::simplex, 4}, FamilySpec{Family::stacked_x, 10},
        FamilySpec{Family::prism, 6}, FamilySpec{Family::wedge_vertex, 5},
        FamilySpec{Family::wedge_edge, 6}, FamilySpec{Family::pyramid, 7},
        FamilySpec{Family::multi_pyramid, 4, 5},
        FamilySpec{Family::hypercube, 4}}) {
    const auto o = canonical_orientation(spec);
    CHECK(validate_lp_admissible(o).pass);
  }
}

TEST_CASE("simple families keep one outdegree multiset across functionals") {
  std::mt19937_64 rng(7);
  for (const FamilySpec spec :
       {FamilySpec{Family::prism, 5}, FamilySpec{Family::hypercube, 3},
        FamilySpec{Family::wedge_edge, 5}}) {
    const auto inst = make(spec);
    const auto base = outdegree_sequence(orient(inst.polytope, inst.functional));
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_generic_vector_functional(*inst.polytope, rng);
      const auto o = orient(inst.polytope, f);
      CHECK(outdegree_sequence(o) == base);
      CHECK(validate_lp_admissible(o).pass);
    }
  }
}

TEST_CASE("h-vectors of shipped simple families are palindromic") {
  for (const FamilySpec spec :
       {FamilySpec{Family::simplex, 4}, FamilySpec{Family::prism, 7},
        FamilySpec{Family::wedge_edge, 6}, FamilySpec{Family::hypercube, 4}}) {
    const auto o = canonical_orientation(spec);
    const auto h = h_vector(o);
    auto rev = h;
    std::reverse(rev.begin(), rev.end());
    CHECK(h == rev);
    CHECK(std::accumulate(h.begin(), h.end(), 0LL) == o.n());
  }
}

TEST_CASE("h_vector refuses non-simple polytopes") {
  const auto o = canonical_orientation({Family::pyramid, 4});
  CHECK_FALSE(is_simple(*o.polytope));
  CHECK_THROWS_AS(h_vector(o), NotSimple);
  CHECK(is_simple(*canonical_orientation({Family::hypercube, 3}).polytope));
  CHECK_FALSE(is_simple(*canonical_orientation({Family::stacked_x, 6}).polytope));
}

TEST_CASE("random LP-admissible orders validate by construction") {
  std::mt19937_64 rng(11);
  const auto p = make({Family::stacked_x, 7}).polytope;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_lp_admissible_order(p, rng);
    CHECK(validate_lp_admissible(orient(p, f)).pass);
  }
}
