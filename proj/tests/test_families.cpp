#include <set>
#include <vector>

#include "doctest.h"
#include "monopath/errors.hpp"
#include "monopath/families.hpp"
#include "monopath/orientation.hpp"

using namespace monopath;

TEST_CASE("family names round trip") {
  for (Family f : {Family::simplex, Family::stacked_x, Family::prism,
                   Family::wedge_vertex, Family::wedge_edge, Family::pyramid,
                   Family::multi_pyramid, Family::hypercube,
                   Family::complete_dag}) {
    CHECK(family_from_string(family_to_string(f)) == f);
  }
  CHECK(family_to_string(Family::stacked_x) == "stacked-x");
  CHECK(family_to_string(Family::multi_pyramid) == "multi-pyramid");
  CHECK_THROWS_AS(family_from_string("dodecahedron"), ParseError);
}

TEST_CASE("out-of-range parameters throw InvalidSpec") {
  CHECK_THROWS_AS(make({Family::simplex, 1}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::stacked_x, 3}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::prism, 2}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::wedge_vertex, 2}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::wedge_edge, 2}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::pyramid, 2}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::multi_pyramid, 2, 5}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::multi_pyramid, 4, 2}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::hypercube, 0}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::hypercube, 21}), InvalidSpec);
  CHECK_THROWS_AS(make({Family::complete_dag, 1}), InvalidSpec);
}

TEST_CASE("stacked-x structure: 3n-6 edges, 2n-4 triangular facets") {
  for (int n : {4, 5, 8, 12}) {
    const auto p = make({Family::stacked_x, n}).polytope;
    CHECK(p->dim == 3);
    CHECK(p->n == n);
    CHECK(static_cast<int>(p->edges.size()) == 3 * n - 6);
    CHECK(static_cast<int>(p->faces2.size()) == 2 * n - 4);
    for (const auto& f : p->faces2) CHECK(f.size() == 3);
    for (const auto& [u, w] : p->edges) CHECK(w - u <= 3);
  }
}

TEST_CASE("prism structure and canonical sweep") {
  const auto inst = make({Family::prism, 3});
  CHECK(inst.polytope->n == 6);
  CHECK(inst.polytope->edges.size() == 9);
  CHECK(inst.polytope->faces2.size() == 5);
  CHECK(is_simple(*inst.polytope));
  const auto o = orient(inst.polytope, inst.functional);
  CHECK(outdegree_sequence(o) == std::vector<int>{0, 1, 1, 2, 2, 3});
  CHECK(h_vector(o) == std::vector<long long>{1, 2, 2, 1});
}

TEST_CASE("wedge over a vertex of a triangle is the square pyramid") {
  const auto p = make({Family::wedge_vertex, 3}).polytope;
  CHECK(p->n == 5);
  CHECK(p->edges.size() == 8);
  CHECK(p->faces2.size() == 5);
  CHECK_FALSE(is_simple(*p));
  std::multiset<std::size_t> sizes;
  for (const auto& f : p->faces2) sizes.insert(f.size());
  CHECK(sizes == std::multiset<std::size_t>{3, 3, 3, 3, 4});
}

TEST_CASE("wedge over an edge of a triangle is the tetrahedron") {
  const auto p = make({Family::wedge_edge, 3}).polytope;
  CHECK(p->n == 4);
  CHECK(p->edges.size() == 6);
  CHECK(p->faces2.size() == 4);
  CHECK(is_simple(*p));
}

TEST_CASE("wedge families have the predicted sizes") {
  for (int k : {4, 5, 6, 7}) {
    const auto wv = make({Family::wedge_vertex, k}).polytope;
    CHECK(wv->n == 2 * k - 1);
    CHECK(static_cast<int>(wv->faces2.size()) == k + 2);
    CHECK_FALSE(is_simple(*wv));

    const auto we = make({Family::wedge_edge, k}).polytope;
    CHECK(we->n == 2 * k - 2);
    CHECK(static_cast<int>(we->faces2.size()) == k + 1);
    CHECK(is_simple(*we));
    // simple 3-polytope: 2|E| = 3n
    CHECK(2 * we->edges.size() == 3 * static_cast<std::size_t>(we->n));
  }
}

TEST_CASE("pyramid ranks the apex first") {
  const auto inst = make({Family::pyramid, 5});
  CHECK(inst.polytope->n == 6);
  CHECK(inst.polytope->faces2.size() == 6);
  const auto o = orient(inst.polytope, inst.functional);
  CHECK(o.rank[0] == 0);           // apex is vertex 0 and ranked first
  CHECK(o.arcs[0].size() == 5);    // apex sees the whole polygon
}

TEST_CASE("multi-pyramid: d-2 cone vertices over a k-gon") {
  const auto p3 = make({Family::multi_pyramid, 3, 5}).polytope;
  CHECK(p3->dim == 3);
  CHECK(p3->n == 6);  // matches pyramid over a pentagon
  const auto p5 = make({Family::multi_pyramid, 5, 4}).polytope;
  CHECK(p5->dim == 5);
  CHECK(p5->n == 4 + 5 - 2);
  // every cone vertex is adjacent to everything else
  const auto adj = adjacency(*p5);
  for (int c = 0; c < 3; ++c) CHECK(adj[c].size() == static_cast<std::size_t>(p5->n - 1));
}

TEST_CASE("hypercube carries bit-pattern ids") {
  const auto p = make({Family::hypercube, 4}).polytope;
  CHECK(p->n == 16);
  CHECK(p->edges.size() == 32);
  CHECK(p->faces2.size() == 24);
  for (const auto& [u, w] : p->edges) {
    const int x = u ^ w;
    CHECK((x & (x - 1)) == 0);  // exactly one differing bit
  }
}

TEST_CASE("complete-dag has every edge and no 2-faces") {
  const auto inst = make({Family::complete_dag, 6});
  CHECK(inst.polytope->dim == 4);
  CHECK(inst.polytope->n == 6);
  CHECK(inst.polytope->edges.size() == 15);
  CHECK(inst.polytope->faces2.empty());
  CHECK(inst.functional.kind == Functional::Kind::order_form);
}

TEST_CASE("every canonical orientation is LP-admissible") {
  for (const FamilySpec spec :
       {FamilySpec{Family::simplex, 3}, FamilySpec{Family::simplex, 6},
        FamilySpec{Family::stacked_x, 4}, FamilySpec{Family::stacked_x, 14},
        FamilySpec{Family::prism, 3}, FamilySpec{Family::prism, 9},
        FamilySpec{Family::wedge_vertex, 3}, FamilySpec{Family::wedge_vertex, 8},
        FamilySpec{Family::wedge_edge, 3}, FamilySpec{Family::wedge_edge, 9},
        FamilySpec{Family::pyramid, 3}, FamilySpec{Family::pyramid, 12},
        FamilySpec{Family::multi_pyramid, 3, 6},
        FamilySpec{Family::multi_pyramid, 5, 6},
        FamilySpec{Family::hypercube, 2}, FamilySpec{Family::hypercube, 5}}) {
    const auto o = canonical_orientation(spec);
    const auto rep = validate_lp_admissible(o);
    CHECK(rep.pass);
    CHECK(rep.global_sources == std::vector<int>{o.source()});
    CHECK(rep.global_sinks == std::vector<int>{o.sink()});
  }
}
