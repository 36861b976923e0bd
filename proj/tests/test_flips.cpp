#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "monopath/counting.hpp"
#include "monopath/errors.hpp"
#include "monopath/families.hpp"
#include "monopath/flips.hpp"
#include "monopath/orientation.hpp"

using namespace monopath;

TEST_CASE("paths enumerate in lexicographic order and match the count") {
  for (const FamilySpec spec :
       {FamilySpec{Family::stacked_x, 8}, FamilySpec{Family::prism, 5},
        FamilySpec{Family::hypercube, 4}, FamilySpec{Family::pyramid, 7}}) {
    const auto o = canonical_orientation(spec);
    const auto paths = enumerate_paths(o, 100000);
    CHECK(BigInt(paths.size()) == count_paths_dp(o));
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    for (const auto& path : paths) {
      CHECK(path.front() == o.source());
      CHECK(path.back() == o.sink());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(o.has_arc(path[i], path[i + 1]));
      }
    }
  }
}

TEST_CASE("enumeration respects the cap") {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  CHECK_THROWS_AS(enumerate_paths(o, 100), CapExceeded);
  CHECK_THROWS_AS(build_flip_graph(o, 100), CapExceeded);
}

TEST_CASE("face chains split a facet at its source and sink") {
  const auto o = canonical_orientation({Family::prism, 3});
  for (std::size_t f = 0; f < o.polytope->faces2.size(); ++f) {
    const auto [left, right] = face_chains(o, static_cast<int>(f));
    REQUIRE(left.size() >= 2);
    REQUIRE(right.size() >= 2);
    CHECK(left.front() == right.front());
    CHECK(left.back() == right.back());
    CHECK(left != right);
    CHECK(left.size() + right.size() == o.polytope->faces2[f].size() + 2);
    for (const auto& chain : {left, right}) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(o.has_arc(chain[i], chain[i + 1]));
      }
    }
  }
}

TEST_CASE("face chains reject faces with two local sources") {
  Polytope sq;
  sq.dim = 2;
  sq.n = 4;
  sq.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  sq.faces2 = {{0, 1, 2, 3}};
  const auto p = make_polytope(sq);
  const auto o = orient(p, Functional::from_order({0, 2, 1, 3}));
  CHECK_THROWS_AS(face_chains(o, 0), NotLpAdmissibleFace);
}

TEST_CASE("triangular prism flip graph is a 5-cycle") {
  const auto o = canonical_orientation({Family::prism, 3});
  const auto g = build_flip_graph(o, 1000);
  CHECK(g.paths.size() == 5);
  CHECK(g.edges.size() == 5);
  CHECK(g.connected);
  for (const auto& row : g.adj) CHECK(row.size() == 2);
  CHECK(diameter(g) == 2);
}

TEST_CASE("cube flip graph is a hexagon") {
  const auto o = canonical_orientation({Family::hypercube, 3});
  const auto g = build_flip_graph(o, 1000);
  CHECK(g.paths.size() == 6);
  CHECK(g.edges.size() == 6);
  for (const auto& row : g.adj) CHECK(row.size() == 2);
  CHECK(diameter(g) == 3);
}

TEST_CASE("X(n) flip graphs: tribonacci nodes, connected, known diameters") {
  const std::vector<int> want_diam = {2, 3, 4, 7, 9};  // n = 4..8
  for (int n = 4; n <= 8; ++n) {
    const auto o = canonical_orientation({Family::stacked_x, n});
    const auto g = build_flip_graph(o, 10000);
    CHECK(BigInt(g.paths.size()) == tribonacci(n - 1));
    CHECK(g.connected);
    CHECK(diameter(g) == want_diam[n - 4]);
  }
}

TEST_CASE("flip graphs without 2-faces are refused") {
  const auto o = canonical_orientation({Family::complete_dag, 5});
  CHECK_THROWS_AS(build_flip_graph(o, 1000), NoFaces);
}

TEST_CASE("flipping across the same face twice returns the original path") {
  const auto o = canonical_orientation({Family::stacked_x, 7});
  const auto g = build_flip_graph(o, 10000);
  int applied = 0;
  for (const auto& path : g.paths) {
    for (std::size_t f = 0; f < o.polytope->faces2.size(); ++f) {
      MonotonePath flipped;
      try {
        flipped = apply_flip(o, path, static_cast<int>(f));
      } catch (const IllegalFlip&) {
        continue;
      }
      ++applied;
      CHECK(flipped != path);
      CHECK(apply_flip(o, flipped, static_cast<int>(f)) == path);
    }
  }
  CHECK(applied == 2 * static_cast<int>(g.edges.size()));
}

TEST_CASE("flip edges recorded in the graph carry the witnessing face") {
  const auto o = canonical_orientation({Family::stacked_x, 6});
  const auto g = build_flip_graph(o, 1000);
  for (const auto& e : g.edges) {
    CHECK(apply_flip(o, g.paths[e.a], e.face) == g.paths[e.b]);
  }
}

TEST_CASE("verify_flip_walk replays sequences and reports the failing step") {
  const auto o = canonical_orientation({Family::prism, 3});
  const auto g = build_flip_graph(o, 1000);
  // Walk the 5-cycle once around from any node.
  MonotonePath at = g.paths[0];
  std::vector<int> faces;
  int prev = -1;
  int here = 0;
  for (int step = 0; step < 5; ++step) {
    for (const auto& [next, face] : g.adj[here]) {
      if (next != prev) {
        faces.push_back(face);
        prev = here;
        here = next;
        break;
      }
    }
  }
  CHECK(here == 0);
  CHECK(verify_flip_walk(o, at, faces) == at);

  // A face that admits no flip from the intermediate path makes the walk
  // fail at exactly that step.
  const MonotonePath mid = apply_flip(o, at, faces[0]);
  int dead_face = -1;
  for (std::size_t f = 0; f < o.polytope->faces2.size(); ++f) {
    try {
      apply_flip(o, mid, static_cast<int>(f));
    } catch (const IllegalFlip&) {
      dead_face = static_cast<int>(f);
      break;
    }
  }
  REQUIRE(dead_face >= 0);
  try {
    verify_flip_walk(o, at, {faces[0], dead_face});
    FAIL("expected IllegalFlip");
  } catch (const IllegalFlip& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("path_index and distance agree with adjacency") {
  const auto o = canonical_orientation({Family::stacked_x, 6});
  const auto g = build_flip_graph(o, 1000);
  for (std::size_t i = 0; i < g.paths.size(); ++i) {
    CHECK(path_index(g, g.paths[i]) == static_cast<int>(i));
  }
  CHECK_THROWS_AS(path_index(g, MonotonePath{0, 5}), NotAPath);
  for (const auto& e : g.edges) {
    CHECK(distance(g, g.paths[e.a], g.paths[e.b]) == 1);
  }
  CHECK(distance(g, g.paths[0], g.paths[0]) == 0);
  const auto ecc = eccentricities(g);
  CHECK(ecc.size() == g.paths.size());
  CHECK(*std::max_element(ecc.begin(), ecc.end()) == diameter(g));
}

TEST_CASE("nu counts maximal disagreement runs") {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  const MonotonePath gamma = {0, 2, 5, 8, 9};
  const MonotonePath gamma2 = {0, 2, 4, 7, 8, 9};
  CHECK(nu(o, gamma, gamma2) == 1);
  CHECK(nu(o, gamma, gamma) == 0);
  const auto g = build_flip_graph(o, 1000);
  CHECK(distance(g, gamma, gamma2) == 3);
  // Disagreement runs are separated by shared positions, so at most
  // floor((n-1)/2) of them fit in the 2n-1 levels.
  for (std::size_t a = 0; a < g.paths.size(); a += 7) {
    for (std::size_t b = a + 1; b < g.paths.size(); b += 5) {
      const int runs = nu(o, g.paths[a], g.paths[b]);
      CHECK(runs >= 1);
      CHECK(runs <= (o.n() - 1) / 2);
    }
  }
}

TEST_CASE("distance bound report on X(8): exhaustive, no violations") {
  const auto o = canonical_orientation({Family::stacked_x, 8});
  const auto g = build_flip_graph(o, 1000);
  const auto rep = check_distance_bound(o, g, 42);
  CHECK(rep.exhaustive);
  CHECK(rep.pairs_checked == 44u * 43u / 2u);
  CHECK(rep.violations == 0);
  CHECK(rep.ok);
  CHECK(rep.worst_ratio <= Rational(1));
}

TEST_CASE("distance bound sampling is deterministic per seed") {
  const auto o = canonical_orientation({Family::stacked_x, 12});
  const auto g = build_flip_graph(o, 10000);
  const auto a = check_distance_bound(o, g, 7, 500, 10);
  const auto b = check_distance_bound(o, g, 7, 500, 10);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.pairs_checked == b.pairs_checked);
  CHECK(a.worst_distance == b.worst_distance);
  CHECK(a.worst_nu == b.worst_nu);
  CHECK(a.ok);
}

TEST_CASE("distance bound check is a 3-dimensional statement") {
  const auto o = canonical_orientation({Family::hypercube, 4});
  const auto g = build_flip_graph(o, 10000);
  CHECK_THROWS_AS(check_distance_bound(o, g, 1), NotDim3);
}

TEST_CASE("subset model marks skipped interior vertices") {
  CHECK(subset_to_path(0, 6) == MonotonePath{0, 1, 2, 3, 4, 5});
  CHECK(subset_to_path(0b0010, 6) == MonotonePath{0, 2, 3, 4, 5});
  CHECK(subset_to_path(0b11010, 6) == MonotonePath{0, 2, 5});
  CHECK(subset_to_path(0b01100, 6) == MonotonePath{0, 1, 4, 5});
}

TEST_CASE("subset model matches the flip graph for n = 4..9") {
  for (int n = 4; n <= 9; ++n) {
    const auto model = xn_subset_model(n);
    CHECK(BigInt(model.nodes.size()) == tribonacci(n - 1));
    const auto o = canonical_orientation({Family::stacked_x, n});
    const auto g = build_flip_graph(o, 10000);
    CHECK(model.edges.size() == g.edges.size());
    CHECK(xn_model_matches_flip_graph(model, g));
  }
  CHECK_THROWS_AS(xn_subset_model(3), BadParams);
}
