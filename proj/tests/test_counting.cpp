#include <vector>

#include "doctest.h"
#include "monopath/counting.hpp"
#include "monopath/errors.hpp"
#include "monopath/families.hpp"
#include "monopath/flips.hpp"
#include "monopath/functional.hpp"
#include "monopath/orientation.hpp"
#include "monopath/sampling.hpp"

using namespace monopath;

TEST_CASE("3-simplex path counts: 4 paths, partial counts (1,1,2,4)") {
  const auto o = canonical_orientation({Family::simplex, 3});
  CHECK(count_paths_dp(o) == 4);
  CHECK(count_paths_partial(o) == std::vector<BigInt>{1, 1, 2, 4});
  CHECK(count_paths_lemma(o) == 4);
  CHECK(count_arborescences(o) == 6);
  CHECK(count_arborescences_oracle(o, 1000) == 6);
  const auto paths = enumerate_paths(o, 100);
  const std::vector<MonotonePath> want = {
      {0, 1, 2, 3}, {0, 1, 3}, {0, 2, 3}, {0, 3}};
  CHECK(paths == want);
}

TEST_CASE("cube: six monotone coordinate orders, 24 arborescences") {
  const auto o = canonical_orientation({Family::hypercube, 3});
  CHECK(count_paths_dp(o) == 6);
  CHECK(count_paths_lemma(o) == 6);
  CHECK(count_arborescences(o) == 24);
  CHECK(count_arborescences_oracle(o, 100000) == 24);
}

TEST_CASE("X(10): 149 paths, 4374 arborescences") {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  CHECK(count_paths_dp(o) == 149);
  CHECK(count_paths_lemma(o) == 149);
  CHECK(count_arborescences(o) == 4374);
  const auto partial = count_paths_partial(o);
  CHECK(partial.front() == 1);
  CHECK(partial.back() == 149);
  CHECK(partial[8] == 81);  // tribonacci prefix 1,1,2,4,7,13,24,44,81
}

TEST_CASE("lemma equals dp on every family and on random admissible orders") {
  for (const FamilySpec spec :
       {FamilySpec{Family::simplex, 5}, FamilySpec{Family::stacked_x, 12},
        FamilySpec{Family::prism, 7}, FamilySpec{Family::wedge_vertex, 6},
        FamilySpec{Family::wedge_edge, 7}, FamilySpec{Family::pyramid, 9},
        FamilySpec{Family::multi_pyramid, 4, 6},
        FamilySpec{Family::hypercube, 5}, FamilySpec{Family::complete_dag, 9}}) {
    const auto o = canonical_orientation(spec);
    CHECK(count_paths_lemma(o) == count_paths_dp(o));
  }
  std::mt19937_64 rng(3);
  const auto p = make({Family::prism, 5}).polytope;
  for (int trial = 0; trial < 20; ++trial) {
    const auto o = orient(p, random_lp_admissible_order(p, rng));
    CHECK(count_paths_lemma(o) == count_paths_dp(o));
  }
}

TEST_CASE("arborescence product equals the enumeration oracle") {
  for (const FamilySpec spec :
       {FamilySpec{Family::stacked_x, 7}, FamilySpec{Family::prism, 4},
        FamilySpec{Family::pyramid, 6}, FamilySpec{Family::wedge_vertex, 4},
        FamilySpec{Family::hypercube, 3}, FamilySpec{Family::complete_dag, 6}}) {
    const auto o = canonical_orientation(spec);
    CHECK(count_arborescences_oracle(o, 100000) == count_arborescences(o));
  }
}

TEST_CASE("the oracle refuses oversized products") {
  const auto o = canonical_orientation({Family::hypercube, 5});
  CHECK_THROWS_AS(count_arborescences_oracle(o, 100000), CapExceeded);
}

TEST_CASE("counting rejects orientations without unique source or sink") {
  // Square with ranks alternating low-high: two sources, two sinks.
  Polytope sq;
  sq.dim = 2;
  sq.n = 4;
  sq.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  sq.faces2 = {{0, 1, 2, 3}};
  const auto p = make_polytope(sq);
  const auto o = orient(p, Functional::from_order({0, 2, 1, 3}));
  CHECK_THROWS_AS(count_paths_dp(o), NotSingleSourceSink);
  CHECK_THROWS_AS(count_arborescences(o), ZeroOutdegreeNonSink);
}

TEST_CASE("tribonacci and fibonacci reference values") {
  const std::vector<long long> trib = {1, 1, 2, 4, 7, 13, 24, 44, 81, 149,
                                       274, 504, 927, 1705};
  for (std::size_t i = 0; i < trib.size(); ++i) {
    CHECK(tribonacci(static_cast<int>(i)) == trib[i]);
  }
  const std::vector<long long> fib = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (std::size_t i = 0; i < fib.size(); ++i) {
    CHECK(fibonacci(static_cast<int>(i)) == fib[i]);
  }
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(52, 26) == parse_bigint("495918532948104"));
}

TEST_CASE("named bounds evaluate to their closed forms") {
  CHECK(bound(BoundName::path_max_3d, {10}) == 149);
  CHECK(bound(BoundName::path_max_3d, {14}) == 1705);
  CHECK(bound(BoundName::path_min_3d, {10}) == 7);   // ceil(11/2) + 2
  CHECK(bound(BoundName::path_min_3d, {9}) == 7);
  CHECK(bound(BoundName::path_min_general, {4, 10}) == 12);  // ceil(40/2) - 10 + 2
  CHECK(bound(BoundName::path_max_general, {6}) == 16);      // 2^(6-2)
  CHECK(bound(BoundName::arb_max_3d, {10}) == 4374);         // 2 * 3^7
  CHECK(bound(BoundName::arb_max_general, {5}) == 24);       // (5-1)!
  CHECK(bound(BoundName::arb_min_3d, {5}) == 8);             // 2(n-1)
  CHECK(bound(BoundName::arb_simple_3d, {7}) == 48);         // 3 * 2^4
  CHECK(bound(BoundName::arb_simple_min, {4, 6}) == 144);    // 4 * 6^2
  CHECK(bound(BoundName::arb_simple_max, {4, 6}) == 288);
  CHECK(bound(BoundName::arb_multipyramid, {4, 6}) == 40);   // 2 * 5 * 4
  CHECK(bound(BoundName::diam_lower_3d, {10}) == 16);
  CHECK(bound(BoundName::diam_upper_3d, {10}) == 32);        // 8 * 4
  CHECK(bound(BoundName::diam_min_conj, {10}) == 3);         // floor(15/4)
  CHECK(bound(BoundName::path_max_simple_proved, {9}) == 68);  // 2 F_9
  CHECK(bound(BoundName::path_max_simple_conj, {4}) == 9);     // F_6 + 1
}

TEST_CASE("bound name round trip and conjecture flags") {
  for (const char* name :
       {"path_max_3d", "path_min_3d", "path_min_general", "path_max_general",
        "path_max_simple_proved", "path_max_simple_conj", "arb_max_3d",
        "arb_max_general", "arb_min_3d", "arb_simple_3d", "arb_simple_min",
        "arb_simple_max", "arb_multipyramid", "diam_lower_3d", "diam_upper_3d",
        "diam_min_conj"}) {
    CHECK(bound_to_string(bound_from_string(name)) == name);
  }
  CHECK(bound_is_conjecture(BoundName::path_max_simple_conj));
  CHECK(bound_is_conjecture(BoundName::diam_min_conj));
  CHECK_FALSE(bound_is_conjecture(BoundName::path_max_3d));
  CHECK_FALSE(bound_is_conjecture(BoundName::arb_simple_max));
  CHECK_THROWS_AS(bound_from_string("no_such_bound"), UnknownBound);
  CHECK_THROWS_AS(bound(BoundName::path_max_3d, {}), BadParams);
  CHECK_THROWS_AS(bound(BoundName::path_max_3d, {1, 2}), BadParams);
  CHECK_THROWS_AS(bound(BoundName::path_max_3d, {2}), BadParams);
}

TEST_CASE("neighborly h-vector and the two product forms") {
  // d = 4, m = 6: h = (1, 2, 3, 2, 1).
  CHECK(neighborly_h_vector(4, 6) ==
        std::vector<BigInt>{1, 2, 3, 2, 1});
  CHECK(arb_simple_max_corollary_form(4, 6) == 288);  // 2^3 * 3^2 * 4
  CHECK(arb_simple_max_theorem_form(4, 6) == 2304);   // middle term squared
  // Odd d: both forms agree, and in dim 3 everything collapses to 3*2^(m-3).
  for (int m = 4; m <= 9; ++m) {
    CHECK(arb_simple_max_corollary_form(3, m) == arb_simple_max_theorem_form(3, m));
    CHECK(arb_simple_max_corollary_form(3, m) == bound(BoundName::arb_simple_3d, {m}));
    CHECK(bound(BoundName::arb_simple_min, {3, m}) == bound(BoundName::arb_simple_3d, {m}));
  }
  for (int m = 6; m <= 9; ++m) {
    CHECK(arb_simple_max_corollary_form(5, m) == arb_simple_max_theorem_form(5, m));
  }
  // The corollary's two half-products tile 1..d exactly, so they reproduce
  // the h-vector product in every dimension.
  for (int d = 3; d <= 6; ++d) {
    for (int m = d + 1; m <= d + 5; ++m) {
      CHECK(arb_simple_max_corollary_form(d, m) ==
            bound(BoundName::arb_simple_max, {d, m}));
    }
  }
}

TEST_CASE("check_bounds composes the report") {
  const auto o = canonical_orientation({Family::stacked_x, 10});
  const auto r = check_bounds(o);
  CHECK(r.mu == 149);
  CHECK(r.tau == 4374);
  CHECK(r.proved_ok);
  CHECK(r.outdegrees == std::vector<int>{0, 1, 2, 3, 3, 3, 3, 3, 3, 3});
  bool saw_max = false;
  for (const auto& b : r.bounds_checked) {
    CHECK(b.satisfied);
    if (b.name == "path_max_3d") {
      saw_max = true;
      CHECK(b.value == 149);
      CHECK_FALSE(b.conjecture);
      CHECK(b.relation == "mu <= 149");
    }
  }
  CHECK(saw_max);
}

TEST_CASE("check_bounds adds simple-only rows for simple instances") {
  const auto simple = check_bounds(canonical_orientation({Family::prism, 6}));
  bool saw_simple_row = false, saw_conjecture = false;
  for (const auto& b : simple.bounds_checked) {
    if (b.name == "arb_simple_3d") saw_simple_row = true;
    if (b.conjecture) saw_conjecture = true;
  }
  CHECK(saw_simple_row);
  CHECK(saw_conjecture);
  CHECK(simple.proved_ok);

  const auto nonsimple = check_bounds(canonical_orientation({Family::pyramid, 6}));
  for (const auto& b : nonsimple.bounds_checked) {
    CHECK(b.name != "arb_simple_3d");
    CHECK(b.name != "path_max_simple_proved");
  }
  CHECK(nonsimple.proved_ok);
}

TEST_CASE("check_bounds skips bounds whose domain excludes the instance") {
  // complete_dag(4) is 4-dimensional on 4 vertices; path_min_general needs
  // n >= d+1, so its row is omitted instead of failing the report.
  const auto edge = check_bounds(canonical_orientation({Family::complete_dag, 4}));
  CHECK(edge.proved_ok);
  CHECK(edge.bounds_checked.size() == 2);
  for (const auto& b : edge.bounds_checked) CHECK(b.name != "path_min_general");

  const auto full = check_bounds(canonical_orientation({Family::complete_dag, 5}));
  CHECK(full.bounds_checked.size() == 3);
  bool saw_min = false;
  for (const auto& b : full.bounds_checked)
    if (b.name == "path_min_general") saw_min = true;
  CHECK(saw_min);
}
