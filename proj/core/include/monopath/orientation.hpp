#pragma once

#include <string>
#include <vector>

#include "monopath/functional.hpp"
#include "monopath/polytope.hpp"

namespace monopath {

/// The acyclic digraph obtained by directing every edge of the polytope
/// graph towards the larger functional value. rank is the position of each
/// vertex in increasing f-order (a permutation of 0..n-1), by_rank its
/// inverse, and every arc strictly increases rank, so by_rank is a
/// topological order. The polytope is shared so the same combinatorial data
/// can be re-oriented by many functionals cheaply.
struct Orientation {
  PolytopePtr polytope;
  std::vector<int> rank;                // vertex id -> rank
  std::vector<int> by_rank;             // rank -> vertex id
  std::vector<std::vector<int>> arcs;   // out-neighbors, ascending vertex id

  int n() const { return polytope->n; }
  int dim() const { return polytope->dim; }
  bool has_arc(int u, int w) const;     // true iff {u,w} is an edge and u below w

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
  int source() const { return by_rank.front(); }
  int sink() const { return by_rank.back(); }
};

/// Builds the orientation induced by f. Vector form evaluates exact dot
/// products against coords and throws NonGenericFunctional on any tie or if
/// coords are absent; order form throws OrderArityMismatch unless it is a
/// permutation of 0..n-1. Postcondition: sum of outdegrees = |edges|.
Orientation orient(PolytopePtr p, const Functional& f);

/// Per-face verdicts of the LP-admissibility check. A face fails when its
/// boundary cycle has more than one local source or sink; the whole report
/// fails when any face does or when the global source/sink is not unique.
struct FaceCheck {
  int face = 0;
  std::vector<int> sources;  // vertices that are local minima on the cycle
  std::vector<int> sinks;
  bool ok = false;
};

struct ValidationReport {
  std::vector<FaceCheck> faces;
  std::vector<int> global_sources;
  std::vector<int> global_sinks;
  bool global_ok = false;
  bool pass = false;
};

/// Necessary conditions for "some generic linear functional induces this
/// orientation": unique source and sink globally and on every 2-face.
/// orient() accepts any order; consumers that need admissibility (flip
/// graphs, fibers) check the parts they rely on. Passing here is not
/// sufficient for geometric realizability and does not try to be.
ValidationReport validate_lp_admissible(const Orientation& o);

/// Multiset of outdegrees, ascending.
std::vector<int> outdegree_sequence(const Orientation& o);

/// True iff every vertex has degree dim.
bool is_simple(const Polytope& p);

/// h-vector of a simple polytope read off the orientation: h[k] = number of
/// vertices of outdegree k, k = 0..dim. Throws NotSimple otherwise. For
/// genuine LP orientations of simple polytopes this is functional-free.
std::vector<long long> h_vector(const Orientation& o);

}  // namespace monopath
