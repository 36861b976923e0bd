#pragma once

#include <string>

#include "monopath/functional.hpp"
#include "monopath/orientation.hpp"
#include "monopath/polytope.hpp"

namespace monopath {

/// The built-in instance generators. Every family ships a canonical
/// functional together with the combinatorial data, so each instance has a
/// reproducible orientation with known counting behavior.
///
///   simplex d        complete graph on d+1 vertices, every triple a 2-face
///   stacked-x n      the stacked 3-polytope whose graph joins i,j whenever
///                    |i-j| <= 3; identity order maximizes monotone paths
///   prism k          k-gonal prism, bottom/top interleaved along a sweep
///   wedge-vertex k   wedge of a k-gon over a vertex (2k-1 vertices)
///   wedge-edge k     wedge of a k-gon over an edge (2k-2 vertices); the
///                    canonical order runs one monotone Hamiltonian path
///                    from one wedge-edge endpoint to the other
///   pyramid k        pyramid over a k-gon, apex ranked first
///   multi-pyramid d k  (d-2)-fold pyramid over a k-gon, cone vertices
///                    ranked below the polygon
///   hypercube d      0/1 cube with functional (1, 1/2, ..., 2^(1-d))
///   complete-dag n   graph-only stand-in for a 2-neighborly polytope:
///                    complete graph, no 2-faces, identity order
enum class Family {
  simplex,
  stacked_x,
  prism,
  wedge_vertex,
  wedge_edge,
  pyramid,
  multi_pyramid,
  hypercube,
  complete_dag,
};

struct FamilySpec {
  Family family;
  int a = 0;  // d for simplex/hypercube/multi-pyramid, n or k otherwise
  int b = 0;  // k for multi-pyramid, unused elsewhere
};

struct FamilyInstance {
  PolytopePtr polytope;
  Functional functional;
};

/// Builds the polytope and its canonical functional. Throws InvalidSpec for
/// out-of-range parameters. The polytope is fully validated.
FamilyInstance make(const FamilySpec& spec);

/// orient() applied to make(); the result passes validate_lp_admissible for
/// every legal parameter choice.
Orientation canonical_orientation(const FamilySpec& spec);

/// CLI-facing names: "stacked-x", "multi-pyramid", ... Throws ParseError
/// for unknown names.
Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

/// True for the families whose generator takes two parameters.
inline bool family_has_two_params(Family f) { return f == Family::multi_pyramid; }

}  // namespace monopath
