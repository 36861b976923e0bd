#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monopath/rational.hpp"

namespace monopath {

/// Combinatorial polytope data: the graph (vertices and edges) plus the
/// 2-dimensional faces as cyclic vertex sequences. Vertices are dense ids
/// 0..n-1. Coordinates are optional; all shipped algorithms are purely
/// combinatorial once an orientation exists.
///
/// Each entry of faces2 stores one fixed cyclic orientation of the face
/// boundary. Nothing downstream depends on which of the two senses was
/// stored. For dim == 3 the faces2 list is the facet list.
struct Polytope {
  int dim = 0;
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < w, sorted lexicographically
  std::vector<std::vector<int>> faces2;
  std::optional<std::vector<std::vector<Rational>>> coords;  // n rows, dim cols
  std::optional<std::string> name;
};

/// Checks the structural invariants and throws InvalidPolytope on the first
/// violation: ids in range, edges normalized/sorted/unique, connected graph,
/// face cycles of length >= 3 with distinct vertices walking along edges,
/// dim-3 Euler relation n - |E| + |faces2| = 2 with every edge on exactly
/// two facets, coordinate rows matching (n, dim), and no edge whose two
/// endpoints carry identical coordinates.
void validate_polytope(const Polytope& p);

/// Adjacency lists (sorted neighbor ids) for a validated polytope.
std::vector<std::vector<int>> adjacency(const Polytope& p);

/// Vertex degrees.
std::vector<int> degrees(const Polytope& p);

using PolytopePtr = std::shared_ptr<const Polytope>;

/// Validates and freezes a polytope for shared use by many orientations.
PolytopePtr make_polytope(Polytope p);

}  // namespace monopath
