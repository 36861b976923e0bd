#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "monopath/flips.hpp"
#include "monopath/orientation.hpp"

namespace monopath {

/// A point class of a slab or level fiber: an edge of the polytope crossing
/// the height range (u = lower-rank endpoint, w = higher), or, at a vertex
/// height, the vertex itself (u == w == v).
struct FiberNode {
  int u = -1;
  int w = -1;
  bool is_vertex() const { return u == w; }
  auto operator<=>(const FiberNode&) const = default;
};

/// Fiber of one height range: a graph whose edges come one from each 2-face
/// whose interior the height range meets, labelled by that face. Parallel
/// edges between a node pair are kept (each face contributes its own).
struct FiberGraph {
  std::vector<FiberNode> nodes;  // sorted
  std::vector<std::pair<int, int>> edges;  // node-index pairs, a <= b order
  std::vector<int> edge_face;              // parallel to edges
  std::vector<std::vector<std::pair<int, int>>> adj;  // (nbr, face)
};

/// Index of a node, or -1 when absent.
int fiber_node_index(const FiberGraph& g, const FiberNode& node);

/// Connected, every node of degree two, as many edges as nodes: the graph
/// is a single combinatorial circle.
bool is_single_cycle(const FiberGraph& g);

/// A map between fibers sending nodes to nodes so that every edge is sent
/// to an edge with the same face label or collapsed to a single node.
struct SimplicialMap {
  std::vector<int> node_image;  // per source node
  std::vector<int> edge_image;  // per source edge; -1 when collapsed
};

/// All fibers of a dimension-3 orientation, with the maps tying them
/// together: slab i sits between ranks i and i+1 (0 <= i <= n-2); level r
/// is the height of the rank-r vertex (1 <= r <= n-2, stored at r-1).
/// alpha[r-1] maps slab r-1 into level r from below; beta[r-1] maps slab r
/// into level r from above.
struct FiberDiagram {
  Orientation orientation;
  std::vector<FiberGraph> slabs;
  std::vector<FiberGraph> levels;
  std::vector<SimplicialMap> alpha;
  std::vector<SimplicialMap> beta;
};

/// Builds every slab and level fiber plus the connecting maps, validating
/// that each map is simplicial. Throws NotDim3 / NotLpAdmissible.
FiberDiagram fiber_diagram(const Orientation& o);

/// Sections of the diagram: one node per slab, agreeing under alpha/beta at
/// every level. Adjacency: two sections are adjacent when they differ on a
/// contiguous nonempty slab interval and, on each slab of it, the differing
/// node pair is a fiber edge of one common face; consecutive differing
/// slabs must map to the same uncollapsed level edge.
struct LimitGraph {
  std::vector<std::vector<int>> nodes;  // per section: slab-node index per slab
  std::vector<FlipEdge> edges;          // (a, b, face), sorted
  std::vector<std::vector<std::pair<int, int>>> adj;
  bool connected = false;
};

/// Computes the sections by forward propagation and their adjacency.
/// Throws CapExceeded when the section count would exceed cap.
LimitGraph inverse_limit(const FiberDiagram& d, std::uint64_t cap);

/// The monotone path crossing exactly the chosen slab nodes.
MonotonePath path_of_limit_node(const FiberDiagram& d,
                                const std::vector<int>& node);

/// The section corresponding to a monotone path.
std::vector<int> limit_node_of_path(const FiberDiagram& d,
                                    const MonotonePath& path);

/// True when path_of_limit_node is a bijection from sections onto the flip
/// graph's paths carrying edges to edges with equal face labels.
bool check_isomorphism(const FiberDiagram& d, const LimitGraph& limit,
                       const FlipGraph& g);

/// Runs both constructions and compares them. Throws CapExceeded when the
/// path count exceeds cap.
bool check_isomorphism(const Orientation& o, std::uint64_t cap);

}  // namespace monopath
