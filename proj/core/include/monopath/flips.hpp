#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monopath/orientation.hpp"
#include "monopath/rational.hpp"

namespace monopath {

/// A monotone path, as the sequence of vertex ids from source to sink.
using MonotonePath = std::vector<int>;

struct FlipEdge {
  int a = 0, b = 0;  // path indices, a < b
  int face = 0;      // the 2-face the flip crosses
};

struct FlipGraph {
  std::vector<MonotonePath> paths;  // lexicographic order
  std::vector<FlipEdge> edges;      // sorted by (a, b)
  // adj[i] lists (neighbour path index, face id), sorted.
  std::vector<std::vector<std::pair<int, int>>> adj;
  bool connected = false;
};

/// All monotone source-to-sink paths in lexicographic order. Throws
/// CapExceeded when the path count is above cap.
std::vector<MonotonePath> enumerate_paths(const Orientation& o,
                                          std::uint64_t cap);

/// Splits the boundary cycle of a 2-face into its two rank-increasing
/// chains from the face's source to its sink. Throws NotLpAdmissibleFace
/// if the face does not have a unique local source and sink.
std::pair<std::vector<int>, std::vector<int>> face_chains(const Orientation& o,
                                                          int face);

/// Two paths are adjacent when they differ exactly by the two chains of one
/// 2-face. Throws NoFaces when the instance carries no 2-face list.
FlipGraph build_flip_graph(const Orientation& o, std::uint64_t cap);

/// Replaces one chain of the face by the other inside the path. Throws
/// IllegalFlip(-1) if neither chain sits contiguously in the path.
MonotonePath apply_flip(const Orientation& o, const MonotonePath& path,
                        int face);

/// Applies the face sequence step by step; IllegalFlip carries the index of
/// the first step that does not apply. Returns the final path.
MonotonePath verify_flip_walk(const Orientation& o, const MonotonePath& start,
                              const std::vector<int>& faces);

int path_index(const FlipGraph& g, const MonotonePath& p);
int distance(const FlipGraph& g, const MonotonePath& from,
             const MonotonePath& to);
std::vector<int> eccentricities(const FlipGraph& g);
int diameter(const FlipGraph& g);

/// Number of levels (vertex heights and the open slabs between them,
/// 2n-1 in all) on which the two paths disagree, counted as maximal runs
/// of consecutive disagreeing levels.
int nu(const Orientation& o, const MonotonePath& a, const MonotonePath& b);

struct DistanceBoundReport {
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t seed = 0;
  int worst_distance = 0;  // distance at the pair maximising 2d/(nu*f2)
  int worst_nu = 0;
  Rational worst_ratio;  // max over pairs of 2d/(nu*f2); bound holds iff <= 1
  bool ok = false;
};

/// Checks d(a,b) <= nu(a,b)/2 * f2 over path pairs: exhaustively when the
/// flip graph has at most exhaustive_threshold nodes, otherwise over
/// sample_pairs seeded random pairs. Dimension-3 instances only.
DistanceBoundReport check_distance_bound(const Orientation& o,
                                         const FlipGraph& g,
                                         std::uint64_t seed,
                                         std::uint64_t sample_pairs = 100000,
                                         int exhaustive_threshold = 2000);

/// Combinatorial model of the flip graph of X(n): nodes are subsets of
/// {1..n-2} with no three consecutive elements (stored as bitmasks, the
/// complements of path vertex sets), edges given by four closed-form rules.
struct XnSubsetModel {
  int n = 0;
  std::vector<std::uint64_t> nodes;            // sorted bitmasks
  std::vector<std::pair<int, int>> edges;      // node-index pairs, a < b
};

XnSubsetModel xn_subset_model(int n);

/// The path whose interior vertices are the complement of the subset.
MonotonePath subset_to_path(std::uint64_t mask, int n);

/// True when the model is isomorphic to the flip graph under the
/// subset -> path correspondence (same node set, same edge set).
bool xn_model_matches_flip_graph(const XnSubsetModel& model,
                                 const FlipGraph& g);

}  // namespace monopath
