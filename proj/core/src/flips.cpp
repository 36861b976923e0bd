#include "monopath/flips.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "monopath/counting.hpp"
#include "monopath/errors.hpp"

namespace monopath {
namespace {

void validate_path(const Orientation& o, const MonotonePath& p) {
  if (p.empty()) throw NotAPath("path is empty");
  if (p.front() != o.source()) {
    std::ostringstream msg;
    msg << "path starts at " << p.front() << ", not at the source "
        << o.source();
    throw NotAPath(msg.str());
  }
  if (p.back() != o.sink()) {
    std::ostringstream msg;
    msg << "path ends at " << p.back() << ", not at the sink " << o.sink();
    throw NotAPath(msg.str());
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= o.n() || p[i + 1] < 0 || p[i + 1] >= o.n() ||
        !o.has_arc(p[i], p[i + 1])) {
      std::ostringstream msg;
      msg << "consecutive pair (" << p[i] << ", " << p[i + 1]
          << ") is not an arc";
      throw NotAPath(msg.str());
    }
  }
}

// Positions of the path's vertices, -1 elsewhere.
std::vector<int> position_map(const Orientation& o, const MonotonePath& p) {
  std::vector<int> pos(o.n(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<int>(i);
  return pos;
}

// If `chain` sits contiguously inside `p`, returns p with the chain's
// interior replaced by `other`'s interior.
std::optional<MonotonePath> try_splice(const MonotonePath& p,
                                       const std::vector<int>& pos,
                                       const std::vector<int>& chain,
                                       const std::vector<int>& other) {
  const int start = pos[chain.front()];
  if (start < 0) return std::nullopt;
  for (std::size_t j = 1; j < chain.size(); ++j) {
    const int q = pos[chain[j]];
    if (q != start + static_cast<int>(j)) return std::nullopt;
  }
  MonotonePath out;
  out.reserve(p.size() - chain.size() + other.size());
  out.insert(out.end(), p.begin(), p.begin() + start);
  out.insert(out.end(), other.begin(), other.end());
  out.insert(out.end(), p.begin() + start + chain.size(), p.end());
  return out;
}

std::optional<MonotonePath> try_flip(const Orientation& o,
                                     const MonotonePath& p,
                                     const std::vector<int>& pos,
                                     const std::pair<std::vector<int>,
                                                     std::vector<int>>& ch) {
  if (auto spliced = try_splice(p, pos, ch.first, ch.second)) return spliced;
  return try_splice(p, pos, ch.second, ch.first);
}

}  // namespace

std::vector<MonotonePath> enumerate_paths(const Orientation& o,
                                          std::uint64_t cap) {
  const BigInt total = count_paths_dp(o);
  if (total > cap) {
    std::ostringstream msg;
    msg << "path count " << total << " exceeds cap " << cap;
    throw CapExceeded(msg.str());
  }
  std::vector<MonotonePath> out;
  out.reserve(static_cast<std::size_t>(total));
  const int sink = o.sink();
  MonotonePath cur = {o.source()};
  // (vertex, index of the next outgoing arc to try)
  std::vector<std::pair<int, std::size_t>> stack = {{o.source(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (v == sink) {
      out.push_back(cur);
      stack.pop_back();
      cur.pop_back();
      continue;
    }
    if (next < o.arcs[v].size()) {
      const int w = o.arcs[v][next++];
      stack.emplace_back(w, 0);
      cur.push_back(w);
    } else {
      stack.pop_back();
      cur.pop_back();
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> face_chains(const Orientation& o,
                                                          int face) {
  const auto& faces = o.polytope->faces2;
  if (face < 0 || face >= static_cast<int>(faces.size())) {
    std::ostringstream msg;
    msg << "face index " << face << " out of range (have " << faces.size()
        << " faces)";
    throw BadParams(msg.str());
  }
  const auto& cyc = faces[face];
  const int k = static_cast<int>(cyc.size());
  int src = -1, snk = -1;
  int n_src = 0, n_snk = 0;
  for (int i = 0; i < k; ++i) {
    const int r = o.rank[cyc[i]];
    const int rp = o.rank[cyc[(i + k - 1) % k]];
    const int rn = o.rank[cyc[(i + 1) % k]];
    if (r < rp && r < rn) {
      src = i;
      ++n_src;
    }
    if (r > rp && r > rn) {
      snk = i;
      ++n_snk;
    }
  }
  if (n_src != 1 || n_snk != 1) {
    std::ostringstream msg;
    msg << "face " << face << " has " << n_src << " local source(s) and "
        << n_snk << " local sink(s)";
    throw NotLpAdmissibleFace(msg.str());
  }
  std::vector<int> fwd, bwd;
  for (int i = src;; i = (i + 1) % k) {
    fwd.push_back(cyc[i]);
    if (i == snk) break;
  }
  for (int i = src;; i = (i + k - 1) % k) {
    bwd.push_back(cyc[i]);
    if (i == snk) break;
  }
  return {fwd, bwd};
}

FlipGraph build_flip_graph(const Orientation& o, std::uint64_t cap) {
  const Polytope& p = *o.polytope;
  if (p.faces2.empty())
    throw NoFaces("instance carries no 2-face list; flips are undefined");

  FlipGraph g;
  g.paths = enumerate_paths(o, cap);
  std::map<MonotonePath, int> index;
  for (int i = 0; i < static_cast<int>(g.paths.size()); ++i)
    index.emplace(g.paths[i], i);

  std::vector<std::pair<std::vector<int>, std::vector<int>>> chains;
  chains.reserve(p.faces2.size());
  for (int f = 0; f < static_cast<int>(p.faces2.size()); ++f)
    chains.push_back(face_chains(o, f));

  std::map<std::pair<int, int>, int> edge_face;
  for (int i = 0; i < static_cast<int>(g.paths.size()); ++i) {
    const auto pos = position_map(o, g.paths[i]);
    for (int f = 0; f < static_cast<int>(p.faces2.size()); ++f) {
      const auto flipped = try_flip(o, g.paths[i], pos, chains[f]);
      if (!flipped) continue;
      const auto it = index.find(*flipped);
      if (it == index.end())
        throw Error("flip produced a sequence that is not a monotone path");
      const int j = it->second;
      if (j == i) throw Error("flip produced the same path");
      const auto key = std::minmax(i, j);
      const auto [ins, fresh] =
          edge_face.emplace(std::make_pair(key.first, key.second), f);
      if (!fresh && ins->second != f) {
        std::ostringstream msg;
        msg << "paths " << key.first << " and " << key.second
            << " are joined by flips across two distinct faces " << ins->second
            << " and " << f;
        throw Error(msg.str());
      }
    }
  }

  g.adj.assign(g.paths.size(), {});
  for (const auto& [key, f] : edge_face) {
    g.edges.push_back({key.first, key.second, f});
    g.adj[key.first].emplace_back(key.second, f);
    g.adj[key.second].emplace_back(key.first, f);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());

  // Connectivity over flip moves.
  if (!g.paths.empty()) {
    std::vector<char> seen(g.paths.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const auto& [w, f] : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    g.connected = reached == g.paths.size();
  }
  return g;
}

MonotonePath apply_flip(const Orientation& o, const MonotonePath& path,
                        int face) {
  validate_path(o, path);
  const auto chains = face_chains(o, face);
  const auto pos = position_map(o, path);
  if (auto flipped = try_flip(o, path, pos, chains)) return *flipped;
  std::ostringstream msg;
  msg << "face " << face << " does not flip the given path";
  throw IllegalFlip(-1, msg.str());
}

MonotonePath verify_flip_walk(const Orientation& o, const MonotonePath& start,
                              const std::vector<int>& faces) {
  validate_path(o, start);
  MonotonePath cur = start;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto chains = face_chains(o, faces[i]);
    const auto pos = position_map(o, cur);
    const auto flipped = try_flip(o, cur, pos, chains);
    if (!flipped) {
      std::ostringstream msg;
      msg << "step " << i << ": face " << faces[i]
          << " does not flip the current path";
      throw IllegalFlip(static_cast<int>(i), msg.str());
    }
    cur = *flipped;
  }
  return cur;
}

int path_index(const FlipGraph& g, const MonotonePath& p) {
  const auto it = std::lower_bound(g.paths.begin(), g.paths.end(), p);
  if (it == g.paths.end() || *it != p) {
    throw NotAPath("path is not a node of the flip graph");
  }
  return static_cast<int>(it - g.paths.begin());
}

namespace {

std::vector<int> bfs_distances(const FlipGraph& g, int from) {
  std::vector<int> dist(g.paths.size(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& [w, f] : g.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

int distance(const FlipGraph& g, const MonotonePath& from,
             const MonotonePath& to) {
  const int a = path_index(g, from);
  const int b = path_index(g, to);
  const auto dist = bfs_distances(g, a);
  if (dist[b] < 0)
    throw Disconnected("the two paths lie in different flip components");
  return dist[b];
}

std::vector<int> eccentricities(const FlipGraph& g) {
  std::vector<int> ecc(g.paths.size(), 0);
  for (int v = 0; v < static_cast<int>(g.paths.size()); ++v) {
    const auto dist = bfs_distances(g, v);
    int worst = 0;
    for (const int d : dist) {
      if (d < 0) throw Disconnected("flip graph is not connected");
      worst = std::max(worst, d);
    }
    ecc[v] = worst;
  }
  return ecc;
}

int diameter(const FlipGraph& g) {
  const auto ecc = eccentricities(g);
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

namespace {

// Position of the path at each of the 2n-1 heights: even index 2k is the
// vertex height of rank k, odd index 2k+1 the open slab above it. A
// position is a visited vertex (v, -1) or a crossing edge (u, w).
std::vector<std::pair<int, int>> level_positions(const Orientation& o,
                                                 const MonotonePath& p) {
  const int n = o.n();
  std::vector<std::pair<int, int>> pos(2 * n - 1, {-1, -1});
  for (const int v : p) pos[2 * o.rank[v]] = {v, -1};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const int u = p[i], w = p[i + 1];
    for (int k = o.rank[u]; k < o.rank[w]; ++k) pos[2 * k + 1] = {u, w};
    for (int k = o.rank[u] + 1; k < o.rank[w]; ++k) pos[2 * k] = {u, w};
  }
  return pos;
}

int count_disagreement_runs(const std::vector<std::pair<int, int>>& a,
                            const std::vector<std::pair<int, int>>& b) {
  int runs = 0;
  bool in_run = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool differ = a[i] != b[i];
    if (differ && !in_run) ++runs;
    in_run = differ;
  }
  return runs;
}

}  // namespace

int nu(const Orientation& o, const MonotonePath& a, const MonotonePath& b) {
  validate_path(o, a);
  validate_path(o, b);
  return count_disagreement_runs(level_positions(o, a), level_positions(o, b));
}

DistanceBoundReport check_distance_bound(const Orientation& o,
                                         const FlipGraph& g,
                                         std::uint64_t seed,
                                         std::uint64_t sample_pairs,
                                         int exhaustive_threshold) {
  if (o.dim() != 3)
    throw NotDim3("the flip-distance bound applies to 3-dimensional inputs");
  const int f2 = static_cast<int>(o.polytope->faces2.size());
  const int n_paths = static_cast<int>(g.paths.size());

  DistanceBoundReport report;
  report.seed = seed;
  report.exhaustive = n_paths <= exhaustive_threshold;
  report.worst_ratio = Rational(0);

  std::vector<std::vector<std::pair<int, int>>> levels(n_paths);
  for (int i = 0; i < n_paths; ++i)
    levels[i] = level_positions(o, g.paths[i]);

  const auto consider = [&](int a, int b, int d) {
    const int v = count_disagreement_runs(levels[a], levels[b]);
    ++report.pairs_checked;
    // d <= (v/2) * f2, exactly.
    const Rational ratio(BigInt(2 * d), BigInt(v) * f2);
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_distance = d;
      report.worst_nu = v;
    }
    if (2 * d > v * f2) ++report.violations;
  };

  if (report.exhaustive) {
    for (int a = 0; a < n_paths; ++a) {
      const auto dist = bfs_distances(g, a);
      for (int b = a + 1; b < n_paths; ++b) {
        if (dist[b] < 0) throw Disconnected("flip graph is not connected");
        consider(a, b, dist[b]);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n_paths - 1);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(sample_pairs);
    for (std::uint64_t t = 0; t < sample_pairs; ++t) {
      int a = pick(rng), b = pick(rng);
      while (a == b) b = pick(rng);
      pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> dist;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i == 0 || pairs[i].first != pairs[i - 1].first)
        dist = bfs_distances(g, pairs[i].first);
      if (dist[pairs[i].second] < 0)
        throw Disconnected("flip graph is not connected");
      consider(pairs[i].first, pairs[i].second, dist[pairs[i].second]);
    }
  }
  report.ok = report.violations == 0;
  return report;
}

namespace {

bool mask_has(std::uint64_t mask, int x, int n) {
  return x >= 1 && x <= n - 2 && ((mask >> x) & 1);
}

}  // namespace

XnSubsetModel xn_subset_model(int n) {
  if (n < 4 || n > 64)
    throw BadParams("subset model supports 4 <= n <= 64");
  XnSubsetModel model;
  model.n = n;

  // Subsets of {1..n-2} with no three consecutive elements, as bitmasks.
  std::vector<std::uint64_t> nodes;
  struct Frame {
    int i;
    int run;
    std::uint64_t mask;
  };
  std::vector<Frame> stack = {{1, 0, 0}};
  while (!stack.empty()) {
    const auto [i, run, mask] = stack.back();
    stack.pop_back();
    if (i > n - 2) {
      nodes.push_back(mask);
      continue;
    }
    stack.push_back({i + 1, 0, mask});
    if (run < 2) stack.push_back({i + 1, run + 1, mask | (1ULL << i)});
  }
  std::sort(nodes.begin(), nodes.end());
  model.nodes = nodes;

  std::map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    index.emplace(nodes[i], i);

  std::set<std::pair<int, int>> edges;
  const auto connect = [&](int i, std::uint64_t other) {
    const auto it = index.find(other);
    if (it == index.end())
      throw Error("subset move produced a set with three consecutive elements");
    const auto key = std::minmax(i, it->second);
    if (key.first != key.second) edges.insert(key);
  };

  const int top = n - 2;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const std::uint64_t s = nodes[i];
    // Drop an end element unconditionally.
    if (mask_has(s, 1, n)) connect(i, s ^ 2ULL);
    if (mask_has(s, top, n)) connect(i, s ^ (1ULL << top));
    // Add an end element unless it would close a triple.
    if (!mask_has(s, 1, n) && !(mask_has(s, 2, n) && mask_has(s, 3, n)))
      connect(i, s | 2ULL);
    if (!mask_has(s, top, n) &&
        !(mask_has(s, top - 1, n) && mask_has(s, top - 2, n)))
      connect(i, s | (1ULL << top));
    // Toggle next to a lone neighbour.
    for (int k = 1; k <= n - 3; ++k) {
      if (mask_has(s, k + 1, n) && !mask_has(s, k - 1, n) &&
          !mask_has(s, k + 2, n))
        connect(i, s ^ (1ULL << k));
      if (mask_has(s, k, n) && !mask_has(s, k - 1, n) && !mask_has(s, k + 2, n))
        connect(i, s ^ (1ULL << (k + 1)));
    }
  }
  model.edges.assign(edges.begin(), edges.end());
  return model;
}

MonotonePath subset_to_path(std::uint64_t mask, int n) {
  MonotonePath p = {0};
  for (int v = 1; v <= n - 2; ++v)
    if (!((mask >> v) & 1)) p.push_back(v);
  p.push_back(n - 1);
  return p;
}

bool xn_model_matches_flip_graph(const XnSubsetModel& model,
                                 const FlipGraph& g) {
  if (model.nodes.size() != g.paths.size()) return false;
  std::vector<int> to_path(model.nodes.size());
  for (std::size_t i = 0; i < model.nodes.size(); ++i) {
    const auto p = subset_to_path(model.nodes[i], model.n);
    const auto it = std::lower_bound(g.paths.begin(), g.paths.end(), p);
    if (it == g.paths.end() || *it != p) return false;
    to_path[i] = static_cast<int>(it - g.paths.begin());
  }
  std::set<std::pair<int, int>> model_edges, graph_edges;
  for (const auto& [a, b] : model.edges) {
    const auto key = std::minmax(to_path[a], to_path[b]);
    model_edges.insert(key);
  }
  for (const auto& e : g.edges) graph_edges.insert({e.a, e.b});
  return model_edges == graph_edges;
}

}  // namespace monopath
