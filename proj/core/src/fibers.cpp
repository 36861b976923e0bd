#include "monopath/fibers.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "monopath/counting.hpp"
#include "monopath/errors.hpp"

namespace monopath {
namespace {

void add_fiber_edge(FiberGraph& g, int a, int b, int face) {
  if (a > b) std::swap(a, b);
  g.edges.emplace_back(a, b);
  g.edge_face.push_back(face);
}

void finish_fiber(FiberGraph& g) {
  // Sort edges (with labels) for determinism, then build adjacency.
  std::vector<std::size_t> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(g.edges[x], g.edge_face[x]) <
           std::tie(g.edges[y], g.edge_face[y]);
  });
  std::vector<std::pair<int, int>> edges;
  std::vector<int> faces;
  edges.reserve(order.size());
  faces.reserve(order.size());
  for (const auto i : order) {
    edges.push_back(g.edges[i]);
    faces.push_back(g.edge_face[i]);
  }
  g.edges = std::move(edges);
  g.edge_face = std::move(faces);
  g.adj.assign(g.nodes.size(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    g.adj[a].emplace_back(b, g.edge_face[e]);
    g.adj[b].emplace_back(a, g.edge_face[e]);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
}

// The unique crossing of a rank-increasing chain with the open slab
// (i, i+1): the chain edge spanning it.
FiberNode chain_slab_crossing(const Orientation& o,
                              const std::vector<int>& chain, int slab) {
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (o.rank[chain[j]] <= slab && slab < o.rank[chain[j + 1]])
      return {chain[j], chain[j + 1]};
  }
  throw Error("chain does not cross the slab");
}

// The unique crossing of a chain with a vertex height: the rank-r vertex
// itself when the chain passes through it, else the spanning edge.
FiberNode chain_level_crossing(const Orientation& o,
                               const std::vector<int>& chain, int r) {
  for (const int v : chain)
    if (o.rank[v] == r) return {v, v};
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (o.rank[chain[j]] < r && r < o.rank[chain[j + 1]])
      return {chain[j], chain[j + 1]};
  }
  throw Error("chain does not cross the level");
}

using Chains = std::vector<std::pair<std::vector<int>, std::vector<int>>>;

FiberGraph slab_fiber(const Orientation& o, const Chains& chains, int slab) {
  FiberGraph g;
  for (const auto& [a, b] : o.polytope->edges) {
    const int u = o.rank[a] < o.rank[b] ? a : b;
    const int w = u == a ? b : a;
    if (o.rank[u] <= slab && slab < o.rank[w]) g.nodes.push_back({u, w});
  }
  std::sort(g.nodes.begin(), g.nodes.end());
  for (int f = 0; f < static_cast<int>(chains.size()); ++f) {
    const auto& [ca, cb] = chains[f];
    if (!(o.rank[ca.front()] <= slab && slab < o.rank[ca.back()])) continue;
    const int a = fiber_node_index(g, chain_slab_crossing(o, ca, slab));
    const int b = fiber_node_index(g, chain_slab_crossing(o, cb, slab));
    add_fiber_edge(g, a, b, f);
  }
  finish_fiber(g);
  return g;
}

FiberGraph level_fiber(const Orientation& o, const Chains& chains, int r) {
  FiberGraph g;
  for (const auto& [a, b] : o.polytope->edges) {
    const int u = o.rank[a] < o.rank[b] ? a : b;
    const int w = u == a ? b : a;
    if (o.rank[u] < r && r < o.rank[w]) g.nodes.push_back({u, w});
  }
  const int vr = o.by_rank[r];
  g.nodes.push_back({vr, vr});
  std::sort(g.nodes.begin(), g.nodes.end());
  for (int f = 0; f < static_cast<int>(chains.size()); ++f) {
    const auto& [ca, cb] = chains[f];
    if (!(o.rank[ca.front()] < r && r < o.rank[ca.back()])) continue;
    const int a = fiber_node_index(g, chain_level_crossing(o, ca, r));
    const int b = fiber_node_index(g, chain_level_crossing(o, cb, r));
    add_fiber_edge(g, a, b, f);
  }
  finish_fiber(g);
  return g;
}

// alpha (from_below): slab r-1 -> level r, an edge arriving at the rank-r
// vertex collapses onto it. beta: slab r -> level r, an edge leaving the
// rank-r vertex collapses onto it.
SimplicialMap connect_fibers(const Orientation& o, const FiberGraph& from,
                             const FiberGraph& to, int r, bool from_below) {
  SimplicialMap m;
  m.node_image.reserve(from.nodes.size());
  for (const auto& node : from.nodes) {
    FiberNode image = node;
    if (from_below && o.rank[node.w] == r) image = {node.w, node.w};
    if (!from_below && o.rank[node.u] == r) image = {node.u, node.u};
    const int idx = fiber_node_index(to, image);
    if (idx < 0) throw Error("fiber map sends a node outside the target");
    m.node_image.push_back(idx);
  }
  std::map<std::tuple<int, int, int>, int> level_edges;
  for (std::size_t e = 0; e < to.edges.size(); ++e)
    level_edges.emplace(std::make_tuple(to.edges[e].first, to.edges[e].second,
                                        to.edge_face[e]),
                        static_cast<int>(e));
  m.edge_image.reserve(from.edges.size());
  for (std::size_t e = 0; e < from.edges.size(); ++e) {
    int ia = m.node_image[from.edges[e].first];
    int ib = m.node_image[from.edges[e].second];
    if (ia == ib) {
      m.edge_image.push_back(-1);
      continue;
    }
    if (ia > ib) std::swap(ia, ib);
    const auto it =
        level_edges.find(std::make_tuple(ia, ib, from.edge_face[e]));
    if (it == level_edges.end())
      throw Error("fiber map fails to carry an edge onto a labelled edge");
    m.edge_image.push_back(it->second);
  }
  return m;
}

}  // namespace

int fiber_node_index(const FiberGraph& g, const FiberNode& node) {
  const auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), node);
  if (it == g.nodes.end() || *it != node) return -1;
  return static_cast<int>(it - g.nodes.begin());
}

bool is_single_cycle(const FiberGraph& g) {
  if (g.nodes.size() < 2 || g.edges.size() != g.nodes.size()) return false;
  for (const auto& row : g.adj)
    if (row.size() != 2) return false;
  std::vector<char> seen(g.nodes.size(), 0);
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
  return reached == g.nodes.size();
}

FiberDiagram fiber_diagram(const Orientation& o) {
  if (o.dim() != 3)
    throw NotDim3("fibers are defined for 3-dimensional instances");
  const auto report = validate_lp_admissible(o);
  if (!report.pass)
    throw NotLpAdmissible(
        "orientation fails the unique source/sink conditions");

  const int n = o.n();
  Chains chains;
  chains.reserve(o.polytope->faces2.size());
  for (int f = 0; f < static_cast<int>(o.polytope->faces2.size()); ++f)
    chains.push_back(face_chains(o, f));

  FiberDiagram d;
  d.orientation = o;
  d.slabs.reserve(n - 1);
  for (int i = 0; i <= n - 2; ++i) d.slabs.push_back(slab_fiber(o, chains, i));
  d.levels.reserve(n - 2);
  for (int r = 1; r <= n - 2; ++r)
    d.levels.push_back(level_fiber(o, chains, r));
  d.alpha.reserve(n - 2);
  d.beta.reserve(n - 2);
  for (int r = 1; r <= n - 2; ++r) {
    d.alpha.push_back(
        connect_fibers(o, d.slabs[r - 1], d.levels[r - 1], r, true));
    d.beta.push_back(
        connect_fibers(o, d.slabs[r], d.levels[r - 1], r, false));
  }
  return d;
}

LimitGraph inverse_limit(const FiberDiagram& d, std::uint64_t cap) {
  const BigInt total = count_paths_dp(d.orientation);
  if (total > cap) {
    std::ostringstream msg;
    msg << "section count " << total << " exceeds cap " << cap;
    throw CapExceeded(msg.str());
  }
  const int n_slabs = static_cast<int>(d.slabs.size());

  LimitGraph limit;
  for (int x = 0; x < static_cast<int>(d.slabs[0].nodes.size()); ++x)
    limit.nodes.push_back({x});
  for (int r = 1; r < n_slabs; ++r) {
    // Group slab-r nodes by their image at level r.
    std::vector<std::vector<int>> bucket(d.levels[r - 1].nodes.size());
    for (int y = 0; y < static_cast<int>(d.slabs[r].nodes.size()); ++y)
      bucket[d.beta[r - 1].node_image[y]].push_back(y);
    std::vector<std::vector<int>> grown;
    for (const auto& partial : limit.nodes) {
      const int level_node = d.alpha[r - 1].node_image[partial.back()];
      for (const int y : bucket[level_node]) {
        auto next = partial;
        next.push_back(y);
        grown.push_back(std::move(next));
      }
    }
    limit.nodes = std::move(grown);
    if (limit.nodes.size() > cap)
      throw CapExceeded("partial section count exceeds cap");
  }
  std::sort(limit.nodes.begin(), limit.nodes.end());

  // Fiber edge lookup per slab: (node pair, face) -> present, and the set
  // of faces joining a node pair.
  std::vector<std::map<std::pair<int, int>, std::vector<int>>> pair_faces(
      n_slabs);
  std::vector<std::map<std::tuple<int, int, int>, int>> edge_index(n_slabs);
  for (int s = 0; s < n_slabs; ++s) {
    for (std::size_t e = 0; e < d.slabs[s].edges.size(); ++e) {
      const auto [a, b] = d.slabs[s].edges[e];
      pair_faces[s][{a, b}].push_back(d.slabs[s].edge_face[e]);
      edge_index[s][{a, b, d.slabs[s].edge_face[e]}] = static_cast<int>(e);
    }
  }

  const int n_nodes = static_cast<int>(limit.nodes.size());
  for (int i = 0; i < n_nodes; ++i) {
    for (int j = i + 1; j < n_nodes; ++j) {
      const auto& x = limit.nodes[i];
      const auto& y = limit.nodes[j];
      int lo = -1, hi = -1;
      bool contiguous = true;
      for (int s = 0; s < n_slabs; ++s) {
        if (x[s] == y[s]) continue;
        if (lo < 0) lo = s;
        if (hi >= 0 && s != hi + 1) {
          contiguous = false;
          break;
        }
        hi = s;
      }
      if (!contiguous || lo < 0) continue;

      // Faces whose fiber edges join the differing pair on every slab.
      std::vector<int> common;
      bool first = true;
      for (int s = lo; s <= hi && (first || !common.empty()); ++s) {
        const auto key = std::minmax(x[s], y[s]);
        const auto it = pair_faces[s].find({key.first, key.second});
        if (it == pair_faces[s].end()) {
          common.clear();
          first = false;
          break;
        }
        if (first) {
          common = it->second;
          first = false;
        } else {
          std::vector<int> kept;
          for (const int f : common)
            if (std::find(it->second.begin(), it->second.end(), f) !=
                it->second.end())
              kept.push_back(f);
          common = std::move(kept);
        }
      }
      if (first || common.empty()) continue;

      // Consecutive differing slabs must meet in the same uncollapsed
      // level edge (the strip stays homeomorphic to its image).
      std::vector<int> surviving;
      for (const int f : common) {
        bool ok = true;
        for (int s = lo; s < hi && ok; ++s) {
          const auto ka = std::minmax(x[s], y[s]);
          const auto kb = std::minmax(x[s + 1], y[s + 1]);
          const int ea = edge_index[s].at({ka.first, ka.second, f});
          const int eb = edge_index[s + 1].at({kb.first, kb.second, f});
          const int img_a = d.alpha[s].edge_image[ea];
          const int img_b = d.beta[s].edge_image[eb];
          if (img_a < 0 || img_a != img_b) ok = false;
        }
        if (ok) surviving.push_back(f);
      }
      if (surviving.empty()) continue;
      if (surviving.size() > 1) {
        std::ostringstream msg;
        msg << "sections " << i << " and " << j
            << " are joined across two distinct faces";
        throw Error(msg.str());
      }
      limit.edges.push_back({i, j, surviving.front()});
    }
  }

  limit.adj.assign(limit.nodes.size(), {});
  for (const auto& e : limit.edges) {
    limit.adj[e.a].emplace_back(e.b, e.face);
    limit.adj[e.b].emplace_back(e.a, e.face);
  }
  for (auto& row : limit.adj) std::sort(row.begin(), row.end());

  if (!limit.nodes.empty()) {
    std::vector<char> seen(limit.nodes.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const auto& [w, f] : limit.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    limit.connected = reached == limit.nodes.size();
  }
  return limit;
}

MonotonePath path_of_limit_node(const FiberDiagram& d,
                                const std::vector<int>& node) {
  const Orientation& o = d.orientation;
  if (node.size() != d.slabs.size())
    throw IncompatibleSequence("section length does not match the slab count");
  MonotonePath p = {o.source()};
  int v = o.source();
  while (v != o.sink()) {
    const int s = o.rank[v];
    if (node[s] < 0 || node[s] >= static_cast<int>(d.slabs[s].nodes.size()))
      throw IncompatibleSequence("section entry out of range");
    const FiberNode e = d.slabs[s].nodes[node[s]];
    if (e.u != v)
      throw IncompatibleSequence("sequence is not a compatible section");
    for (int k = s; k < o.rank[e.w]; ++k) {
      if (d.slabs[k].nodes[node[k]] != e)
        throw IncompatibleSequence("sequence is not a compatible section");
    }
    p.push_back(e.w);
    v = e.w;
  }
  return p;
}

std::vector<int> limit_node_of_path(const FiberDiagram& d,
                                    const MonotonePath& path) {
  const Orientation& o = d.orientation;
  std::vector<int> node(d.slabs.size(), -1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int u = path[i], w = path[i + 1];
    if (u < 0 || u >= o.n() || w < 0 || w >= o.n() || o.rank[u] >= o.rank[w])
      throw IncompatibleSequence("sequence is not rank-increasing");
    for (int k = o.rank[u]; k < o.rank[w]; ++k) {
      const int idx = fiber_node_index(d.slabs[k], {u, w});
      if (idx < 0)
        throw IncompatibleSequence("path edge missing from a slab fiber");
      node[k] = idx;
    }
  }
  for (const int idx : node)
    if (idx < 0) throw IncompatibleSequence("path does not cross every slab");
  return node;
}

bool check_isomorphism(const FiberDiagram& d, const LimitGraph& limit,
                       const FlipGraph& g) {
  if (limit.nodes.size() != g.paths.size()) return false;
  std::vector<int> to_path(limit.nodes.size());
  for (std::size_t i = 0; i < limit.nodes.size(); ++i) {
    const auto p = path_of_limit_node(d, limit.nodes[i]);
    const auto it = std::lower_bound(g.paths.begin(), g.paths.end(), p);
    if (it == g.paths.end() || *it != p) return false;
    to_path[i] = static_cast<int>(it - g.paths.begin());
  }
  std::set<std::tuple<int, int, int>> limit_edges, graph_edges;
  for (const auto& e : limit.edges) {
    const auto key = std::minmax(to_path[e.a], to_path[e.b]);
    limit_edges.insert({key.first, key.second, e.face});
  }
  for (const auto& e : g.edges) graph_edges.insert({e.a, e.b, e.face});
  return limit_edges == graph_edges;
}

bool check_isomorphism(const Orientation& o, std::uint64_t cap) {
  const auto d = fiber_diagram(o);
  const auto limit = inverse_limit(d, cap);
  const auto g = build_flip_graph(o, cap);
  return check_isomorphism(d, limit, g);
}

}  // namespace monopath
