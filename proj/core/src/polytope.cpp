#include "monopath/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "monopath/errors.hpp"

namespace monopath {

namespace {

void fail(const std::string& msg) { throw InvalidPolytope(msg); }

}  // namespace

void validate_polytope(const Polytope& p) {
  if (p.dim < 2) fail("dim must be >= 2");
  if (p.n < 2) fail("need at least two vertices");

  std::set<std::pair<int, int>> edge_set;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto [u, w] = p.edges[i];
    if (u < 0 || w < 0 || u >= p.n || w >= p.n) {
      fail("edge " + std::to_string(i) + " out of range");
    }
    if (u >= w) fail("edge " + std::to_string(i) + " not normalized (u < w)");
    if (!edge_set.insert({u, w}).second) {
      fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(w));
    }
  }
  if (!std::is_sorted(p.edges.begin(), p.edges.end())) {
    fail("edge list not sorted");
  }

  // Connectivity of the graph.
  {
    std::vector<std::vector<int>> adj(p.n);
    for (const auto& [u, w] : p.edges) {
      adj[u].push_back(w);
      adj[w].push_back(u);
    }
    std::vector<char> seen(p.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (reached != p.n) fail("graph is disconnected");
  }

  // Face cycles walk along edges, length >= 3, no repeated vertex. Count
  // face incidences per edge for the dim-3 facet check below.
  std::map<std::pair<int, int>, int> edge_face_count;
  for (std::size_t f = 0; f < p.faces2.size(); ++f) {
    const auto& cyc = p.faces2[f];
    if (cyc.size() < 3) fail("face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) {
      fail("face " + std::to_string(f) + " repeats a vertex");
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i];
      const int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= p.n) fail("face " + std::to_string(f) + " vertex out of range");
      const auto key = std::minmax(a, b);
      if (!edge_set.count({key.first, key.second})) {
        fail("face " + std::to_string(f) + " uses missing edge " +
             std::to_string(a) + "-" + std::to_string(b));
      }
      ++edge_face_count[{key.first, key.second}];
    }
  }

  if (p.dim == 3) {
    // faces2 is the facet list of a 3-polytope: Euler's relation holds and
    // every edge lies on exactly two facets.
    const long long euler = static_cast<long long>(p.n) -
                            static_cast<long long>(p.edges.size()) +
                            static_cast<long long>(p.faces2.size());
    if (euler != 2) {
      fail("dim-3 Euler relation violated: n - e + f = " + std::to_string(euler));
    }
    for (const auto& [u, w] : p.edges) {
      const auto it = edge_face_count.find({u, w});
      const int c = (it == edge_face_count.end()) ? 0 : it->second;
      if (c != 2) {
        fail("edge " + std::to_string(u) + "-" + std::to_string(w) + " lies on " +
             std::to_string(c) + " facets, expected 2");
      }
    }
  }

  if (p.coords) {
    if (static_cast<int>(p.coords->size()) != p.n) {
      fail("coords row count != n");
    }
    for (const auto& row : *p.coords) {
      if (static_cast<int>(row.size()) != p.dim) fail("coords row width != dim");
    }
    // Sanity only: no edge may join two identical points.
    for (const auto& [u, w] : p.edges) {
      if ((*p.coords)[u] == (*p.coords)[w]) {
        fail("edge " + std::to_string(u) + "-" + std::to_string(w) +
             " joins coincident coordinates");
      }
    }
  }
}

std::vector<std::vector<int>> adjacency(const Polytope& p) {
  std::vector<std::vector<int>> adj(p.n);
  for (const auto& [u, w] : p.edges) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> degrees(const Polytope& p) {
  std::vector<int> deg(p.n, 0);
  for (const auto& [u, w] : p.edges) {
    ++deg[u];
    ++deg[w];
  }
  return deg;
}

PolytopePtr make_polytope(Polytope p) {
  validate_polytope(p);
  return std::make_shared<const Polytope>(std::move(p));
}

}  // namespace monopath
