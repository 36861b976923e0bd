#include "monopath/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "monopath/errors.hpp"

namespace monopath {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidSpec(msg);
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void sort_edges(std::vector<std::pair<int, int>>& edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
}

// Convex k-gon with exact rational coordinates: points on the unit circle
// via t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)) for t = 1..k. All points lie on
// the upper-left arc in angular order, so index order is the boundary
// cycle, and x is strictly decreasing, so a sweep along -x visits the
// polygon sequentially.
std::vector<std::pair<Rational, Rational>> circle_polygon(int k) {
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(k);
  for (int j = 0; j < k; ++j) {
    const BigInt t = j + 1;
    const Rational den = Rational(1 + t * t);
    pts.emplace_back(Rational(1 - t * t) / den, Rational(2 * t) / den);
  }
  return pts;
}

// Half the smallest x-gap of the polygon: a vertical perturbation below
// this keeps the sweep order intact.
Rational half_min_x_gap(const std::vector<std::pair<Rational, Rational>>& pts) {
  Rational gap = pts[0].first - pts[1].first;
  for (std::size_t j = 1; j + 1 < pts.size(); ++j) {
    const Rational step = pts[j].first - pts[j + 1].first;
    gap = std::min(gap, step);
  }
  return gap / 2;
}

FamilyInstance make_simplex(int d) {
  require(d >= 2, "simplex needs d >= 2");
  Polytope p;
  p.dim = d;
  p.n = d + 1;
  for (int i = 0; i < p.n; ++i) {
    for (int j = i + 1; j < p.n; ++j) p.edges.emplace_back(i, j);
  }
  for (int i = 0; i < p.n; ++i) {
    for (int j = i + 1; j < p.n; ++j) {
      for (int l = j + 1; l < p.n; ++l) p.faces2.push_back({i, j, l});
    }
  }
  std::vector<std::vector<Rational>> coords(p.n, std::vector<Rational>(d, 0));
  for (int i = 1; i < p.n; ++i) coords[i][i - 1] = 1;
  p.coords = std::move(coords);
  p.name = "simplex-" + std::to_string(d);
  return {make_polytope(std::move(p)), Functional::from_order(identity_order(d + 1))};
}

FamilyInstance make_stacked_x(int n) {
  require(n >= 4, "stacked-x needs n >= 4");
  Polytope p;
  p.dim = 3;
  p.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= i + 3 && j < n; ++j) p.edges.emplace_back(i, j);
  }
  p.faces2.push_back({0, 1, 2});
  for (int k = 1; k <= n - 3; ++k) {
    p.faces2.push_back({k - 1, k, k + 2});
    p.faces2.push_back({k - 1, k + 1, k + 2});
  }
  p.faces2.push_back({n - 3, n - 2, n - 1});
  p.name = "stacked-x-" + std::to_string(n);
  return {make_polytope(std::move(p)), Functional::from_order(identity_order(n))};
}

FamilyInstance make_prism(int k) {
  require(k >= 3, "prism needs k >= 3");
  const auto poly = circle_polygon(k);
  Polytope p;
  p.dim = 3;
  p.n = 2 * k;
  const auto bot = [](int j) { return 2 * j; };
  const auto top = [](int j) { return 2 * j + 1; };
  for (int j = 0; j < k; ++j) {
    p.edges.emplace_back(bot(j), bot((j + 1) % k));
    p.edges.emplace_back(top(j), top((j + 1) % k));
    p.edges.emplace_back(bot(j), top(j));
  }
  sort_edges(p.edges);
  std::vector<int> bottom_face, top_face;
  for (int j = 0; j < k; ++j) {
    bottom_face.push_back(bot(j));
    top_face.push_back(top(j));
  }
  p.faces2.push_back(bottom_face);
  p.faces2.push_back(top_face);
  for (int j = 0; j < k; ++j) {
    const int jn = (j + 1) % k;
    p.faces2.push_back({bot(j), bot(jn), top(jn), top(j)});
  }
  std::vector<std::vector<Rational>> coords(p.n, std::vector<Rational>(3, 0));
  for (int j = 0; j < k; ++j) {
    coords[bot(j)] = {poly[j].first, poly[j].second, 0};
    coords[top(j)] = {poly[j].first, poly[j].second, 1};
  }
  p.coords = std::move(coords);
  p.name = "prism-" + std::to_string(k);
  // Sweep along -x, nudged by height: bottom_j then top_j then bottom_{j+1}.
  const Rational delta = half_min_x_gap(poly);
  return {make_polytope(std::move(p)),
          Functional::from_vector({Rational(-1), Rational(0), delta})};
}

FamilyInstance make_wedge_vertex(int k) {
  require(k >= 3, "wedge-vertex needs k >= 3");
  const auto poly = circle_polygon(k);
  // Wedge over p_0 = (0,1): roof z = 1 - y vanishes exactly there, so the
  // two prism vertices over p_0 collapse into one vertex w.
  Polytope p;
  p.dim = 3;
  p.n = 2 * k - 1;
  const int w = 0;
  const auto bot = [](int j) { return 2 * j - 1; };  // j = 1..k-1
  const auto top = [](int j) { return 2 * j; };
  for (int j = 1; j + 1 < k; ++j) {
    p.edges.emplace_back(bot(j), bot(j + 1));
    p.edges.emplace_back(top(j), top(j + 1));
  }
  for (int j = 1; j < k; ++j) p.edges.emplace_back(bot(j), top(j));
  p.edges.emplace_back(w, bot(1));
  p.edges.emplace_back(w, bot(k - 1));
  p.edges.emplace_back(w, top(1));
  p.edges.emplace_back(w, top(k - 1));
  sort_edges(p.edges);
  std::vector<int> bottom_face = {w}, top_face = {w};
  for (int j = 1; j < k; ++j) {
    bottom_face.push_back(bot(j));
    top_face.push_back(top(j));
  }
  p.faces2.push_back(bottom_face);
  p.faces2.push_back(top_face);
  for (int j = 1; j + 1 < k; ++j) {
    p.faces2.push_back({bot(j), bot(j + 1), top(j + 1), top(j)});
  }
  p.faces2.push_back({w, bot(1), top(1)});
  p.faces2.push_back({w, bot(k - 1), top(k - 1)});
  std::vector<std::vector<Rational>> coords(p.n, std::vector<Rational>(3, 0));
  coords[w] = {poly[0].first, poly[0].second, 0};
  for (int j = 1; j < k; ++j) {
    const Rational roof = Rational(1) - poly[j].second;
    coords[bot(j)] = {poly[j].first, poly[j].second, 0};
    coords[top(j)] = {poly[j].first, poly[j].second, roof};
  }
  p.coords = std::move(coords);
  p.name = "wedge-vertex-" + std::to_string(k);
  // Same sweep as the prism; roof heights stay below 1, so the same nudge
  // keeps w < b_1 < t_1 < b_2 < ... and w is the global source.
  const Rational delta = half_min_x_gap(poly);
  return {make_polytope(std::move(p)),
          Functional::from_vector({Rational(-1), Rational(0), delta})};
}

FamilyInstance make_wedge_edge(int k) {
  require(k >= 3, "wedge-edge needs k >= 3");
  const auto poly = circle_polygon(k);
  Polytope p;
  p.dim = 3;
  p.n = 2 * k - 2;
  const auto bot = [](int j) { return j; };             // j = 0..k-1
  const auto top = [k](int j) { return k + j - 2; };    // j = 2..k-1
  for (int j = 0; j < k; ++j) p.edges.emplace_back(bot(j), bot((j + 1) % k));
  p.edges.emplace_back(bot(1), top(2));
  for (int j = 2; j + 1 < k; ++j) p.edges.emplace_back(top(j), top(j + 1));
  p.edges.emplace_back(top(k - 1), bot(0));
  for (int j = 2; j < k; ++j) p.edges.emplace_back(bot(j), top(j));
  sort_edges(p.edges);
  std::vector<int> bottom_face, top_face = {bot(0), bot(1)};
  for (int j = 0; j < k; ++j) bottom_face.push_back(bot(j));
  for (int j = 2; j < k; ++j) top_face.push_back(top(j));
  p.faces2.push_back(bottom_face);
  p.faces2.push_back(top_face);
  p.faces2.push_back({bot(1), bot(2), top(2)});
  for (int j = 2; j + 1 < k; ++j) {
    p.faces2.push_back({bot(j), bot(j + 1), top(j + 1), top(j)});
  }
  p.faces2.push_back({bot(k - 1), bot(0), top(k - 1)});
  // Roof: the supporting line of edge (p_0, p_1), scaled to vanish on it
  // and stay positive over the rest of the polygon.
  const Rational ax = poly[1].first - poly[0].first;
  const Rational ay = poly[1].second - poly[0].second;
  auto roof = [&](int j) {
    return Rational(ax * (poly[j].second - poly[0].second) -
                    ay * (poly[j].first - poly[0].first));
  };
  const bool flip = roof(2) < 0;
  std::vector<std::vector<Rational>> coords(p.n, std::vector<Rational>(3, 0));
  for (int j = 0; j < k; ++j) coords[bot(j)] = {poly[j].first, poly[j].second, 0};
  for (int j = 2; j < k; ++j) {
    const Rational h = flip ? Rational(-roof(j)) : roof(j);
    coords[top(j)] = {poly[j].first, poly[j].second, h};
  }
  p.coords = std::move(coords);
  p.name = "wedge-edge-" + std::to_string(k);
  // One monotone Hamiltonian path from b_0 to b_1: down the far side of the
  // bottom, then zigzag between roof and floor. Both wedge-edge endpoints
  // become the global source and sink.
  std::vector<int> order = {bot(0)};
  for (int j = k - 1; j >= 2; --j) {
    if ((k - 1 - j) % 2 == 0) {
      order.push_back(bot(j));
      order.push_back(top(j));
    } else {
      order.push_back(top(j));
      order.push_back(bot(j));
    }
  }
  order.push_back(bot(1));
  return {make_polytope(std::move(p)), Functional::from_order(std::move(order))};
}

FamilyInstance make_pyramid(int k) {
  require(k >= 3, "pyramid needs k >= 3");
  const auto poly = circle_polygon(k);
  Polytope p;
  p.dim = 3;
  p.n = k + 1;
  const int apex = 0;
  const auto base = [](int j) { return j + 1; };
  for (int j = 0; j < k; ++j) {
    p.edges.emplace_back(apex, base(j));
    p.edges.emplace_back(base(j), base((j + 1) % k));
  }
  sort_edges(p.edges);
  std::vector<int> base_face;
  for (int j = 0; j < k; ++j) base_face.push_back(base(j));
  p.faces2.push_back(base_face);
  for (int j = 0; j < k; ++j) {
    p.faces2.push_back({apex, base(j), base((j + 1) % k)});
  }
  Rational cx = 0, cy = 0;
  for (const auto& pt : poly) {
    cx += pt.first;
    cy += pt.second;
  }
  cx /= k;
  cy /= k;
  std::vector<std::vector<Rational>> coords(p.n, std::vector<Rational>(3, 0));
  coords[apex] = {cx, cy, 1};
  for (int j = 0; j < k; ++j) coords[base(j)] = {poly[j].first, poly[j].second, 0};
  p.coords = std::move(coords);
  p.name = "pyramid-" + std::to_string(k);
  // Apex first (the -2z term dominates), then the base along the sweep.
  return {make_polytope(std::move(p)),
          Functional::from_vector({Rational(-1), Rational(0), Rational(-2)})};
}

FamilyInstance make_multi_pyramid(int d, int k) {
  require(d >= 3, "multi-pyramid needs d >= 3");
  require(k >= 3, "multi-pyramid needs k >= 3");
  const int cones = d - 2;
  Polytope p;
  p.dim = d;
  p.n = cones + k;
  const auto base = [cones](int j) { return cones + j; };
  for (int i = 0; i < cones; ++i) {
    for (int v = i + 1; v < p.n; ++v) p.edges.emplace_back(i, v);
  }
  for (int j = 0; j < k; ++j) p.edges.emplace_back(base(j), base((j + 1) % k));
  sort_edges(p.edges);
  std::vector<int> base_face;
  for (int j = 0; j < k; ++j) base_face.push_back(base(j));
  p.faces2.push_back(base_face);
  // 2-faces of an iterated pyramid: cone a polygon edge once, cone a
  // polygon vertex twice, or take three cone vertices.
  for (int i = 0; i < cones; ++i) {
    for (int j = 0; j < k; ++j) {
      p.faces2.push_back({i, base(j), base((j + 1) % k)});
    }
  }
  for (int i = 0; i < cones; ++i) {
    for (int j = i + 1; j < cones; ++j) {
      for (int l = 0; l < k; ++l) p.faces2.push_back({i, j, base(l)});
    }
  }
  for (int i = 0; i < cones; ++i) {
    for (int j = i + 1; j < cones; ++j) {
      for (int l = j + 1; l < cones; ++l) p.faces2.push_back({i, j, l});
    }
  }
  p.name = "multi-pyramid-" + std::to_string(d) + "-" + std::to_string(k);
  return {make_polytope(std::move(p)), Functional::from_order(identity_order(p.n))};
}

FamilyInstance make_hypercube(int d) {
  require(d >= 2 && d <= 20, "hypercube needs 2 <= d <= 20");
  Polytope p;
  p.dim = d;
  p.n = 1 << d;
  for (int v = 0; v < p.n; ++v) {
    for (int i = 0; i < d; ++i) {
      if (!(v & (1 << i))) p.edges.emplace_back(v, v | (1 << i));
    }
  }
  sort_edges(p.edges);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      // Every vertex with bits i and j clear spans one square 2-face.
      for (int m = 0; m < p.n; ++m) {
        if (m & ((1 << i) | (1 << j))) continue;
        p.faces2.push_back({m, m | (1 << i), m | (1 << i) | (1 << j), m | (1 << j)});
      }
    }
  }
  std::vector<std::vector<Rational>> coords(p.n, std::vector<Rational>(d, 0));
  for (int v = 0; v < p.n; ++v) {
    for (int i = 0; i < d; ++i) coords[v][i] = (v >> i) & 1;
  }
  p.coords = std::move(coords);
  p.name = "hypercube-" + std::to_string(d);
  std::vector<Rational> f(d);
  for (int i = 0; i < d; ++i) f[i] = Rational(BigInt(1), BigInt(1) << i);
  return {make_polytope(std::move(p)), Functional::from_vector(std::move(f))};
}

FamilyInstance make_complete_dag(int n) {
  require(n >= 2 && n <= 2000, "complete-dag needs 2 <= n <= 2000");
  // Graph-only model of a 2-neighborly polytope: counting operations apply,
  // flip machinery has no faces to work with and rejects it.
  Polytope p;
  p.dim = 4;
  p.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) p.edges.emplace_back(i, j);
  }
  p.name = "complete-dag-" + std::to_string(n);
  return {make_polytope(std::move(p)), Functional::from_order(identity_order(n))};
}

}  // namespace

FamilyInstance make(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::simplex: return make_simplex(spec.a);
    case Family::stacked_x: return make_stacked_x(spec.a);
    case Family::prism: return make_prism(spec.a);
    case Family::wedge_vertex: return make_wedge_vertex(spec.a);
    case Family::wedge_edge: return make_wedge_edge(spec.a);
    case Family::pyramid: return make_pyramid(spec.a);
    case Family::multi_pyramid: return make_multi_pyramid(spec.a, spec.b);
    case Family::hypercube: return make_hypercube(spec.a);
    case Family::complete_dag: return make_complete_dag(spec.a);
  }
  throw InvalidSpec("unknown family");
}

Orientation canonical_orientation(const FamilySpec& spec) {
  auto inst = make(spec);
  return orient(inst.polytope, inst.functional);
}

Family family_from_string(const std::string& name) {
  if (name == "simplex") return Family::simplex;
  if (name == "stacked-x") return Family::stacked_x;
  if (name == "prism") return Family::prism;
  if (name == "wedge-vertex") return Family::wedge_vertex;
  if (name == "wedge-edge") return Family::wedge_edge;
  if (name == "pyramid") return Family::pyramid;
  if (name == "multi-pyramid") return Family::multi_pyramid;
  if (name == "hypercube") return Family::hypercube;
  if (name == "complete-dag") return Family::complete_dag;
  throw ParseError("unknown family '" + name + "'");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::simplex: return "simplex";
    case Family::stacked_x: return "stacked-x";
    case Family::prism: return "prism";
    case Family::wedge_vertex: return "wedge-vertex";
    case Family::wedge_edge: return "wedge-edge";
    case Family::pyramid: return "pyramid";
    case Family::multi_pyramid: return "multi-pyramid";
    case Family::hypercube: return "hypercube";
    case Family::complete_dag: return "complete-dag";
  }
  return "?";
}

}  // namespace monopath
