#include "monopath/orientation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "monopath/errors.hpp"

namespace monopath {

bool Orientation::has_arc(int u, int w) const {
  const auto& out = arcs[u];
  return std::binary_search(out.begin(), out.end(), w);
}

std::vector<int> Orientation::out_degrees() const {
  std::vector<int> d(arcs.size());
  for (std::size_t v = 0; v < arcs.size(); ++v) d[v] = static_cast<int>(arcs[v].size());
  return d;
}

std::vector<int> Orientation::in_degrees() const {
  std::vector<int> d(arcs.size(), 0);
  for (const auto& out : arcs) {
    for (int w : out) ++d[w];
  }
  return d;
}

namespace {

std::vector<int> ranks_from_vector(const Polytope& p, const std::vector<Rational>& vec) {
  if (!p.coords) {
    throw NonGenericFunctional("vector-form functional needs coordinates");
  }
  if (static_cast<int>(vec.size()) != p.dim) {
    throw BadParams("functional vector has " + std::to_string(vec.size()) +
                    " entries, dim is " + std::to_string(p.dim));
  }
  std::vector<Rational> value(p.n);
  for (int v = 0; v < p.n; ++v) {
    Rational s = 0;
    for (int j = 0; j < p.dim; ++j) s += vec[j] * (*p.coords)[v][j];
    value[v] = s;
  }
  std::vector<int> by_rank(p.n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    if (value[a] != value[b]) return value[a] < value[b];
    return a < b;
  });
  for (int i = 0; i + 1 < p.n; ++i) {
    if (value[by_rank[i]] == value[by_rank[i + 1]]) {
      throw NonGenericFunctional("tie: vertices " + std::to_string(by_rank[i]) + " and " +
                                 std::to_string(by_rank[i + 1]) +
                                 " share the functional value " +
                                 rational_to_string(value[by_rank[i]]));
    }
  }
  std::vector<int> rank(p.n);
  for (int i = 0; i < p.n; ++i) rank[by_rank[i]] = i;
  return rank;
}

std::vector<int> ranks_from_order(const Polytope& p, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != p.n) {
    throw OrderArityMismatch("order lists " + std::to_string(order.size()) +
                             " vertices, polytope has " + std::to_string(p.n));
  }
  std::vector<int> rank(p.n, -1);
  for (int i = 0; i < p.n; ++i) {
    const int v = order[i];
    if (v < 0 || v >= p.n) {
      throw OrderArityMismatch("order entry " + std::to_string(v) + " out of range");
    }
    if (rank[v] != -1) {
      throw OrderArityMismatch("order repeats vertex " + std::to_string(v));
    }
    rank[v] = i;
  }
  return rank;
}

}  // namespace

Orientation orient(PolytopePtr p, const Functional& f) {
  Orientation o;
  o.polytope = std::move(p);
  const Polytope& poly = *o.polytope;

  o.rank = (f.kind == Functional::Kind::vector_form) ? ranks_from_vector(poly, f.vec)
                                                     : ranks_from_order(poly, f.order);
  o.by_rank.assign(poly.n, 0);
  for (int v = 0; v < poly.n; ++v) o.by_rank[o.rank[v]] = v;

  o.arcs.assign(poly.n, {});
  std::size_t arc_count = 0;
  for (const auto& [u, w] : poly.edges) {
    if (o.rank[u] < o.rank[w]) {
      o.arcs[u].push_back(w);
    } else {
      o.arcs[w].push_back(u);
    }
    ++arc_count;
  }
  for (auto& out : o.arcs) std::sort(out.begin(), out.end());
  std::size_t total = 0;
  for (const auto& out : o.arcs) total += out.size();
  assert(total == arc_count && total == poly.edges.size());
  (void)total;
  (void)arc_count;
  return o;
}

ValidationReport validate_lp_admissible(const Orientation& o) {
  const Polytope& p = *o.polytope;
  ValidationReport rep;

  const auto outdeg = o.out_degrees();
  const auto indeg = o.in_degrees();
  for (int v = 0; v < p.n; ++v) {
    if (indeg[v] == 0) rep.global_sources.push_back(v);
    if (outdeg[v] == 0) rep.global_sinks.push_back(v);
  }
  rep.global_ok = rep.global_sources.size() == 1 && rep.global_sinks.size() == 1;

  rep.faces.reserve(p.faces2.size());
  for (std::size_t f = 0; f < p.faces2.size(); ++f) {
    const auto& cyc = p.faces2[f];
    FaceCheck fc;
    fc.face = static_cast<int>(f);
    const std::size_t m = cyc.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int v = cyc[i];
      const int prev = cyc[(i + m - 1) % m];
      const int next = cyc[(i + 1) % m];
      const int r = o.rank[v];
      if (r < o.rank[prev] && r < o.rank[next]) fc.sources.push_back(v);
      if (r > o.rank[prev] && r > o.rank[next]) fc.sinks.push_back(v);
    }
    fc.ok = fc.sources.size() == 1 && fc.sinks.size() == 1;
    rep.faces.push_back(std::move(fc));
  }

  rep.pass = rep.global_ok &&
             std::all_of(rep.faces.begin(), rep.faces.end(),
                         [](const FaceCheck& fc) { return fc.ok; });
  return rep;
}

std::vector<int> outdegree_sequence(const Orientation& o) {
  auto d = o.out_degrees();
  std::sort(d.begin(), d.end());
  return d;
}

bool is_simple(const Polytope& p) {
  const auto deg = degrees(p);
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == p.dim; });
}

std::vector<long long> h_vector(const Orientation& o) {
  const Polytope& p = *o.polytope;
  if (!is_simple(p)) {
    throw NotSimple("h-vector is defined here for simple polytopes only");
  }
  std::vector<long long> h(p.dim + 1, 0);
  for (const auto& out : o.arcs) {
    const int k = static_cast<int>(out.size());
    assert(k <= p.dim);
    ++h[k];
  }
  return h;
}

}  // namespace monopath
