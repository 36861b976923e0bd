#include "monopath/counting.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "monopath/errors.hpp"

namespace monopath {
namespace {

void require_unique_source_sink(const Orientation& o) {
  const auto ins = o.in_degrees();
  const auto outs = o.out_degrees();
  int sources = 0, sinks = 0;
  for (int v = 0; v < o.n(); ++v) {
    if (ins[v] == 0) ++sources;
    if (outs[v] == 0) ++sinks;
  }
  if (sources != 1 || sinks != 1) {
    std::ostringstream msg;
    msg << "orientation has " << sources << " source(s) and " << sinks
        << " sink(s); need exactly one of each";
    throw NotSingleSourceSink(msg.str());
  }
}

void require_unique_source(const Orientation& o) {
  const auto ins = o.in_degrees();
  int sources = 0;
  for (int v = 0; v < o.n(); ++v)
    if (ins[v] == 0) ++sources;
  if (sources != 1) {
    std::ostringstream msg;
    msg << "orientation has " << sources << " source(s); need exactly one";
    throw NotSingleSourceSink(msg.str());
  }
}

// Paths from the source to each vertex, indexed by vertex id.
std::vector<BigInt> paths_by_vertex(const Orientation& o) {
  std::vector<BigInt> ways(o.n(), 0);
  ways[o.source()] = 1;
  for (int k = 0; k < o.n(); ++k) {
    const int v = o.by_rank[k];
    if (ways[v] == 0) continue;
    for (int w : o.arcs[v]) ways[w] += ways[v];
  }
  return ways;
}

}  // namespace

BigInt count_paths_dp(const Orientation& o) {
  require_unique_source_sink(o);
  return paths_by_vertex(o)[o.sink()];
}

std::vector<BigInt> count_paths_partial(const Orientation& o) {
  require_unique_source(o);
  const auto ways = paths_by_vertex(o);
  std::vector<BigInt> by_rank(o.n());
  for (int k = 0; k < o.n(); ++k) by_rank[k] = ways[o.by_rank[k]];
  return by_rank;
}

BigInt count_paths_lemma(const Orientation& o) {
  require_unique_source_sink(o);
  const auto mu = count_paths_partial(o);
  BigInt total = 1;
  for (int k = 0; k + 1 < o.n(); ++k) {
    const int d = static_cast<int>(o.arcs[o.by_rank[k]].size());
    total += BigInt(d - 1) * mu[k];
  }
  return total;
}

BigInt count_arborescences(const Orientation& o) {
  const int sink = o.sink();
  BigInt product = 1;
  for (int v = 0; v < o.n(); ++v) {
    if (v == sink) continue;
    const auto d = o.arcs[v].size();
    if (d == 0) {
      std::ostringstream msg;
      msg << "vertex " << v << " has no outgoing arc but is not the sink";
      throw ZeroOutdegreeNonSink(msg.str());
    }
    product *= static_cast<unsigned>(d);
  }
  return product;
}

BigInt count_arborescences_oracle(const Orientation& o, std::uint64_t cap) {
  const BigInt expected = count_arborescences(o);
  if (expected > cap) {
    std::ostringstream msg;
    msg << "outdegree product " << expected << " exceeds cap " << cap;
    throw CapExceeded(msg.str());
  }
  const int n = o.n();
  const int sink = o.sink();

  // Odometer over one outgoing-arc choice per non-sink vertex.
  std::vector<int> choosers;
  for (int v = 0; v < n; ++v)
    if (v != sink) choosers.push_back(v);
  std::vector<std::size_t> pick(choosers.size(), 0);

  BigInt valid = 0;
  bool done = false;
  while (!done) {
    // Every vertex must reach the sink by following its chosen arc. Arcs
    // increase rank, so a walk terminates within n steps; it fails only by
    // reaching a vertex with no choice recorded, which cannot happen here.
    bool all_reach = true;
    for (int v = 0; v < n && all_reach; ++v) {
      int cur = v;
      int steps = 0;
      while (cur != sink && steps <= n) {
        const auto it = std::lower_bound(choosers.begin(), choosers.end(), cur);
        cur = o.arcs[cur][pick[it - choosers.begin()]];
        ++steps;
      }
      if (cur != sink) all_reach = false;
    }
    if (all_reach) ++valid;

    // Advance the odometer.
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (pick[i] + 1 < o.arcs[choosers[i]].size()) {
        ++pick[i];
        break;
      }
      pick[i] = 0;
    }
    if (i == pick.size()) done = true;
  }
  return valid;
}

BigInt tribonacci(int i) {
  if (i < 0) throw BadParams("tribonacci index must be >= 0");
  BigInt a = 1, b = 1, c = 2;  // T_0, T_1, T_2
  if (i == 0) return a;
  if (i == 1) return b;
  if (i == 2) return c;
  for (int k = 3; k <= i; ++k) {
    BigInt next = a + b + c;
    a = b;
    b = c;
    c = next;
  }
  return c;
}

BigInt fibonacci(int i) {
  if (i < 0) throw BadParams("fibonacci index must be >= 0");
  BigInt a = 0, b = 1;  // F_0, F_1
  for (int k = 0; k < i; ++k) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt power(BigInt base, long long exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

[[noreturn]] void bad_arity(const std::string& name, std::size_t want,
                            std::size_t got) {
  std::ostringstream msg;
  msg << "bound " << name << " takes " << want << " parameter(s), got " << got;
  throw BadParams(msg.str());
}

void need(bool cond, const std::string& msg) {
  if (!cond) throw BadParams(msg);
}

}  // namespace

std::vector<BigInt> neighborly_h_vector(int d, int m) {
  need(d >= 2, "dimension must be >= 2");
  need(m >= d + 1, "a d-polytope has at least d+1 facets");
  std::vector<BigInt> h(d + 1);
  for (int k = 0; k <= d / 2; ++k) {
    h[k] = binomial(m - d + k - 1, k);
    h[d - k] = h[k];
  }
  return h;
}

namespace {

long long exponent_from(const BigInt& h) {
  if (h > std::numeric_limits<long long>::max())
    throw CapExceeded("h-vector entry too large to use as an exponent");
  return static_cast<long long>(h);
}

}  // namespace

BigInt arb_simple_max_corollary_form(int d, int m) {
  // prod_{i=1}^{floor(d/2)} i^{C(m-d+i-1, i)}
  //   * prod_{i=0}^{floor((d-1)/2)} (d-i)^{C(m-d+i-1, i)}.
  // The two halves tile the factors 1..d exactly once each, so this equals
  // prod_i i^{h_i} for every d.
  BigInt r = 1;
  for (int i = 1; i <= d / 2; ++i)
    r *= power(BigInt(i), exponent_from(binomial(m - d + i - 1, i)));
  for (int i = 0; i <= (d - 1) / 2; ++i)
    r *= power(BigInt(d - i), exponent_from(binomial(m - d + i - 1, i)));
  return r;
}

BigInt arb_simple_max_theorem_form(int d, int m) {
  // prod_{i=1}^{floor(d/2)} i^{C(m-d+i-1, i)}
  //   * prod_{i=floor((d+1)/2)}^{d} i^{C(m-i-1, d-i)}.
  // For even d the second product starts at i = d/2 again, so that factor
  // enters twice; for odd d the ranges are disjoint and the value matches
  // the corollary form.
  BigInt r = 1;
  for (int i = 1; i <= d / 2; ++i)
    r *= power(BigInt(i), exponent_from(binomial(m - d + i - 1, i)));
  for (int i = (d + 1) / 2; i <= d; ++i)
    r *= power(BigInt(i), exponent_from(binomial(m - i - 1, d - i)));
  return r;
}

namespace {

BigInt h_vector_product(int d, int m) {
  const auto h = neighborly_h_vector(d, m);
  BigInt r = 1;
  for (int i = 1; i <= d; ++i) {
    if (h[i] > std::numeric_limits<long long>::max())
      throw CapExceeded("h-vector entry too large to use as an exponent");
    r *= power(BigInt(i), static_cast<long long>(h[i]));
  }
  return r;
}

const std::map<std::string, BoundName>& bound_names() {
  static const std::map<std::string, BoundName> names = {
      {"path_max_3d", BoundName::path_max_3d},
      {"path_min_3d", BoundName::path_min_3d},
      {"path_min_general", BoundName::path_min_general},
      {"path_max_general", BoundName::path_max_general},
      {"path_max_simple_proved", BoundName::path_max_simple_proved},
      {"path_max_simple_conj", BoundName::path_max_simple_conj},
      {"arb_max_3d", BoundName::arb_max_3d},
      {"arb_max_general", BoundName::arb_max_general},
      {"arb_min_3d", BoundName::arb_min_3d},
      {"arb_simple_3d", BoundName::arb_simple_3d},
      {"arb_simple_min", BoundName::arb_simple_min},
      {"arb_simple_max", BoundName::arb_simple_max},
      {"arb_multipyramid", BoundName::arb_multipyramid},
      {"diam_lower_3d", BoundName::diam_lower_3d},
      {"diam_upper_3d", BoundName::diam_upper_3d},
      {"diam_min_conj", BoundName::diam_min_conj},
  };
  return names;
}

}  // namespace

BoundName bound_from_string(const std::string& name) {
  const auto& names = bound_names();
  const auto it = names.find(name);
  if (it == names.end()) throw UnknownBound("unknown bound name: " + name);
  return it->second;
}

std::string bound_to_string(BoundName name) {
  for (const auto& [s, b] : bound_names())
    if (b == name) return s;
  throw UnknownBound("unmapped bound enum value");
}

bool bound_is_conjecture(BoundName name) {
  return name == BoundName::path_max_simple_conj ||
         name == BoundName::diam_min_conj;
}

BigInt bound(BoundName name, const std::vector<long long>& params) {
  const auto arity = [&](std::size_t want) {
    if (params.size() != want)
      bad_arity(bound_to_string(name), want, params.size());
  };
  switch (name) {
    case BoundName::path_max_3d: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return tribonacci(static_cast<int>(n) - 1);
    }
    case BoundName::path_min_3d: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return BigInt((n + 1) / 2 + 2);
    }
    case BoundName::path_min_general: {
      arity(2);
      const auto d = params[0], n = params[1];
      need(d >= 2 && n >= d + 1, "need d >= 2 and n >= d+1");
      return BigInt((d * n + 1) / 2 - n + 2);
    }
    case BoundName::path_max_general: {
      arity(1);
      const auto n = params[0];
      need(n >= 2, "need n >= 2");
      return power(2, n - 2);
    }
    case BoundName::path_max_simple_proved: {
      arity(1);
      const auto n = params[0];
      need(n >= 3, "need n >= 3 (polytope on n+1 vertices)");
      return 2 * fibonacci(static_cast<int>(n));
    }
    case BoundName::path_max_simple_conj: {
      arity(1);
      const auto n = params[0];
      need(n >= 2, "need n >= 2 (polytope on 2n vertices)");
      return fibonacci(static_cast<int>(n) + 2) + 1;
    }
    case BoundName::arb_max_3d: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return 2 * power(3, n - 3);
    }
    case BoundName::arb_max_general: {
      arity(1);
      const auto n = params[0];
      need(n >= 2, "need n >= 2");
      return factorial(n - 1);
    }
    case BoundName::arb_min_3d: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return BigInt(2 * (n - 1));
    }
    case BoundName::arb_simple_3d: {
      arity(1);
      const auto m = params[0];
      need(m >= 4, "a 3-polytope has at least 4 facets");
      return 3 * power(2, m - 3);
    }
    case BoundName::arb_simple_min: {
      arity(2);
      const auto d = params[0], m = params[1];
      need(d >= 2 && m >= d + 1, "need d >= 2 and m >= d+1");
      return BigInt(d) * power(factorial(d - 1), m - d);
    }
    case BoundName::arb_simple_max: {
      arity(2);
      const auto d = params[0], m = params[1];
      return h_vector_product(static_cast<int>(d), static_cast<int>(m));
    }
    case BoundName::arb_multipyramid: {
      arity(2);
      const auto d = params[0], n = params[1];
      need(d >= 3 && n >= d + 1, "need d >= 3 and n >= d+1");
      BigInt r = 2;
      for (long long i = n - 1; i >= n - d + 2; --i) r *= i;
      return r;
    }
    case BoundName::diam_lower_3d: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return BigInt(((n - 2) * (n - 2) + 3) / 4);
    }
    case BoundName::diam_upper_3d: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return BigInt((n - 2) * ((n - 1) / 2));
    }
    case BoundName::diam_min_conj: {
      arity(1);
      const auto n = params[0];
      need(n >= 4, "a 3-polytope has at least 4 vertices");
      return BigInt((n + 5) / 4);
    }
  }
  throw UnknownBound("unmapped bound enum value");
}

namespace {

BoundCheck make_check(BoundName name, const std::string& quantity,
                      const std::string& rel, const BigInt& actual,
                      const BigInt& b) {
  BoundCheck c;
  c.name = bound_to_string(name);
  c.value = b;
  c.conjecture = bound_is_conjecture(name);
  std::ostringstream r;
  r << quantity << " " << rel << " " << b;
  c.relation = r.str();
  if (rel == "<=")
    c.satisfied = actual <= b;
  else if (rel == ">=")
    c.satisfied = actual >= b;
  else
    c.satisfied = actual == b;
  return c;
}

}  // namespace

CountReport check_bounds(const Orientation& o) {
  const Polytope& p = *o.polytope;
  CountReport report;
  report.mu = count_paths_dp(o);
  report.mu_partial = count_paths_partial(o);
  report.tau = count_arborescences(o);
  report.outdegrees = outdegree_sequence(o);

  const long long n = p.n;
  const long long d = p.dim;
  const long long m = static_cast<long long>(p.faces2.size());
  const bool simple = is_simple(p);

  auto add = [&](BoundName name, const std::string& quantity,
                 const std::string& rel, const BigInt& actual,
                 const std::vector<long long>& params) {
    BigInt b;
    try {
      b = bound(name, params);
    } catch (const BadParams&) {
      return;  // instance outside the bound's domain: not applicable
    }
    const auto check = make_check(name, quantity, rel, actual, b);
    report.bounds_checked.push_back(check);
    if (!check.satisfied && !check.conjecture) report.proved_ok = false;
  };

  if (d == 3) {
    add(BoundName::path_max_3d, "mu", "<=", report.mu, {n});
    add(BoundName::path_min_3d, "mu", ">=", report.mu, {n});
    add(BoundName::arb_max_3d, "tau", "<=", report.tau, {n});
    add(BoundName::arb_min_3d, "tau", ">=", report.tau, {n});
    if (simple) {
      // m here counts the facets of the instance itself.
      add(BoundName::arb_simple_3d, "tau", "==", report.tau, {m});
      add(BoundName::path_max_simple_proved, "mu", "<=", report.mu, {n - 1});
      if (n % 2 == 0)
        add(BoundName::path_max_simple_conj, "mu", "<=", report.mu, {n / 2});
    }
  } else if (d >= 4) {
    add(BoundName::path_max_general, "mu", "<=", report.mu, {n});
    add(BoundName::path_min_general, "mu", ">=", report.mu, {d, n});
    add(BoundName::arb_max_general, "tau", "<=", report.tau, {n});
  }
  return report;
}

}  // namespace monopath
