#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monopath/orientation.hpp"
#include "monopath/rational.hpp"

namespace monopath {

/// Number of monotone paths from the global source to the global sink,
/// by dynamic programming in rank order. Throws NotSingleSourceSink unless
/// both are unique.
BigInt count_paths_dp(const Orientation& o);

/// mu_k = number of monotone paths from the source to the vertex of rank k,
/// for k = 0..n-1 (mu_0 = 1). Requires a unique global source.
std::vector<BigInt> count_paths_partial(const Orientation& o);

/// The same count through the identity
///     mu = 1 + sum_{k=0}^{n-2} (outdeg(v_k) - 1) * mu_k
/// which must agree with count_paths_dp on every input; keeping both routes
/// executable is the point.
BigInt count_paths_lemma(const Orientation& o);

/// Number of f-arborescences: the product of outdegrees over all non-sink
/// vertices. Throws ZeroOutdegreeNonSink if some non-sink vertex has no
/// outgoing arc (equivalently, the sink is not unique).
BigInt count_arborescences(const Orientation& o);

/// Independent confirmation: enumerates every choice of one outgoing arc
/// per non-sink vertex and checks directly that following the choices from
/// any vertex reaches the sink. Throws CapExceeded when the product of
/// outdegrees exceeds cap.
BigInt count_arborescences_oracle(const Orientation& o, std::uint64_t cap);

/// T_0 = T_1 = 1, T_2 = 2, T_i = T_{i-1} + T_{i-2} + T_{i-3}.
BigInt tribonacci(int i);

/// F_0 = 0, F_1 = F_2 = 1.
BigInt fibonacci(int i);

BigInt binomial(int n, int k);

/// The named extremal bounds. Parameters follow the closed forms:
/// counts of vertices n, facets m, dimension d.
enum class BoundName {
  path_max_3d,            // (n)    T_{n-1}
  path_min_3d,            // (n)    ceil(n/2) + 2
  path_min_general,       // (d,n)  ceil(dn/2) - n + 2
  path_max_general,       // (n)    2^(n-2)
  path_max_simple_proved, // (n)    2 F_n   [simple 3-polytope on n+1 vertices]
  path_max_simple_conj,   // (n)    F_{n+2} + 1   [conjecture, 2n vertices]
  arb_max_3d,             // (n)    2 * 3^(n-3)
  arb_max_general,        // (n)    (n-1)!
  arb_min_3d,             // (n)    2(n-1)
  arb_simple_3d,          // (m)    3 * 2^(m-3)
  arb_simple_min,         // (d,m)  d * ((d-1)!)^(m-d)
  arb_simple_max,         // (d,m)  prod i^{h_i}, neighborly h-vector
  arb_multipyramid,       // (d,n)  2(n-1)(n-2)...(n-d+2)
  diam_lower_3d,          // (n)    ceil((n-2)^2 / 4)
  diam_upper_3d,          // (n)    (n-2) * floor((n-1)/2)
  diam_min_conj,          // (n)    floor((n+5)/4)   [conjecture]
};

BigInt bound(BoundName name, const std::vector<long long>& params);
BoundName bound_from_string(const std::string& name);
std::string bound_to_string(BoundName name);
bool bound_is_conjecture(BoundName name);

/// h-vector of a neighborly simple d-polytope with m facets (dually, of a
/// neighborly polytope with m vertices): h_k = C(m-d+k-1, k) up to the
/// middle, then mirrored.
std::vector<BigInt> neighborly_h_vector(int d, int m);

/// The two closed forms printed for the simple-polytope arborescence
/// maximum. The corollary form agrees with the h-vector product for every
/// d; the theorem form double-counts the middle factor when d is even.
/// Both are exposed for reporting; only the h-vector route is asserted.
BigInt arb_simple_max_corollary_form(int d, int m);
BigInt arb_simple_max_theorem_form(int d, int m);

struct BoundCheck {
  std::string name;
  std::string relation;  // e.g. "mu <= 149"
  BigInt value;
  bool satisfied = false;
  bool conjecture = false;
};

struct CountReport {
  BigInt mu;
  std::vector<BigInt> mu_partial;
  BigInt tau;
  std::vector<int> outdegrees;  // ascending multiset
  std::vector<BoundCheck> bounds_checked;
  bool proved_ok = true;  // no proved bound violated
};

/// Computes mu (dp), the partial counts, tau (product formula) and every
/// named bound applicable to the instance's dimension and simplicity;
/// bounds whose own parameter domain excludes the instance are skipped.
/// Conjectured bounds are reported, never enforced.
CountReport check_bounds(const Orientation& o);

}  // namespace monopath
