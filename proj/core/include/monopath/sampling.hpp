#pragma once

#include <random>

#include "monopath/functional.hpp"
#include "monopath/polytope.hpp"

namespace monopath {

/// Random integer-vector functional, redrawn until it separates all vertex
/// values (checked exactly). Requires coordinates.
Functional random_generic_vector_functional(const Polytope& p,
                                            std::mt19937_64& rng);

/// Random order-form functional passing validate_lp_admissible, found by
/// rejection sampling over vertex permutations. Throws CapExceeded when
/// max_attempts permutations all fail.
Functional random_lp_admissible_order(PolytopePtr p, std::mt19937_64& rng,
                                      int max_attempts = 1000000);

}  // namespace monopath
