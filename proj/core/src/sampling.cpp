#include "monopath/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "monopath/errors.hpp"
#include "monopath/orientation.hpp"

namespace monopath {

Functional random_generic_vector_functional(const Polytope& p,
                                            std::mt19937_64& rng) {
  if (!p.coords)
    throw BadParams("vector functionals need coordinates");
  std::uniform_int_distribution<long long> draw(-1000000, 1000000);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> vec(p.dim);
    for (auto& c : vec) c = Rational(draw(rng));
    std::vector<Rational> values(p.n, Rational(0));
    for (int v = 0; v < p.n; ++v)
      for (int j = 0; j < p.dim; ++j) values[v] += vec[j] * (*p.coords)[v][j];
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) == values.end())
      return Functional::from_vector(vec);
  }
  throw NonGenericFunctional(
      "could not separate all vertices after 1000 random draws");
}

Functional random_lp_admissible_order(PolytopePtr p, std::mt19937_64& rng,
                                      int max_attempts) {
  std::vector<int> order(p->n);
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(order.begin(), order.end(), rng);
    const auto f = Functional::from_order(order);
    const auto o = orient(p, f);
    if (validate_lp_admissible(o).pass) return f;
  }
  throw CapExceeded("no admissible order found within the attempt budget");
}

}  // namespace monopath
