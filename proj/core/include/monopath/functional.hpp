#pragma once

#include <vector>

#include "monopath/rational.hpp"

namespace monopath {

/// A generic linear functional, in one of two forms.
///
/// Vector form: dim rational coefficients, evaluated against vertex
/// coordinates. Requires the polytope to carry coords, and the induced
/// vertex values must be pairwise distinct (ties throw, they are never
/// broken silently).
///
/// Order form: an explicit total order of the vertices, order[i] being the
/// vertex of rank i. This admits combinatorial instances with no
/// coordinates; validate_lp_admissible gates whether such an order behaves
/// like a generic functional.
struct Functional {
  enum class Kind { vector_form, order_form };
  Kind kind = Kind::order_form;
  std::vector<Rational> vec;  // vector form, size dim
  std::vector<int> order;     // order form, a permutation of 0..n-1

  static Functional from_vector(std::vector<Rational> v) {
    Functional f;
    f.kind = Kind::vector_form;
    f.vec = std::move(v);
    return f;
  }
  static Functional from_order(std::vector<int> o) {
    Functional f;
    f.kind = Kind::order_form;
    f.order = std::move(o);
    return f;
  }
};

}  // namespace monopath
