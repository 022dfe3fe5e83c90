#pragma once

#include "umbral/expr.hpp"
#include "umbral/registry.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

// Moments E[e^n], n = 0..order, of the umbra denoted by e.
//
// Sums, products, scalar multiples and ordinary powers are expanded into an
// umbral polynomial whose variables are correlation labels. Atoms with the same
// name and primes share a label. Every other node (dot products, inverses,
// adjoints, ...) is evaluated on its own and enters the polynomial as a fresh
// label, uncorrelated with everything else. E of a monomial is the product over
// labels of the moment indexed by that label's exponent.
Umbra evaluate(const ExprPtr& e, unsigned order, const Registry& registry);

// Largest order <= requested at which every user-defined umbra in e has enough
// moments. Built-ins never limit the order.
unsigned feasible_order(const ExprPtr& e, unsigned requested, const Registry& registry);

} // namespace umbral
