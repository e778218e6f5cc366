#pragma once

#include <vector>

namespace uf {

/// Real roots of c3·x³ + c2·x² + c1·x + c0 (c3 ≠ 0), ascending.
///
/// The root of largest magnitude comes from the trigonometric form (three
/// real roots) or Cardano's formula (one); the rest from the deflated
/// quadratic. Every root gets up to two residual-reducing Newton steps on the
/// original polynomial.
/// A double root is returned twice.
std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0);

}  // namespace uf
