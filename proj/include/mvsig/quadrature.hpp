#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mvsig {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point Gauss-Legendre rule on [a, b], nodes ascending (Golub-Welsch).
QuadratureRule gauss_legendre(std::size_t m, double a, double b);

/// Composite trapezoid weights for a strictly increasing grid; they sum to
/// grid.back() - grid.front().
std::vector<double> trapezoid_weights(std::span<const double> grid);

}  // namespace mvsig
