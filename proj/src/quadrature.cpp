#include "mvsig/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace mvsig {

QuadratureRule gauss_legendre(std::size_t m, double a, double b) {
  if (m == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
  const auto size = static_cast<Eigen::Index>(m);

  // Jacobi matrix of the Legendre three-term recurrence
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(size);
  Eigen::VectorXd sub(std::max<Eigen::Index>(size - 1, 0));
  for (Eigen::Index i = 1; i < size; ++i) {
    const double k = static_cast<double>(i);
    sub[i - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (Eigen::Index i = 0; i < size; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = mid + half * solver.eigenvalues()[i];
    rule.weights[static_cast<std::size_t>(i)] = 2.0 * v0 * v0 * half;
  }
  return rule;
}

std::vector<double> trapezoid_weights(std::span<const double> grid) {
  if (grid.size() < 2) throw std::invalid_argument("trapezoid rule needs at least two points");
  std::vector<double> w(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = grid[i + 1] - grid[i];
    if (!(h > 0.0)) throw std::invalid_argument("trapezoid grid must be strictly increasing");
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

}  // namespace mvsig
