#pragma once

// Test-only brute-force evaluation of integral inner products.
//
// Signals are synthesized as explicit functions of t on [-1, 1] using the
// orthonormal Legendre polynomials phi_m(t) = sqrt((2m+1)/2) P_m(t), then
// integrated with a Gauss-Legendre rule whose nodes come from Newton's method
// on the three-term recurrence. Nothing here calls the library's inner
// product or quadrature code.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace mvsig::oracle {

using CMat = Eigen::MatrixXcd;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// (P_n(x), P_n'(x)) via the Bonnet recurrence.
inline std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

inline Rule gauss_legendre_newton(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre_with_derivative(n, x);
    (void)p;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

/// phi_0..phi_{m-1} at x.
inline std::vector<double> orthonormal_legendre(int m, double x) {
  std::vector<double> out(m);
  double p0 = 1.0, p1 = x;
  for (int k = 0; k < m; ++k) {
    double pk;
    if (k == 0) {
      pk = 1.0;
    } else if (k == 1) {
      pk = x;
    } else {
      pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    out[k] = std::sqrt((2.0 * k + 1.0) / 2.0) * pk;
  }
  return out;
}

/// f(x) = sum_m coeffs[m] phi_m(x).
inline CMat synthesize(const std::vector<CMat>& coeffs, double x) {
  const auto phi = orthonormal_legendre(static_cast<int>(coeffs.size()), x);
  CMat f = CMat::Zero(coeffs[0].rows(), coeffs[0].cols());
  for (std::size_t m = 0; m < coeffs.size(); ++m) f += phi[m] * coeffs[m];
  return f;
}

/// integral over [-1,1] of f(t) g(t)^H.
inline CMat integrate_product(const std::vector<CMat>& f, const std::vector<CMat>& g,
                              const Rule& rule) {
  CMat acc = CMat::Zero(f[0].rows(), g[0].rows());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const CMat ft = synthesize(f, rule.nodes[i]);
    const CMat gt = synthesize(g, rule.nodes[i]);
    acc += rule.weights[i] * (ft * gt.adjoint());
  }
  return acc;
}

/// integral over [-1,1] of ||f(t)||_F^2.
inline double integrate_energy(const std::vector<CMat>& f, const Rule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * synthesize(f, rule.nodes[i]).squaredNorm();
  }
  return acc;
}

}  // namespace mvsig::oracle
