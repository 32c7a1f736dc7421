#include "mvsig/signal.hpp"

#include "mvsig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mvsig {

namespace {

void require_same_shape(const MatrixSignal& f, const MatrixSignal& g, const char* op) {
  if (!f.same_shape(g)) {
    throw DimensionMismatch(std::string(op) + ": signal shapes differ (N=" + std::to_string(f.n()) +
                            ",M=" + std::to_string(f.m()) + " vs N=" + std::to_string(g.n()) +
                            ",M=" + std::to_string(g.m()) + ")");
  }
}

void require_square(const CMatrix& a, Index n, const char* op) {
  if (a.rows() != n || a.cols() != n) {
    throw DimensionMismatch(std::string(op) + ": constant matrix must be " + std::to_string(n) +
                            "x" + std::to_string(n));
  }
}

}  // namespace

MatrixSignal::MatrixSignal(Index n, Index m) : rows_(CMatrix::Zero(n, n * m)), n_(n), m_(m) {
  if (n < 1 || m < 1) throw DimensionMismatch("signal needs N >= 1 and M >= 1");
}

MatrixSignal::MatrixSignal(CMatrix rows, Index n, Index m) : rows_(std::move(rows)), n_(n), m_(m) {}

MatrixSignal::MatrixSignal(std::span<const CMatrix> coeffs) : n_(0), m_(0) {
  if (coeffs.empty()) throw DimensionMismatch("signal needs at least one coefficient matrix");
  n_ = coeffs.front().rows();
  m_ = static_cast<Index>(coeffs.size());
  if (n_ < 1) throw DimensionMismatch("signal needs N >= 1");
  rows_.resize(n_, n_ * m_);
  for (Index i = 0; i < m_; ++i) {
    const auto& c = coeffs[static_cast<std::size_t>(i)];
    if (c.rows() != n_ || c.cols() != n_) {
      throw DimensionMismatch("coefficient " + std::to_string(i) + " is not " + std::to_string(n_) +
                              "x" + std::to_string(n_));
    }
    rows_.middleCols(i * n_, n_) = c;
  }
}

MatrixSignal MatrixSignal::from_rows(CMatrix rows, Index n) {
  if (n < 1 || rows.rows() != n || rows.cols() < n || rows.cols() % n != 0) {
    throw DimensionMismatch("row-function matrix must be N x (M*N)");
  }
  const Index m = rows.cols() / n;
  return MatrixSignal(std::move(rows), n, m);
}

MatrixSignal MatrixSignal::canonical(Index n, Index m, Index k) {
  if (k < 0 || k >= m) throw DimensionMismatch("canonical index out of range");
  MatrixSignal e(n, m);
  e.rows_.middleCols(k * n, n).setIdentity();
  return e;
}

std::vector<CMatrix> MatrixSignal::coeffs() const {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Index i = 0; i < m_; ++i) out.emplace_back(coeff(i));
  return out;
}

double MatrixSignal::max_imag() const {
  return rows_.size() == 0 ? 0.0 : rows_.imag().cwiseAbs().maxCoeff();
}

Field MatrixSignal::field() const { return max_imag() == 0.0 ? Field::Real : Field::Complex; }

MatrixSignal MatrixSignal::real_part() const {
  return MatrixSignal(rows_.real().cast<Complex>(), n_, m_);
}

GramMatrix inner_product(const MatrixSignal& f, const MatrixSignal& g) {
  require_same_shape(f, g, "inner_product");
  return f.rows() * g.rows().adjoint();
}

double norm_m(const MatrixSignal& f) { return std::sqrt(inner_product(f, f).norm()); }

double norm_l2(const MatrixSignal& f) { return f.rows().norm(); }

Complex scalar_inner_product(const MatrixSignal& f, const MatrixSignal& g) {
  return inner_product(f, g).trace();
}

MatrixSignal left_mul(const CMatrix& a, const MatrixSignal& f) {
  require_square(a, f.n(), "left_mul");
  return MatrixSignal::from_rows(a * f.rows(), f.n());
}

MatrixSignal right_mul(const MatrixSignal& f, const CMatrix& a) {
  require_square(a, f.n(), "right_mul");
  CMatrix rows(f.n(), f.n() * f.m());
  for (Index i = 0; i < f.m(); ++i) {
    rows.middleCols(i * f.n(), f.n()) = f.rows().middleCols(i * f.n(), f.n()) * a;
  }
  return MatrixSignal::from_rows(std::move(rows), f.n());
}

MatrixSignal add(const MatrixSignal& f, const MatrixSignal& g) {
  require_same_shape(f, g, "add");
  return MatrixSignal::from_rows(f.rows() + g.rows(), f.n());
}

MatrixSignal sub(const MatrixSignal& f, const MatrixSignal& g) {
  require_same_shape(f, g, "sub");
  return MatrixSignal::from_rows(f.rows() - g.rows(), f.n());
}

MatrixSignal scale(Complex c, const MatrixSignal& f) {
  return MatrixSignal::from_rows(c * f.rows(), f.n());
}

MatrixSignal combine(std::span<const CMatrix> coeffs, std::span<const MatrixSignal> signals) {
  if (signals.empty() || coeffs.size() != signals.size()) {
    throw DimensionMismatch("combine: need one coefficient per signal");
  }
  const Index n = signals.front().n();
  CMatrix rows = CMatrix::Zero(n, signals.front().rows().cols());
  for (std::size_t k = 0; k < signals.size(); ++k) {
    require_same_shape(signals.front(), signals[k], "combine");
    require_square(coeffs[k], n, "combine");
    rows.noalias() += coeffs[k] * signals[k].rows();
  }
  return MatrixSignal::from_rows(std::move(rows), n);
}

bool is_orthogonal_b(const MatrixSignal& f, const MatrixSignal& g, double tol) {
  const double scale = std::max(1.0, norm_m(f) * norm_m(g));
  return inner_product(f, g).norm() <= tol * scale;
}

bool is_orthogonal_c(const MatrixSignal& f, const MatrixSignal& g, double tol) {
  const double scale = std::max(1.0, norm_m(f) * norm_m(g));
  return std::abs(scalar_inner_product(f, g)) <= tol * scale;
}

double orthonormality_residual(std::span<const MatrixSignal> family) {
  double worst = 0.0;
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (std::size_t l = k; l < family.size(); ++l) {
      CMatrix d = inner_product(family[k], family[l]);
      if (k == l) d -= CMatrix::Identity(d.rows(), d.cols());
      worst = std::max(worst, d.norm());
    }
  }
  return worst;
}

bool is_orthonormal_set(std::span<const MatrixSignal> family, double tol) {
  return orthonormality_residual(family) <= tol;
}

}  // namespace mvsig
