#pragma once

// Matrix-valued signals f(t) = sum_m C_m phi_m(t), stored by their N x N
// coefficient matrices over an implicit orthonormal scalar basis {phi_m} of
// L2(a,b). Because the scalar basis is orthonormal, every integral of a
// product f(t) g(t)^H reduces to a finite sum over coefficients.

#include "mvsig/types.hpp"

#include <span>
#include <vector>

namespace mvsig {

enum class Field { Real, Complex };

class MatrixSignal {
 public:
  /// Zero signal with n x n coefficients and m basis terms.
  MatrixSignal(Index n, Index m);

  /// Builds from M coefficient matrices; all must be square and of equal size.
  explicit MatrixSignal(std::span<const CMatrix> coeffs);
  explicit MatrixSignal(const std::vector<CMatrix>& coeffs)
      : MatrixSignal(std::span<const CMatrix>(coeffs)) {}

  /// Builds from the N x (M*N) row-function matrix [C_1 C_2 ... C_M].
  static MatrixSignal from_rows(CMatrix rows, Index n);

  /// e_k: coefficient k equals I_N, all others zero.
  static MatrixSignal canonical(Index n, Index m, Index k);

  Index n() const noexcept { return n_; }
  Index m() const noexcept { return m_; }

  /// Coefficient matrix C_i (0-based).
  CMatrix coeff(Index i) const { return rows_.middleCols(i * n_, n_); }
  std::vector<CMatrix> coeffs() const;

  /// Row i of this matrix is the i-th scalar row function of f written in
  /// the product basis {e_j phi_m}: the concatenation of row i of C_1..C_M.
  const CMatrix& rows() const noexcept { return rows_; }

  /// Real iff every entry has an exactly zero imaginary part.
  Field field() const;
  double max_imag() const;

  /// Drops imaginary parts.
  MatrixSignal real_part() const;

  bool same_shape(const MatrixSignal& other) const noexcept {
    return n_ == other.n_ && m_ == other.m_;
  }

  friend bool operator==(const MatrixSignal& a, const MatrixSignal& b) {
    return a.same_shape(b) && a.rows_ == b.rows_;
  }

 private:
  MatrixSignal(CMatrix rows, Index n, Index m);

  CMatrix rows_;
  Index n_;
  Index m_;
};

/// <f,g> = integral of f(t) g(t)^H = sum_m C_m D_m^H.
GramMatrix inner_product(const MatrixSignal& f, const MatrixSignal& g);

/// ||f||_M = ||<f,f>||_F^{1/2}.
double norm_m(const MatrixSignal& f);

/// (integral ||f(t)||_F^2 dt)^{1/2} = (sum_m ||C_m||_F^2)^{1/2}.
double norm_l2(const MatrixSignal& f);

/// tr <f,g>, the scalar inner product of the concatenated row vectors.
Complex scalar_inner_product(const MatrixSignal& f, const MatrixSignal& g);

MatrixSignal left_mul(const CMatrix& a, const MatrixSignal& f);
MatrixSignal right_mul(const MatrixSignal& f, const CMatrix& a);
MatrixSignal add(const MatrixSignal& f, const MatrixSignal& g);
MatrixSignal sub(const MatrixSignal& f, const MatrixSignal& g);
MatrixSignal scale(Complex c, const MatrixSignal& f);

inline MatrixSignal operator+(const MatrixSignal& f, const MatrixSignal& g) { return add(f, g); }
inline MatrixSignal operator-(const MatrixSignal& f, const MatrixSignal& g) { return sub(f, g); }
inline MatrixSignal operator*(const CMatrix& a, const MatrixSignal& f) { return left_mul(a, f); }

/// sum_k a_k f_k. Requires a non-empty, shape-consistent family.
MatrixSignal combine(std::span<const CMatrix> coeffs, std::span<const MatrixSignal> signals);

/// Orthogonality B: ||<f,g>||_F <= tol * max(1, ||f||_M ||g||_M).
bool is_orthogonal_b(const MatrixSignal& f, const MatrixSignal& g, double tol);

/// Orthogonality C: |tr <f,g>| <= tol * max(1, ||f||_M ||g||_M).
bool is_orthogonal_c(const MatrixSignal& f, const MatrixSignal& g, double tol);

/// max over pairs of ||<Phi_k,Phi_l> - delta(k-l) I_N||_F.
double orthonormality_residual(std::span<const MatrixSignal> family);

/// orthonormality_residual(family) <= tol.
bool is_orthonormal_set(std::span<const MatrixSignal> family, double tol);

}  // namespace mvsig
