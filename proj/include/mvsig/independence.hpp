#pragma once

// Degeneracy and left-matrix-coefficient linear independence.
//
// A family f_1..f_K is linearly independent when, for every choice of
// constant matrices F_k with f = sum F_k f_k degenerate, null(<f,f>) is
// contained in null(F_k^H) for all k. Writing u^H f(t) = sum (u^H F_k) f_k(t)
// shows this holds exactly when the K*N scalar row functions of the family
// are linearly independent in the ordinary sense, i.e. when the KN x KN block
// Gram matrix [<f_k, f_l>] is nonsingular. is_linearly_independent uses that
// characterization; verify_independence_witness checks the defining condition
// for one concrete choice of F_k and is used to cross-validate it.

#include "mvsig/errors.hpp"
#include "mvsig/family.hpp"
#include "mvsig/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mvsig {

struct BlockGram {
  std::size_t k = 0;
  Index n = 0;
  std::vector<CMatrix> blocks;  // row-major K x K, block(k,l) = <f_k, f_l>
  CMatrix assembled;            // KN x KN

  const CMatrix& block(std::size_t row, std::size_t col) const { return blocks[row * k + col]; }
};

struct IndependenceReport {
  bool independent = false;
  Index block_gram_rank = 0;
  Index required_rank = 0;
  double min_eigenvalue = 0.0;
  std::size_t witnesses_checked = 0;
  /// For dependent families: coefficients F_k violating the definition.
  std::optional<std::vector<CMatrix>> witness;
};

/// rank_tol(<f,f>) < N.
bool is_degenerate(const MatrixSignal& f, const ToleranceConfig& cfg);

/// Rank deficiency of the N x (M*N) row-function matrix, judged on squared
/// singular values so the decision matches is_degenerate's eigenvalue test.
bool rows_linearly_dependent(const MatrixSignal& f, const ToleranceConfig& cfg);

BlockGram block_gram(const SignalFamily& fam);

/// Full-rank test on the block Gram. Dependent families get a verified
/// violating witness attached.
IndependenceReport is_linearly_independent(const SignalFamily& fam, const ToleranceConfig& cfg);

/// Evaluates the defining condition for one coefficient choice. Returns false
/// iff f = sum F_k f_k is degenerate and some F_k^H fails to annihilate
/// null(<f,f>); a false result proves the family dependent.
bool verify_independence_witness(const SignalFamily& fam, std::span<const CMatrix> coeffs,
                                 const ToleranceConfig& cfg);

/// Builds F_k = u w_k^H from a null vector w = (w_1..w_K) of the block Gram.
/// Then f = u (sum w_k^H f_k) = 0 while some F_k != 0. With seed 0 the
/// choice is deterministic (u = e_1, w = first null vector); otherwise u and
/// the combination of null vectors are drawn at random. Returns nullopt when
/// the block Gram has full rank.
std::optional<std::vector<CMatrix>> find_dependence_witness(const SignalFamily& fam,
                                                            const ToleranceConfig& cfg,
                                                            std::uint64_t seed = 0);

}  // namespace mvsig

namespace mvsig {

/// Raised when an operation requires an independent family and the block
/// Gram test says otherwise.
class NotIndependent : public Error {
 public:
  explicit NotIndependent(IndependenceReport report);
  const IndependenceReport& report() const noexcept { return report_; }

 private:
  IndependenceReport report_;
};

}  // namespace mvsig
