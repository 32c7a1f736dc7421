#include "mvsig/independence.hpp"

#include "mvsig/errors.hpp"
#include "mvsig/linalg.hpp"
#include "mvsig/random.hpp"

#include <cmath>

namespace mvsig {

bool is_degenerate(const MatrixSignal& f, const ToleranceConfig& cfg) {
  return rank_tol(inner_product(f, f), cfg) < f.n();
}

bool rows_linearly_dependent(const MatrixSignal& f, const ToleranceConfig& cfg) {
  const Eigen::JacobiSVD<CMatrix> svd(f.rows());
  const Eigen::VectorXd sq = svd.singularValues().array().square();
  const double reference = sq.size() ? sq.maxCoeff() : 0.0;
  if (reference <= 0.0) return true;
  const Index rank = (sq.array() > cfg.rank_rel_tol * reference).count();
  return rank < f.n();
}

BlockGram block_gram(const SignalFamily& fam) {
  BlockGram g;
  g.k = fam.size();
  g.n = fam.n();
  g.blocks.resize(g.k * g.k);
  g.assembled.resize(static_cast<Index>(g.k) * g.n, static_cast<Index>(g.k) * g.n);
  for (std::size_t r = 0; r < g.k; ++r) {
    for (std::size_t c = r; c < g.k; ++c) {
      g.blocks[r * g.k + c] = inner_product(fam[r], fam[c]);
      if (c != r) g.blocks[c * g.k + r] = g.blocks[r * g.k + c].adjoint();
    }
  }
  for (std::size_t r = 0; r < g.k; ++r) {
    for (std::size_t c = 0; c < g.k; ++c) {
      g.assembled.block(static_cast<Index>(r) * g.n, static_cast<Index>(c) * g.n, g.n, g.n) =
          g.block(r, c);
    }
  }
  return g;
}

IndependenceReport is_linearly_independent(const SignalFamily& fam, const ToleranceConfig& cfg) {
  const BlockGram g = block_gram(fam);
  const EigenDecomposition eig = hermitian_eig(g.assembled, cfg);

  IndependenceReport report;
  report.required_rank = static_cast<Index>(g.k) * g.n;
  report.block_gram_rank = rank_tol(g.assembled, cfg);
  report.min_eigenvalue = eig.eigenvalues.minCoeff();
  report.independent = report.block_gram_rank == report.required_rank;

  if (!report.independent) {
    auto witness = find_dependence_witness(fam, cfg);
    if (witness) {
      ++report.witnesses_checked;
      if (!verify_independence_witness(fam, *witness, cfg)) report.witness = std::move(witness);
    }
  }
  return report;
}

bool verify_independence_witness(const SignalFamily& fam, std::span<const CMatrix> coeffs,
                                 const ToleranceConfig& cfg) {
  if (coeffs.size() != fam.size()) {
    throw DimensionMismatch("verify_independence_witness: need one coefficient per signal");
  }
  const MatrixSignal f = combine(coeffs, fam.signals());

  // scale of the terms that were summed, so cancellation to roundoff reads as zero
  double magnitude = 0.0;
  for (std::size_t k = 0; k < fam.size(); ++k) magnitude += coeffs[k].norm() * norm_l2(fam[k]);

  const CMatrix null_basis = null_space_basis(inner_product(f, f), cfg, magnitude * magnitude);
  if (null_basis.cols() == 0) return true;
  for (const auto& a : coeffs) {
    if (!null_space_included(a, null_basis, cfg)) return false;
  }
  return true;
}

std::optional<std::vector<CMatrix>> find_dependence_witness(const SignalFamily& fam,
                                                            const ToleranceConfig& cfg,
                                                            std::uint64_t seed) {
  const BlockGram g = block_gram(fam);
  const CMatrix null_basis = null_space_basis(g.assembled, cfg);
  if (null_basis.cols() == 0) return std::nullopt;

  const Index n = g.n;
  Eigen::VectorXcd w;
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
  if (seed == 0) {
    w = null_basis.col(0);
    u[0] = 1.0;
  } else {
    Rng rng(seed);
    w = null_basis * rng.matrix(null_basis.cols(), 1);
    u = rng.matrix(n, 1);
    w.normalize();
    u.normalize();
  }

  std::vector<CMatrix> coeffs;
  coeffs.reserve(g.k);
  for (std::size_t k = 0; k < g.k; ++k) {
    coeffs.emplace_back(u * w.segment(static_cast<Index>(k) * n, n).adjoint());
  }
  return coeffs;
}

}  // namespace mvsig

namespace mvsig {

NotIndependent::NotIndependent(IndependenceReport report)
    : Error("family is not linearly independent (block Gram rank " +
            std::to_string(report.block_gram_rank) + " of " +
            std::to_string(report.required_rank) + ")"),
      report_(std::move(report)) {}

}  // namespace mvsig
