#include "mvsig/lattice.hpp"

#include "mvsig/errors.hpp"
#include "mvsig/independence.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mvsig {

MatrixLattice MatrixLattice::create(SignalFamily basis, const ToleranceConfig& cfg) {
  if (basis.field() != Field::Real) throw NotReal("lattice basis must be real");
  IndependenceReport report = is_linearly_independent(basis, cfg);
  if (!report.independent) throw NotIndependent(std::move(report));

  GramSchmidtResult gs = orthogonalize(basis, cfg);
  double det = 1.0;
  for (double s : gs.step_norms) det *= s;
  return MatrixLattice(std::move(basis), std::move(gs), det);
}

namespace {

template <class Matrix>
void check_coeff_shapes(const MatrixLattice& lat, std::span<const Matrix> coeffs) {
  if (coeffs.size() != lat.rank()) {
    throw DimensionMismatch("lattice point needs " + std::to_string(lat.rank()) + " coefficients");
  }
  for (const auto& c : coeffs) {
    if (c.rows() != lat.n() || c.cols() != lat.n()) {
      throw DimensionMismatch("lattice coefficients must be " + std::to_string(lat.n()) + "x" +
                              std::to_string(lat.n()));
    }
  }
}

MatrixSignal synthesize(const MatrixLattice& lat, std::span<const IMatrix> coeffs) {
  CMatrix rows = CMatrix::Zero(lat.n(), lat.n() * lat.basis().m());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    rows.noalias() += coeffs[k].cast<double>().cast<Complex>() * lat.basis()[k].rows();
  }
  return MatrixSignal::from_rows(std::move(rows), lat.n());
}

}  // namespace

LatticePoint point(const MatrixLattice& lat, std::span<const IMatrix> coeffs) {
  check_coeff_shapes(lat, coeffs);
  return {std::vector<IMatrix>(coeffs.begin(), coeffs.end()), synthesize(lat, coeffs)};
}

LatticePoint point_from_real(const MatrixLattice& lat, std::span<const RMatrix> coeffs) {
  check_coeff_shapes(lat, coeffs);
  std::vector<IMatrix> ints;
  ints.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    IMatrix z(c.rows(), c.cols());
    for (Index i = 0; i < c.rows(); ++i) {
      for (Index j = 0; j < c.cols(); ++j) {
        const double v = c(i, j);
        if (!std::isfinite(v) || v != std::nearbyint(v) || std::abs(v) > 9.0e15) {
          throw NonIntegerCoefficient("lattice coefficient entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is not an integer");
        }
        z(i, j) = static_cast<std::int64_t>(v);
      }
    }
    ints.push_back(std::move(z));
  }
  return point(lat, ints);
}

std::uint64_t enumeration_count(const MatrixLattice& lat, std::int64_t bound, std::uint64_t cap) {
  if (bound < 0) throw std::invalid_argument("enumeration bound must be nonnegative");
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t slots = lat.rank() * static_cast<std::uint64_t>(lat.n() * lat.n());
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < slots; ++i) {
    if (total > cap / width) {
      throw CapExceeded("enumeration of (2*" + std::to_string(bound) + "+1)^" +
                        std::to_string(slots) + " points exceeds cap " + std::to_string(cap));
    }
    total *= width;
  }
  return total;
}

PointEnumerator::PointEnumerator(const MatrixLattice& lat, std::int64_t bound, std::uint64_t cap)
    : lat_(&lat),
      bound_(bound),
      total_(enumeration_count(lat, bound, cap)),
      digits_(lat.rank() * static_cast<std::size_t>(lat.n() * lat.n()), -bound) {}

std::optional<LatticePoint> PointEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  const Index n = lat_->n();
  std::vector<IMatrix> coeffs(lat_->rank(), IMatrix(n, n));
  std::size_t pos = 0;
  for (auto& c : coeffs) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) c(i, j) = digits_[pos++];
    }
  }
  ++emitted_;
  // odometer increment, last digit fastest
  for (std::size_t d = digits_.size(); d-- > 0;) {
    if (digits_[d] < bound_) {
      ++digits_[d];
      break;
    }
    digits_[d] = -bound_;
  }
  MatrixSignal signal = synthesize(*lat_, coeffs);
  return LatticePoint{std::move(coeffs), std::move(signal)};
}

std::vector<LatticePoint> enumerate_points(const MatrixLattice& lat, std::int64_t bound,
                                           std::uint64_t cap) {
  PointEnumerator it(lat, bound, cap);
  std::vector<LatticePoint> out;
  out.reserve(it.total());
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

NearestPoint nearest_point_bruteforce(const MatrixLattice& lat, const MatrixSignal& target,
                                      std::int64_t bound, std::uint64_t cap) {
  if (!target.same_shape(lat.basis()[0])) {
    throw DimensionMismatch("nearest_point_bruteforce: target shape differs from the basis");
  }
  PointEnumerator it(lat, bound, cap);
  std::optional<NearestPoint> best;
  while (auto p = it.next()) {
    const double d = norm_m(target - p->signal);
    if (!best || d < best->distance) best = NearestPoint{std::move(*p), d};
  }
  return std::move(*best);
}

double verify_gram_identity(const MatrixLattice& lat) {
  return gram_identity_residual(lat.basis(), lat.gs());
}

bool verify_norm_inequality(const MatrixLattice& lat) {
  return norm_inequality_holds(lat.basis(), lat.gs(), 1e-9);
}

}  // namespace mvsig
