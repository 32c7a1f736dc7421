#include "mvsig/errors.hpp"
#include "mvsig/types.hpp"

#include <cmath>

namespace mvsig {

DegenerateStep::DegenerateStep(std::size_t step, const std::string& what)
    : Error("degenerate Gram-Schmidt step " + std::to_string(step) + ": " + what), step_(step) {}

SchemaError::SchemaError(std::string path, const std::string& what)
    : Error(path + ": " + what), path_(std::move(path)) {}

void ToleranceConfig::validate() const {
  for (double v : {rank_rel_tol, ortho_tol, hermitian_tol, psd_tol}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("tolerances must be finite and nonnegative");
    }
  }
}

}  // namespace mvsig
