#include "mvsig/family.hpp"

#include "mvsig/errors.hpp"

#include <string>

namespace mvsig {

SignalFamily::SignalFamily(std::vector<MatrixSignal> signals) : signals_(std::move(signals)) {
  if (signals_.empty()) throw DimensionMismatch("signal family must be non-empty");
  for (std::size_t k = 1; k < signals_.size(); ++k) {
    if (!signals_[k].same_shape(signals_.front())) {
      throw DimensionMismatch("family member " + std::to_string(k) + " has a different shape");
    }
  }
}

Field SignalFamily::field() const {
  for (const auto& f : signals_) {
    if (f.field() == Field::Complex) return Field::Complex;
  }
  return Field::Real;
}

SignalFamily SignalFamily::real_part() const {
  std::vector<MatrixSignal> out;
  out.reserve(signals_.size());
  for (const auto& f : signals_) out.push_back(f.real_part());
  return SignalFamily(std::move(out));
}

}  // namespace mvsig
