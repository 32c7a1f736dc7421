#pragma once

#include "mvsig/signal.hpp"

#include <span>
#include <vector>

namespace mvsig {

/// An ordered, non-empty set of signals sharing N and M.
class SignalFamily {
 public:
  explicit SignalFamily(std::vector<MatrixSignal> signals);

  std::size_t size() const noexcept { return signals_.size(); }
  Index n() const noexcept { return signals_.front().n(); }
  Index m() const noexcept { return signals_.front().m(); }

  const MatrixSignal& operator[](std::size_t k) const { return signals_[k]; }
  std::span<const MatrixSignal> signals() const noexcept { return signals_; }

  auto begin() const noexcept { return signals_.begin(); }
  auto end() const noexcept { return signals_.end(); }

  /// Real iff every member is real.
  Field field() const;
  SignalFamily real_part() const;

  friend bool operator==(const SignalFamily&, const SignalFamily&) = default;

 private:
  std::vector<MatrixSignal> signals_;
};

}  // namespace mvsig
