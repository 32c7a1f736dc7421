#pragma once

// Invariant suite run against a concrete family (the `verify` subcommand).

#include "mvsig/family.hpp"
#include "mvsig/io.hpp"
#include "mvsig/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvsig {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured residual / count, when meaningful
  double threshold = 0.0;  // bound it was compared against
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Inner-product axioms, norm equivalence, degeneracy/row-dependence
/// agreement, independence consistency, Gram-Schmidt and Parseval (when
/// independent), lattice identities (when real and independent), and every
/// property asserted in `claims`. Random constants come from `seed`.
VerificationReport verify_family(const SignalFamily& fam, const Claims& claims,
                                 const ToleranceConfig& cfg, std::uint64_t seed = 1);

}  // namespace mvsig
