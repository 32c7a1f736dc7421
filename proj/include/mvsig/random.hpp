#pragma once

// Seeded generators for signals, constant matrices and test families.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Floating-point variates are derived from raw engine output here
// (53-bit uniforms, Box-Muller normals) rather than through the
// implementation-defined <random> distributions, so a seed produces the same
// family on every platform and standard library.

#include "mvsig/family.hpp"
#include "mvsig/types.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace mvsig {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Entries with independent standard normal real (and imaginary) parts.
  CMatrix matrix(Index rows, Index cols, Field field = Field::Complex);
  /// Random N x N matrix with condition number below 1e4.
  CMatrix full_rank(Index n, Field field = Field::Complex);
  /// Haar-distributed unitary (orthogonal when field is Real).
  CMatrix unitary(Index n, Field field = Field::Complex);
  /// Random N x N matrix of the given rank.
  CMatrix of_rank(Index n, Index rank, Field field = Field::Complex);
  /// Signal with Gaussian coefficients.
  MatrixSignal signal(Index n, Index m, Field field = Field::Complex);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

enum class FamilyKind { Independent, Orthonormal, Degenerate, Dependent };

FamilyKind parse_family_kind(std::string_view name);
std::string_view to_string(FamilyKind kind);

/// Deterministic family of K signals.
///
///  - Independent: Gaussian coefficients, redrawn until the block Gram has
///    full rank. Needs M >= K.
///  - Orthonormal: an independent family passed through orthonormalize.
///  - Degenerate: member 0 has row 2 = 3 * row 1 (the zero signal when N = 1),
///    other members Gaussian.
///  - Dependent: members 0 and 1 are A f and B f for one Gaussian f. Needs K >= 2.
///
/// Throws InfeasibleParameters when the kind cannot be realised for (N, M, K).
SignalFamily gen_random_family(std::uint64_t seed, Index n, Index m, std::size_t k,
                               FamilyKind kind, Field field = Field::Complex,
                               const ToleranceConfig& cfg = {});

}  // namespace mvsig
