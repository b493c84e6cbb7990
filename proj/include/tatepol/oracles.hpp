#pragma once

// Deliberately naive reference computations used to cross-check the exact
// library in tests. Exponential in the input size; keep instances small.

#include <cstdint>
#include <vector>

#include "tatepol/linalg.hpp"

namespace tatepol::oracles {

/// All x with entries in [-box, box] and M x = 0.
std::vector<IntVector> brute_kernel(const IntMatrix& m, std::int64_t box);

/// Number of v in (1/D) Z^{2g} / Z^{2g} with E(v, gamma) integral for every
/// basis vector gamma. Throws std::invalid_argument when det E = 0 or the
/// entries do not fit in 32 bits.
std::uint64_t brute_k_group(const IntMatrix& E, std::int64_t denominator_bound);

struct NumericPositivity {
  bool positive = false;
  bool flagged = false;  // some pivot below kPivotThreshold; result advisory only
};

inline constexpr double kPivotThreshold = 1e-6;

/// Floating-point Cholesky.
NumericPositivity numeric_positivity(const RatMatrix& s);

}  // namespace tatepol::oracles
