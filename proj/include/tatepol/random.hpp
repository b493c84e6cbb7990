#pragma once

// Seeded generation of valid data: canonical block-diagonal (J, E) pairs
// under a random unimodular change of basis. Draws use only the raw
// mt19937_64 stream, so output is identical across standard libraries.

#include <cstdint>
#include <random>

#include "tatepol/semiabelian.hpp"

namespace tatepol {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class FormKind {
  ample,       // all symplectic divisors positive
  any,         // divisors of random sign, zero allowed
  degenerate,  // at least one zero divisor
};

/// Product of random elementary operations; |det| = 1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps);
IntMatrix unimodular_inverse(const IntMatrix& u);

/// A rational 2x2 complex structure [[p, q], [r, -p]] with r > 0.
RatMatrix random_complex_structure_block(Rng& rng);

std::vector<Rational> random_angles(Rng& rng, std::size_t n);

/// Divisor chain d_1 | d_2 | ... of length g with d_1 >= 1.
std::vector<Integer> random_divisor_chain(Rng& rng, std::size_t g);

struct RandomBundleOptions {
  FormKind kind = FormKind::ample;
  std::size_t conjugation_steps = 0;  // 0 means 2 * lattice rank
};

AppellHumbertBundle random_bundle(Rng& rng, std::size_t g, const RandomBundleOptions& opts = {});
SemiabelianModel random_semiabelian(Rng& rng, std::size_t g, std::size_t toric_rank,
                                    const RandomBundleOptions& opts = {});

}  // namespace tatepol
