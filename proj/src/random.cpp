#include "tatepol/random.hpp"

#include <limits>
#include <stdexcept>

namespace tatepol {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    switch (rng.uniform(0, 5)) {
      case 0:
        u.swap_rows(i, j);
        break;
      case 1:
        u.negate_row(i);
        break;
      default:
        if (i != j) u.add_row(i, j, Integer(rng.uniform(-2, 2)));
        break;
    }
  }
  return u;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  auto inv = inverse(to_rational(u));
  if (!inv) throw std::invalid_argument("matrix is singular");
  auto z = to_integer(*inv);
  if (!z) throw std::invalid_argument("matrix is not unimodular");
  return *z;
}

RatMatrix random_complex_structure_block(Rng& rng) {
  // det = -p^2 - q r = 1 and trace 0 force J^2 = -I.
  Rational pc(Integer(rng.uniform(-3, 3)), Integer(rng.uniform(1, 3)));
  Rational rc(Integer(rng.uniform(1, 3)), Integer(rng.uniform(1, 3)));
  pc.canonicalize();
  rc.canonicalize();
  const Rational q = -(1 + pc * pc) / rc;
  return RatMatrix{{pc, q}, {rc, -pc}};
}

std::vector<Rational> random_angles(Rng& rng, std::size_t n) {
  std::vector<Rational> a(n);
  for (auto& x : a) {
    const std::int64_t den = rng.uniform(1, 12);
    x = Rational(Integer(rng.uniform(0, den - 1)), Integer(den));
    x.canonicalize();
  }
  return a;
}

std::vector<Integer> random_divisor_chain(Rng& rng, std::size_t g) {
  static constexpr int kSteps[] = {1, 1, 1, 2, 3};
  std::vector<Integer> d;
  Integer cur = rng.uniform(1, 3);
  for (std::size_t k = 0; k < g; ++k) {
    if (k) cur *= kSteps[rng.uniform(0, 4)];
    d.push_back(cur);
  }
  return d;
}

AppellHumbertBundle random_bundle(Rng& rng, std::size_t g, const RandomBundleOptions& opts) {
  if (g == 0) throw std::invalid_argument("genus must be at least 1");
  const std::size_t n = 2 * g;
  std::vector<Integer> d = random_divisor_chain(rng, g);
  switch (opts.kind) {
    case FormKind::ample:
      break;
    case FormKind::any:
      for (auto& x : d) {
        const auto pick = rng.uniform(0, 3);
        if (pick == 0) x = 0;
        if (pick == 1) x = -x;
      }
      break;
    case FormKind::degenerate: {
      d[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(g) - 1))] = 0;
      for (auto& x : d)
        if (rng.coin()) x = -x;
      break;
    }
  }

  // Block k: J_k = [[p, q], [r, -p]], E_k = d_k [[0, -1], [1, 0]].
  RatMatrix J0(n, n);
  IntMatrix E0(n, n);
  for (std::size_t k = 0; k < g; ++k) {
    J0.set_block(2 * k, 2 * k, random_complex_structure_block(rng));
    E0(2 * k, 2 * k + 1) = -d[k];
    E0(2 * k + 1, 2 * k) = d[k];
  }
  const std::size_t steps = opts.conjugation_steps ? opts.conjugation_steps : n;
  const IntMatrix C = random_unimodular(rng, n, steps);
  const IntMatrix Cinv = unimodular_inverse(C);
  RatMatrix J = to_rational(Cinv) * J0 * to_rational(C);
  IntMatrix E = C.transpose() * E0 * C;
  return make_bundle(make_torus(g, std::move(J)), std::move(E), random_angles(rng, n));
}

SemiabelianModel random_semiabelian(Rng& rng, std::size_t g, std::size_t toric_rank,
                                    const RandomBundleOptions& opts) {
  return SemiabelianModel(toric_rank, random_bundle(rng, g, opts));
}

}  // namespace tatepol
