#pragma once

// Shared test data: small named examples and seeded generators of coherent
// families and base maps.

#include "tatepol/family.hpp"
#include "tatepol/random.hpp"

namespace tatepol::testing {

/// g = 1, J = [[0, -1], [1, 0]].
ComplexTorus square_curve();

/// Block-diagonal [[0, -1], [1, 0]] per pair, matching standard_torus(g);
/// ample with S = identity.
IntMatrix principal_form(std::size_t g);

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t bound);
IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound);
IntMatrix random_alternating(Rng& rng, std::size_t n, std::int64_t bound);

/// [[A, B], [0, D]] with A (r x r) and D unimodular, B arbitrary: maps
/// span{e_1..e_r} onto itself.
IntMatrix filtered_unimodular(const IntMatrix& A, const IntMatrix& B, const IntMatrix& D);

/// a I + b k J with k the common denominator of J: integral and C-linear.
IntMatrix random_endomorphism(Rng& rng, const ComplexTorus& t);

/// Random bundle whose E has entries of absolute value at most `bound`.
AppellHumbertBundle random_small_bundle(Rng& rng, std::size_t g, FormKind kind, std::int64_t bound);

struct FamilyOptions {
  std::size_t nodes = 3;
  std::size_t genus = 1;
  std::size_t toric_rank = 1;
  std::size_t extra_edges = 3;
  std::size_t loops = 1;
};

/// Every node is a chart change of one ample base fiber; edges are built
/// through the base chart, possibly twisted by an automorphism of the
/// pairing, so the family is valid and coherent.
TorusFamily random_coherent_family(Rng& rng, const FamilyOptions& opts);

/// A random graph map into the base of `f` with `nodes` nodes and up to
/// `edges` edges.
BaseMap random_base_map(Rng& rng, const TorusFamily& f, std::size_t nodes, std::size_t edges);

/// Two nodes a, b of genus 1 with E_b = 2 E_a joined by the identity.
TorusFamily incoherent_family();

}  // namespace tatepol::testing
