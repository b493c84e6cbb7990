#pragma once

// The pairing eta_omega on the Tate module, computed on a fiber: a degree-2
// class omega on T x T is an alternating form on Gamma (+) Gamma, and its
// H^1 (x) H^1 Kunneth component is the off-diagonal block. Tate twists and
// duality shifts carry no lattice data and are not represented.

#include "tatepol/appell_humbert.hpp"

namespace tatepol {

/// omega in H^2(T x T)(1), as an alternating form on Gamma (+) Gamma.
struct ProductClass {
  ComplexTorus torus;
  IntMatrix Omega;  // 4g x 4g
};

ProductClass make_product_class(const ComplexTorus& torus, IntMatrix Omega);

/// Integer bilinear form on a lattice (not necessarily alternating).
struct PairingForm {
  IntMatrix P;

  std::size_t rank() const { return P.rows(); }
  friend bool operator==(const PairingForm& a, const PairingForm& b) { return a.P == b.P; }
};

/// P[i][j] = Omega(e_i, e_{2g+j}).
PairingForm kunneth_project(const ProductClass& c);

/// kunneth_project(c_1(m^* B)).
PairingForm eta_from_bundle(const AppellHumbertBundle& b);

/// Left kernel intersected with right kernel.
SaturatedSublattice pairing_kernel(const PairingForm& p);

}  // namespace tatepol
