#include "tatepol/tate_pairing.hpp"

#include "tatepol/errors.hpp"

namespace tatepol {

ProductClass make_product_class(const ComplexTorus& torus, IntMatrix Omega) {
  const std::size_t n = 2 * torus.lattice_rank();
  if (Omega.rows() != n || Omega.cols() != n) throw InvariantError("product class has the wrong size");
  if (!is_alternating(Omega)) throw InvariantError("product class is not alternating");
  return {torus, std::move(Omega)};
}

PairingForm kunneth_project(const ProductClass& c) {
  const std::size_t n = c.torus.lattice_rank();
  return {c.Omega.block(0, n, n, n)};
}

PairingForm eta_from_bundle(const AppellHumbertBundle& b) {
  const AppellHumbertBundle pulled = pullback(multiplication_map(b.torus()), b);
  return kunneth_project(make_product_class(b.torus(), chern_class(pulled).E()));
}

SaturatedSublattice pairing_kernel(const PairingForm& p) {
  if (!p.P.is_square()) throw InvariantError("pairing must be square");
  return kernel_saturated(vstack(p.P, p.P.transpose()));
}

}  // namespace tatepol
