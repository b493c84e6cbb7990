#include "tatepol/torus.hpp"

#include "tatepol/errors.hpp"

namespace tatepol {

ComplexTorus make_torus(std::size_t g, RatMatrix J) {
  if (!J.is_square() || J.rows() % 2 != 0)
    throw InvariantError("complex structure violation: J must be square of even size");
  if (g == 0) throw InvariantError("complex structure violation: genus must be at least 1");
  if (J.rows() != 2 * g) throw InvariantError("complex structure violation: J must be 2g x 2g");
  if (J * J != -RatMatrix::identity(2 * g)) throw InvariantError("complex structure violation: J^2 != -I");
  return ComplexTorus(g, std::move(J));
}

ComplexTorus standard_torus(std::size_t g) {
  RatMatrix J(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    J(2 * k, 2 * k + 1) = -1;
    J(2 * k + 1, 2 * k) = 1;
  }
  return make_torus(g, std::move(J));
}

ComplexTorus product(const ComplexTorus& a, const ComplexTorus& b) {
  return make_torus(a.genus() + b.genus(), block_diag(a.J(), b.J()));
}

TorusHomomorphism check_homomorphism(IntMatrix F, const ComplexTorus& src, const ComplexTorus& tgt) {
  if (F.rows() != tgt.lattice_rank() || F.cols() != src.lattice_rank())
    throw InvariantError("homomorphism matrix has the wrong size");
  RatMatrix Fq = to_rational(F);
  if (tgt.J() * Fq != Fq * src.J()) throw InvariantError("map is not C-linear: J_target F != F J_source");
  return TorusHomomorphism(src, tgt, std::move(F));
}

TorusHomomorphism identity_map(const ComplexTorus& t) {
  return check_homomorphism(IntMatrix::identity(t.lattice_rank()), t, t);
}

TorusHomomorphism compose(const TorusHomomorphism& g, const TorusHomomorphism& f) {
  if (f.target() != g.source()) throw InvariantError("compose: target of f is not the source of g");
  return check_homomorphism(g.matrix() * f.matrix(), f.source(), g.target());
}

TorusHomomorphism multiplication_map(const ComplexTorus& t) {
  const std::size_t n = t.lattice_rank();
  IntMatrix F(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    F(i, i) = 1;
    F(i, n + i) = 1;
  }
  return check_homomorphism(std::move(F), product(t, t), t);
}

TorusHomomorphism first_inclusion(const ComplexTorus& t) {
  const std::size_t n = t.lattice_rank();
  IntMatrix F(2 * n, n);
  F.set_block(0, 0, IntMatrix::identity(n));
  return check_homomorphism(std::move(F), t, product(t, t));
}

TorusHomomorphism second_inclusion(const ComplexTorus& t) {
  const std::size_t n = t.lattice_rank();
  IntMatrix F(2 * n, n);
  F.set_block(n, 0, IntMatrix::identity(n));
  return check_homomorphism(std::move(F), t, product(t, t));
}

TorusHomomorphism swap_factors(const ComplexTorus& a, const ComplexTorus& b) {
  const std::size_t na = a.lattice_rank(), nb = b.lattice_rank();
  IntMatrix F(na + nb, na + nb);
  F.set_block(0, na, IntMatrix::identity(nb));
  F.set_block(nb, 0, IntMatrix::identity(na));
  return check_homomorphism(std::move(F), product(a, b), product(b, a));
}

}  // namespace tatepol
