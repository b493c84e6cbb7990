#pragma once

// Complex tori V/Gamma modeled as Gamma = Z^{2g} together with a rational
// complex structure J on Gamma (x) R, J^2 = -I. Period matrices are never
// stored; everything downstream factors through (Gamma, J).

#include "tatepol/linalg.hpp"

namespace tatepol {

class ComplexTorus {
 public:
  std::size_t genus() const { return genus_; }
  std::size_t lattice_rank() const { return 2 * genus_; }
  const RatMatrix& J() const { return J_; }

  friend bool operator==(const ComplexTorus& a, const ComplexTorus& b) { return a.J_ == b.J_; }
  friend bool operator!=(const ComplexTorus& a, const ComplexTorus& b) { return !(a == b); }

 private:
  friend ComplexTorus make_torus(std::size_t g, RatMatrix J);
  ComplexTorus(std::size_t g, RatMatrix J) : genus_(g), J_(std::move(J)) {}

  std::size_t genus_ = 0;
  RatMatrix J_;
};

/// Validates g >= 1, J of size 2g x 2g and J^2 = -I. Throws InvariantError.
ComplexTorus make_torus(std::size_t g, RatMatrix J);

/// J = block-diag of g copies of [[0,-1],[1,0]].
ComplexTorus standard_torus(std::size_t g);

/// T1 x T2: genus g1 + g2, J = block-diag(J1, J2).
ComplexTorus product(const ComplexTorus& a, const ComplexTorus& b);

/// Integral C-linear map of lattices: J_target * F = F * J_source.
class TorusHomomorphism {
 public:
  const ComplexTorus& source() const { return source_; }
  const ComplexTorus& target() const { return target_; }
  /// 2g_target x 2g_source
  const IntMatrix& matrix() const { return F_; }

 private:
  friend TorusHomomorphism check_homomorphism(IntMatrix F, const ComplexTorus& src, const ComplexTorus& tgt);
  TorusHomomorphism(ComplexTorus s, ComplexTorus t, IntMatrix F)
      : source_(std::move(s)), target_(std::move(t)), F_(std::move(F)) {}

  ComplexTorus source_;
  ComplexTorus target_;
  IntMatrix F_;
};

/// Throws InvariantError on size mismatch or when F is not C-linear.
TorusHomomorphism check_homomorphism(IntMatrix F, const ComplexTorus& src, const ComplexTorus& tgt);

TorusHomomorphism identity_map(const ComplexTorus& t);
/// g o f
TorusHomomorphism compose(const TorusHomomorphism& g, const TorusHomomorphism& f);
/// m: T x T -> T, matrix [I | I].
TorusHomomorphism multiplication_map(const ComplexTorus& t);
/// e -> (e, 0) and e -> (0, e).
TorusHomomorphism first_inclusion(const ComplexTorus& t);
TorusHomomorphism second_inclusion(const ComplexTorus& t);
/// T1 x T2 -> T2 x T1.
TorusHomomorphism swap_factors(const ComplexTorus& a, const ComplexTorus& b);

}  // namespace tatepol
