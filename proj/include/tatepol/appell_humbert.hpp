#pragma once

// Appell-Humbert data on a torus model. A line bundle L(H, rho) is carried
// as the integral alternating form E = Im H on Gamma together with the
// rational angles of the pseudo-character rho on the basis of Gamma.
//
// Sign convention: the real part of H is S(x, y) = E(Jx, y), which as a
// matrix is S = -E J (J^{-1} = -J). Ample means S positive definite. The
// opposite convention negates every reported pairing.

#include <optional>
#include <vector>

#include "tatepol/linalg.hpp"
#include "tatepol/torus.hpp"

namespace tatepol {

/// Integral alternating form on the lattice of a torus.
class AlternatingForm {
 public:
  const ComplexTorus& torus() const { return torus_; }
  const IntMatrix& E() const { return E_; }

  /// J^T E J == E, i.e. E(Jx, Jy) = E(x, y).
  bool is_compatible() const;

  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) {
    return a.torus_ == b.torus_ && a.E_ == b.E_;
  }

 private:
  friend AlternatingForm make_alternating_form(const ComplexTorus&, IntMatrix);
  AlternatingForm(ComplexTorus t, IntMatrix E) : torus_(std::move(t)), E_(std::move(E)) {}

  ComplexTorus torus_;
  IntMatrix E_;
};

/// Throws InvariantError unless E is 2g x 2g and alternating.
AlternatingForm make_alternating_form(const ComplexTorus& torus, IntMatrix E);

/// H = S + iE stored as its real and imaginary parts.
struct HermitianPresentation {
  RatMatrix S;
  IntMatrix E;
};

HermitianPresentation hermitian_from_alternating(const AlternatingForm& form);
AlternatingForm alternating_from_hermitian(const RatMatrix& S, const IntMatrix& E, const ComplexTorus& torus);

/// rho(gamma_i) = exp(2 pi i a_i), a_i in [0, 1).
struct PseudoCharacter {
  std::vector<Rational> angles;

  friend bool operator==(const PseudoCharacter& a, const PseudoCharacter& b) { return a.angles == b.angles; }
};

/// Reduce a rational into [0, 1).
Rational reduce_angle(const Rational& a);

class AppellHumbertBundle {
 public:
  const AlternatingForm& form() const { return form_; }
  const ComplexTorus& torus() const { return form_.torus(); }
  const IntMatrix& E() const { return form_.E(); }
  const PseudoCharacter& rho() const { return rho_; }

  friend bool operator==(const AppellHumbertBundle& a, const AppellHumbertBundle& b) {
    return a.form_ == b.form_ && a.rho_ == b.rho_;
  }

 private:
  friend AppellHumbertBundle make_bundle(AlternatingForm, std::vector<Rational>);
  AppellHumbertBundle(AlternatingForm f, PseudoCharacter r) : form_(std::move(f)), rho_(std::move(r)) {}

  AlternatingForm form_;
  PseudoCharacter rho_;
};

/// Requires the (J, E) compatibility; angles are reduced into [0, 1).
/// Throws InvariantError with a witness basis pair when incompatible.
AppellHumbertBundle make_bundle(AlternatingForm form, std::vector<Rational> angles);
AppellHumbertBundle make_bundle(const ComplexTorus& torus, IntMatrix E, std::vector<Rational> angles);
AppellHumbertBundle trivial_bundle(const ComplexTorus& torus);

/// Unique extension of the basis angles to all of Gamma satisfying
/// rho(u + v) = exp(i pi E(u, v)) rho(u) rho(v):
///   angle(u) = sum n_i a_i + 1/2 sum_{i<j} n_i n_j E_ij   (mod 1).
Rational extend_pseudocharacter(const AppellHumbertBundle& b, const IntVector& u);
Rational extend_pseudocharacter(const std::vector<Rational>& angles, const IntMatrix& E, const IntVector& u);

AppellHumbertBundle tensor(const AppellHumbertBundle& a, const AppellHumbertBundle& b);
AppellHumbertBundle pullback(const TorusHomomorphism& f, const AppellHumbertBundle& b);

/// c_1(L(H, rho)) = E.
AlternatingForm chern_class(const AppellHumbertBundle& b);

bool is_ample(const AppellHumbertBundle& b);

struct SymplecticNormalForm {
  /// Unimodular; columns e_1..e_k, f_1..f_k, then a basis of ker E.
  IntMatrix U;
  std::vector<Integer> divisors;  // d_1 | d_2 | ... | d_k, all positive
  std::size_t kernel_rank = 0;
};

/// U^T E U = [[0, D], [-D, 0]] (+) 0 with D = diag(divisors).
SymplecticNormalForm symplectic_normal_form(const IntMatrix& E);
SymplecticNormalForm symplectic_normal_form(const AlternatingForm& form);

/// The block matrix [[0, D], [-D, 0]] (+) 0_{kernel_rank}.
IntMatrix symplectic_block(const std::vector<Integer>& divisors, std::size_t kernel_rank);

/// K(L) = Lambda(L) / Gamma. Finite iff det E != 0, then it is
/// (Z/d_1)^2 x ... x (Z/d_g)^2. Factors equal to 1 are omitted.
struct KGroup {
  bool finite = false;
  std::vector<Integer> invariant_factors;
  Integer order = 0;  // meaningful only when finite
};

KGroup k_group(const AppellHumbertBundle& b);

/// The subtorus A' = N / (N cap Gamma) with N = ker H, and the bundle
/// restricted to it (which has E' = 0).
struct KernelSubtorus {
  SaturatedSublattice sub;
  std::optional<ComplexTorus> subtorus;
  std::optional<TorusHomomorphism> inclusion;
  std::optional<AppellHumbertBundle> restricted;

  bool is_zero() const { return sub.rank() == 0; }
};

KernelSubtorus kernel_subtorus(const AppellHumbertBundle& b);

/// Exponent x*pi + y*(i pi) of the descent cocycle.
struct CocycleExponent {
  Rational x;
  Rational y;

  friend bool operator==(const CocycleExponent& a, const CocycleExponent& b) { return a.x == b.x && a.y == b.y; }
};

/// log a(u, v) = 2 pi i angle(u) + pi [S(v, u) + S(u, u)/2] + i pi E(v, u).
/// Returns log a(u1+u2, v) - log a(u1, u2+v) - log a(u2, v), taking the
/// branch of log rho(u1+u2) fixed by the pseudo-character relation. The
/// result is always (0, 2 E(u1, u2)).
CocycleExponent cocycle_defect(const AppellHumbertBundle& b, const IntVector& u1, const IntVector& u2,
                               const IntVector& v);

}  // namespace tatepol
