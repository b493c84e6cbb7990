#include "tatepol/appell_humbert.hpp"

#include <sstream>
#include <stdexcept>

#include "tatepol/errors.hpp"

namespace tatepol {

namespace {

// First basis pair (i, j) with E(J e_i, J e_j) != E(e_i, e_j).
std::optional<std::pair<std::size_t, std::size_t>> compatibility_witness(const RatMatrix& J, const IntMatrix& E) {
  RatMatrix Eq = to_rational(E);
  RatMatrix twisted = J.transpose() * Eq * J;
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j)
      if (twisted(i, j) != Eq(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

void require_compatible(const AlternatingForm& form) {
  if (auto w = compatibility_witness(form.torus().J(), form.E())) {
    std::ostringstream os;
    os << "incompatible (J, E): E(J e" << w->first + 1 << ", J e" << w->second + 1 << ") != E(e" << w->first + 1
       << ", e" << w->second + 1 << ")";
    throw InvariantError(os.str());
  }
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

AlternatingForm make_alternating_form(const ComplexTorus& torus, IntMatrix E) {
  if (E.rows() != torus.lattice_rank() || E.cols() != torus.lattice_rank())
    throw InvariantError("alternating form has the wrong size for its torus");
  if (!is_alternating(E)) throw InvariantError("form is not alternating");
  return AlternatingForm(torus, std::move(E));
}

bool AlternatingForm::is_compatible() const { return !compatibility_witness(torus_.J(), E_).has_value(); }

HermitianPresentation hermitian_from_alternating(const AlternatingForm& form) {
  require_compatible(form);
  RatMatrix S = -(to_rational(form.E()) * form.torus().J());
  if (!is_symmetric(S)) throw std::logic_error("S = -E J is not symmetric for a compatible form");
  return {std::move(S), form.E()};
}

AlternatingForm alternating_from_hermitian(const RatMatrix& S, const IntMatrix& E, const ComplexTorus& torus) {
  AlternatingForm form = make_alternating_form(torus, E);
  if (S.rows() != E.rows() || S.cols() != E.cols()) throw InvariantError("hermitian presentation: S and E sizes differ");
  if (!is_symmetric(S)) throw InvariantError("hermitian presentation: real part S is not symmetric");
  if (S != -(to_rational(E) * torus.J())) throw InvariantError("hermitian presentation: S != -E J");
  return form;
}

Rational reduce_angle(const Rational& a) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return a - Rational(fl);
}

AppellHumbertBundle make_bundle(AlternatingForm form, std::vector<Rational> angles) {
  if (angles.size() != form.torus().lattice_rank()) throw InvariantError("pseudo-character needs one angle per basis vector");
  require_compatible(form);
  for (auto& a : angles) a = reduce_angle(a);
  return AppellHumbertBundle(std::move(form), PseudoCharacter{std::move(angles)});
}

AppellHumbertBundle make_bundle(const ComplexTorus& torus, IntMatrix E, std::vector<Rational> angles) {
  return make_bundle(make_alternating_form(torus, std::move(E)), std::move(angles));
}

AppellHumbertBundle trivial_bundle(const ComplexTorus& torus) {
  const std::size_t n = torus.lattice_rank();
  return make_bundle(torus, IntMatrix(n, n), std::vector<Rational>(n));
}

Rational extend_pseudocharacter(const std::vector<Rational>& angles, const IntMatrix& E, const IntVector& u) {
  if (u.size() != angles.size() || E.rows() != u.size()) throw std::invalid_argument("pseudo-character: size mismatch");
  Rational linear = 0;
  Integer quadratic = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    linear += Rational(u[i]) * angles[i];
    for (std::size_t j = i + 1; j < u.size(); ++j) quadratic += u[i] * u[j] * E(i, j);
  }
  return reduce_angle(linear + Rational(quadratic) / 2);
}

Rational extend_pseudocharacter(const AppellHumbertBundle& b, const IntVector& u) {
  return extend_pseudocharacter(b.rho().angles, b.E(), u);
}

AppellHumbertBundle tensor(const AppellHumbertBundle& a, const AppellHumbertBundle& b) {
  if (a.torus() != b.torus()) throw InvariantError("tensor: bundles live on different tori");
  std::vector<Rational> angles(a.rho().angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = a.rho().angles[i] + b.rho().angles[i];
  return make_bundle(a.torus(), a.E() + b.E(), std::move(angles));
}

AppellHumbertBundle pullback(const TorusHomomorphism& f, const AppellHumbertBundle& b) {
  if (f.target() != b.torus()) throw InvariantError("pullback: bundle does not live on the target of the map");
  const IntMatrix& F = f.matrix();
  IntMatrix E = F.transpose() * b.E() * F;
  std::vector<Rational> angles(F.cols());
  for (std::size_t i = 0; i < F.cols(); ++i) angles[i] = extend_pseudocharacter(b, F.column(i));
  AlternatingForm form = make_alternating_form(f.source(), std::move(E));
  if (!form.is_compatible()) throw std::logic_error("pullback along a C-linear map produced an incompatible form");
  return make_bundle(std::move(form), std::move(angles));
}

AlternatingForm chern_class(const AppellHumbertBundle& b) { return b.form(); }

bool is_ample(const AppellHumbertBundle& b) { return is_positive_definite(hermitian_from_alternating(b.form()).S); }

// ---------------------------------------------------------------------------
// Symplectic normal form

namespace {

// Congruence moves on the working basis U and the Gram matrix A = U^T E U.
struct Congruence {
  IntMatrix& U;
  IntMatrix& A;

  void swap(std::size_t a, std::size_t b) {
    U.swap_cols(a, b);
    A.swap_cols(a, b);
    A.swap_rows(a, b);
  }
  // basis[dst] += q * basis[src]
  void add(std::size_t dst, std::size_t src, const Integer& q) {
    U.add_col(dst, src, q);
    A.add_col(dst, src, q);
    A.add_row(dst, src, q);
  }
  void negate(std::size_t c) {
    U.negate_col(c);
    A.negate_col(c);
    A.negate_row(c);
  }
};

}  // namespace

IntMatrix symplectic_block(const std::vector<Integer>& divisors, std::size_t kernel_rank) {
  const std::size_t k = divisors.size();
  IntMatrix B(2 * k + kernel_rank, 2 * k + kernel_rank);
  for (std::size_t t = 0; t < k; ++t) {
    B(t, k + t) = divisors[t];
    B(k + t, t) = -divisors[t];
  }
  return B;
}

SymplecticNormalForm symplectic_normal_form(const IntMatrix& E) {
  if (!is_alternating(E)) throw InvariantError("symplectic normal form needs an alternating matrix");
  const std::size_t n = E.rows();
  IntMatrix U = IntMatrix::identity(n);
  IntMatrix A = E;
  Congruence c{U, A};
  std::vector<Integer> divisors;

  std::size_t pos = 0;
  while (pos + 1 < n) {
    std::size_t bi = n, bj = n;
    Integer best;
    for (std::size_t i = pos; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (A(i, j) == 0) continue;
        if (bi == n || abs(A(i, j)) < best) {
          best = abs(A(i, j));
          bi = i;
          bj = j;
        }
      }
    if (bi == n) break;  // remaining vectors span the kernel

    c.swap(pos, bi);
    if (bj == pos) bj = bi;
    c.swap(pos + 1, bj);
    if (A(pos, pos + 1) < 0) c.negate(pos + 1);
    const std::size_t e = pos, f = pos + 1;
    const Integer d = A(e, f);

    bool clean = true;
    for (std::size_t w = pos + 2; w < n; ++w) {
      Integer q;
      if (A(e, w) != 0) {
        mpz_tdiv_q(q.get_mpz_t(), A(e, w).get_mpz_t(), d.get_mpz_t());
        c.add(w, f, Integer(-q));
        if (A(e, w) != 0) clean = false;
      }
      if (A(f, w) != 0) {
        mpz_tdiv_q(q.get_mpz_t(), A(f, w).get_mpz_t(), d.get_mpz_t());
        c.add(w, e, q);
        if (A(f, w) != 0) clean = false;
      }
    }
    if (!clean) continue;

    std::size_t bad = n;
    for (std::size_t v = pos + 2; v < n && bad == n; ++v)
      for (std::size_t w = v + 1; w < n; ++w)
        if (!mpz_divisible_p(A(v, w).get_mpz_t(), d.get_mpz_t())) {
          bad = v;
          break;
        }
    if (bad != n) {
      c.add(e, bad, Integer(1));
      continue;
    }
    divisors.push_back(d);
    pos += 2;
  }

  // Reorder (e1, f1, e2, f2, ..., kernel) into (e1..ek, f1..fk, kernel).
  const std::size_t k = divisors.size();
  IntMatrix P(n, n);
  for (std::size_t t = 0; t < k; ++t) {
    P(2 * t, t) = 1;
    P(2 * t + 1, k + t) = 1;
  }
  for (std::size_t r = 2 * k; r < n; ++r) P(r, r) = 1;
  return {U * P, std::move(divisors), n - 2 * k};
}

SymplecticNormalForm symplectic_normal_form(const AlternatingForm& form) { return symplectic_normal_form(form.E()); }

KGroup k_group(const AppellHumbertBundle& b) {
  SymplecticNormalForm nf = symplectic_normal_form(b.E());
  KGroup k;
  if (nf.kernel_rank != 0) return k;
  k.finite = true;
  k.order = 1;
  for (const auto& d : nf.divisors) {
    k.order *= d * d;
    if (d != 1) {
      k.invariant_factors.push_back(d);
      k.invariant_factors.push_back(d);
    }
  }
  return k;
}

KernelSubtorus kernel_subtorus(const AppellHumbertBundle& b) {
  SaturatedSublattice sub = kernel_saturated(b.E());
  if (sub.rank() == 0) return {std::move(sub), std::nullopt, std::nullopt, std::nullopt};

  const IntMatrix& K = sub.basis();
  RatMatrix Kq = to_rational(K);
  RatMatrix Kt = Kq.transpose();
  RatMatrix JK = b.torus().J() * Kq;
  auto gram_inv = inverse(Kt * Kq);
  if (!gram_inv) throw std::logic_error("kernel basis is not independent");
  RatMatrix Jsub = *gram_inv * Kt * JK;
  if (Kq * Jsub != JK) throw std::logic_error("kernel of a compatible form is not J-stable");

  ComplexTorus subtorus = make_torus(sub.rank() / 2, Jsub);
  TorusHomomorphism inclusion = check_homomorphism(K, subtorus, b.torus());
  AppellHumbertBundle restricted = pullback(inclusion, b);
  return {std::move(sub), std::move(subtorus), std::move(inclusion), std::move(restricted)};
}

// ---------------------------------------------------------------------------
// Descent cocycle

CocycleExponent cocycle_defect(const AppellHumbertBundle& b, const IntVector& u1, const IntVector& u2,
                               const IntVector& v) {
  const RatMatrix S = hermitian_from_alternating(b.form()).S;
  const IntMatrix& E = b.E();

  const Rational a1 = extend_pseudocharacter(b, u1);
  const Rational a2 = extend_pseudocharacter(b, u2);
  const IntVector u12 = add(u1, u2);
  // Branch of log rho(u1 + u2) fixed by rho(u + v) = exp(i pi E(u, v)) rho(u) rho(v).
  const Rational a12 = a1 + a2 + Rational(bilinear(E, u1, u2)) / 2;
  if (reduce_angle(a12) != extend_pseudocharacter(b, u12))
    throw std::logic_error("pseudo-character extension violates the semicharacter relation");

  auto log_factor = [&](const Rational& angle, const IntVector& u, const IntVector& w) {
    return CocycleExponent{bilinear(S, w, u) + bilinear(S, u, u) / 2, 2 * angle + Rational(bilinear(E, w, u))};
  };
  const CocycleExponent lhs = log_factor(a12, u12, v);
  const CocycleExponent r1 = log_factor(a1, u1, add(u2, v));
  const CocycleExponent r2 = log_factor(a2, u2, v);
  return {lhs.x - r1.x - r2.x, lhs.y - r1.y - r2.y};
}

}  // namespace tatepol
