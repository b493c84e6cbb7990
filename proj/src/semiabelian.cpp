#include "tatepol/semiabelian.hpp"

#include "tatepol/errors.hpp"

namespace tatepol {

TateModule tate_module(const SemiabelianModel& g) {
  const std::size_t n = g.tate_rank();
  const std::size_t r = g.toric_rank();
  IntMatrix basis(n, r);
  for (std::size_t i = 0; i < r; ++i) basis(i, i) = 1;
  return {n, saturate(basis)};
}

PairingForm polarization_from_bundle(const SemiabelianModel& g) {
  const std::size_t r = g.toric_rank();
  IntMatrix P(g.tate_rank(), g.tate_rank());
  P.set_block(r, r, eta_from_bundle(g.bundle()).P);
  return {std::move(P)};
}

bool check_polarization(const PairingForm& p, const TateModule& t) {
  if (p.rank() != t.rank || !p.P.is_square()) throw InvariantError("pairing size does not match the Tate module");
  return pairing_kernel(p) == t.W;
}

FiberReport verify_main_theorem_fiber(const SemiabelianModel& g) {
  FiberReport rep;
  const TateModule t = tate_module(g);
  const PairingForm p = polarization_from_bundle(g);
  rep.ample = is_ample(g.bundle());
  rep.kernel_rank = pairing_kernel(p).rank();
  rep.weight_rank = t.W.rank();
  rep.polarized = check_polarization(p, t);
  rep.implication_holds = !rep.ample || rep.polarized;
  return rep;
}

}  // namespace tatepol
