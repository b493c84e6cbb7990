#pragma once

// Semi-abelian fibers 0 -> L -> G -> A -> 0 with L a torus of rank r. Every
// bundle on G is pulled back from A, so a model is (r, A, bundle on A).
// The Tate module T(G) has rank r + 2g in the canonical chart where the
// first r basis vectors span the weight sublattice W = T(L).

#include "tatepol/tate_pairing.hpp"

namespace tatepol {

class SemiabelianModel {
 public:
  SemiabelianModel(std::size_t toric_rank, AppellHumbertBundle bundle)
      : toric_rank_(toric_rank), bundle_(std::move(bundle)) {}

  std::size_t toric_rank() const { return toric_rank_; }
  const ComplexTorus& abelian() const { return bundle_.torus(); }
  const AppellHumbertBundle& bundle() const { return bundle_; }
  std::size_t tate_rank() const { return toric_rank_ + abelian().lattice_rank(); }

 private:
  std::size_t toric_rank_;
  AppellHumbertBundle bundle_;
};

struct TateModule {
  std::size_t rank = 0;
  SaturatedSublattice W;
};

TateModule tate_module(const SemiabelianModel& g);

/// [[0_r, 0], [0, eta(bundle)]] in the canonical chart.
PairingForm polarization_from_bundle(const SemiabelianModel& g);

/// Kernel of the pairing equals W exactly. Throws InvariantError on size mismatch.
bool check_polarization(const PairingForm& p, const TateModule& t);

struct FiberReport {
  bool ample = false;
  bool polarized = false;
  std::size_t kernel_rank = 0;
  std::size_t weight_rank = 0;
  /// ample => polarized; false would mean a defect in this library.
  bool implication_holds = true;
};

FiberReport verify_main_theorem_fiber(const SemiabelianModel& g);

}  // namespace tatepol
