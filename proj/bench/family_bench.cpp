// Serial vs OpenMP family checks on one large seeded family.
//
//   family_bench [nodes] [extra_edges] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fixtures.hpp"

using namespace tatepol;

namespace {

template <class Fn>
double best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  testing::FamilyOptions o;
  o.nodes = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  o.extra_edges = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 800;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  o.genus = 3;
  o.toric_rank = 2;
  o.loops = o.nodes / 10;

  Rng rng(2024);
  const TorusFamily f = testing::random_coherent_family(rng, o);
  const GlobalPairing p = assemble_global_pairing(f);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("family: %zu nodes, %zu edges, genus %zu, toric rank %zu; %d thread(s)\n", f.nodes.size(),
              f.edges.size(), o.genus, o.toric_rank, threads);

  FamilyReport a, b, c, d;
  const double vs = best_of(repeats, [&] { a = serial::validate_family(f); });
  const double vp = best_of(repeats, [&] { b = validate_family(f); });
  const double cs = best_of(repeats, [&] { c = serial::check_global_pairing(f, p); });
  const double cp = best_of(repeats, [&] { d = check_global_pairing(f, p); });

  std::printf("%-22s %10s %10s %8s\n", "", "serial s", "openmp s", "speedup");
  std::printf("%-22s %10.4f %10.4f %8.2f\n", "validate_family", vs, vp, vs / vp);
  std::printf("%-22s %10.4f %10.4f %8.2f\n", "check_global_pairing", cs, cp, cs / cp);

  const bool same = a.violations == b.violations && c.violations == d.violations;
  std::printf("reports identical: %s\n", same ? "yes" : "no");
  return same && a.ok() && c.ok() ? 0 : 1;
}
