#pragma once

// A group scheme over a base, at desk scale: the base is a finite graph,
// each node carries a semi-abelian fiber, and each edge (src, dst, M)
// identifies Tate modules by a filtered lattice isomorphism
// M : T(G_src) -> T(G_dst). A global pairing is one pairing per node,
// compatible along edges: P_src = M^T P_dst M.
//
// validate_family and check_global_pairing evaluate nodes and edges in
// parallel (OpenMP); serial:: keeps the reference implementations. Reports
// list violations in a fixed order: nodes by id, then edges by index.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tatepol/errors.hpp"
#include "tatepol/semiabelian.hpp"

namespace tatepol {

struct FamilyEdge {
  std::string src;
  std::string dst;
  IntMatrix M;
};

struct TorusFamily {
  std::map<std::string, SemiabelianModel> nodes;
  std::vector<FamilyEdge> edges;
};

using GlobalPairing = std::map<std::string, PairingForm>;

/// Graph map B' -> B. Each edge of B' names the edge of B it lies over.
struct BaseEdge {
  std::string src;
  std::string dst;
  std::size_t over = 0;
};

struct BaseMap {
  std::map<std::string, std::string> phi;
  std::vector<BaseEdge> edges;
};

struct Violation {
  enum class Kind { node, edge };
  Kind kind;
  std::string where;  // node id, or "edge <index> (<src> -> <dst>)"
  std::string what;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.kind == b.kind && a.where == b.where && a.what == b.what;
  }
};

struct FamilyReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string edge_label(const TorusFamily& f, std::size_t index);

/// Unimodularity, rank equality and W_src -> W_dst on every edge.
FamilyReport validate_family(const TorusFamily& f);

/// Edge compatibility P_src = M^T P_dst M, and the fiberwise polarization
/// condition at every node.
FamilyReport check_global_pairing(const TorusFamily& f, const GlobalPairing& p);

/// Thrown by assemble_global_pairing when some edge does not carry the
/// assembled pairing of its target back to that of its source.
class IncoherentFamily : public InvariantError {
 public:
  IncoherentFamily(std::size_t edge, const std::string& label)
      : InvariantError("incoherent family: pairing not transported along " + label), edge_(edge), label_(label) {}
  std::size_t edge() const { return edge_; }
  const std::string& label() const { return label_; }

 private:
  std::size_t edge_;
  std::string label_;
};

/// Per-node polarization_from_bundle, after checking coherence on every edge.
GlobalPairing assemble_global_pairing(const TorusFamily& f);

/// Pull (F, P) back along a base map. Throws InvariantError when the map is
/// not a graph homomorphism into the base of F.
std::pair<TorusFamily, GlobalPairing> base_change(const TorusFamily& f, const GlobalPairing& p, const BaseMap& map);

/// M^T P M
PairingForm transport(const PairingForm& p, const IntMatrix& M);

namespace serial {

FamilyReport validate_family(const TorusFamily& f);
FamilyReport check_global_pairing(const TorusFamily& f, const GlobalPairing& p);

}  // namespace serial

}  // namespace tatepol
