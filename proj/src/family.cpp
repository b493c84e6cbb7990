#include "tatepol/family.hpp"

#include <optional>

namespace tatepol {

namespace {

using MaybeViolation = std::optional<Violation>;

std::vector<const std::pair<const std::string, SemiabelianModel>*> node_list(const TorusFamily& f) {
  std::vector<const std::pair<const std::string, SemiabelianModel>*> v;
  v.reserve(f.nodes.size());
  for (const auto& kv : f.nodes) v.push_back(&kv);
  return v;
}

Violation edge_violation(const TorusFamily& f, std::size_t i, std::string what) {
  return {Violation::Kind::edge, edge_label(f, i), std::move(what)};
}

MaybeViolation validate_edge(const TorusFamily& f, std::size_t i) {
  const FamilyEdge& e = f.edges[i];
  auto s = f.nodes.find(e.src);
  auto d = f.nodes.find(e.dst);
  if (s == f.nodes.end() || d == f.nodes.end()) return edge_violation(f, i, "endpoint is not a node");
  const SemiabelianModel& gs = s->second;
  const SemiabelianModel& gd = d->second;
  if (gs.tate_rank() != gd.tate_rank()) return edge_violation(f, i, "Tate module ranks differ");
  if (gs.toric_rank() != gd.toric_rank()) return edge_violation(f, i, "toric ranks differ");
  if (e.M.rows() != gs.tate_rank() || e.M.cols() != gs.tate_rank())
    return edge_violation(f, i, "edge matrix has the wrong size");
  if (!is_unimodular(e.M)) return edge_violation(f, i, "edge matrix is not unimodular (det != +-1)");
  if (image(e.M, tate_module(gs).W) != tate_module(gd).W)
    return edge_violation(f, i, "edge matrix does not map W_src onto W_dst");
  return std::nullopt;
}

MaybeViolation check_edge(const TorusFamily& f, const GlobalPairing& p, std::size_t i) {
  const FamilyEdge& e = f.edges[i];
  auto ps = p.find(e.src);
  auto pd = p.find(e.dst);
  if (ps == p.end() || pd == p.end()) return edge_violation(f, i, "endpoint has no pairing");
  if (pd->second.rank() != e.M.rows() || ps->second.rank() != e.M.cols())
    return edge_violation(f, i, "pairing size does not match the edge matrix");
  if (transport(pd->second, e.M) != ps->second) return edge_violation(f, i, "P_src != M^T P_dst M");
  return std::nullopt;
}

MaybeViolation check_node(const std::string& id, const SemiabelianModel& g, const GlobalPairing& p) {
  auto it = p.find(id);
  if (it == p.end()) return Violation{Violation::Kind::node, id, "no pairing at node"};
  const TateModule t = tate_module(g);
  if (it->second.rank() != t.rank) return Violation{Violation::Kind::node, id, "pairing size does not match T(G)"};
  if (!check_polarization(it->second, t))
    return Violation{Violation::Kind::node, id, "pairing kernel differs from the weight sublattice"};
  return std::nullopt;
}

template <class Fn>
MaybeViolation guarded(Violation::Kind kind, const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& ex) {
    return Violation{kind, where, ex.what()};
  }
}

void collect(FamilyReport& rep, std::vector<MaybeViolation>& found) {
  for (auto& v : found)
    if (v) rep.violations.push_back(std::move(*v));
}

}  // namespace

std::string edge_label(const TorusFamily& f, std::size_t index) {
  const FamilyEdge& e = f.edges.at(index);
  return "edge " + std::to_string(index) + " (" + e.src + " -> " + e.dst + ")";
}

PairingForm transport(const PairingForm& p, const IntMatrix& M) { return {M.transpose() * p.P * M}; }

FamilyReport validate_family(const TorusFamily& f) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.edges.size());
  std::vector<MaybeViolation> found(f.edges.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    found[k] = guarded(Violation::Kind::edge, edge_label(f, k), [&] { return validate_edge(f, k); });
  }
  FamilyReport rep;
  collect(rep, found);
  return rep;
}

FamilyReport check_global_pairing(const TorusFamily& f, const GlobalPairing& p) {
  const auto nodes = node_list(f);
  const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(nodes.size());
  const std::ptrdiff_t ne = static_cast<std::ptrdiff_t>(f.edges.size());
  std::vector<MaybeViolation> node_found(nodes.size());
  std::vector<MaybeViolation> edge_found(f.edges.size());
#pragma omp parallel
  {
#pragma omp for schedule(dynamic) nowait
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
      const auto& [id, g] = *nodes[static_cast<std::size_t>(i)];
      node_found[static_cast<std::size_t>(i)] =
          guarded(Violation::Kind::node, id, [&] { return check_node(id, g, p); });
    }
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < ne; ++i) {
      const auto k = static_cast<std::size_t>(i);
      edge_found[k] = guarded(Violation::Kind::edge, edge_label(f, k), [&] { return check_edge(f, p, k); });
    }
  }
  FamilyReport rep;
  collect(rep, node_found);
  collect(rep, edge_found);
  return rep;
}

namespace serial {

FamilyReport validate_family(const TorusFamily& f) {
  FamilyReport rep;
  for (std::size_t i = 0; i < f.edges.size(); ++i)
    if (auto v = guarded(Violation::Kind::edge, edge_label(f, i), [&] { return validate_edge(f, i); }))
      rep.violations.push_back(std::move(*v));
  return rep;
}

FamilyReport check_global_pairing(const TorusFamily& f, const GlobalPairing& p) {
  FamilyReport rep;
  for (const auto& [id, g] : f.nodes)
    if (auto v = guarded(Violation::Kind::node, id, [&] { return check_node(id, g, p); }))
      rep.violations.push_back(std::move(*v));
  for (std::size_t i = 0; i < f.edges.size(); ++i)
    if (auto v = guarded(Violation::Kind::edge, edge_label(f, i), [&] { return check_edge(f, p, i); }))
      rep.violations.push_back(std::move(*v));
  return rep;
}

}  // namespace serial

GlobalPairing assemble_global_pairing(const TorusFamily& f) {
  GlobalPairing p;
  for (const auto& [id, g] : f.nodes) p.emplace(id, polarization_from_bundle(g));
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    const FamilyEdge& e = f.edges[i];
    auto ps = p.find(e.src);
    auto pd = p.find(e.dst);
    if (ps == p.end() || pd == p.end()) throw InvariantError(edge_label(f, i) + ": endpoint is not a node");
    if (e.M.rows() != pd->second.rank() || e.M.cols() != ps->second.rank() ||
        transport(pd->second, e.M) != ps->second)
      throw IncoherentFamily(i, edge_label(f, i));
  }
  return p;
}

std::pair<TorusFamily, GlobalPairing> base_change(const TorusFamily& f, const GlobalPairing& p, const BaseMap& map) {
  TorusFamily out;
  GlobalPairing pulled;
  for (const auto& [id, target] : map.phi) {
    auto node = f.nodes.find(target);
    if (node == f.nodes.end()) throw InvariantError("base map sends " + id + " to unknown node " + target);
    auto pair = p.find(target);
    if (pair == p.end()) throw InvariantError("base map target " + target + " has no pairing");
    out.nodes.emplace(id, node->second);
    pulled.emplace(id, pair->second);
  }
  for (const auto& e : map.edges) {
    if (e.over >= f.edges.size()) throw InvariantError("base map edge lies over a nonexistent edge");
    auto s = map.phi.find(e.src);
    auto d = map.phi.find(e.dst);
    if (s == map.phi.end() || d == map.phi.end()) throw InvariantError("base map edge has an endpoint outside phi");
    const FamilyEdge& below = f.edges[e.over];
    if (s->second != below.src || d->second != below.dst)
      throw InvariantError("base map is not a graph homomorphism: " + e.src + " -> " + e.dst + " does not lie over " +
                           edge_label(f, e.over));
    out.edges.push_back({e.src, e.dst, below.M});
  }
  return {std::move(out), std::move(pulled)};
}

}  // namespace tatepol
