#include "tatepol/cli.hpp"

#include <ostream>

#include "tatepol/document.hpp"
#include "tatepol/random.hpp"

namespace tatepol::cli {

namespace {

using doc::json;

json check_entry(const std::string& name, bool ok, const std::string& detail = {}) {
  json j{{"name", name}, {"ok", ok}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

json divisors_json(const std::vector<Integer>& d) {
  json a = json::array();
  for (const auto& x : d) a.push_back(doc::integer_json(x));
  return a;
}

// Runs `body`, mapping exceptions onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantError& e) {
    err << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

// Validates a raw torus + bundle pair, appending one entry per check.
// Returns the bundle when every check passes.
std::optional<AppellHumbertBundle> check_bundle_parts(doc::RawTorus torus, const doc::RawBundle* bundle, json& checks,
                                                      std::ostream& err) {
  std::optional<ComplexTorus> t;
  try {
    t = make_torus(torus.genus, std::move(torus.J));
    checks.push_back(check_entry("complex_structure", true));
  } catch (const InvariantError& e) {
    checks.push_back(check_entry("complex_structure", false, e.what()));
    err << e.what() << '\n';
  }
  if (!bundle) return std::nullopt;

  const bool alternating = is_alternating(bundle->E);
  checks.push_back(check_entry("alternating", alternating, alternating ? "" : "E is not alternating"));
  if (!alternating) err << "E is not alternating\n";
  if (!t || !alternating) return std::nullopt;

  try {
    AppellHumbertBundle b = make_bundle(*t, bundle->E, bundle->rho);
    checks.push_back(check_entry("compatibility", true));
    return b;
  } catch (const InvariantError& e) {
    checks.push_back(check_entry("compatibility", false, e.what()));
    err << e.what() << '\n';
    return std::nullopt;
  }
}

bool all_ok(const json& checks) {
  for (const auto& c : checks)
    if (!c["ok"].get<bool>()) return false;
  return true;
}

}  // namespace

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const json j = doc::read_file(path);
    const doc::Kind kind = doc::detect_kind(j);
    json report{{"document", doc::kind_name(kind)}};
    json checks = json::array();

    switch (kind) {
      case doc::Kind::torus:
        check_bundle_parts(doc::parse_raw_torus(j), nullptr, checks, err);
        break;
      case doc::Kind::bundle: {
        doc::RawTorus t = doc::parse_raw_torus(j.at("torus"));
        const doc::RawBundle b = doc::parse_raw_bundle(j, 2 * t.genus);
        if (auto bundle = check_bundle_parts(std::move(t), &b, checks, err)) report["ample"] = is_ample(*bundle);
        break;
      }
      case doc::Kind::semiabelian: {
        doc::RawSemiabelian g = doc::parse_raw_semiabelian(j);
        report["toric_rank"] = g.toric_rank;
        report["tate_rank"] = g.toric_rank + 2 * g.abelian.genus;
        if (auto bundle = check_bundle_parts(std::move(g.abelian), &g.bundle, checks, err))
          report["ample"] = is_ample(*bundle);
        break;
      }
      default:
        throw ParseError(std::string("check expects a torus, bundle or semiabelian document, got ") +
                         doc::kind_name(kind));
    }

    const bool valid = all_ok(checks);
    report["checks"] = std::move(checks);
    report["valid"] = valid;
    out << report.dump(2) << '\n';
    return valid ? kExitOk : kExitFailure;
  });
}

int cmd_polarize(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const json j = doc::read_file(path);
    if (doc::detect_kind(j) != doc::Kind::semiabelian) throw ParseError("polarize expects a semiabelian document");
    const SemiabelianModel g = doc::parse_semiabelian(j);

    const FiberReport fiber = verify_main_theorem_fiber(g);
    const PairingForm p = polarization_from_bundle(g);
    const SymplecticNormalForm nf = symplectic_normal_form(p.P);

    json report{{"ample", fiber.ample},
                {"toric_rank", g.toric_rank()},
                {"polarization", doc::to_json(p.P)},
                {"type", divisors_json(nf.divisors)},
                {"kernel_rank", fiber.kernel_rank},
                {"polarized", fiber.polarized}};
    if (!fiber.implication_holds) {
      report["defect"] = "ample bundle failed to polarize";
      err << "library defect: ample bundle failed to polarize\n";
    }
    out << report.dump(2) << '\n';
    return fiber.polarized ? kExitOk : kExitFailure;
  });
}

int cmd_family(const std::string& path, const std::optional<std::string>& base_change_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const json j = doc::read_file(path);
    if (doc::detect_kind(j) != doc::Kind::family) throw ParseError("family expects a family document");
    const TorusFamily f = doc::parse_family(j);
    std::optional<BaseMap> map;
    if (base_change_path) {
      const json m = doc::read_file(*base_change_path);
      if (doc::detect_kind(m) != doc::Kind::base_map) throw ParseError("--base-change expects a base-map document");
      map = doc::parse_base_map(m);
    }

    json report;
    auto finish = [&](bool ok) {
      report["ok"] = ok;
      out << report.dump(2) << '\n';
      return ok ? kExitOk : kExitFailure;
    };

    const FamilyReport validation = validate_family(f);
    report["validation"] = doc::to_json(validation);
    if (!validation.ok()) {
      for (const auto& v : validation.violations) err << v.where << ": " << v.what << '\n';
      return finish(false);
    }

    GlobalPairing p;
    try {
      p = assemble_global_pairing(f);
      report["coherent"] = true;
    } catch (const IncoherentFamily& e) {
      report["coherent"] = false;
      report["witness_edge"] = json{{"index", e.edge()}, {"label", e.label()}};
      err << e.what() << '\n';
      return finish(false);
    }

    const FamilyReport pairing = check_global_pairing(f, p);
    report["pairing"] = doc::to_json(pairing);
    for (const auto& v : pairing.violations) err << v.where << ": " << v.what << '\n';
    bool ok = pairing.ok();

    if (map) {
      auto [f2, p2] = base_change(f, p, *map);
      const FamilyReport v2 = validate_family(f2);
      const FamilyReport c2 = check_global_pairing(f2, p2);
      report["base_change"] = json{{"nodes", f2.nodes.size()},
                                   {"edges", f2.edges.size()},
                                   {"validation", doc::to_json(v2)},
                                   {"pairing", doc::to_json(c2)}};
      for (const auto& v : v2.violations) err << "base change: " << v.where << ": " << v.what << '\n';
      for (const auto& v : c2.violations) err << "base change: " << v.where << ": " << v.what << '\n';
      ok = ok && v2.ok() && c2.ok();
    }
    return finish(ok);
  });
}

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.genus < 1) {
    err << "input error: --genus must be at least 1\n";
    return kExitInputError;
  }
  if (opts.toric_rank < 0) {
    err << "input error: --toric-rank must be non-negative\n";
    return kExitInputError;
  }
  return guarded(err, [&] {
    Rng rng(opts.seed);
    RandomBundleOptions bo;
    bo.kind = opts.ample ? FormKind::ample : FormKind::any;
    const SemiabelianModel g = random_semiabelian(rng, static_cast<std::size_t>(opts.genus),
                                                  static_cast<std::size_t>(opts.toric_rank), bo);
    out << doc::to_json(g).dump(2) << '\n';
    return kExitOk;
  });
}

}  // namespace tatepol::cli
