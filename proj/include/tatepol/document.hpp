#pragma once

// JSON documents for tori, bundles, semi-abelian models, families and base
// maps. Rationals are strings "p/q" (or bare integers); integers are JSON
// numbers, or strings when they do not fit in 64 bits.
//
//   torus:       {"genus": g, "J": [["0", "-1"], ["1", "0"]]}
//   bundle:      {"torus": <torus>, "E": [[0, -1], [1, 0]], "rho": ["0", "1/2"]}
//   semiabelian: {"toric_rank": r, "abelian": <torus>, "bundle": {"E": ..., "rho": ...}}
//   family:      {"nodes": {id: <semiabelian>}, "edges": [{"src", "dst", "M"}]}
//   base map:    {"phi": {id': id}, "edges": [{"src", "dst", "over": k}]}
//
// Structural problems (bad JSON, ragged matrices, malformed numbers, wrong
// sizes) raise ParseError. Mathematical ones are left to the constructors,
// which raise InvariantError.

#include <nlohmann/json.hpp>

#include <string>

#include "tatepol/family.hpp"

namespace tatepol::doc {

using json = nlohmann::json;

enum class Kind { torus, bundle, semiabelian, family, base_map };

Kind detect_kind(const json& j);
const char* kind_name(Kind k);

json read_file(const std::string& path);

Integer parse_integer(const json& j);
Rational parse_rational(const json& j);
IntMatrix parse_int_matrix(const json& j);
RatMatrix parse_rat_matrix(const json& j);

/// Raw document contents, sizes checked but invariants not yet enforced.
struct RawTorus {
  std::size_t genus = 0;
  RatMatrix J;
};

struct RawBundle {
  IntMatrix E;
  std::vector<Rational> rho;
};

struct RawSemiabelian {
  std::size_t toric_rank = 0;
  RawTorus abelian;
  RawBundle bundle;
};

RawTorus parse_raw_torus(const json& j);
/// Sizes of E and rho are checked against the given lattice rank.
RawBundle parse_raw_bundle(const json& j, std::size_t lattice_rank);
RawSemiabelian parse_raw_semiabelian(const json& j);

ComplexTorus parse_torus(const json& j);
AppellHumbertBundle parse_bundle(const json& j);  // standalone, with "torus"
SemiabelianModel parse_semiabelian(const json& j);
TorusFamily parse_family(const json& j);
BaseMap parse_base_map(const json& j);

json integer_json(const Integer& z);
json rational_json(const Rational& q);
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const ComplexTorus& t);
/// Without the torus; see bundle_document for the standalone form.
json to_json(const AppellHumbertBundle& b);
json bundle_document(const AppellHumbertBundle& b);
json to_json(const SemiabelianModel& g);
json to_json(const TorusFamily& f);
json to_json(const BaseMap& m);
json to_json(const FamilyReport& r);

}  // namespace tatepol::doc
