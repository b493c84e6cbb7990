#include <iostream>

#include "CLI11.hpp"
#include "tatepol/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Polarizations of semi-abelian fibers from Appell-Humbert line bundle data"};
  app.require_subcommand(1);

  std::string path;
  std::string base_change;
  tatepol::cli::RandomOptions ropts;

  auto* check = app.add_subcommand("check", "Validate a torus, bundle or semiabelian document");
  check->add_option("path", path, "Document")->required();

  auto* polarize = app.add_subcommand("polarize", "Build the polarization of a semiabelian fiber and decide it");
  polarize->add_option("path", path, "Semiabelian document")->required();

  auto* family = app.add_subcommand("family", "Check a family over a finite base graph");
  family->add_option("path", path, "Family document")->required();
  family->add_option("--base-change", base_change, "Base-map document to pull the family back along");

  auto* random = app.add_subcommand("random", "Emit a seeded random semiabelian document");
  random->add_option("--genus", ropts.genus, "Genus of the abelian part")->required();
  random->add_option("--toric-rank", ropts.toric_rank, "Rank of the toric part")->default_val(0);
  random->add_option("--seed", ropts.seed, "Seed")->required();
  random->add_flag("--ample", ropts.ample, "Generate an ample bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tatepol::cli::kExitInputError;
  }

  if (*check) return tatepol::cli::cmd_check(path, std::cout, std::cerr);
  if (*polarize) return tatepol::cli::cmd_polarize(path, std::cout, std::cerr);
  if (*family) {
    std::optional<std::string> bc;
    if (!base_change.empty()) bc = base_change;
    return tatepol::cli::cmd_family(path, bc, std::cout, std::cerr);
  }
  return tatepol::cli::cmd_random(ropts, std::cout, std::cerr);
}
