#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using hmc::cli::Command;
  hmc::cli::RunConfig cfg;
  CLI::App app{"Hirzebruch-Milnor classes of projective hyperplane arrangements"};
  app.require_subcommand(0, 1);
  bool schema = false;
  app.add_flag("--schema", schema, "Print the input/output JSON schemas");
  app.add_option("-o,--output", cfg.output, "Write the report to a file instead of stdout");
  app.add_option("-j,--threads", cfg.threads, "Worker threads for term evaluation")->check(CLI::PositiveNumber);

  auto with_input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "Arrangement JSON file, or corpus:<name>")->required(); };

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice, strata and structure tables");
  with_input(lattice);
  auto* spectra = app.add_subcommand("spectra", "Germ and stratum spectra with validation");
  with_input(spectra);
  spectra->add_option("--spectra", cfg.spectra, "Spectrum table JSON file");
  auto* virt = app.add_subcommand("virtual", "Virtual Hirzebruch class of a hypersurface in P^n");
  virt->add_option("--degree", cfg.degree, "Hypersurface degree")->required();
  virt->add_option("--ambient", cfg.ambient, "Ambient dimension n")->required();
  auto* chiy = app.add_subcommand("chi-y", "chi_y genera of X, its complement, P^n and open strata");
  with_input(chiy);
  auto* milnor = app.add_subcommand("milnor", "Hirzebruch-Milnor class report");
  with_input(milnor);
  milnor->add_option("--spectra", cfg.spectra, "Spectrum table JSON file");
  milnor->add_option("--conventions", cfg.conventions, "e.g. as_printed,res_in_(0,1]");
  milnor->add_flag("--dump-strata", cfg.dump_strata, "Include the stratum models");
  auto* check = app.add_subcommand("check", "Run the invariant harness");
  check->add_option("--suite", cfg.suite, "Suite name")->default_val("builtin");
  auto* calib = app.add_subcommand("calibrate", "Evaluate all sign conventions on the reference suite");
  calib->add_option("--suite", cfg.suite, "Suite name")->default_val("builtin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*lattice) cfg.command = Command::kLattice;
  else if (*spectra) cfg.command = Command::kSpectra;
  else if (*virt) cfg.command = Command::kVirtual;
  else if (*chiy) cfg.command = Command::kChiY;
  else if (*milnor) cfg.command = Command::kMilnor;
  else if (*check) cfg.command = Command::kCheck;
  else if (*calib) cfg.command = Command::kCalibrate;
  else if (schema) cfg.command = Command::kSchema;
  else {
    std::cout << app.help();
    return 2;
  }
  return hmc::cli::run(cfg, std::cout, std::cerr);
}
