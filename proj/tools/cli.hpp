#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace hmc::cli {

enum class Command { kLattice, kSpectra, kVirtual, kChiY, kMilnor, kCheck, kCalibrate, kSchema };

struct RunConfig {
  Command command = Command::kSchema;
  std::string input;        // arrangement file, or "corpus:<name>"
  std::string output;       // empty: stdout
  std::string spectra;      // optional spectrum table file
  std::string conventions;  // empty: default set
  std::string suite = "builtin";
  bool dump_strata = false;
  int threads = 1;
  int degree = 0;
  int ambient = 0;
};

/// Exit codes: 0 success, 1 validation failure, 2 malformed input.
/// Reports go to `out` (or the output file); errors go to `err` as JSON.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hmc::cli
