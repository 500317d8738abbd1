#pragma once

#include <string>
#include <vector>

#include "hmc/milnor.hpp"

namespace hmc {

/// Names of the built-in example arrangements, sorted.
std::vector<std::string> corpus_names();
/// JSON text of a built-in arrangement; throws InputError for unknown names.
const char* corpus_text(const std::string& name);
Arrangement corpus_arrangement(const std::string& name);
/// The five reference arrangements used for calibration, in fixed order.
std::vector<CalibrationCase> calibration_suite();

}  // namespace hmc
