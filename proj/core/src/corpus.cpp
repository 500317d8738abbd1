#include "hmc/corpus.hpp"

#include <algorithm>
#include <utility>

#include "hmc/error.hpp"
#include "hmc/io.hpp"

namespace hmc {

namespace {
#include "corpus_data.inc"
}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : kCorpusFiles) out.emplace_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

const char* corpus_text(const std::string& name) {
  for (const auto& [n, text] : kCorpusFiles)
    if (name == n) return text;
  throw InputError("unknown corpus arrangement '" + name + "'");
}

Arrangement corpus_arrangement(const std::string& name) { return parse_arrangement(corpus_text(name)); }

std::vector<CalibrationCase> calibration_suite() {
  std::vector<CalibrationCase> out;
  for (const char* name : {"concurrent3", "triangle3", "doubleline", "pencil3planes", "fourplanes"})
    out.push_back(CalibrationCase{name, corpus_arrangement(name), {}});
  return out;
}

}  // namespace hmc
