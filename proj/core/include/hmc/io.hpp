#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hmc/milnor.hpp"

namespace hmc {

using Json = nlohmann::ordered_json;

/// {"n": 2, "hyperplanes": [{"coeffs": ["1","0","-1/2"], "mult": 2}, ...]}.
/// Throws InputError on malformed JSON or shapes.
Arrangement parse_arrangement(const std::string& json_text);
Arrangement load_arrangement(const std::string& path);
std::string read_file(const std::string& path);

/// Ascending coefficient strings.
Json to_json(const Poly& p);
/// Polynomial: ascending coefficient strings; otherwise {"num": [...], "den": [...]}.
Json to_json(const RatFuncY& r);
Json to_json(const GradedClass& c);
Json to_json(const SigmaChowVector& v);
Json to_json(const Spectrum& s);
Json to_json(const SpectrumCheck& c);

Json lattice_json(const Arrangement& a);
Json spectra_json(const Arrangement& a, const SpectrumTables& tables);
Json virtual_json(int d, int n);
Json chi_y_json(const Arrangement& a);
Json strata_dump_json(const Arrangement& a);
Json milnor_json(const Arrangement& a, const MilnorReport& r, bool dump_strata);
Json calibration_json(const CalibrationResult& r);
/// Input and output schemas.
Json schema_json();

/// Canonical serialization used by every command: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace hmc
