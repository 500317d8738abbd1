#include "cli.hpp"

#include <fstream>
#include <iostream>

#include "hmc/corpus.hpp"
#include "hmc/error.hpp"
#include "hmc/io.hpp"

namespace hmc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kInput = 2;

Arrangement load_input(const std::string& input) {
  if (input.empty()) throw InputError("missing input arrangement");
  const std::string prefix = "corpus:";
  if (input.rfind(prefix, 0) == 0) return corpus_arrangement(input.substr(prefix.size()));
  return load_arrangement(input);
}

SpectrumTables load_tables(const RunConfig& c) { return c.spectra.empty() ? SpectrumTables{} : sp_user_load(c.spectra); }

struct CheckRow {
  std::string check;
  std::string subject;
  bool ok;
  std::string detail;
};

std::vector<CheckRow> builtin_checks(int threads) {
  std::vector<CheckRow> rows;
  rows.push_back({"series_identities", "order 12", verify_series_identities(12).ok(), ""});
  for (const auto& name : corpus_names()) {
    const Arrangement a = corpus_arrangement(name);
    bool dense_ok = true, additivity_ok = true;
    for (const auto& e : a.edges()) {
      const LocalizedArrangement l = localize(a, e);
      dense_ok = dense_ok && (is_dense(l) == (complement_chi(l) != 0));
      for (const auto& sub : make_stratum(a, e.id).boundary)
        additivity_ok = additivity_ok && a.edges()[static_cast<std::size_t>(sub.edge)].m_S == e.m_S + sub.m_rel;
    }
    rows.push_back({"dense_iff_nonzero_chi", name, dense_ok, ""});
    rows.push_back({"multiplicity_additivity", name, additivity_ok, ""});

    bool spectra_ok = true, residues_ok = true;
    std::string spectra_detail;
    for (const auto& s : sigma_strata(a)) {
      const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
      const auto check = sp_validate(germ_spectrum(a, e, {}), localize(a, e));
      if (!check.ok()) {
        spectra_ok = false;
        spectra_detail = check.failures.front();
      }
      const StratumModel m = compactify(a, s);
      residues_ok = residues_ok && power_identity_holds(m);
      for (const auto& d : m.boundary) residues_ok = residues_ok && d.residue >= 0 && d.residue < m.m_S();
      for (long k = 1; k <= m.m_S(); ++k)
        for (const auto& r : deligne_residues(m, k, ResidueWindow::kLeftOpen))
          residues_ok = residues_ok && r > Rational(0) && r <= Rational(1);
    }
    rows.push_back({"spectrum_validation", name, spectra_ok, spectra_detail});
    rows.push_back({"residue_invariants", name, residues_ok, ""});

    const ChowDims cd = chow_dims(a);
    const auto basis = SigmaChowBasis::of(a);
    bool labels_ok = true;
    for (int k = 0; k <= a.n(); ++k) {
      int count = 0;
      for (const auto& l : basis->labels()) count += l.degree == k ? 1 : 0;
      labels_ok = labels_ok && count == cd.ch_sigma[static_cast<std::size_t>(k)];
    }
    rows.push_back({"sigma_labels_match_chow_dims", name, labels_ok, ""});

    AssembleOptions opt;
    opt.threads = threads;
    opt.require_polynomial = false;
    const MilnorReport r = assemble(a, {}, opt);
    rows.push_back({"stratum_polynomiality", name, r.polynomial, ""});
    rows.push_back({"cross_path_identity", name, r.cross_path_ok, ""});
    bool point_only = true;
    for (const auto& s : sigma_strata(a)) point_only = point_only && s.dim == 0;
    if (point_only && a.reduced())
      rows.push_back({"degree0_point_strata", name, r.degree0.equal,
                      "trace " + r.degree0.trace.str() + ", delta " + r.degree0.delta.str()});
  }
  return rows;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::kSchema:
      out << dump(schema_json());
      return kOk;
    case Command::kLattice:
      out << dump(lattice_json(load_input(c.input)));
      return kOk;
    case Command::kSpectra:
      out << dump(spectra_json(load_input(c.input), load_tables(c)));
      return kOk;
    case Command::kVirtual:
      if (c.degree < 1 || c.ambient < 1) throw InputError("virtual needs --degree >= 1 and --ambient >= 1");
      out << dump(virtual_json(c.degree, c.ambient));
      return kOk;
    case Command::kChiY:
      out << dump(chi_y_json(load_input(c.input)));
      return kOk;
    case Command::kMilnor: {
      const Arrangement a = load_input(c.input);
      AssembleOptions opt;
      opt.conventions = parse_conventions(c.conventions);
      opt.threads = c.threads;
      const MilnorReport r = assemble(a, load_tables(c), opt);
      out << dump(milnor_json(a, r, c.dump_strata));
      return kOk;
    }
    case Command::kCheck: {
      if (c.suite != "builtin") throw InputError("unknown suite '" + c.suite + "'");
      const auto rows = builtin_checks(c.threads);
      Json j;
      j["suite"] = c.suite;
      Json results = Json::array();
      bool all = true;
      for (const auto& r : rows) {
        all = all && r.ok;
        Json row{{"check", r.check}, {"subject", r.subject}, {"ok", r.ok}};
        if (!r.detail.empty()) row["detail"] = r.detail;
        results.push_back(row);
      }
      j["results"] = results;
      j["all_ok"] = all;
      out << dump(j);
      return all ? kOk : kValidation;
    }
    case Command::kCalibrate: {
      if (c.suite != "builtin") throw InputError("unknown suite '" + c.suite + "'");
      out << dump(calibration_json(calibrate(calibration_suite(), c.threads)));
      return kOk;
    }
  }
  throw InputError("unknown command");
}

void report_error(std::ostream& err, const std::string& kind, const std::string& msg, int code) {
  err << Json{{"error", msg}, {"kind", kind}, {"exit_code", code}}.dump() << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output.empty()) return dispatch(config, out);
    std::ostringstream buffer;
    const int code = dispatch(config, buffer);
    std::ofstream file(config.output);
    if (!file) throw InputError("cannot write " + config.output);
    file << buffer.str();
    return code;
  } catch (const InputError& e) {
    report_error(err, "input", e.what(), kInput);
    return kInput;
  } catch (const ValidationError& e) {
    report_error(err, "validation", e.what(), kValidation);
    return kValidation;
  } catch (const ArithmeticError& e) {
    report_error(err, "arithmetic", e.what(), kValidation);
    return kValidation;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what(), kValidation);
    return kValidation;
  }
}

}  // namespace hmc::cli
