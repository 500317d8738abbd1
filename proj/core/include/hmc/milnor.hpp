#pragma once

#include <map>
#include <string>
#include <vector>

#include "hmc/spectrum.hpp"
#include "hmc/strata.hpp"

namespace hmc {

enum class SignMode { kAsPrinted, kFlipOddStrata };

struct ConventionSet {
  SignMode sign = SignMode::kAsPrinted;
  ResidueWindow window = ResidueWindow::kLeftOpen;
  std::string notes;

  /// "as_printed/res_in_(0,1]" etc.
  std::string name() const;
  friend bool operator==(const ConventionSet& a, const ConventionSet& b) {
    return a.sign == b.sign && a.window == b.window;
  }
};

/// The four conventions, default first, then in tie-break order.
std::vector<ConventionSet> all_conventions();
/// Parses "as_printed", "flip_odd_strata", "res_in_(0,1]", "res_in_[0,1)"
/// tokens separated by ',' or '/'. Throws InputError on unknown tokens.
ConventionSet parse_conventions(const std::string& text);

/// ch(E) td(T) cap [model], with the homology-degree-k part scaled by (1+y)^{-k}.
GradedClass td_1py(const RingElem& ch, const ChernData& tangent);
GradedClass td_1py(const ChernData& bundle, const StratumModel& model);

struct StratumContribution {
  int edge = 0;
  std::string key;
  int dim = 0;
  Spectrum germ;
  SigmaChowVector value;
  bool polynomial = true;
};

struct Degree0Record {
  Poly virtual_genus;
  Poly chi_y_x;
  Poly delta;        // virtual_genus - chi_y_x
  RatFuncY trace;    // degree-0 part of M_y
  bool equal = false;
};

struct MilnorReport {
  ConventionSet conventions;
  SigmaChowVector M_y;
  std::vector<StratumContribution> strata;
  std::map<std::string, SigmaChowVector> specializations;  // "-1", "0", "1"
  SigmaChowVector chern_milnor;
  bool cross_path_ok = false;
  bool polynomial = true;
  Degree0Record degree0;
};

struct AssembleOptions {
  ConventionSet conventions;
  int threads = 1;
  /// When false, non-polynomial strata are recorded instead of thrown.
  bool require_polynomial = true;
};

/// Hirzebruch-Milnor class assembled over the strata of Sigma minus X'.
/// Throws ValidationError for a missing spectrum table, an unsupported
/// stratum, or (when required) a non-polynomial stratum contribution.
MilnorReport assemble(const Arrangement& a, const SpectrumTables& tables, const AssembleOptions& opt = {});

/// sum_S chi~(F_S) pi_*(c(Omega^1(log D)^dual) cap [model]); needs no spectra.
SigmaChowVector chern_milnor(const Arrangement& a);

/// Delta(y) = virtual_genus(m, n) - chi_y(X_red) against the trace of M_y.
Degree0Record degree0_check(const Arrangement& a, const SigmaChowVector& M_y);

struct CalibrationCase {
  std::string name;
  Arrangement arrangement;
  SpectrumTables tables;
};

struct CalibrationEntry {
  std::string name;
  bool polynomial = false;
  bool degree0 = false;
  bool cross_path = false;
  bool point_strata_only = false;
  std::string trace;
  std::string delta;
  std::string error;
};

struct CalibrationResult {
  ConventionSet chosen;
  std::vector<std::pair<ConventionSet, std::vector<CalibrationEntry>>> table;
};

/// Evaluates every convention on the suite and returns the one with the most
/// degree-zero agreements; ties go to the earlier entry of all_conventions().
CalibrationResult calibrate(const std::vector<CalibrationCase>& suite, int threads = 1);

}  // namespace hmc
