#pragma once

#include <map>
#include <string>
#include <vector>

#include "hmc/arrangement.hpp"
#include "hmc/rational.hpp"

namespace hmc {

enum class SpectrumFrame { kGerm, kStratum };

/// Finitely supported integer function alpha -> n_alpha.
/// Germ frame: a function germ on C^d, support in (0, d).
/// Stratum frame: indexed on the ambient P^n for a stratum of dimension `shift`.
struct Spectrum {
  std::map<Rational, long> entries;  // nonzero multiplicities only
  SpectrumFrame frame = SpectrumFrame::kGerm;
  int d = 0;      // germ: number of variables; stratum: ambient dimension n
  int shift = 0;  // stratum frame only: dim S

  static Spectrum germ(int d) { return Spectrum{{}, SpectrumFrame::kGerm, d, 0}; }
  void add(const Rational& alpha, long mult);
  long mass() const;
  bool empty() const { return entries.empty(); }
  /// "t^{2/3} + 2t - t^{4/3}" style rendering.
  std::string str() const;
  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.frame == b.frame && a.d == b.d && a.shift == b.shift && a.entries == b.entries;
  }
};

/// Spectrum of prod y_i^{m_i} at the origin of C^r.
Spectrum sp_monomial(const std::vector<long>& exponents);
/// Spectrum of k >= 2 distinct reduced lines through the origin of C^2.
Spectrum sp_ordinary(int k);

/// n_{f,S,alpha} = (-1)^{dim S} n_{germ, alpha - dim S}.
Spectrum sp_shift(const Spectrum& germ, const Stratum& stratum, int n);
/// Inverse of sp_shift.
Spectrum sp_unshift(const Spectrum& stratum_sp);

struct SpectrumCheck {
  bool support = true;
  bool denominators = true;
  bool mass = true;
  bool symmetry = true;  // only evaluated for isolated germs
  long expected_mass = 0;
  long actual_mass = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Germs with an isolated singularity: one hyperplane, or reduced with c = 2.
bool is_isolated(const LocalizedArrangement& l);

/// Support in (0, c), denominators dividing m_S, total mass
/// (-1)^{c-1} (chi(F) - 1), and symmetry n_alpha = n_{c - alpha} for isolated germs.
SpectrumCheck sp_validate(const Spectrum& sp, const LocalizedArrangement& l);

enum class GermKind { kMonomial, kOrdinary, kUserTable };

struct GermClass {
  GermKind kind = GermKind::kUserTable;
  std::vector<long> exponents;  // kMonomial
  int k = 0;                    // kOrdinary
};

/// Catalogue lookup: one hyperplane or a Boolean germ is monomial; k >= 3
/// reduced lines through a codim-2 edge are ordinary; anything else needs a table.
GermClass classify_germ(const LocalizedArrangement& l);

/// Germ-frame spectra keyed by edge_key of the edge.
using SpectrumTables = std::map<std::string, Spectrum>;

/// Parses {"<edge key>": [{"alpha": "5/3", "mult": -1}, ...], ...}.
/// Throws InputError on malformed content.
SpectrumTables sp_user_parse(const std::string& json_text);
SpectrumTables sp_user_load(const std::string& path);

/// Germ spectrum of an edge: a user table when present (validated, rejected
/// with ValidationError on failure), else the catalogue. Throws
/// ValidationError when neither applies.
Spectrum germ_spectrum(const Arrangement& a, const Edge& e, const SpectrumTables& tables);

/// Rejects tables whose key is not a stratum of Sigma or whose content fails
/// sp_validate.
void validate_tables(const Arrangement& a, const SpectrumTables& tables);

}  // namespace hmc
