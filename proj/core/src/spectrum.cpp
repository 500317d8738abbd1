#include "hmc/spectrum.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hmc/error.hpp"

namespace hmc {

void Spectrum::add(const Rational& alpha, long mult) {
  if (mult == 0) return;
  auto it = entries.find(alpha);
  if (it == entries.end()) {
    entries.emplace(alpha, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) entries.erase(it);
}

long Spectrum::mass() const {
  long s = 0;
  for (const auto& [a, m] : entries) s += m;
  return s;
}

std::string Spectrum::str() const {
  if (entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, m] : entries) {
    const long mag = m < 0 ? -m : m;
    if (first)
      os << (m < 0 ? "-" : "");
    else
      os << (m < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag;
    os << "t";
    if (!(a == Rational(1))) os << "^{" << a.str() << "}";
  }
  return os.str();
}

Spectrum sp_monomial(const std::vector<long>& exponents) {
  const int r = static_cast<int>(exponents.size());
  if (r < 1) throw ValidationError("monomial germ needs at least one variable");
  long g = 0;
  for (long m : exponents) {
    if (m < 1) throw ValidationError("monomial exponents must be positive");
    g = std::gcd(g, m);
  }
  // Milnor fiber: g disjoint (r-1)-tori permuted cyclically by the monodromy;
  // H^j of each torus is of type (j,j).
  Spectrum sp = Spectrum::germ(r);
  for (int j = 0; j < r; ++j) {
    const long mult = binomial(r - 1, j).to_long();
    const long sign = ((j - r + 1) % 2 == 0) ? 1 : -1;
    for (long i = 1; i <= g; ++i) {
      if (j == 0 && i == g) continue;
      sp.add(Rational(r - j - 1) + Rational(i, g), sign * mult);
    }
  }
  return sp;
}

Spectrum sp_ordinary(int k) {
  if (k < 2) throw ValidationError("ordinary point needs k >= 2 lines");
  Spectrum sp = Spectrum::germ(2);
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) sp.add(Rational(i + j, k), 1);
  return sp;
}

Spectrum sp_shift(const Spectrum& germ, const Stratum& stratum, int n) {
  if (germ.frame != SpectrumFrame::kGerm || germ.d != stratum.codim)
    throw ValidationError("spectrum frame mismatch: expected germ frame of dimension " + std::to_string(stratum.codim));
  Spectrum out;
  out.frame = SpectrumFrame::kStratum;
  out.d = n;
  out.shift = stratum.dim;
  const long sign = stratum.dim % 2 == 0 ? 1 : -1;
  for (const auto& [a, m] : germ.entries) out.add(a + Rational(stratum.dim), sign * m);
  return out;
}

Spectrum sp_unshift(const Spectrum& s) {
  if (s.frame != SpectrumFrame::kStratum) throw ValidationError("spectrum frame mismatch: expected stratum frame");
  Spectrum out = Spectrum::germ(s.d - s.shift);
  const long sign = s.shift % 2 == 0 ? 1 : -1;
  for (const auto& [a, m] : s.entries) out.add(a - Rational(s.shift), sign * m);
  return out;
}

bool is_isolated(const LocalizedArrangement& l) {
  if (l.rank == 1) return true;
  if (l.rank != 2) return false;
  for (long m : l.mults)
    if (m != 1) return false;
  return true;
}

SpectrumCheck sp_validate(const Spectrum& sp, const LocalizedArrangement& l) {
  SpectrumCheck c;
  if (sp.frame != SpectrumFrame::kGerm || sp.d != l.rank) {
    c.support = false;
    c.failures.push_back("frame: expected germ frame of dimension " + std::to_string(l.rank));
    return c;
  }
  const Rational lo(0), hi(l.rank);
  for (const auto& [a, m] : sp.entries) {
    if (!(a > lo && a < hi) && c.support) {
      c.support = false;
      c.failures.push_back("support: exponent " + a.str() + " outside (0, " + std::to_string(l.rank) + ")");
    }
    if (!(a * Rational(l.m_S)).is_integer() && c.denominators) {
      c.denominators = false;
      c.failures.push_back("denominators: exponent " + a.str() + " times m_S = " + std::to_string(l.m_S) +
                           " is not an integer");
    }
  }
  const long chi_tilde = milnor_fiber_chi(l) - 1;
  c.expected_mass = (l.rank % 2 == 1) ? chi_tilde : -chi_tilde;
  c.actual_mass = sp.mass();
  if (c.expected_mass != c.actual_mass) {
    c.mass = false;
    c.failures.push_back("mass: sum of multiplicities " + std::to_string(c.actual_mass) + " != " +
                         std::to_string(c.expected_mass));
  }
  if (is_isolated(l)) {
    for (const auto& [a, m] : sp.entries) {
      auto it = sp.entries.find(Rational(l.rank) - a);
      if (it == sp.entries.end() || it->second != m) {
        c.symmetry = false;
        c.failures.push_back("symmetry: n at " + a.str() + " differs from n at " + (Rational(l.rank) - a).str());
        break;
      }
    }
  }
  return c;
}

GermClass classify_germ(const LocalizedArrangement& l) {
  GermClass g;
  const int k = static_cast<int>(l.mults.size());
  if (k == l.rank) {
    g.kind = GermKind::kMonomial;
    g.exponents = l.mults;
    return g;
  }
  if (l.rank == 2 && is_isolated(l)) {
    g.kind = GermKind::kOrdinary;
    g.k = k;
    return g;
  }
  g.kind = GermKind::kUserTable;
  return g;
}

SpectrumTables sp_user_parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("spectrum table: ") + e.what());
  }
  if (!j.is_object()) throw InputError("spectrum table: expected an object keyed by edge");
  SpectrumTables out;
  for (const auto& [key, list] : j.items()) {
    if (!list.is_array()) throw InputError("spectrum table " + key + ": expected a list");
    Spectrum sp;
    sp.frame = SpectrumFrame::kGerm;
    sp.d = -1;  // fixed when matched against an edge
    for (const auto& e : list) {
      if (!e.is_object() || !e.contains("alpha") || !e.contains("mult") || !e["alpha"].is_string() ||
          !e["mult"].is_number_integer())
        throw InputError("spectrum table " + key + ": entries need a string alpha and an integer mult");
      sp.add(Rational::parse(e["alpha"].get<std::string>()), e["mult"].get<long>());
    }
    out.emplace(key, std::move(sp));
  }
  return out;
}

SpectrumTables sp_user_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spectrum file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return sp_user_parse(ss.str());
}

namespace {

Spectrum with_dim(Spectrum sp, int d) {
  sp.d = d;
  return sp;
}

}  // namespace

Spectrum germ_spectrum(const Arrangement& a, const Edge& e, const SpectrumTables& tables) {
  const LocalizedArrangement l = localize(a, e);
  const std::string key = edge_key(e.I, a.size());
  if (auto it = tables.find(key); it != tables.end()) {
    Spectrum sp = with_dim(it->second, l.rank);
    const auto check = sp_validate(sp, l);
    if (!check.ok()) throw ValidationError("spectrum table " + key + " rejected: " + check.failures.front());
    return sp;
  }
  const GermClass g = classify_germ(l);
  switch (g.kind) {
    case GermKind::kMonomial:
      return sp_monomial(g.exponents);
    case GermKind::kOrdinary:
      return sp_ordinary(g.k);
    case GermKind::kUserTable:
      break;
  }
  throw ValidationError("missing spectrum table for edge " + key);
}

void validate_tables(const Arrangement& a, const SpectrumTables& tables) {
  for (const auto& [key, sp] : tables) {
    bool found = false;
    for (const auto& s : sigma_strata(a)) {
      const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
      if (edge_key(e.I, a.size()) != key) continue;
      found = true;
      germ_spectrum(a, e, tables);
    }
    if (!found) throw ValidationError("spectrum table " + key + " does not name a stratum of the singular locus");
  }
}

}  // namespace hmc
