#include "hmc/io.hpp"

#include <fstream>
#include <sstream>

#include "hmc/error.hpp"

namespace hmc {

namespace {

Rational rational_field(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError(where + ": expected a rational string");
}

Json keyed_poly(const Poly& p) {
  Json j;
  j["str"] = p.str();
  j["coeffs"] = to_json(p);
  return j;
}

Json int_array(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

Json one_based(const std::vector<int>& I) {
  Json j = Json::array();
  for (int x : I) j.push_back(x + 1);
  return j;
}

std::string germ_kind_name(const GermClass& g) {
  switch (g.kind) {
    case GermKind::kMonomial:
      return "monomial";
    case GermKind::kOrdinary:
      return "ordinary";
    case GermKind::kUserTable:
      return "user_table";
  }
  return "unknown";
}

std::string source_name(BoundarySource s) {
  switch (s) {
    case BoundarySource::kEdge:
      return "edge";
    case BoundarySource::kExceptional:
      return "exceptional";
    case BoundarySource::kInfinity:
      return "infinity";
  }
  return "unknown";
}

Json ring_elem_json(const RingElem& x) {
  Json j = Json::object();
  for (int i = 0; i < x.ring()->size(); ++i)
    if (!x[i].is_zero()) j[x.ring()->name(i)] = to_json(x[i]);
  return j;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Arrangement parse_arrangement(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("arrangement: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("hyperplanes") ||
      !j["hyperplanes"].is_array())
    throw InputError("arrangement: expected {\"n\": int, \"hyperplanes\": [...]}");
  std::vector<Hyperplane> hs;
  std::size_t idx = 0;
  for (const auto& h : j["hyperplanes"]) {
    ++idx;
    const std::string where = "hyperplane " + std::to_string(idx);
    if (!h.is_object() || !h.contains("coeffs") || !h["coeffs"].is_array())
      throw InputError(where + ": expected {\"coeffs\": [...], \"mult\": int}");
    Hyperplane hp;
    for (const auto& c : h["coeffs"]) hp.coeffs.push_back(rational_field(c, where));
    if (h.contains("mult")) {
      if (!h["mult"].is_number_integer()) throw InputError(where + ": mult must be an integer");
      hp.mult = h["mult"].get<long>();
    }
    hs.push_back(std::move(hp));
  }
  return Arrangement::build(j["n"].get<int>(), std::move(hs));
}

Arrangement load_arrangement(const std::string& path) { return parse_arrangement(read_file(path)); }

Json to_json(const Poly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
  if (p.is_zero()) j.push_back("0");
  return j;
}

Json to_json(const RatFuncY& r) {
  if (r.is_polynomial()) return to_json(r.as_poly());
  Json j;
  j["num"] = to_json(r.num());
  j["den"] = to_json(r.den());
  return j;
}

Json to_json(const GradedClass& c) {
  Json j = Json::array();
  for (const auto& v : c.by_degree) {
    if (v.size() == 1) {
      j.push_back(to_json(v.front()));
      continue;
    }
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    j.push_back(row);
  }
  return j;
}

Json to_json(const SigmaChowVector& v) {
  Json j = Json::object();
  if (!v.basis) return j;
  for (int i = 0; i < v.basis->size(); ++i)
    j[v.basis->labels()[static_cast<std::size_t>(i)].name] = to_json(v.coeffs[static_cast<std::size_t>(i)]);
  return j;
}

Json to_json(const Spectrum& s) {
  Json j = Json::array();
  for (const auto& [a, m] : s.entries) j.push_back(Json{{"alpha", a.str()}, {"mult", m}});
  return j;
}

Json to_json(const SpectrumCheck& c) {
  Json j;
  j["ok"] = c.ok();
  j["support"] = c.support;
  j["denominators"] = c.denominators;
  j["mass"] = c.mass;
  j["symmetry"] = c.symmetry;
  j["expected_mass"] = c.expected_mass;
  j["actual_mass"] = c.actual_mass;
  j["failures"] = c.failures;
  return j;
}

Json lattice_json(const Arrangement& a) {
  Json j;
  j["n"] = a.n();
  j["m"] = a.degree();
  Json edges = Json::array();
  for (const auto& e : a.edges()) {
    const LocalizedArrangement l = localize(a, e);
    edges.push_back(Json{{"key", edge_key(e.I, a.size())},
                         {"I", one_based(e.I)},
                         {"codim", e.codim},
                         {"m_S", e.m_S},
                         {"dense", is_dense(l)},
                         {"complement_chi", complement_chi(l)},
                         {"milnor_fiber_chi", milnor_fiber_chi(l)}});
  }
  j["edges"] = edges;
  Json strata = Json::array();
  for (const auto& s : sigma_strata(a)) {
    Json b = Json::array();
    for (const auto& sub : s.boundary)
      b.push_back(Json{{"key", edge_key(a.edges()[static_cast<std::size_t>(sub.edge)].I, a.size())},
                       {"rel_codim", sub.rel_codim},
                       {"m_rel", sub.m_rel}});
    strata.push_back(Json{{"key", edge_key(a.edges()[static_cast<std::size_t>(s.edge)].I, a.size())},
                          {"dim", s.dim},
                          {"m_S", s.m_S},
                          {"boundary", b}});
  }
  j["sigma_strata"] = strata;
  const ChowDims cd = chow_dims(a);
  j["chow_dims"] = Json{{"CH_X", int_array(cd.ch_x)}, {"CH_Sigma", int_array(cd.ch_sigma)}};
  j["weight_dims"] = int_array(homology_weight_dims(a));
  return j;
}

Json spectra_json(const Arrangement& a, const SpectrumTables& tables) {
  Json out = Json::array();
  for (const auto& s : sigma_strata(a)) {
    const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
    const LocalizedArrangement l = localize(a, e);
    const std::string key = edge_key(e.I, a.size());
    Json j;
    j["key"] = key;
    j["codim"] = e.codim;
    j["dim"] = s.dim;
    j["germ_kind"] = tables.count(key) ? "user_table" : germ_kind_name(classify_germ(l));
    const Spectrum germ = germ_spectrum(a, e, tables);
    j["germ"] = to_json(germ);
    j["germ_str"] = germ.str();
    j["stratum"] = to_json(sp_shift(germ, s, a.n()));
    j["validation"] = to_json(sp_validate(germ, l));
    out.push_back(j);
  }
  return out;
}

Json virtual_json(int d, int n) {
  const GradedClass c = virtual_pushed(d, n);
  Json j;
  j["degree"] = d;
  j["ambient"] = n;
  j["class"] = to_json(c);
  const Poly g = c.degree0().as_poly();
  j["genus"] = g.str();
  j["genus_coeffs"] = to_json(g);
  return j;
}

Json chi_y_json(const Arrangement& a) {
  Json j;
  j["X"] = keyed_poly(chi_y(a, ChiTarget::kX));
  j["complement"] = keyed_poly(chi_y(a, ChiTarget::kComplement));
  j["P^n"] = keyed_poly(chi_y(a, ChiTarget::kProjectiveSpace));
  Json strata = Json::object();
  for (const auto& e : a.edges()) strata[edge_key(e.I, a.size())] = keyed_poly(chi_y_open_stratum(a, e.id));
  j["open_strata"] = strata;
  return j;
}

Json strata_dump_json(const Arrangement& a) {
  Json out = Json::array();
  for (const auto& s : sigma_strata(a)) {
    const std::string key = edge_key(a.edges()[static_cast<std::size_t>(s.edge)].I, a.size());
    Json j;
    j["key"] = key;
    j["dim"] = s.dim;
    j["m_S"] = s.m_S;
    if (s.dim >= 3) {
      j["model"] = "unsupported";
      out.push_back(j);
      continue;
    }
    const StratumModel m = compactify(a, s);
    j["model"] = m.kind == ModelKind::kPoint ? "point" : (m.kind == ModelKind::kCurve ? "curve" : "surface");
    Json basis = Json::array();
    for (int i = 0; i < m.ring->size(); ++i) basis.push_back(m.ring->name(i));
    j["ring_basis"] = basis;
    Json blown = Json::array();
    for (int e : m.blown) blown.push_back(edge_key(a.edges()[static_cast<std::size_t>(e)].I, a.size()));
    j["blown_points"] = blown;
    Json b = Json::array();
    for (const auto& d : m.boundary)
      b.push_back(Json{{"id", d.id},
                       {"source", source_name(d.source)},
                       {"m_rel", d.m_rel},
                       {"residue", d.residue},
                       {"class", ring_elem_json(d.cls)}});
    j["boundary"] = b;
    j["c1_L"] = ring_elem_json(deligne_base_class(m));
    j["power_identity"] = power_identity_holds(m);
    out.push_back(j);
  }
  return out;
}

Json milnor_json(const Arrangement& a, const MilnorReport& r, bool dump_strata) {
  Json j;
  j["M_y"] = to_json(r.M_y);
  Json spec = Json::object();
  for (const char* y0 : {"-1", "0", "1"})
    if (r.specializations.count(y0)) spec[y0] = to_json(r.specializations.at(y0));
  j["specializations"] = spec;
  j["degree0"] = Json{{"virtual_genus", r.degree0.virtual_genus.str()},
                      {"chi_y_X", r.degree0.chi_y_x.str()},
                      {"delta", r.degree0.delta.str()},
                      {"trace", to_json(r.degree0.trace)},
                      {"equal", r.degree0.equal}};
  j["chern_milnor"] = to_json(r.chern_milnor);
  j["cross_path_ok"] = r.cross_path_ok;
  j["polynomial"] = r.polynomial;
  j["conventions"] = r.conventions.name();
  Json strata = Json::array();
  for (const auto& c : r.strata)
    strata.push_back(Json{{"key", c.key},
                          {"dim", c.dim},
                          {"germ_spectrum", c.germ.str()},
                          {"polynomial", c.polynomial},
                          {"contribution", to_json(c.value)}});
  j["strata"] = strata;
  if (dump_strata) j["strata_models"] = strata_dump_json(a);
  return j;
}

Json calibration_json(const CalibrationResult& r) {
  Json j;
  j["chosen"] = r.chosen.name();
  Json convs = Json::array();
  for (const auto& [conv, entries] : r.table) {
    Json c;
    c["conventions"] = conv.name();
    int passed = 0;
    Json members = Json::array();
    for (const auto& e : entries) {
      passed += e.degree0 ? 1 : 0;
      Json m;
      m["name"] = e.name;
      m["point_strata_only"] = e.point_strata_only;
      m["polynomial"] = e.polynomial;
      m["cross_path"] = e.cross_path;
      m["degree0"] = e.degree0;
      m["trace"] = e.trace;
      m["delta"] = e.delta;
      if (!e.error.empty()) m["error"] = e.error;
      members.push_back(m);
    }
    c["degree0_passed"] = passed;
    c["members"] = members;
    convs.push_back(c);
  }
  j["table"] = convs;
  Json tension = Json::array();
  for (const auto& [conv, entries] : r.table) {
    if (!(conv == r.chosen)) continue;
    for (const auto& e : entries)
      if (!e.degree0) tension.push_back(Json{{"name", e.name}, {"trace", e.trace}, {"delta", e.delta}});
  }
  j["degree0_tension"] = tension;
  return j;
}

Json schema_json() {
  Json rational = Json{{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
  Json coeff_list = Json{{"type", "array"}, {"items", rational}, {"description", "ascending coefficients in y"}};
  Json j;
  j["arrangement"] = Json{
      {"type", "object"},
      {"required", {"n", "hyperplanes"}},
      {"properties",
       Json{{"n", Json{{"type", "integer"}, {"minimum", 1}}},
            {"hyperplanes",
             Json{{"type", "array"},
                  {"items", Json{{"type", "object"},
                                 {"required", {"coeffs"}},
                                 {"properties", Json{{"coeffs", Json{{"type", "array"}, {"items", rational}}},
                                                     {"mult", Json{{"type", "integer"}, {"minimum", 1}}}}}}}}}}}};
  j["spectrum_tables"] = Json{
      {"type", "object"},
      {"description", "germ-frame spectra keyed by edge key (sorted 1-based hyperplane indices)"},
      {"additionalProperties",
       Json{{"type", "array"},
            {"items", Json{{"type", "object"},
                           {"required", {"alpha", "mult"}},
                           {"properties", Json{{"alpha", rational}, {"mult", Json{{"type", "integer"}}}}}}}}}};
  j["milnor_report"] = Json{
      {"type", "object"},
      {"properties",
       Json{{"M_y", Json{{"type", "object"}, {"additionalProperties", coeff_list}}},
            {"specializations", Json{{"type", "object"}, {"description", "M_y at y = -1, 0, 1"}}},
            {"degree0", Json{{"type", "object"}}},
            {"chern_milnor", Json{{"type", "object"}, {"additionalProperties", coeff_list}}},
            {"cross_path_ok", Json{{"type", "boolean"}}},
            {"polynomial", Json{{"type", "boolean"}}},
            {"conventions", Json{{"type", "string"}}},
            {"strata", Json{{"type", "array"}}}}}};
  j["error"] = Json{{"type", "object"},
                    {"required", {"error", "kind", "exit_code"}},
                    {"properties", Json{{"error", Json{{"type", "string"}}},
                                        {"kind", Json{{"enum", {"input", "validation", "arithmetic", "internal"}}}},
                                        {"exit_code", Json{{"type", "integer"}}}}}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hmc
