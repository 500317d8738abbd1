#include "hmc/milnor.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "hmc/error.hpp"

namespace hmc {

namespace {

template <typename F>
void parallel_for(std::size_t count, int threads, F&& body) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RatFuncY signed_power_of_minus_y(long coeff, int p) {
  const long sign = p % 2 == 0 ? 1 : -1;
  return RatFuncY(Poly::monomial(Rational(coeff * sign), p));
}

struct Term {
  std::size_t stratum = 0;
  Rational alpha;
  long mult = 0;
  int q = 0;
};

}  // namespace

std::string ConventionSet::name() const {
  return std::string(sign == SignMode::kAsPrinted ? "as_printed" : "flip_odd_strata") + "/" +
         (window == ResidueWindow::kLeftOpen ? "res_in_(0,1]" : "res_in_[0,1)");
}

std::vector<ConventionSet> all_conventions() {
  std::vector<ConventionSet> out;
  for (SignMode s : {SignMode::kAsPrinted, SignMode::kFlipOddStrata})
    for (ResidueWindow w : {ResidueWindow::kLeftOpen, ResidueWindow::kRightOpen}) out.push_back(ConventionSet{s, w, ""});
  return out;
}

ConventionSet parse_conventions(const std::string& text) {
  // Tokens may themselves contain ',' so match them by prefix.
  static const std::vector<std::pair<std::string, std::function<void(ConventionSet&)>>> tokens = {
      {"as_printed", [](ConventionSet& c) { c.sign = SignMode::kAsPrinted; }},
      {"flip_odd_strata", [](ConventionSet& c) { c.sign = SignMode::kFlipOddStrata; }},
      {"res_in_(0,1]", [](ConventionSet& c) { c.window = ResidueWindow::kLeftOpen; }},
      {"res_in_[0,1)", [](ConventionSet& c) { c.window = ResidueWindow::kRightOpen; }},
  };
  ConventionSet c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || text[pos] == '/' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    bool matched = false;
    for (const auto& [name, apply] : tokens)
      if (text.compare(pos, name.size(), name) == 0) {
        apply(c);
        pos += name.size();
        matched = true;
        break;
      }
    if (!matched) throw InputError("unknown convention '" + text.substr(pos, text.find_first_of(",/", pos) - pos) + "'");
  }
  return c;
}

GradedClass td_1py(const RingElem& ch, const ChernData& tangent) {
  GradedClass g = GradedClass::cap(ch * todd_class(tangent));
  const RatFuncY inv = RatFuncY(1) / RatFuncY::one_plus_y();
  RatFuncY scale(1);
  for (auto& v : g.by_degree) {
    for (auto& c : v) c *= scale;
    scale *= inv;
  }
  return g;
}

GradedClass td_1py(const ChernData& bundle, const StratumModel& model) {
  return td_1py(chern_character(bundle), model.tangent());
}

MilnorReport assemble(const Arrangement& a, const SpectrumTables& tables, const AssembleOptions& opt) {
  const int n = a.n();
  const SigmaBasisPtr basis = SigmaChowBasis::of(a);
  validate_tables(a, tables);

  MilnorReport rep;
  rep.conventions = opt.conventions;
  rep.M_y = SigmaChowVector(basis);

  std::vector<StratumModel> models;
  std::vector<Spectrum> shifted;
  std::vector<Term> terms;
  for (const auto& s : sigma_strata(a)) {
    const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
    StratumContribution c;
    c.edge = e.id;
    c.key = edge_key(e.I, a.size());
    c.dim = s.dim;
    c.germ = germ_spectrum(a, e, tables);
    c.value = SigmaChowVector(basis);
    rep.strata.push_back(c);
    shifted.push_back(sp_shift(c.germ, s, n));
    if (c.germ.empty()) {
      models.emplace_back();
      continue;
    }
    models.push_back(compactify(a, s));
    for (const auto& [alpha, mult] : shifted.back().entries)
      for (int q = 0; q <= s.dim; ++q) terms.push_back(Term{rep.strata.size() - 1, alpha, mult, q});
  }

  std::vector<SigmaChowVector> values(terms.size());
  parallel_for(terms.size(), opt.threads, [&](std::size_t i) {
    const Term& t = terms[i];
    const StratumModel& model = models[t.stratum];
    const long mS = model.m_S();
    long k = (-(t.alpha * Rational(mS))).to_long() % mS;
    if (k <= 0) k += mS;
    const RingElem chL = deligne_class(model, k, opt.conventions.window).exp();
    const RingElem ch = chL * chern_character(log_chern(model, t.q));
    const GradedClass g = td_1py(ch, model.tangent());
    long coeff = ((t.q + n - 1) % 2 == 0 ? 1 : -1) * t.mult;
    if (opt.conventions.sign == SignMode::kFlipOddStrata && model.dim() % 2 == 1) coeff = -coeff;
    const int p = static_cast<int>((Rational(n) - t.alpha).floor()) + t.q;
    values[i] = push_to_sigma(model, g, basis) * signed_power_of_minus_y(coeff, p);
  });

  for (std::size_t i = 0; i < terms.size(); ++i) rep.strata[terms[i].stratum].value += values[i];
  for (auto& c : rep.strata) {
    c.polynomial = c.value.is_polynomial();
    if (!c.polynomial) {
      rep.polynomial = false;
      if (opt.require_polynomial)
        throw ValidationError("non-polynomial contribution on stratum " + c.key + " under " + opt.conventions.name());
    }
    rep.M_y += c.value;
  }

  rep.chern_milnor = chern_milnor(a);
  if (rep.polynomial) {
    for (const char* y0 : {"-1", "0", "1"}) rep.specializations.emplace(y0, rep.M_y.specialize(Rational::parse(y0)));
    rep.cross_path_ok = rep.specializations.at("-1") == rep.chern_milnor;
  }
  rep.degree0 = degree0_check(a, rep.M_y);
  return rep;
}

SigmaChowVector chern_milnor(const Arrangement& a) {
  const SigmaBasisPtr basis = SigmaChowBasis::of(a);
  SigmaChowVector out(basis);
  for (const auto& s : sigma_strata(a)) {
    const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
    const long chi_tilde = milnor_fiber_chi(localize(a, e)) - 1;
    if (chi_tilde == 0) continue;
    const StratumModel model = compactify(a, s);
    RingElem c = RingElem::one(model.ring);
    if (model.dim() >= 1) c = log_chern(model, 1).dual().total();
    out += push_to_sigma(model, GradedClass::cap(c), basis) * RatFuncY(Rational(chi_tilde));
  }
  return out;
}

Degree0Record degree0_check(const Arrangement& a, const SigmaChowVector& M_y) {
  Degree0Record r;
  r.virtual_genus = virtual_genus(static_cast<int>(a.degree()), a.n());
  r.chi_y_x = chi_y(a, ChiTarget::kX);
  r.delta = r.virtual_genus - r.chi_y_x;
  r.trace = M_y.trace();
  r.equal = r.trace == RatFuncY(r.delta);
  return r;
}

CalibrationResult calibrate(const std::vector<CalibrationCase>& suite, int threads) {
  CalibrationResult out;
  out.chosen = all_conventions().front();
  if (suite.empty()) return out;
  int best = -1;
  for (const auto& conv : all_conventions()) {
    std::vector<CalibrationEntry> entries;
    int score = 0;
    for (const auto& c : suite) {
      CalibrationEntry e;
      e.name = c.name;
      e.point_strata_only = true;
      for (const auto& s : sigma_strata(c.arrangement)) e.point_strata_only = e.point_strata_only && s.dim == 0;
      try {
        AssembleOptions opt;
        opt.conventions = conv;
        opt.threads = threads;
        opt.require_polynomial = false;
        const MilnorReport rep = assemble(c.arrangement, c.tables, opt);
        e.polynomial = rep.polynomial;
        e.degree0 = rep.polynomial && rep.degree0.equal;
        e.cross_path = rep.cross_path_ok;
        e.trace = rep.degree0.trace.str();
        e.delta = rep.degree0.delta.str();
      } catch (const Error& err) {
        e.error = err.what();
      }
      score += e.degree0 ? 1 : 0;
      entries.push_back(std::move(e));
    }
    if (score > best) {
      best = score;
      out.chosen = conv;
    }
    out.table.emplace_back(conv, std::move(entries));
  }
  return out;
}

}  // namespace hmc
