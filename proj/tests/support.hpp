#pragma once

#include <cstdint>
#include <ostream>
#include <initializer_list>
#include <string>
#include <vector>

#include "hmc/ambient.hpp"
#include "hmc/arrangement.hpp"
#include "hmc/polynomial.hpp"
#include "hmc/ratfunc.hpp"
#include "hmc/rational.hpp"
#include "hmc/spectrum.hpp"

namespace hmc::test {

inline Rational Q(const char* s) { return Rational::parse(s); }

// Ascending coefficients given as rational strings.
inline Poly P(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(Rational::parse(s));
  return Poly(std::move(c));
}

inline RatFuncY F(std::initializer_list<const char*> coeffs) { return RatFuncY(P(coeffs)); }

// Small deterministic generator (splitmix64); every property test seeds its own.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (next() & 1U) != 0; }

  Poly poly(int max_degree, long lo = -3, long hi = 3) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(range(0, max_degree));
    for (int k = 0; k <= deg; ++k) c.emplace_back(range(lo, hi));
    return Poly(std::move(c));
  }
  Poly nonzero_poly(int max_degree) {
    for (;;) {
      Poly p = poly(max_degree);
      if (!p.is_zero()) return p;
    }
  }
  RatFuncY ratfunc(int max_degree) { return RatFuncY(poly(max_degree), nonzero_poly(max_degree)); }
  RatFuncY nonzero_ratfunc(int max_degree) { return RatFuncY(nonzero_poly(max_degree), nonzero_poly(max_degree)); }

  // Random arrangement in P^n with small integer covectors, pairwise
  // non-proportional, optionally with multiplicities up to max_mult.
  Arrangement arrangement(int n, int count, long max_mult = 1) {
    std::vector<Hyperplane> hs;
    while (static_cast<int>(hs.size()) < count) {
      Covector c;
      for (int i = 0; i <= n; ++i) c.emplace_back(range(-2, 2));
      if (vector_rank({c}) == 0) continue;
      bool fresh = true;
      for (const auto& h : hs) fresh = fresh && vector_rank({h.coeffs, c}) == 2;
      if (!fresh) continue;
      hs.push_back(Hyperplane{c, range(1, max_mult)});
    }
    return Arrangement::build(n, std::move(hs));
  }

 private:
  std::uint64_t s_;
};

}  // namespace hmc::test

namespace hmc {

// Readable failure output under gtest.
inline void PrintTo(const Rational& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const Poly& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const RatFuncY& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const RingElem& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const Spectrum& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const GradedClass& v, std::ostream* os) {
  *os << "{";
  for (std::size_t k = 0; k < v.by_degree.size(); ++k) {
    *os << (k ? ", " : "") << "[" << k << "]:";
    for (const auto& c : v.by_degree[k]) *os << " " << c.str();
  }
  *os << "}";
}

}  // namespace hmc
