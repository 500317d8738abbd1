#include "hmc/rational.hpp"

#include <climits>
#include <ostream>

#include "hmc/error.hpp"

namespace hmc {

namespace {

long checked_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ArithmeticError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational: \"" + std::string(text) + "\"");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return checked_long(q);
}

long Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return checked_long(q);
}

Rational Rational::frac() const { return *this - Rational(floor()); }

long Rational::to_long() const {
  if (!is_integer()) throw ArithmeticError("not an integer: " + str());
  return checked_long(v_.get_num());
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return Rational(1) / pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  Rational result(1);
  for (long i = 0; i < k; ++i) result = result * Rational(n - i) / Rational(i + 1);
  return result;
}

}  // namespace hmc
