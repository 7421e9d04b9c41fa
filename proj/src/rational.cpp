#include "lagfe/rational.hpp"

#include <ostream>

#include "lagfe/errors.hpp"

namespace lagfe {

namespace {

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform.
  mpz_class z;
  const bool neg = v < 0;
  const auto mag = neg ? static_cast<std::uint64_t>(-(v + 1)) + 1u : static_cast<std::uint64_t>(v);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (neg) z = -z;
  return z;
}

}  // namespace

Rational::Rational(std::int64_t n) : q_(from_int64(n)) {}

Rational::Rational(const mpz_class& n) : q_(n) {}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (sgn(q_.get_den()) == 0) throw ZeroDenominatorError();
  q_.canonicalize();
}

Rational Rational::make(std::int64_t n, std::int64_t d) {
  return make(from_int64(n), from_int64(d));
}

Rational Rational::make(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw ZeroDenominatorError();
  Rational r;
  r.q_ = mpq_class(n, d);
  r.q_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  const auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  return make(to_mpz(num), to_mpz(den));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominatorError();
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(int e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lagfe
