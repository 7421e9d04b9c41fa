#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lagfe {

/// Exact arbitrary-precision rational number.
///
/// Always kept in canonical form: positive denominator, numerator and
/// denominator coprime, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n);
  explicit Rational(const mpq_class& q);

  /// n/d reduced. Throws ZeroDenominatorError when d == 0.
  static Rational make(std::int64_t n, std::int64_t d);
  static Rational make(const mpz_class& n, const mpz_class& d);

  /// Parses "n", "-n" or "n/d" (d nonzero, any sign).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// "num/den", with "/den" omitted when den == 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws ZeroDenominatorError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (and throw on zero).
  Rational pow(int e) const;

 private:
  mpq_class q_{0};
};

/// Free-function constructor mirroring Rational::make.
inline Rational rat_make(std::int64_t n, std::int64_t d) { return Rational::make(n, d); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lagfe
