#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lagfe/affine_map.hpp"
#include "lagfe/multi_index.hpp"
#include "lagfe/rational.hpp"

namespace lagfe {

/// Degree of a polynomial; -infinity for the zero polynomial.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  static Degree of(std::uint64_t n) { return Degree(n); }

  bool is_neg_infinity() const { return neg_inf_; }
  /// Throws BoundsError on -infinity.
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.n_ <=> b.n_;
  }
  /// deg p <= k, with -infinity below every natural.
  bool at_most(std::uint64_t k) const { return neg_inf_ || n_ <= k; }

 private:
  Degree() = default;
  explicit Degree(std::uint64_t n) : neg_inf_(false), n_(n) {}
  bool neg_inf_ = true;
  std::uint64_t n_ = 0;
};

/// Sparse polynomial in `dim` variables; zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GrsymlexLess>;

  /// The zero polynomial.
  explicit Polynomial(std::size_t dim);

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial monomial(const MultiIndex& a, const Rational& c = Rational(1));
  /// X_i, i in [1..dim].
  static Polynomial variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const MultiIndex& a) const;

  /// Adds c X^a, pruning a resulting zero.
  void add_term(const MultiIndex& a, const Rational& c);

  Degree degree() const;
  Rational eval(std::span<const Rational> x) const;

  /// "3/2*X1^2*X3 - X2 + 1"
  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.dim_ == q.dim_ && p.terms_ == q.terms_; }

 private:
  std::size_t dim_;
  Terms terms_;
};

Polynomial monomial(const MultiIndex& a);
Rational eval(const Polynomial& p, std::span<const Rational> x);
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Rational& c, const Polynomial& p);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Degree degree(const Polynomial& p);

/// d^beta p, term by term.
Polynomial partial_derivative(const Polynomial& p, const MultiIndex& beta);

/// p(x_1..x_{d-1}) viewed in d variables.
Polynomial embed_last(const Polynomial& p);

/// p = embed_last(p0) + X_d p1. Throws DimensionMismatchError for dim < 2.
std::pair<Polynomial, Polynomial> divide_by_last_variable(const Polynomial& p);
std::pair<Polynomial, Polynomial> zeta(const Polynomial& p);
Polynomial zeta_inverse(const Polynomial& p0, const Polynomial& p1);

/// r_0..r_k with p = sum embed_last(r_i) X_d^i, k = max(deg p, 0).
std::vector<Polynomial> horner_coefficients(const Polynomial& p);

/// p o f, a polynomial in f.domain_dim() variables.
Polynomial compose_affine(const Polynomial& p, const AffineMap& f);

/// prod_{j != i} (X - a_j)/(a_i - a_j). Throws DuplicateNodeError, BoundsError.
Polynomial lagrange_1d(std::span<const Rational> nodes, std::size_t i);

}  // namespace lagfe
