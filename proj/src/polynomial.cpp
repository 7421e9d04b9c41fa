#include "lagfe/polynomial.hpp"

#include <sstream>

#include "lagfe/errors.hpp"

namespace lagfe {

std::uint64_t Degree::value() const {
  if (neg_inf_) throw BoundsError("degree of the zero polynomial is -infinity");
  return n_;
}

std::string Degree::to_string() const { return neg_inf_ ? "-inf" : std::to_string(n_); }

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(MultiIndex::zero(dim), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& a, const Rational& c) {
  Polynomial p(a.dim());
  p.add_term(a, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i) {
  return monomial(MultiIndex::scaled_unit(dim, i, 1));
}

Rational Polynomial::coeff(const MultiIndex& a) const {
  if (a.dim() != dim_) throw DimensionMismatchError("exponent dimension differs from polynomial dimension");
  const auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& a, const Rational& c) {
  if (a.dim() != dim_) throw DimensionMismatchError("exponent dimension differs from polynomial dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  // graded order: the last key has maximal length
  return Degree::of(terms_.rbegin()->first.length());
}

Rational Polynomial::eval(std::span<const Rational> x) const {
  if (x.size() != dim_) throw DimensionMismatchError("evaluation point dimension differs from polynomial dimension");
  // powers of each coordinate, grown on demand
  std::vector<std::vector<Rational>> pw(dim_, std::vector<Rational>{Rational(1)});
  Rational sum;
  for (const auto& [a, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      auto& row = pw[i];
      while (row.size() <= a[i]) row.push_back(row.back() * x[i]);
      t *= row[a[i]];
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = a.length() == 0;
    bool need_star = false;
    if (unit || mag != Rational(1)) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a[i] == 0) continue;
      if (need_star) os << '*';
      os << 'X' << (i + 1);
      if (a[i] > 1) os << '^' << a[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.dim_ != dim_) throw DimensionMismatchError("polynomial sum of different dimensions");
  for (const auto& [a, c] : q.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.dim_ != dim_) throw DimensionMismatchError("polynomial difference of different dimensions");
  for (const auto& [a, c] : q.terms_) add_term(a, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.dim_ != q.dim_) throw DimensionMismatchError("polynomial product of different dimensions");
  Polynomial r(p.dim_);
  for (const auto& [a, c] : p.terms_) {
    for (const auto& [b, e] : q.terms_) r.add_term(a + b, c * e);
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.dim_);
  if (c.is_zero()) return r;
  r.terms_ = p.terms_;
  for (auto& [a, x] : r.terms_) x *= c;
  return r;
}

Polynomial monomial(const MultiIndex& a) { return Polynomial::monomial(a); }
Rational eval(const Polynomial& p, std::span<const Rational> x) { return p.eval(x); }
Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial scale(const Rational& c, const Polynomial& p) { return c * p; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Degree degree(const Polynomial& p) { return p.degree(); }

Polynomial partial_derivative(const Polynomial& p, const MultiIndex& beta) {
  if (beta.dim() != p.dim()) throw DimensionMismatchError("derivative multi-index dimension mismatch");
  Polynomial r(p.dim());
  for (const auto& [a, c] : p.terms()) {
    std::vector<unsigned> e(a.dim());
    mpz_class factor = 1;
    bool vanishes = false;
    for (std::size_t i = 0; i < a.dim() && !vanishes; ++i) {
      if (beta[i] > a[i]) {
        vanishes = true;
        break;
      }
      // a_i! / (a_i - beta_i)!
      for (unsigned j = a[i] - beta[i] + 1; j <= a[i]; ++j) factor *= j;
      e[i] = a[i] - beta[i];
    }
    if (!vanishes) r.add_term(MultiIndex(std::move(e)), c * Rational(factor));
  }
  return r;
}

Polynomial embed_last(const Polynomial& p) {
  Polynomial r(p.dim() + 1);
  for (const auto& [a, c] : p.terms()) r.add_term(a.with_appended(0), c);
  return r;
}

std::pair<Polynomial, Polynomial> divide_by_last_variable(const Polynomial& p) {
  if (p.dim() < 2) throw DimensionMismatchError("division by the last variable needs dimension >= 2");
  const std::size_t d = p.dim();
  Polynomial p0(d - 1);
  Polynomial p1(d);
  for (const auto& [a, c] : p.terms()) {
    if (a[d - 1] == 0) {
      p0.add_term(a.drop_last(), c);
    } else {
      auto e = a.components();
      --e[d - 1];
      p1.add_term(MultiIndex(std::move(e)), c);
    }
  }
  return {std::move(p0), std::move(p1)};
}

std::pair<Polynomial, Polynomial> zeta(const Polynomial& p) { return divide_by_last_variable(p); }

Polynomial zeta_inverse(const Polynomial& p0, const Polynomial& p1) {
  if (p0.dim() + 1 != p1.dim()) throw DimensionMismatchError("zeta_inverse expects dim(p0) = dim(p1) - 1");
  if (p1.dim() < 2) throw DimensionMismatchError("zeta_inverse needs dimension >= 2");
  return embed_last(p0) + Polynomial::variable(p1.dim(), p1.dim()) * p1;
}

std::vector<Polynomial> horner_coefficients(const Polynomial& p) {
  if (p.dim() < 2) throw DimensionMismatchError("Horner coefficients need dimension >= 2");
  const std::size_t d = p.dim();
  const auto deg = p.degree();
  const std::size_t k = deg.is_neg_infinity() ? 0 : deg.value();
  std::vector<Polynomial> r(k + 1, Polynomial(d - 1));
  for (const auto& [a, c] : p.terms()) r[a[d - 1]].add_term(a.drop_last(), c);
  return r;
}

namespace {

// Powers of one affine form c0 + sum_m c_m y_m, expanded by the multinomial
// theorem and memoized by exponent.
class AffineFormPowers {
 public:
  AffineFormPowers(std::size_t l, std::vector<Rational> coeffs) : l_(l), c_(std::move(coeffs)) {}

  const Polynomial& pow(unsigned e) {
    while (cache_.size() <= e) cache_.push_back(expand(static_cast<unsigned>(cache_.size())));
    return cache_[e];
  }

 private:
  Polynomial expand(unsigned e) const {
    Polynomial r(l_);
    mpz_class e_fact;
    mpz_fac_ui(e_fact.get_mpz_t(), e);
    // gamma in C_e^{l+1}: gamma_0 goes to the constant, gamma_m to y_m
    for (const auto& g : enumerate(IndexSetSpec::exact(l_ + 1, e))) {
      Rational t(1);
      mpz_class denom = 1;
      bool zero = false;
      for (std::size_t m = 0; m <= l_; ++m) {
        if (g[m] == 0) continue;
        if (c_[m].is_zero()) {
          zero = true;
          break;
        }
        t *= c_[m].pow(static_cast<int>(g[m]));
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), g[m]);
        denom *= f;
      }
      if (zero) continue;
      t *= Rational::make(e_fact, denom);
      r.add_term(g.drop_first(), t);
    }
    return r;
  }

  std::size_t l_;
  std::vector<Rational> c_;
  std::vector<Polynomial> cache_;
};

}  // namespace

Polynomial compose_affine(const Polynomial& p, const AffineMap& f) {
  if (f.codomain_dim() != p.dim()) throw DimensionMismatchError("affine map codomain differs from polynomial dimension");
  const std::size_t l = f.domain_dim();
  const std::size_t d = p.dim();
  std::vector<AffineFormPowers> forms;
  forms.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> c;
    c.reserve(l + 1);
    c.push_back(f.translation[j]);
    for (std::size_t m = 0; m < l; ++m) c.push_back(f.matrix(j, m));
    forms.emplace_back(l, std::move(c));
  }
  Polynomial r(l);
  for (const auto& [a, c] : p.terms()) {
    Polynomial t = Polynomial::constant(l, c);
    for (std::size_t j = 0; j < d && !t.is_zero(); ++j) {
      if (a[j] > 0) t = t * forms[j].pow(a[j]);
    }
    r += t;
  }
  return r;
}

Polynomial lagrange_1d(std::span<const Rational> nodes, std::size_t i) {
  if (i >= nodes.size()) throw BoundsError("Lagrange index outside [0..k]");
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (nodes[a] == nodes[b]) throw DuplicateNodeError("repeated node " + nodes[a].to_string());
    }
  }
  Polynomial r = Polynomial::constant(1, Rational(1));
  const Polynomial x = Polynomial::variable(1, 1);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == i) continue;
    const Rational inv = Rational(1) / (nodes[i] - nodes[j]);
    r = r * (inv * (x - Polynomial::constant(1, nodes[j])));
  }
  return r;
}

}  // namespace lagfe
