#include "lagfe/matrix.hpp"

#include <utility>

#include "lagfe/errors.hpp"

namespace lagfe {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatchError("matrix entry count does not match rows x cols");
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatchError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatchError("matrix-vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product size mismatch");
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError("matrix sum size mismatch");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

namespace {

// Integer matrix obtained by clearing the denominators of each row.
// `scale` accumulates the product of the per-row multipliers.
struct IntegerRows {
  std::size_t rows;
  std::size_t cols;
  std::vector<mpz_class> m;
  mpz_class scale = 1;

  mpz_class& at(std::size_t r, std::size_t c) { return m[r * cols + c]; }
};

IntegerRows clear_denominators(const RatMatrix& a) {
  IntegerRows out{a.rows(), a.cols(), std::vector<mpz_class>(a.rows() * a.cols())};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (const auto& x : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const mpq_class& x = a(r, c).value();
      out.at(r, c) = x.get_num() * (l / x.get_den());
    }
    out.scale *= l;
  }
  return out;
}

// Bareiss elimination to row echelon form. Returns the rank; `sign` tracks
// row swaps. For square full-rank input the last pivot is the determinant.
std::size_t bareiss(IntegerRows& w, int& sign, mpz_class& last_pivot) {
  sign = 1;
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < w.cols && rank < w.rows; ++c) {
    std::size_t p = rank;
    while (p < w.rows && sgn(w.at(p, c)) == 0) ++p;
    if (p == w.rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(p, j), w.at(rank, j));
      sign = -sign;
    }
    const mpz_class piv = w.at(rank, c);
    for (std::size_t i = rank + 1; i < w.rows; ++i) {
      const mpz_class lead = w.at(i, c);
      for (std::size_t j = c + 1; j < w.cols; ++j) {
        mpz_class t = piv * w.at(i, j) - lead * w.at(rank, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w.at(i, j) = std::move(t);
      }
      w.at(i, c) = 0;
    }
    prev = piv;
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace

Rational mat_det(const RatMatrix& a) {
  if (!a.is_square()) throw NonSquareError("determinant of a non-square matrix");
  if (a.rows() == 0) return Rational(1);
  IntegerRows w = clear_denominators(a);
  int sign = 1;
  mpz_class last;
  if (bareiss(w, sign, last) < a.rows()) return Rational(0);
  return Rational::make(sign * last, w.scale);
}

std::size_t mat_rank(const RatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  IntegerRows w = clear_denominators(a);
  int sign = 1;
  mpz_class last;
  return bareiss(w, sign, last);
}

RatMatrix mat_solve(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square()) throw NonSquareError("solve with a non-square matrix");
  if (a.rows() != b.rows()) throw DimensionMismatchError("solve: row count of A and B differ");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  RatMatrix lhs = a;
  RatMatrix rhs = b;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && lhs(p, c).is_zero()) ++p;
    if (p == n) throw SingularMatrixError("singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs(p, j), lhs(c, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(rhs(p, j), rhs(c, j));
    }
    const Rational inv = Rational(1) / lhs(c, c);
    for (std::size_t j = c; j < n; ++j) lhs(c, j) *= inv;
    for (std::size_t j = 0; j < m; ++j) rhs(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || lhs(i, c).is_zero()) continue;
      const Rational f = lhs(i, c);
      for (std::size_t j = c; j < n; ++j) lhs(i, j) -= f * lhs(c, j);
      for (std::size_t j = 0; j < m; ++j) rhs(i, j) -= f * rhs(c, j);
    }
  }
  return rhs;
}

RatMatrix mat_inverse(const RatMatrix& a) { return mat_solve(a, RatMatrix::identity(a.rows())); }

}  // namespace lagfe
