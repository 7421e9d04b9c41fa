#include "lagfe/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "lagfe/errors.hpp"

namespace lagfe {

MultiIndex MultiIndex::scaled_unit(std::size_t d, std::size_t i, unsigned k) {
  if (i < 1 || i > d) throw BoundsError("unit index outside [1..d]");
  std::vector<unsigned> c(d, 0);
  c[i - 1] = k;
  return MultiIndex(std::move(c));
}

std::uint64_t MultiIndex::length() const {
  return std::accumulate(c_.begin(), c_.end(), std::uint64_t{0});
}

std::uint64_t MultiIndex::factorial() const {
  std::uint64_t f = 1;
  for (unsigned a : c_) {
    for (unsigned j = 2; j <= a; ++j) {
      if (__builtin_mul_overflow(f, std::uint64_t{j}, &f)) throw BoundsError("factorial overflow");
    }
  }
  return f;
}

MultiIndex MultiIndex::drop_last() const {
  if (c_.empty()) throw BoundsError("drop_last of an empty multi-index");
  return MultiIndex(std::vector<unsigned>(c_.begin(), c_.end() - 1));
}

MultiIndex MultiIndex::drop_first() const {
  if (c_.empty()) throw BoundsError("drop_first of an empty multi-index");
  return MultiIndex(std::vector<unsigned>(c_.begin() + 1, c_.end()));
}

MultiIndex MultiIndex::with_appended(unsigned last) const {
  auto c = c_;
  c.push_back(last);
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::with_prepended(unsigned first) const {
  std::vector<unsigned> c;
  c.reserve(c_.size() + 1);
  c.push_back(first);
  c.insert(c.end(), c_.begin(), c_.end());
  return MultiIndex(std::move(c));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("multi-index sum of different dimensions");
  auto c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return MultiIndex(std::move(c));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t p) {
  if (p > n) return 0;
  p = std::min(p, n - p);
  // row[j] holds (m choose j) for the current m
  std::vector<std::uint64_t> row(p + 1, 0);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t j = std::min(m, p); j >= 1; --j) {
      if (__builtin_add_overflow(row[j], row[j - 1], &row[j])) throw BoundsError("binomial overflow");
    }
  }
  return row[p];
}

std::uint64_t mi_length(const MultiIndex& a) { return a.length(); }
std::uint64_t mi_factorial(const MultiIndex& a) { return a.factorial(); }

unsigned mi_kronecker(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("kronecker of different dimensions");
  return a == b ? 1u : 0u;
}

std::string_view order_name(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::colex: return "colex";
    case MonomialOrder::symlex: return "symlex";
    case MonomialOrder::revlex: return "revlex";
    case MonomialOrder::grlex: return "grlex";
    case MonomialOrder::grcolex: return "grcolex";
    case MonomialOrder::grsymlex: return "grsymlex";
    case MonomialOrder::grevlex: return "grevlex";
  }
  return "?";
}

MonomialOrder parse_order(std::string_view name) {
  for (auto o : kAllOrders) {
    if (order_name(o) == name) return o;
  }
  throw ParseError("unknown monomial order '" + std::string(name) + "'");
}

bool is_graded(MonomialOrder o) {
  return o == MonomialOrder::grlex || o == MonomialOrder::grcolex || o == MonomialOrder::grsymlex ||
         o == MonomialOrder::grevlex;
}

namespace {

std::strong_ordering cmp_unsigned(unsigned x, unsigned y) { return x <=> y; }

// first differing component decides
std::strong_ordering lex(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return cmp_unsigned(a[i], b[i]);
  }
  return std::strong_ordering::equal;
}

// last differing component decides
std::strong_ordering colex(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = a.dim(); i-- > 0;) {
    if (a[i] != b[i]) return cmp_unsigned(a[i], b[i]);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering ungraded(MonomialOrder o, const MultiIndex& a, const MultiIndex& b) {
  switch (o) {
    case MonomialOrder::lex:
    case MonomialOrder::grlex: return lex(a, b);
    case MonomialOrder::colex:
    case MonomialOrder::grcolex: return colex(a, b);
    case MonomialOrder::symlex:
    case MonomialOrder::grsymlex: return lex(b, a);
    case MonomialOrder::revlex:
    case MonomialOrder::grevlex: return colex(b, a);
  }
  return std::strong_ordering::equal;
}

void check_dim(std::size_t d) {
  if (d == 0) throw BoundsError("dimension must be at least 1");
}

// C_l^d in no particular order
void exact_layer(std::size_t d, unsigned l, std::vector<unsigned>& prefix, std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(l);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned a = 0; a <= l; ++a) {
    prefix.push_back(a);
    exact_layer(d, l - a, prefix, out);
    prefix.pop_back();
  }
}

std::vector<MultiIndex> exact_layer(std::size_t d, unsigned l) {
  std::vector<MultiIndex> out;
  if (d == 0) {
    if (l == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> prefix;
  exact_layer(d, l, prefix, out);
  return out;
}

void sort_by(MonomialOrder o, std::vector<MultiIndex>& v) {
  std::sort(v.begin(), v.end(), [o](const MultiIndex& a, const MultiIndex& b) { return order_less(o, a, b); });
}

// A_k^d including the dimension-0 case, used for preimages of f_head/f_tail.
std::vector<MultiIndex> at_most(std::size_t d, unsigned k, MonomialOrder o) {
  std::vector<MultiIndex> out;
  for (unsigned l = 0; l <= k; ++l) {
    auto layer = exact_layer(d, l);
    if (is_graded(o)) sort_by(o, layer);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  if (!is_graded(o)) sort_by(o, out);
  return out;
}

}  // namespace

std::strong_ordering order_compare(MonomialOrder o, const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("comparing multi-indices of different dimensions");
  if (is_graded(o)) {
    const auto c = a.length() <=> b.length();
    if (c != 0) return c;
  }
  return ungraded(o, a, b);
}

std::string_view kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::AtMost: return "A";
    case SetKind::Exact: return "C";
    case SetKind::ZeroAt: return "Azero";
  }
  return "?";
}

std::vector<MultiIndex> enumerate(const IndexSetSpec& spec, MonomialOrder order) {
  check_dim(spec.d);
  switch (spec.kind) {
    case SetKind::AtMost: return at_most(spec.d, spec.k, order);
    case SetKind::Exact: {
      auto layer = exact_layer(spec.d, spec.k);
      sort_by(order, layer);
      return layer;
    }
    case SetKind::ZeroAt: {
      if (spec.zero_index < 1 || spec.zero_index > spec.d) throw BoundsError("zero index outside [1..d]");
      auto all = at_most(spec.d, spec.k, order);
      std::erase_if(all, [&](const MultiIndex& a) { return a[spec.zero_index - 1] != 0; });
      return all;
    }
  }
  return {};
}

std::uint64_t cardinal(const IndexSetSpec& spec) {
  if (spec.d == 0) {
    if (spec.kind == SetKind::AtMost) return 1;
    throw BoundsError("dimension must be at least 1");
  }
  switch (spec.kind) {
    case SetKind::AtMost: return binomial(spec.k + spec.d, spec.d);
    case SetKind::Exact: return binomial(spec.k + spec.d - 1, spec.d - 1);
    case SetKind::ZeroAt:
      if (spec.zero_index < 1 || spec.zero_index > spec.d) throw BoundsError("zero index outside [1..d]");
      return binomial(spec.k + spec.d - 1, spec.d - 1);
  }
  return 0;
}

namespace {

void check_slice(std::size_t d, unsigned k, unsigned i) {
  if (d < 2) throw BoundsError("slices need d >= 2");
  if (i > k) throw BoundsError("slice index exceeds k");
}

void check_preimage(std::size_t d, unsigned k, const MultiIndex& a) {
  check_dim(d);
  if (a.dim() + 1 != d) throw DimensionMismatchError("preimage must have dimension d-1");
  if (a.length() > k) throw LengthExceedsError("multi-index length exceeds k");
}

}  // namespace

std::vector<MultiIndex> slice_vertical(std::size_t d, unsigned k, unsigned i) {
  check_slice(d, k, i);
  std::vector<MultiIndex> out;
  for (const auto& a : enumerate(IndexSetSpec::exact(d - 1, k - i))) out.push_back(a.with_prepended(i));
  return out;
}

std::vector<MultiIndex> slice_horizontal(std::size_t d, unsigned k, unsigned i) {
  check_slice(d, k, i);
  std::vector<MultiIndex> out;
  for (const auto& a : enumerate(IndexSetSpec::exact(d - 1, k - i))) out.push_back(a.with_appended(i));
  return out;
}

MultiIndex f_head(std::size_t d, unsigned k, const MultiIndex& a) {
  check_preimage(d, k, a);
  return a.with_prepended(k - static_cast<unsigned>(a.length()));
}

MultiIndex f_tail(std::size_t d, unsigned k, const MultiIndex& a) {
  check_preimage(d, k, a);
  return a.with_appended(k - static_cast<unsigned>(a.length()));
}

MultiIndex f_insert_zero(std::size_t d, unsigned k, std::size_t i, const MultiIndex& a) {
  if (i < 1 || i > d) throw BoundsError("insertion position outside [1..d]");
  check_preimage(d, k, a);
  auto c = a.components();
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(i - 1), 0u);
  return MultiIndex(std::move(c));
}

std::size_t jump_enum(std::size_t d, std::size_t i, std::size_t j) {
  if (i > d + 1 || j > d) throw BoundsError("jump_enum argument out of range");
  return j < i ? j : j + 1;
}

std::size_t circular_perm(std::size_t d, std::size_t i, std::size_t j) {
  if (i > d || j > d) throw BoundsError("circular_perm argument out of range");
  return j < d - i ? j + i + 1 : j - (d - i);
}

std::size_t transposition(std::size_t d, std::size_t i, std::size_t j) {
  if (i > d || j > d) throw BoundsError("transposition argument out of range");
  if (j == i) return d;
  if (j == d) return i;
  return j;
}

namespace {

template <class F>
void check_increasing(MonomialOrder o, const std::vector<MultiIndex>& domain, F f, std::size_t pos,
                      ConditionResult& out) {
  for (std::size_t j = 0; j + 1 < domain.size(); ++j) {
    const auto fa = f(domain[j]);
    const auto fb = f(domain[j + 1]);
    if (!order_less(o, fa, fb)) {
      out.holds = false;
      out.witnesses.push_back({domain[j], domain[j + 1], fa, fb, pos});
    }
  }
}

}  // namespace

OrderConditionReport check_order_conditions(MonomialOrder order, std::size_t d, unsigned k) {
  check_dim(d);
  OrderConditionReport r{order, d, k, {}, {}, {}, {}, {}};

  for (unsigned l = 0; l < k; ++l) {
    const auto lo = enumerate(IndexSetSpec::exact(d, l), order);
    const auto hi = enumerate(IndexSetSpec::exact(d, l + 1), order);
    if (!order_less(order, lo.back(), hi.front())) {
      r.cond_i.holds = false;
      r.cond_i.witnesses.push_back({lo.back(), hi.front(), std::nullopt, std::nullopt, 0});
    }
  }

  if (d >= 2) {
    const auto domain = at_most(d - 1, k, order);
    check_increasing(order, domain, [&](const MultiIndex& a) { return f_head(d, k, a); }, 0, r.head);
    check_increasing(order, domain, [&](const MultiIndex& a) { return f_tail(d, k, a); }, 0, r.tail);
    for (std::size_t i = 1; i <= d; ++i) {
      check_increasing(order, domain, [&](const MultiIndex& a) { return f_insert_zero(d, k, i, a); }, i, r.insert);
    }
  }

  if (k >= 1) {
    MultiIndex prev = MultiIndex::zero(d);
    for (std::size_t i = 1; i <= d; ++i) {
      const auto cur = MultiIndex::scaled_unit(d, i, k);
      if (!order_less(order, prev, cur)) {
        r.cond_iii.holds = false;
        r.cond_iii.witnesses.push_back({prev, cur, std::nullopt, std::nullopt, 0});
      }
      prev = cur;
    }
  }
  return r;
}

}  // namespace lagfe
