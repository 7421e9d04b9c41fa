#include "lagfe/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "lagfe/element.hpp"
#include "lagfe/errors.hpp"

namespace lagfe {

// ---- seeded data -----------------------------------------------------------

Rng make_rng(std::uint64_t seed, const std::string& label) {
  std::uint32_t h = 2166136261u;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 16777619u;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  return Rng(seq);
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational random_rational(Rng& rng) {
  const auto n = uniform_int(rng, -10, 10);
  const auto d = uniform_int(rng, 1, 4);
  return Rational::make(n, d);
}

Point random_point(std::size_t d, Rng& rng) {
  Point x(d);
  for (auto& c : x) c = random_rational(rng);
  return x;
}

VertexFamily random_independent_family(std::size_t d, Rng& rng) {
  if (d == 0) throw BoundsError("dimension must be at least 1");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> v;
    for (std::size_t i = 0; i <= d; ++i) v.push_back(random_point(d, rng));
    VertexFamily f(std::move(v));
    if (is_affinely_independent(f)) return f;
  }
  throw DegenerateSimplexError("no affinely independent family after 1000 attempts");
}

Polynomial random_polynomial(std::size_t d, unsigned k, Rng& rng) {
  Polynomial p(d);
  for (const auto& a : enumerate(IndexSetSpec::at_most(d, k))) p.add_term(a, random_rational(rng));
  return p;
}

AffineMap random_affine(std::size_t from, std::size_t to, Rng& rng) {
  RatMatrix m(to, from);
  for (std::size_t r = 0; r < to; ++r) {
    for (std::size_t c = 0; c < from; ++c) m(r, c) = random_rational(rng);
  }
  return {std::move(m), random_point(to, rng)};
}

std::vector<std::size_t> random_permutation(std::size_t d, Rng& rng) {
  std::vector<std::size_t> p(d + 1);
  for (std::size_t j = 0; j <= d; ++j) p[j] = j;
  for (std::size_t j = d; j > 0; --j) {
    std::swap(p[j], p[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(j)))]);
  }
  return p;
}

namespace {

// ---- check plumbing --------------------------------------------------------

struct CheckFailed {
  Json repro;
};

class Ctx {
 public:
  Ctx(const SuiteConfig& c, Rng r) : cfg(c), rng(std::move(r)) {}

  template <class F>
  void expect(bool ok, F&& repro) {
    ++cases;
    if (!ok) throw CheckFailed{repro()};
  }

  // reference family first, then `samples` random ones
  std::vector<VertexFamily> families(std::size_t d) {
    std::vector<VertexFamily> out{reference_vertices(d)};
    for (unsigned s = 0; s < cfg.samples; ++s) out.push_back(random_independent_family(d, rng));
    return out;
  }

  const SuiteConfig& cfg;
  Rng rng;
  std::uint64_t cases = 0;
};

using CheckFn = void (*)(Ctx&);

struct CheckDef {
  const char* id;
  const char* title;
  CheckFn run;
};

Json jv(const VertexFamily& v) { return to_json(v); }
Json jp(const Polynomial& p) { return to_json(p); }
Json jx(const Point& x) { return point_to_json(x); }
Json ja(const MultiIndex& a) { return to_json(a); }
Json jr(const Rational& r) { return to_json(r); }

Json repro(std::initializer_list<std::pair<const char*, Json>> kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

Polynomial one(std::size_t d) { return Polynomial::constant(d, Rational(1)); }

std::vector<MultiIndex> box(std::size_t d, unsigned k) {
  // brute force over [0..k]^d
  std::vector<MultiIndex> out;
  std::vector<unsigned> c(d, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < d && c[i] == k) c[i++] = 0;
    if (i == d) break;
    ++c[i];
  }
  return out;
}

std::set<std::vector<unsigned>> as_set(const std::vector<MultiIndex>& v) {
  std::set<std::vector<unsigned>> s;
  for (const auto& a : v) s.insert(a.components());
  return s;
}

Rational rpow(const Rational& x, unsigned e) { return x.pow(static_cast<int>(e)); }

// ---- combinatorics ----------------------------------------------------------

void check_1364(Ctx& c) {
  for (std::uint64_t n = 0; n <= 24; ++n) {
    const auto rep = [&](const char* what, std::uint64_t p) { return [=] { return repro({{"identity", what}, {"n", n}, {"p", p}}); }; };
    c.expect(binomial(n, 0) == 1 && binomial(n, n) == 1, rep("C(n,0)=C(n,n)=1", 0));
    if (n >= 1) c.expect(binomial(n, 1) == n && binomial(n, n - 1) == n, rep("C(n,1)=C(n,n-1)=n", 1));
    for (std::uint64_t p = 0; p <= n + 2; ++p) {
      mpz_class oracle;
      mpz_bin_uiui(oracle.get_mpz_t(), n, p);
      c.expect(mpz_class(std::to_string(binomial(n, p))) == oracle, rep("factorial formula", p));
      if (p <= n) c.expect(binomial(n, n - p) == binomial(n, p), rep("symmetry", p));
      if (n >= 1 && p >= 1) {
        c.expect(binomial(n, p) == binomial(n - 1, p - 1) + binomial(n - 1, p), rep("Pascal rule", p));
      }
      if (p >= 1) {
        std::uint64_t s = 0;
        for (std::uint64_t j = 0; j <= n; ++j) s += binomial(j + p - 1, p - 1);
        c.expect(s == binomial(n + p, p), rep("hockey stick sum", p));
      }
    }
  }
}

void check_1366(Ctx& c) {
  for (std::size_t d = 0; d <= c.cfg.d_max + 2; ++d) {
    for (std::size_t i = 0; i <= d; ++i) {
      std::set<std::size_t> image;
      for (std::size_t j = 0; j <= d; ++j) {
        const auto v = circular_perm(d, i, j);
        image.insert(v);
        c.expect(v == (j + i + 1) % (d + 1), [&] { return repro({{"d", d}, {"i", i}, {"j", j}, {"got", v}}); });
      }
      c.expect(image.size() == d + 1, [&] { return repro({{"d", d}, {"i", i}, {"issue", "not bijective"}}); });
      c.expect(circular_perm(d, i, d) == i, [&] { return repro({{"d", d}, {"i", i}, {"issue", "c(d) != i"}}); });
      if (i == d) {
        for (std::size_t j = 0; j <= d; ++j) {
          c.expect(circular_perm(d, d, j) == j, [&] { return repro({{"d", d}, {"j", j}, {"issue", "c_d not identity"}}); });
        }
      }
    }
  }
}

void check_1367(Ctx& c) {
  for (std::size_t d = 0; d <= c.cfg.d_max + 2; ++d) {
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) {
        const auto t = transposition(d, i, j);
        const auto want = j == i ? d : (j == d ? i : j);
        c.expect(t == want, [&] { return repro({{"d", d}, {"i", i}, {"j", j}, {"got", t}}); });
        c.expect(transposition(d, i, t) == j, [&] { return repro({{"d", d}, {"i", i}, {"j", j}, {"issue", "not involutive"}}); });
        if (i == d) c.expect(t == j, [&] { return repro({{"d", d}, {"j", j}, {"issue", "tau_d not identity"}}); });
      }
    }
  }
}

void check_1368(Ctx& c) {
  for (std::size_t d = 0; d <= c.cfg.d_max + 2; ++d) {
    for (std::size_t i = 0; i <= d + 1; ++i) {
      std::set<std::size_t> image;
      for (std::size_t j = 0; j <= d; ++j) {
        const auto t = jump_enum(d, i, j);
        image.insert(t);
        if (i == 0) c.expect(t == j + 1, [&] { return repro({{"d", d}, {"j", j}, {"issue", "theta_0 != id+1"}}); });
        if (i == d + 1) c.expect(t == j, [&] { return repro({{"d", d}, {"j", j}, {"issue", "theta_{d+1} != id"}}); });
      }
      std::set<std::size_t> want;
      for (std::size_t j = 0; j <= d + 1; ++j) {
        if (j != i) want.insert(j);
      }
      c.expect(image == want, [&] { return repro({{"d", d}, {"i", i}, {"issue", "image is not [0..d+1] minus i"}}); });
    }
  }
}

void check_1481(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto all = enumerate(IndexSetSpec::at_most(d, c.cfg.k_max));
    for (const auto& a : all) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto& b = all[static_cast<std::size_t>(uniform_int(c.rng, 0, static_cast<std::int64_t>(all.size()) - 1))];
        c.expect((a + b).length() == a.length() + b.length(), [&] { return repro({{"alpha", ja(a)}, {"beta", ja(b)}}); });
      }
    }
  }
}

void check_1485(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto all = enumerate(IndexSetSpec::at_most(d, std::min(c.cfg.k_max, 3u)));
    for (const auto& a : all) {
      for (const auto& b : all) {
        const unsigned want = a.components() == b.components() ? 1 : 0;
        c.expect(mi_kronecker(a, b) == want, [&] { return repro({{"alpha", ja(a)}, {"beta", ja(b)}}); });
      }
    }
  }
}

void check_1493(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
      const auto ck = as_set(enumerate(IndexSetSpec::exact(d, k)));
      std::set<std::vector<unsigned>> vert, hor;
      std::size_t nv = 0, nh = 0;
      for (unsigned i = 0; i <= k; ++i) {
        for (const auto& a : slice_vertical(d, k, i)) {
          c.expect(a[0] == i && ck.count(a.components()), [&] { return repro({{"d", d}, {"k", k}, {"i", i}, {"vertical", ja(a)}}); });
          vert.insert(a.components());
          ++nv;
        }
        for (const auto& a : slice_horizontal(d, k, i)) {
          c.expect(a[d - 1] == i && ck.count(a.components()), [&] { return repro({{"d", d}, {"k", k}, {"i", i}, {"horizontal", ja(a)}}); });
          hor.insert(a.components());
          ++nh;
        }
      }
      c.expect(vert == ck && nv == ck.size(), [&] { return repro({{"d", d}, {"k", k}, {"issue", "vertical slices do not partition C_k^d"}}); });
      c.expect(hor == ck && nh == ck.size(), [&] { return repro({{"d", d}, {"k", k}, {"issue", "horizontal slices do not partition C_k^d"}}); });
    }
  }
}

void check_1495(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
      std::size_t brute = 0;
      for (const auto& a : box(d, k)) brute += a.length() == k;
      const auto e = enumerate(IndexSetSpec::exact(d, k));
      c.expect(brute == cardinal(IndexSetSpec::exact(d, k)) && brute == e.size() && brute == binomial(k + d - 1, d - 1),
               [&] { return repro({{"d", d}, {"k", k}, {"brute", brute}, {"enumerated", e.size()}}); });
    }
  }
}

void check_1496(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
      std::set<std::vector<unsigned>> layers;
      std::size_t total = 0;
      for (unsigned l = 0; l <= k; ++l) {
        for (const auto& a : enumerate(IndexSetSpec::exact(d, l))) {
          layers.insert(a.components());
          ++total;
        }
      }
      const auto a = as_set(enumerate(IndexSetSpec::at_most(d, k)));
      c.expect(a == layers && total == a.size(), [&] { return repro({{"d", d}, {"k", k}}); });
    }
  }
}

void check_1498(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
    c.expect(cardinal(IndexSetSpec::at_most(0, k)) == 1, [&] { return repro({{"d", 0}, {"k", k}}); });
  }
  for (std::size_t d = 1; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
      std::size_t brute = 0;
      for (const auto& a : box(d, k)) brute += a.length() <= k;
      const auto e = enumerate(IndexSetSpec::at_most(d, k));
      c.expect(brute == cardinal(IndexSetSpec::at_most(d, k)) && brute == e.size() && brute == binomial(k + d, d),
               [&] { return repro({{"d", d}, {"k", k}, {"brute", brute}, {"enumerated", e.size()}}); });
    }
  }
}

void check_1500(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
      const auto target = as_set(enumerate(IndexSetSpec::exact(d, k)));
      std::vector<MultiIndex> dom;
      if (d == 1) {
        dom.emplace_back();
      } else {
        dom = enumerate(IndexSetSpec::at_most(d - 1, k));
      }
      std::set<std::vector<unsigned>> head, tail;
      for (const auto& a : dom) {
        const auto h = f_head(d, k, a);
        const auto t = f_tail(d, k, a);
        c.expect(h.length() == k && t.length() == k && h.drop_first() == a && t.drop_last() == a,
                 [&] { return repro({{"d", d}, {"k", k}, {"alpha", ja(a)}, {"head", ja(h)}, {"tail", ja(t)}}); });
        head.insert(h.components());
        tail.insert(t.components());
      }
      c.expect(head == target && head.size() == dom.size(), [&] { return repro({{"d", d}, {"k", k}, {"issue", "f_head not onto C_k^d"}}); });
      c.expect(tail == target && tail.size() == dom.size(), [&] { return repro({{"d", d}, {"k", k}, {"issue", "f_tail not onto C_k^d"}}); });
    }
  }
}

void check_1501(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
      const auto dom = enumerate(IndexSetSpec::at_most(d - 1, k));
      for (std::size_t i = 1; i <= d; ++i) {
        const auto target = as_set(enumerate(IndexSetSpec::zero_at(d, k, i)));
        std::set<std::vector<unsigned>> img;
        for (const auto& a : dom) {
          const auto f = f_insert_zero(d, k, i, a);
          c.expect(f.length() == a.length() && f[i - 1] == 0, [&] { return repro({{"d", d}, {"k", k}, {"i", i}, {"alpha", ja(a)}, {"image", ja(f)}}); });
          img.insert(f.components());
        }
        c.expect(img == target && img.size() == dom.size() && cardinal(IndexSetSpec::zero_at(d, k, i)) == dom.size(),
                 [&] { return repro({{"d", d}, {"k", k}, {"i", i}, {"issue", "not a bijection onto A_{k,i}^d"}}); });
      }
    }
  }
}

// ---- orders ----------------------------------------------------------------

std::strong_ordering oracle_lex(const MultiIndex& a, const MultiIndex& b) {
  const auto& x = a.components();
  const auto& y = b.components();
  if (std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end())) return std::strong_ordering::less;
  if (std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end())) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering oracle_colex(const MultiIndex& a, const MultiIndex& b) {
  std::vector<unsigned> x(a.components().rbegin(), a.components().rend());
  std::vector<unsigned> y(b.components().rbegin(), b.components().rend());
  return oracle_lex(MultiIndex(x), MultiIndex(y));
}

std::strong_ordering oracle_order(MonomialOrder o, const MultiIndex& a, const MultiIndex& b) {
  if (is_graded(o) && a.length() != b.length()) return a.length() <=> b.length();
  switch (o) {
    case MonomialOrder::lex:
    case MonomialOrder::grlex: return oracle_lex(a, b);
    case MonomialOrder::colex:
    case MonomialOrder::grcolex: return oracle_colex(a, b);
    case MonomialOrder::symlex:
    case MonomialOrder::grsymlex: return oracle_lex(b, a);
    case MonomialOrder::revlex:
    case MonomialOrder::grevlex: return oracle_colex(b, a);
  }
  return std::strong_ordering::equal;
}

void check_order_axioms(Ctx& c) {
  const unsigned k = std::min(c.cfg.k_max, 3u);
  for (std::size_t d = 1; d <= std::min<std::size_t>(c.cfg.d_max, 3); ++d) {
    const auto all = enumerate(IndexSetSpec::at_most(d, k));
    const auto zero = MultiIndex::zero(d);
    for (auto o : kAllOrders) {
      const auto name = std::string(order_name(o));
      for (const auto& a : all) {
        if (is_graded(o) && a != zero) {
          c.expect(order_less(o, zero, a), [&] { return repro({{"order", name}, {"alpha", ja(a)}, {"issue", "0 < alpha fails"}}); });
        }
        for (const auto& b : all) {
          const auto ab = order_compare(o, a, b);
          c.expect(ab == oracle_order(o, a, b), [&] { return repro({{"order", name}, {"alpha", ja(a)}, {"beta", ja(b)}, {"issue", "disagrees with oracle"}}); });
          c.expect((ab == 0) == (a == b) && order_compare(o, b, a) == 0 <=> ab,
                   [&] { return repro({{"order", name}, {"alpha", ja(a)}, {"beta", ja(b)}, {"issue", "not a strict total order"}}); });
          if (o == MonomialOrder::symlex) {
            c.expect(ab == order_compare(MonomialOrder::lex, b, a), [&] { return repro({{"alpha", ja(a)}, {"beta", ja(b)}, {"issue", "symlex(a,b) != lex(b,a)"}}); });
          }
          if (o == MonomialOrder::revlex) {
            c.expect(ab == order_compare(MonomialOrder::colex, b, a), [&] { return repro({{"alpha", ja(a)}, {"beta", ja(b)}, {"issue", "revlex(a,b) != colex(b,a)"}}); });
          }
          if (ab < 0) {
            for (const auto& g : all) {
              c.expect(order_less(o, a + g, b + g),
                       [&] { return repro({{"order", name}, {"alpha", ja(a)}, {"beta", ja(b)}, {"gamma", ja(g)}, {"issue", "not compatible with addition"}}); });
              if (order_less(o, b, g)) {
                c.expect(order_less(o, a, g), [&] { return repro({{"order", name}, {"alpha", ja(a)}, {"beta", ja(b)}, {"gamma", ja(g)}, {"issue", "not transitive"}}); });
              }
            }
          }
        }
      }
    }
  }
}

void check_order_degree(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k < c.cfg.k_max; ++k) {
      const auto lo = enumerate(IndexSetSpec::exact(d, k));
      const auto hi = enumerate(IndexSetSpec::exact(d, k + 1));
      for (auto o : kGradedOrders) {
        for (const auto& a : lo) {
          for (const auto& b : hi) {
            c.expect(order_less(o, a, b), [&] { return repro({{"order", order_name(o)}, {"alpha", ja(a)}, {"beta", ja(b)}}); });
          }
        }
      }
    }
    for (auto o : kGradedOrders) {
      const auto r = check_order_conditions(o, d, c.cfg.k_max);
      c.expect(r.cond_i.holds, [&] { return repro({{"order", order_name(o)}, {"d", d}, {"issue", "condition (i) reported as failing"}}); });
    }
  }
}

bool has_witness(const ConditionResult& r, const MultiIndex& a, const MultiIndex& b) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const OrderWitness& w) { return w.a == a && w.b == b; });
}

void check_order_dimension(Ctx& c) {
  using O = MonomialOrder;
  // exhaustive monotonicity with all pairs, independent of the consecutive-pair scan
  for (std::size_t d = 2; d <= c.cfg.d_max + 1; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      const auto dom = enumerate(IndexSetSpec::at_most(d - 1, k), O::grsymlex);
      for (std::size_t x = 0; x < dom.size(); ++x) {
        for (std::size_t y = x + 1; y < dom.size(); ++y) {
          const auto& a = dom[x];
          const auto& b = dom[y];
          c.expect(order_less(O::grsymlex, f_head(d, k, a), f_head(d, k, b)), [&] { return repro({{"map", "f_head"}, {"d", d}, {"k", k}, {"alpha", ja(a)}, {"beta", ja(b)}}); });
          for (std::size_t i = 1; i <= d; ++i) {
            c.expect(order_less(O::grsymlex, f_insert_zero(d, k, i, a), f_insert_zero(d, k, i, b)),
                     [&] { return repro({{"map", "f_insert_zero"}, {"i", i}, {"d", d}, {"k", k}, {"alpha", ja(a)}, {"beta", ja(b)}}); });
          }
        }
      }
      const auto gs = check_order_conditions(O::grsymlex, d, k);
      c.expect(gs.cond_ii() && gs.head.holds, [&] { return repro({{"order", "grsymlex"}, {"d", d}, {"k", k}}); });
    }
  }
  // the known counterexamples at d = 3, k = 3
  const MultiIndex a10{1, 0}, a02{0, 2}, a01{0, 1}, a20{2, 0};
  c.expect(order_less(O::grlex, a10, a02) && f_head(3, 3, a02) == MultiIndex{1, 0, 2} && f_head(3, 3, a10) == MultiIndex{2, 1, 0} &&
               order_less(O::grlex, f_head(3, 3, a02), f_head(3, 3, a10)),
           [] { return repro({{"order", "grlex"}, {"issue", "f_head counterexample not reproduced"}}); });
  c.expect(f_tail(3, 3, a02) == MultiIndex{0, 2, 1} && f_tail(3, 3, a10) == MultiIndex{1, 0, 2} &&
               order_less(O::grlex, f_tail(3, 3, a02), f_tail(3, 3, a10)),
           [] { return repro({{"order", "grlex"}, {"issue", "f_tail counterexample not reproduced"}}); });
  c.expect(order_less(O::grcolex, a01, a20) && f_head(3, 3, a20) == MultiIndex{1, 2, 0} && f_head(3, 3, a01) == MultiIndex{2, 0, 1} &&
               order_less(O::grcolex, f_head(3, 3, a20), f_head(3, 3, a01)),
           [] { return repro({{"order", "grcolex"}, {"issue", "f_head counterexample not reproduced"}}); });
  c.expect(f_tail(3, 3, a20) == MultiIndex{2, 0, 1} && f_tail(3, 3, a01) == MultiIndex{0, 1, 2} &&
               order_less(O::grcolex, f_tail(3, 3, a20), f_tail(3, 3, a01)),
           [] { return repro({{"order", "grcolex"}, {"issue", "f_tail counterexample not reproduced"}}); });

  const auto gl = check_order_conditions(O::grlex, 3, 3);
  c.expect(!gl.cond_ii() && has_witness(gl.head, a10, a02) && has_witness(gl.tail, a10, a02),
           [] { return repro({{"order", "grlex"}, {"issue", "condition (ii) report misses the witness"}}); });
  const auto gc = check_order_conditions(O::grcolex, 3, 3);
  c.expect(!gc.cond_ii() && has_witness(gc.head, a01, a20) && has_witness(gc.tail, a01, a20),
           [] { return repro({{"order", "grcolex"}, {"issue", "condition (ii) report misses the witness"}}); });
  const auto ge = check_order_conditions(O::grevlex, 3, 3);
  c.expect(ge.cond_ii() && ge.tail.holds && ge.insert.holds, [] { return repro({{"order", "grevlex"}, {"issue", "(ii) should hold via f_tail"}}); });
  const auto gs = check_order_conditions(O::grsymlex, 3, 3);
  c.expect(gs.cond_ii() && gs.head.holds, [] { return repro({{"order", "grsymlex"}, {"issue", "(ii) should hold via f_head"}}); });
}

void check_order_vertices(Ctx& c) {
  using O = MonomialOrder;
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
      for (auto o : {O::grsymlex, O::grcolex}) {
        MultiIndex prev = MultiIndex::zero(d);
        for (std::size_t i = 1; i <= d; ++i) {
          const auto cur = MultiIndex::scaled_unit(d, i, k);
          c.expect(order_less(o, prev, cur), [&] { return repro({{"order", order_name(o)}, {"d", d}, {"k", k}, {"i", i}}); });
          prev = cur;
        }
        c.expect(check_order_conditions(o, d, k).cond_iii.holds, [&] { return repro({{"order", order_name(o)}, {"d", d}, {"k", k}}); });
      }
    }
  }
  const MultiIndex e1{3, 0}, e2{0, 3};
  for (auto o : {O::grlex, O::grevlex}) {
    const auto r = check_order_conditions(o, 2, 3);
    c.expect(order_less(o, e2, e1) && !r.cond_iii.holds && has_witness(r.cond_iii, e1, e2),
             [&] { return repro({{"order", order_name(o)}, {"issue", "(3,0) should be numbered after (0,3)"}}); });
  }
}

std::vector<MultiIndex> seq(std::initializer_list<std::initializer_list<unsigned>> v) {
  std::vector<MultiIndex> out;
  for (const auto& a : v) out.emplace_back(a);
  return out;
}

void check_order_tables(Ctx& c) {
  using O = MonomialOrder;
  const auto a_lex = seq({{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}});
  const auto a_colex = seq({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}});
  const std::pair<O, std::vector<MultiIndex>> a_tables[] = {
      {O::grlex, a_lex}, {O::grevlex, a_lex}, {O::grcolex, a_colex}, {O::grsymlex, a_colex}};
  const std::pair<O, std::vector<MultiIndex>> c_tables[] = {
      {O::grlex, seq({{0, 0, 3}, {0, 1, 2}, {0, 2, 1}, {0, 3, 0}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {3, 0, 0}})},
      {O::grcolex, seq({{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}})},
      {O::grsymlex, seq({{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}})},
      {O::grevlex, seq({{0, 0, 3}, {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 1, 1}, {2, 0, 1}, {0, 3, 0}, {1, 2, 0}, {2, 1, 0}, {3, 0, 0}})}};
  for (const auto& [o, want] : a_tables) {
    c.expect(enumerate(IndexSetSpec::at_most(2, 3), o) == want, [&] { return repro({{"order", order_name(o)}, {"set", "A_3^2"}}); });
  }
  for (const auto& [o, want] : c_tables) {
    c.expect(enumerate(IndexSetSpec::exact(3, 3), o) == want, [&] { return repro({{"order", order_name(o)}, {"set", "C_3^3"}}); });
  }
}

// ---- polynomials -------------------------------------------------------------

// k+1 distinct nodes of a random segment, increasing
std::vector<Rational> segment_nodes(const VertexFamily& v, unsigned k) {
  std::vector<Rational> out;
  for (const auto& n : lagrange_nodes(v, k)) out.push_back(n.point[0]);
  return out;
}

void check_1449(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
    for (const auto& v : c.families(1)) {
      const auto a = segment_nodes(v, k);
      Polynomial sum(1);
      for (std::size_t i = 0; i <= k; ++i) {
        const auto L = lagrange_1d(a, i);
        c.expect(L.degree() == Degree::of(k), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"L", jp(L)}}); });
        for (std::size_t j = 0; j <= k; ++j) {
          const Rational got = L.eval(std::span(&a[j], 1));
          c.expect(got == Rational(i == j ? 1 : 0), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"j", j}, {"got", jr(got)}}); });
        }
        sum += L;
      }
      c.expect(sum == one(1), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"sum", jp(sum)}}); });
    }
  }
}

void check_1450(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
    for (const auto& v : c.families(1)) {
      const auto a = segment_nodes(v, k);
      const auto p = random_polynomial(1, k, c.rng);
      Polynomial r(1);
      for (std::size_t i = 0; i <= k; ++i) r += p.eval(std::span(&a[i], 1)) * lagrange_1d(a, i);
      c.expect(r == p, [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"p", jp(p)}, {"got", jp(r)}}); });
    }
  }
}

void check_1514(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto all = enumerate(IndexSetSpec::at_most(d, c.cfg.k_max));
    for (const auto& a : all) {
      const auto& b = all[static_cast<std::size_t>(uniform_int(c.rng, 0, static_cast<std::int64_t>(all.size()) - 1))];
      c.expect(monomial(a) * monomial(b) == monomial(a + b), [&] { return repro({{"alpha", ja(a)}, {"beta", ja(b)}}); });
    }
  }
}

void check_1516(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const unsigned l = static_cast<unsigned>(uniform_int(c.rng, 0, c.cfg.k_max));
        const auto p = random_polynomial(d, k, c.rng);
        const auto q = random_polynomial(d, l, c.rng);
        const auto pq = p * q;
        c.expect(pq.degree().at_most(k + l), [&] { return repro({{"p", jp(p)}, {"q", jp(q)}, {"issue", "degree exceeds k+l"}}); });
        for (int t = 0; t < 4; ++t) {
          const auto x = random_point(d, c.rng);
          c.expect(pq.eval(x) == p.eval(x) * q.eval(x), [&] { return repro({{"p", jp(p)}, {"q", jp(q)}, {"x", jx(x)}}); });
        }
        if (d == 1 && !p.is_zero() && !q.is_zero()) {
          c.expect(pq.degree().value() == p.degree().value() + q.degree().value(),
                   [&] { return repro({{"p", jp(p)}, {"q", jp(q)}, {"issue", "univariate degree not additive"}}); });
        }
      }
    }
  }
}

void check_1522(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto all = enumerate(IndexSetSpec::at_most(d, c.cfg.k_max));
    const Point zero(d);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const Rational got = partial_derivative(monomial(a), b).eval(zero);
        const Rational want = a == b ? Rational(mpz_class(std::to_string(a.factorial()))) : Rational(0);
        c.expect(got == want, [&] { return repro({{"alpha", ja(a)}, {"beta", ja(b)}, {"got", jr(got)}}); });
      }
    }
  }
}

void check_1523(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto all = enumerate(IndexSetSpec::at_most(d, k));
        std::vector<Rational> coeffs;
        Polynomial p(d);
        for (const auto& a : all) {
          coeffs.push_back(random_rational(c.rng));
          p.add_term(a, coeffs.back());
        }
        const bool any = std::any_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return !r.is_zero(); });
        c.expect(p.is_zero() != any, [&] { return repro({{"p", jp(p)}, {"issue", "nonzero coefficients gave the zero polynomial"}}); });
        const Point zero(d);
        for (std::size_t j = 0; j < all.size(); ++j) {
          const Rational got = partial_derivative(p, all[j]).eval(zero);
          c.expect(got == Rational(mpz_class(std::to_string(all[j].factorial()))) * coeffs[j],
                   [&] { return repro({{"p", jp(p)}, {"beta", ja(all[j])}, {"got", jr(got)}}); });
        }
      }
    }
  }
}

void check_1529(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto p = random_polynomial(d, k, c.rng);
        const auto [p0, p1] = divide_by_last_variable(p);
        c.expect(embed_last(p0) + Polynomial::variable(d, d) * p1 == p && p0.degree().at_most(k) &&
                     (k == 0 ? p1.is_zero() : p1.degree().at_most(k - 1)),
                 [&] { return repro({{"p", jp(p)}, {"p0", jp(p0)}, {"p1", jp(p1)}}); });
        const auto q0 = random_polynomial(d - 1, k, c.rng);
        const auto q1 = k == 0 ? Polynomial(d) : random_polynomial(d, k - 1, c.rng);
        const auto back = divide_by_last_variable(zeta_inverse(q0, q1));
        c.expect(back.first == q0 && back.second == q1, [&] { return repro({{"p0", jp(q0)}, {"p1", jp(q1)}, {"issue", "not unique"}}); });
      }
    }
  }
}

void check_1531(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto p = random_polynomial(d, k, c.rng);
        const auto q = random_polynomial(d, k, c.rng);
        const auto [p0, p1] = zeta(p);
        const auto [q0, q1] = zeta(q);
        const auto [s0, s1] = zeta(p + q);
        c.expect(zeta_inverse(p0, p1) == p, [&] { return repro({{"p", jp(p)}, {"issue", "round trip"}}); });
        c.expect(s0 == p0 + q0 && s1 == p1 + q1, [&] { return repro({{"p", jp(p)}, {"q", jp(q)}, {"issue", "not additive"}}); });
      }
      const auto z = zeta(Polynomial(d));
      c.expect(z.first.is_zero() && z.second.is_zero(), [&] { return repro({{"d", d}, {"issue", "zeta(0) != (0,0)"}}); });
    }
  }
}

void check_1534(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto p = random_polynomial(d, k, c.rng);
        const auto r = horner_coefficients(p);
        Polynomial back(d);
        Polynomial xd = one(d);
        bool degrees = true;
        for (std::size_t i = 0; i < r.size(); ++i) {
          back += embed_last(r[i]) * xd;
          xd = xd * Polynomial::variable(d, d);
          degrees = degrees && r[i].degree().at_most(k - std::min<std::size_t>(i, k));
        }
        c.expect(back == p && degrees, [&] { return repro({{"p", jp(p)}, {"got", jp(back)}}); });
      }
    }
  }
}

void check_1540(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (std::size_t l = 1; l <= c.cfg.d_max; ++l) {
      for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
        const auto p = random_polynomial(d, k, c.rng);
        const auto f = random_affine(l, d, c.rng);
        const auto q = compose_affine(p, f);
        c.expect(q.degree().at_most(k), [&] { return repro({{"p", jp(p)}, {"f", to_json(f)}, {"issue", "degree grew"}}); });
        for (int t = 0; t < 20; ++t) {
          const auto y = random_point(l, c.rng);
          c.expect(q.eval(y) == p.eval(affine_apply(f, y)), [&] { return repro({{"p", jp(p)}, {"f", to_json(f)}, {"y", jx(y)}}); });
        }
        const auto g = random_affine(l, l, c.rng);
        c.expect(compose_affine(p, affine_compose(f, g)) == compose_affine(q, g),
                 [&] { return repro({{"p", jp(p)}, {"f", to_json(f)}, {"g", to_json(g)}, {"issue", "not functorial"}}); });
      }
    }
  }
}

// ---- geometry ----------------------------------------------------------------

void check_1543(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto ref = reference_vertices(d);
    Polynomial sum(d);
    for (std::size_t i = 0; i <= d; ++i) {
      const auto L = reference_lagrange_p1(d, i);
      for (std::size_t j = 0; j <= d; ++j) {
        c.expect(L.eval(ref[j]) == Rational(i == j ? 1 : 0), [&] { return repro({{"d", d}, {"i", i}, {"j", j}}); });
      }
      sum += L;
    }
    c.expect(sum == one(d), [&] { return repro({{"d", d}, {"sum", jp(sum)}}); });
  }
}

void check_1549(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max + 1; ++d) {
    const auto f = geometric_mapping(reference_vertices(d));
    c.expect(f == AffineMap::identity(d), [&] { return repro({{"d", d}, {"map", to_json(f)}}); });
  }
}

void check_1550(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto ref = reference_vertices(d);
    for (const auto& v : c.families(d)) {
      const auto f = geometric_mapping(v);
      const auto g = affine_inverse(f);
      for (std::size_t i = 0; i <= d; ++i) {
        c.expect(affine_apply(f, ref[i]) == v[i] && affine_apply(g, v[i]) == ref[i], [&] { return repro({{"vertices", jv(v)}, {"i", i}}); });
      }
      c.expect(affine_compose(f, g) == AffineMap::identity(d) && affine_compose(g, f) == AffineMap::identity(d),
               [&] { return repro({{"vertices", jv(v)}, {"issue", "inverse"}}); });
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        // random point of the reference simplex
        Point w(d + 1);
        Rational tot;
        for (auto& x : w) {
          x = Rational(uniform_int(c.rng, 0, 9));
          tot += x;
        }
        if (tot.is_zero()) w[0] = tot = Rational(1);
        Point xh(d);
        for (std::size_t i = 0; i < d; ++i) xh[i] = w[i + 1] / tot;
        c.expect(in_reference_simplex(xh) && in_simplex(v, affine_apply(f, xh)), [&] { return repro({{"vertices", jv(v)}, {"x_hat", jx(xh)}}); });
      }
    }
  }
}

void check_1553(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto lam = barycentric_polynomials(reference_vertices(d));
    for (std::size_t i = 0; i <= d; ++i) {
      c.expect(lam[i] == reference_lagrange_p1(d, i), [&] { return repro({{"d", d}, {"i", i}, {"got", jp(lam[i])}}); });
    }
  }
}

void check_1554(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      Polynomial sum(d);
      for (std::size_t i = 0; i <= d; ++i) {
        c.expect(lam[i].degree().at_most(1), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"lambda", jp(lam[i])}}); });
        for (std::size_t j = 0; j <= d; ++j) {
          c.expect(lam[i].eval(v[j]) == Rational(i == j ? 1 : 0), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"j", j}}); });
        }
        sum += lam[i];
      }
      c.expect(sum == one(d), [&] { return repro({{"vertices", jv(v)}, {"sum", jp(sum)}}); });
    }
  }
}

void check_1555(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      const auto p = random_polynomial(d, 1, c.rng);
      Polynomial r(d);
      for (std::size_t i = 0; i <= d; ++i) r += p.eval(v[i]) * lam[i];
      c.expect(r == p, [&] { return repro({{"vertices", jv(v)}, {"p", jp(p)}, {"got", jp(r)}}); });
    }
  }
}

void check_1559(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto x = random_point(d, c.rng);
        Point y(d);
        Rational tot;
        for (std::size_t i = 0; i <= d; ++i) {
          const Rational l = lam[i].eval(x);
          tot += l;
          for (std::size_t r = 0; r < d; ++r) y[r] += l * v[i][r];
        }
        c.expect(y == x && tot == Rational(1), [&] { return repro({{"vertices", jv(v)}, {"x", jx(x)}}); });
      }
    }
  }
}

void check_1560(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      const auto g = affine_inverse(geometric_mapping(v));
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto x = random_point(d, c.rng);
        const auto xh = affine_apply(g, x);
        for (std::size_t i = 1; i <= d; ++i) {
          c.expect(xh[i - 1] == lam[i].eval(x), [&] { return repro({{"vertices", jv(v)}, {"x", jx(x)}, {"i", i}}); });
        }
      }
    }
  }
}

// random barycentric combination with weight zero on vertex i
Point point_on_face(const VertexFamily& v, std::size_t i, Rng& rng) {
  const std::size_t d = v.d();
  Point mu(d + 1);
  Rational tot;
  const std::size_t last = i == d ? d - 1 : d;
  for (std::size_t j = 0; j <= d; ++j) {
    if (j == i || j == last) continue;
    mu[j] = random_rational(rng);
    tot += mu[j];
  }
  mu[last] = Rational(1) - tot;
  Point x(d);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t r = 0; r < d; ++r) x[r] += mu[j] * v[j][r];
  }
  return x;
}

void check_1563(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j <= d; ++j) {
          c.expect(face_hyperplane_contains(v, i, v[j]) == (i != j), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"j", j}}); });
        }
        for (unsigned s = 0; s < c.cfg.samples; ++s) {
          const auto on = point_on_face(v, i, c.rng);
          const auto x = random_point(d, c.rng);
          c.expect(face_hyperplane_contains(v, i, on) && lam[i].eval(on).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"x", jx(on)}}); });
          c.expect(face_hyperplane_contains(v, i, x) == lam[i].eval(x).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"x", jx(x)}}); });
        }
      }
    }
  }
}

void check_1564(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto ref = reference_vertices(d);
    for (std::size_t i = 0; i <= d; ++i) {
      for (unsigned s = 0; s < 4 * c.cfg.samples; ++s) {
        auto x = random_point(d, c.rng);
        if (s % 2 == 0) x = point_on_face(ref, i, c.rng);
        Rational sum;
        for (const auto& xi : x) sum += xi;
        const bool want = i == 0 ? sum == Rational(1) : x[i - 1].is_zero();
        c.expect(face_hyperplane_contains(ref, i, x) == want, [&] { return repro({{"d", d}, {"i", i}, {"x", jx(x)}}); });
      }
    }
  }
}

void check_1565(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto ref = reference_vertices(d);
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      const auto f = geometric_mapping(v);
      const auto g = affine_inverse(f);
      for (std::size_t i = 0; i <= d; ++i) {
        const auto Li = reference_lagrange_p1(d, i);
        for (int s = 0; s < 20; ++s) {
          const auto xh = point_on_face(ref, i, c.rng);
          c.expect(lam[i].eval(affine_apply(f, xh)).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"x_hat", jx(xh)}}); });
          const auto x = point_on_face(v, i, c.rng);
          c.expect(Li.eval(affine_apply(g, x)).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"x", jx(x)}}); });
        }
      }
    }
  }
}

void check_1574(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto pi = random_permutation(d, c.rng);
      std::vector<Point> w;
      for (std::size_t j = 0; j <= d; ++j) w.push_back(v[pi[j]]);
      const VertexFamily u(w);
      for (unsigned s = 0; s < 4 * c.cfg.samples; ++s) {
        auto x = random_point(d, c.rng);
        if (s % 2 == 0) x = affine_apply(geometric_mapping(v), Point(d, Rational::make(1, static_cast<std::int64_t>(d + 1 + s))));
        c.expect(in_simplex(v, x) == in_simplex(u, x), [&] { return repro({{"vertices", jv(v)}, {"x", jx(x)}}); });
      }
    }
  }
}

void check_1581(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (std::size_t l = 1; l <= d; ++l) {
        const auto perm = random_permutation(d, c.rng);
        const std::vector<std::size_t> pi(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(l + 1));
        const auto f = l_face_mapping(v, pi);
        const auto ref = reference_vertices(l);
        for (std::size_t j = 0; j <= l; ++j) {
          c.expect(affine_apply(f, ref[j]) == v[pi[j]], [&] { return repro({{"vertices", jv(v)}, {"l", l}, {"j", j}}); });
        }
        c.expect(mat_rank(f.matrix) == l, [&] { return repro({{"vertices", jv(v)}, {"l", l}, {"issue", "sub-family not independent"}}); });
      }
    }
  }
}

void check_1584(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      for (std::size_t i = 0; i <= d; ++i) {
        const auto f = hyperface_mapping(v, i);
        const auto ref = reference_vertices(d - 1);
        for (std::size_t j = 0; j < d; ++j) {
          const auto want = j < i ? v[j] : v[j + 1];
          c.expect(affine_apply(f, ref[j]) == want, [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"j", j}}); });
        }
        c.expect(compose_affine(lam[i], f).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"issue", "lambda_i does not vanish on the image"}}); });
        for (int s = 0; s < 10; ++s) {
          const auto y = random_point(d - 1, c.rng);
          c.expect(lam[i].eval(affine_apply(f, y)).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"i", i}, {"y", jx(y)}}); });
        }
      }
    }
  }
}

void check_1586(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      for (unsigned s = 0; s < 2; ++s) {
        const auto pi = s == 0 ? circular_permutation(d, 0) : random_permutation(d, c.rng);
        const auto f = permutation_mapping(v, pi);
        for (std::size_t j = 0; j <= d; ++j) {
          c.expect(compose_affine(lam[pi[j]], f) == reference_lagrange_p1(d, j), [&] { return repro({{"vertices", jv(v)}, {"j", j}}); });
        }
      }
    }
  }
}

// ---- nodes -----------------------------------------------------------------

void check_1590(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (const auto& v : c.families(d)) {
        const auto nodes = lagrange_nodes(v, k);
        std::set<std::vector<std::string>> pts;
        for (const auto& n : nodes) {
          std::vector<std::string> s;
          for (const auto& x : n.point) s.push_back(x.to_string());
          pts.insert(s);
        }
        c.expect(nodes.size() == binomial(k + d, d) && pts.size() == nodes.size(), [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
      }
    }
  }
}

void check_1591(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
        for (const auto& n : lagrange_nodes(v, k)) {
          for (std::size_t i = 0; i <= d; ++i) {
            Rational want;
            if (k == 0) {
              want = Rational::make(1, static_cast<std::int64_t>(d + 1));
            } else if (i == 0) {
              want = Rational(1) - Rational::make(static_cast<std::int64_t>(n.alpha.length()), k);
            } else {
              want = Rational::make(n.alpha[i - 1], k);
            }
            c.expect(lam[i].eval(n.point) == want, [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"alpha", ja(n.alpha)}, {"i", i}}); });
          }
        }
      }
    }
  }
}

void check_1592(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
        c.expect(lagrange_node(v, k, MultiIndex::zero(d)) == v[0], [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", 0}}); });
        for (std::size_t i = 1; i <= d; ++i) {
          c.expect(lagrange_node(v, k, MultiIndex::scaled_unit(d, i, k)) == v[i], [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}}); });
        }
      }
    }
  }
}

void check_1593(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto nodes = lagrange_nodes(v, 1);
      std::set<std::vector<std::string>> a, b;
      for (const auto& n : nodes) {
        std::vector<std::string> s;
        for (const auto& x : n.point) s.push_back(x.to_string());
        a.insert(s);
      }
      for (const auto& p : v.vertices()) {
        std::vector<std::string> s;
        for (const auto& x : p) s.push_back(x.to_string());
        b.insert(s);
      }
      c.expect(a == b && nodes.size() == d + 1, [&] { return repro({{"vertices", jv(v)}}); });
    }
  }
}

void check_1595(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
        const auto s = sub_vertices(v, k);
        c.expect(s[0] == v[0], [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", 0}}); });
        for (std::size_t i = 1; i <= d; ++i) {
          c.expect(s[i] == lagrange_node(v, k, MultiIndex::scaled_unit(d, i, k - 1)), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}}); });
        }
      }
    }
  }
}

void check_1597(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (unsigned k = 2; k <= c.cfg.k_max + 1; ++k) {
        c.expect(is_affinely_independent(sub_vertices(v, k)), [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
      }
      c.expect(!is_affinely_independent(sub_vertices(v, 1)), [&] { return repro({{"vertices", jv(v)}, {"k", 1}, {"issue", "k=1 sub-vertices should collapse"}}); });
    }
  }
}

void check_1598(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (unsigned k = 2; k <= c.cfg.k_max; ++k) {
        c.expect(sub_node_identity_check(v, k), [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
      }
    }
  }
}

void check_1599(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (const auto& n : reference_nodes(d, k)) {
        for (std::size_t i = 0; i < d; ++i) {
          const Rational want = k == 0 ? Rational::make(1, static_cast<std::int64_t>(d + 1)) : Rational::make(n.alpha[i], k);
          c.expect(n.point[i] == want, [&] { return repro({{"d", d}, {"k", k}, {"alpha", ja(n.alpha)}, {"i", i + 1}}); });
        }
      }
    }
  }
}

void check_1604(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
        c.expect(node_image_check(v, k), [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
      }
    }
  }
}

void check_1605(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto lam = barycentric_polynomials(v);
      for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
        const auto nodes = lagrange_nodes(v, k);
        for (std::size_t i = 0; i <= d; ++i) {
          const auto on = nodes_on_hyperplane(v, k, i);
          std::set<std::vector<unsigned>> brute;
          for (const auto& n : nodes) {
            if (lam[i].eval(n.point).is_zero()) brute.insert(n.alpha.components());
          }
          c.expect(on.size() == binomial(k + d - 1, d - 1) && as_set(on) == brute, [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}}); });
        }
      }
    }
  }
}

void check_1607(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
        for (std::size_t i = 0; i <= d; ++i) {
          c.expect(hyperface_node_transport_check(v, k, i), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}}); });
        }
      }
    }
  }
}

// ---- unisolvence and factorization -----------------------------------------

void expect_kronecker(Ctx& c, const VertexFamily& v, unsigned k, const std::vector<Polynomial>& theta) {
  const auto nodes = lagrange_nodes(v, k);
  c.expect(theta.size() == nodes.size(), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"issue", "wrong number of shape functions"}}); });
  for (std::size_t b = 0; b < theta.size(); ++b) {
    c.expect(theta[b].degree().at_most(k), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"beta", ja(nodes[b].alpha)}, {"issue", "degree exceeds k"}}); });
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      c.expect(theta[b].eval(nodes[a].point) == Rational(a == b ? 1 : 0),
               [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"alpha", ja(nodes[a].alpha)}, {"beta", ja(nodes[b].alpha)}}); });
    }
  }
}

void check_1617(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      const auto vm = vandermonde(v, 0);
      const auto th = shape_functions(v, 0);
      c.expect(vm == RatMatrix{{Rational(1)}} && th.size() == 1 && th[0] == one(d), [&] { return repro({{"vertices", jv(v)}}); });
    }
  }
}

void check_1620(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (const auto& v : c.families(d)) {
      c.expect(check_unisolvence(v, 1), [&] { return repro({{"vertices", jv(v)}}); });
      const auto th = shape_functions(v, 1);
      const auto lam = barycentric_polynomials(v);
      c.expect(th == lam, [&] { return repro({{"vertices", jv(v)}, {"issue", "shape functions differ from barycentric coordinates"}}); });
    }
  }
}

void check_1626(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      for (const auto& v : c.families(d)) {
        const auto vm = vandermonde(v, k);
        c.expect(vm.rows() == binomial(k + d, d) && vm.is_square() && !mat_det(vm).is_zero(), [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
        expect_kronecker(c, v, k, shape_functions(v, k));
      }
    }
  }
}

void check_1621(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    const auto ref = reference_vertices(d);
    for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
      for (unsigned s = 0; s < c.cfg.samples; ++s) {
        const auto q = random_polynomial(d, k - 1, c.rng);
        const auto p = Polynomial::variable(d, d) * q;
        const auto got = factor_on_hyperplane(ref, k, d, p);
        c.expect(got == q, [&] { return repro({{"d", d}, {"k", k}, {"q", jp(q)}, {"got", jp(got)}}); });
        if (d >= 2) {
          const auto [p0, p1] = divide_by_last_variable(p);
          c.expect(p0.is_zero() && p1 == q, [&] { return repro({{"d", d}, {"k", k}, {"q", jp(q)}, {"issue", "division"}}); });
        }
      }
    }
  }
}

void check_1623(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
      const auto v = random_independent_family(d, c.rng);
      const auto lam = barycentric_polynomials(v);
      for (std::size_t i = 0; i <= d; ++i) {
        for (unsigned s = 0; s < c.cfg.samples; ++s) {
          const auto q = random_polynomial(d, k - 1, c.rng);
          const auto got = factor_on_hyperplane(v, k, i, lam[i] * q);
          c.expect(got == q, [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"q", jp(q)}, {"got", jp(got)}}); });
        }
        bool raised = false;
        try {
          factor_on_hyperplane(v, k, i, lam[i] * random_polynomial(d, k - 1, c.rng) + one(d));
        } catch (const NotVanishingError&) {
          raised = true;
        }
        c.expect(raised, [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"issue", "non-vanishing input accepted"}}); });
      }
    }
  }
}

void check_1628(Ctx& c) {
  for (std::size_t d = 2; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 1; k <= c.cfg.k_max; ++k) {
      const auto v = random_independent_family(d, c.rng);
      const auto lam = barycentric_polynomials(v);
      const auto el = build_element(v, k);
      for (std::size_t i = 0; i <= d; ++i) {
        const auto on = as_set(nodes_on_hyperplane(v, k, i));
        for (unsigned s = 0; s < c.cfg.samples; ++s) {
          const auto p = lam[i] * random_polynomial(d, k - 1, c.rng);
          const auto r = face_unisolvence_conditions(v, k, i, p);
          c.expect(r.nodes_vanish && r.restriction_zero, [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"p", jp(p)}}); });
        }
        for (std::size_t b = 0; b < el.node_index.size(); ++b) {
          const auto r = face_unisolvence_conditions(v, k, i, el.shape_functions[b]);
          const bool off = !on.count(el.node_index[b].components());
          c.expect(r.nodes_vanish == r.restriction_zero && r.nodes_vanish == off,
                   [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"beta", ja(el.node_index[b])}}); });
        }
      }
    }
  }
}

void check_1629(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      const auto v = random_independent_family(d, c.rng);
      const auto el = build_element(v, k);
      c.expect(el.node_index.size() == binomial(k + d, d) && el.nodes.size() == el.node_index.size() && !mat_det(el.vandermonde).is_zero(),
               [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
      expect_kronecker(c, v, k, el.shape_functions);
      Polynomial sum(d);
      for (const auto& t : el.shape_functions) sum += t;
      c.expect(sum == one(d), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"sum", jp(sum)}}); });
    }
  }
}

void check_1631(Ctx& c) {
  for (std::size_t d = 1; d <= c.cfg.d_max; ++d) {
    for (unsigned k = 0; k <= c.cfg.k_max; ++k) {
      const auto el = build_element(reference_vertices(d), k);
      const auto ref = reference_nodes(d, k);
      bool nodes_ok = el.nodes.size() == ref.size();
      for (std::size_t a = 0; nodes_ok && a < ref.size(); ++a) nodes_ok = el.nodes[a] == ref[a].point && el.node_index[a] == ref[a].alpha;
      c.expect(nodes_ok, [&] { return repro({{"d", d}, {"k", k}, {"issue", "nodes differ from the reference nodes"}}); });
      expect_kronecker(c, reference_vertices(d), k, el.shape_functions);
      const auto p = random_polynomial(d, k, c.rng);
      for (const auto& n : ref) {
        c.expect(linear_form(reference_vertices(d), k, n.alpha, p) == p.eval(n.point), [&] { return repro({{"d", d}, {"k", k}, {"alpha", ja(n.alpha)}}); });
      }
    }
  }
}

// ---- d = 1 coincidences ------------------------------------------------------

// nodes of a segment: midpoint for k = 0, v0 + i (v1 - v0)/k otherwise
std::vector<Rational> segment_formula(const Rational& v0, const Rational& v1, unsigned k) {
  if (k == 0) return {(v0 + v1) / Rational(2)};
  std::vector<Rational> a;
  for (unsigned i = 0; i <= k; ++i) a.push_back(v0 + Rational::make(i, k) * (v1 - v0));
  return a;
}

void check_1487(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
    std::vector<MultiIndex> want;
    for (unsigned i = 0; i <= k; ++i) want.push_back(MultiIndex{i});
    c.expect(enumerate(IndexSetSpec::at_most(1, k)) == want, [&] { return repro({{"k", k}}); });
  }
}

void check_1504(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
    for (unsigned s = 0; s < c.cfg.samples; ++s) {
      const auto x = random_rational(c.rng);
      c.expect(monomial(MultiIndex{k}).eval(std::span(&x, 1)) == rpow(x, k), [&] { return repro({{"k", k}, {"x", jr(x)}}); });
    }
  }
}

void check_1506(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 2; ++k) {
    for (unsigned s = 0; s < c.cfg.samples; ++s) {
      std::vector<Rational> a(k + 1);
      Polynomial p(1);
      for (unsigned j = 0; j <= k; ++j) {
        a[j] = random_rational(c.rng);
        p.add_term(MultiIndex{j}, a[j]);
      }
      const auto x = random_rational(c.rng);
      Rational h;  // Horner
      for (unsigned j = k + 1; j-- > 0;) h = h * x + a[j];
      c.expect(p.eval(std::span(&x, 1)) == h && p.degree().at_most(k), [&] { return repro({{"k", k}, {"p", jp(p)}, {"x", jr(x)}}); });
    }
  }
}

void check_1542(Ctx& c) {
  const std::vector<Rational> a{Rational(0), Rational(1)};
  for (std::size_t i = 0; i <= 1; ++i) {
    c.expect(reference_lagrange_p1(1, i) == lagrange_1d(a, i), [&] { return repro({{"i", i}}); });
  }
}

void check_1548(Ctx& c) {
  for (const auto& v : c.families(1)) {
    const auto f = geometric_mapping(v);
    const AffineMap want{RatMatrix{{v[1][0] - v[0][0]}}, Point{v[0][0]}};
    c.expect(f == want, [&] { return repro({{"vertices", jv(v)}, {"map", to_json(f)}}); });
  }
}

void check_1589(Ctx& c) {
  for (const auto& v : c.families(1)) {
    for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
      c.expect(segment_nodes(v, k) == segment_formula(v[0][0], v[1][0], k), [&] { return repro({{"vertices", jv(v)}, {"k", k}}); });
    }
  }
}

void check_1600(Ctx& c) {
  for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
    std::vector<Rational> got;
    for (const auto& n : reference_nodes(1, k)) got.push_back(n.point[0]);
    std::vector<Rational> want;
    if (k == 0) want.push_back(Rational::make(1, 2));
    for (unsigned i = 0; k > 0 && i <= k; ++i) want.push_back(Rational::make(i, k));
    c.expect(got == want, [&] { return repro({{"k", k}}); });
  }
}

void check_1609(Ctx& c) {
  for (const auto& v : c.families(1)) {
    for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
      const auto a = segment_formula(v[0][0], v[1][0], k);
      const auto p = random_polynomial(1, k + 1, c.rng);
      for (unsigned i = 0; i <= k; ++i) {
        c.expect(linear_form(v, k, MultiIndex{i}, p) == p.eval(std::span(&a[i], 1)), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}}); });
      }
    }
  }
}

void check_1613(Ctx& c) {
  const auto ref = reference_vertices(1);
  for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
    const auto a = segment_formula(Rational(0), Rational(1), k);
    const auto p = random_polynomial(1, k + 1, c.rng);
    for (unsigned i = 0; i <= k; ++i) {
      c.expect(linear_form(ref, k, MultiIndex{i}, p) == p.eval(std::span(&a[i], 1)), [&] { return repro({{"k", k}, {"i", i}}); });
    }
  }
}

void check_1630(Ctx& c) {
  for (const auto& v : c.families(1)) {
    for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
      const auto a = segment_formula(v[0][0], v[1][0], k);
      const auto th = build_element(v, k).shape_functions;
      for (unsigned i = 0; i <= k; ++i) {
        c.expect(th[i] == lagrange_1d(a, i), [&] { return repro({{"vertices", jv(v)}, {"k", k}, {"i", i}, {"got", jp(th[i])}}); });
      }
    }
  }
}

void check_1632(Ctx& c) {
  const auto ref = reference_vertices(1);
  for (unsigned k = 0; k <= c.cfg.k_max + 1; ++k) {
    const auto a = segment_formula(Rational(0), Rational(1), k);
    const auto th = build_element(ref, k).shape_functions;
    for (unsigned i = 0; i <= k; ++i) {
      c.expect(th[i] == lagrange_1d(a, i), [&] { return repro({{"k", k}, {"i", i}, {"got", jp(th[i])}}); });
    }
  }
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"1364", "binomial coefficient identities", check_1364},
      {"1366", "circular permutation c_i^d", check_1366},
      {"1367", "transposition tau_i^d", check_1367},
      {"1368", "jump enumeration theta_i^d", check_1368},
      {"1481", "length is additive", check_1481},
      {"1485", "Kronecker symbol on multi-indices", check_1485},
      {"1493", "slices partition C_k^d", check_1493},
      {"1495", "cardinal of C_k^d", check_1495},
      {"1496", "C_l^d are the layers of A_k^d", check_1496},
      {"1498", "cardinal of A_k^d", check_1498},
      {"1500", "f_head and f_tail are bijections onto C_k^d", check_1500},
      {"1501", "f_insert_zero is a length-preserving bijection onto A_{k,i}^d", check_1501},
      {"order-axioms", "monomial order axioms and symmetry pairs", check_order_axioms},
      {"order-degree", "condition (i): degree increase", check_order_degree},
      {"order-dimension", "condition (ii): dimension increase", check_order_dimension},
      {"order-vertices", "condition (iii): natural vertex numbering", check_order_vertices},
      {"order-tables", "graded enumerations of A_3^2 and C_3^3", check_order_tables},
      {"1449", "univariate Lagrange polynomials form a basis", check_1449},
      {"1450", "decomposition in the univariate Lagrange basis", check_1450},
      {"1514", "product of monomials", check_1514},
      {"1516", "product of polynomials", check_1516},
      {"1522", "derivatives of monomials at 0", check_1522},
      {"1523", "monomials are free", check_1523},
      {"1529", "division by the last variable", check_1529},
      {"1531", "zeta is an isomorphism", check_1531},
      {"1534", "Horner expansion in the last variable", check_1534},
      {"1540", "affine composition preserves P_k", check_1540},
      {"1543", "reference P1 Lagrange polynomials", check_1543},
      {"1549", "reference geometric mapping is the identity", check_1549},
      {"1550", "geometric mapping properties", check_1550},
      {"1553", "barycentric coordinates of the reference simplex", check_1553},
      {"1554", "P1 Lagrange polynomials form a basis", check_1554},
      {"1555", "P1 decomposition on the vertices", check_1555},
      {"1559", "barycentric decomposition", check_1559},
      {"1560", "barycentric coordinates invert the geometric mapping", check_1560},
      {"1563", "face hyperplane as the kernel of lambda_i", check_1563},
      {"1564", "reference face hyperplanes", check_1564},
      {"1565", "face hyperplane is the image of the reference one (sampled)", check_1565},
      {"1574", "simplex membership is invariant under relabelling", check_1574},
      {"1581", "geometric l-face mapping", check_1581},
      {"1584", "geometric hyperface mapping", check_1584},
      {"1586", "geometric mapping with permutation", check_1586},
      {"1590", "number of distinct Lagrange nodes", check_1590},
      {"1591", "barycentric coordinates of the nodes", check_1591},
      {"1592", "vertices are Lagrange nodes", check_1592},
      {"1593", "degree-1 nodes are the vertices", check_1593},
      {"1595", "sub-vertices closed form", check_1595},
      {"1597", "sub-vertices are affinely independent", check_1597},
      {"1598", "sub-nodes are nodes", check_1598},
      {"1599", "reference Lagrange nodes", check_1599},
      {"1604", "nodes are images of reference nodes", check_1604},
      {"1605", "nodes on the face hyperplanes", check_1605},
      {"1607", "hyperface mapping transports nodes", check_1607},
      {"1617", "unisolvence for k = 0", check_1617},
      {"1620", "unisolvence for k = 1", check_1620},
      {"1626", "unisolvence", check_1626},
      {"1621", "factorization on the last reference hyperplane", check_1621},
      {"1623", "factorization on a face hyperplane", check_1623},
      {"1628", "face unisolvence", check_1628},
      {"1629", "Lagrange finite element", check_1629},
      {"1631", "reference Lagrange finite element", check_1631},
      {"1487", "A_k^d for d = 1", check_1487},
      {"1504", "monomials for d = 1", check_1504},
      {"1506", "P_k^d for d = 1", check_1506},
      {"1542", "reference P1 Lagrange polynomials for d = 1", check_1542},
      {"1548", "geometric mapping for d = 1", check_1548},
      {"1589", "Lagrange nodes for d = 1", check_1589},
      {"1600", "reference Lagrange nodes for d = 1", check_1600},
      {"1609", "Lagrange linear forms for d = 1", check_1609},
      {"1613", "reference Lagrange linear forms for d = 1", check_1613},
      {"1630", "Lagrange finite element for d = 1", check_1630},
      {"1632", "reference Lagrange finite element for d = 1", check_1632},
  };
  return defs;
}

CheckResult run_one(const CheckDef& def, const SuiteConfig& cfg) {
  CheckResult r{def.id, def.title, true, 0, nullptr};
  Ctx ctx(cfg, make_rng(cfg.seed, def.id));
  try {
    def.run(ctx);
  } catch (const CheckFailed& f) {
    r.pass = false;
    r.counterexample = f.repro;
  } catch (const std::exception& e) {
    r.pass = false;
    r.counterexample = repro({{"exception", e.what()}});
  }
  r.cases = ctx.cases;
  return r;
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& d : registry()) out.push_back({d.id, d.title});
  return out;
}

VerifyReport run_suite(const SuiteConfig& config) {
  if (config.d_max < 1) throw BoundsError("d_max must be at least 1");
  if (config.samples < 1) throw BoundsError("samples must be at least 1");
  const auto& defs = registry();
  std::vector<const CheckDef*> selected;
  for (const auto& id : config.filter) {
    if (std::none_of(defs.begin(), defs.end(), [&](const CheckDef& d) { return id == d.id; })) {
      throw UnknownLemmaError("unknown lemma id '" + id + "'");
    }
  }
  for (const auto& d : defs) {
    if (config.filter.empty() || std::find(config.filter.begin(), config.filter.end(), d.id) != config.filter.end()) {
      selected.push_back(&d);
    }
  }

  VerifyReport report{config, std::vector<CheckResult>(selected.size())};
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(selected.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) report.checks[i] = run_one(*selected[i], config);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

VerifyReport run_suite(std::size_t d_max, unsigned k_max, unsigned samples, std::uint64_t seed,
                       const std::vector<std::string>& filter) {
  SuiteConfig cfg;
  cfg.d_max = d_max;
  cfg.k_max = k_max;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.filter = filter;
  return run_suite(cfg);
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

Json VerifyReport::to_json() const {
  Json checks_j = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["status"] = c.pass ? "pass" : "fail";
    j["cases"] = c.cases;
    if (!c.pass) j["counterexample"] = c.counterexample;
    checks_j.push_back(std::move(j));
  }
  Json j;
  j["seed"] = config.seed;
  j["d_max"] = config.d_max;
  j["k_max"] = config.k_max;
  j["samples"] = config.samples;
  j["checks"] = std::move(checks_j);
  j["totals"] = {{"checks", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "seed " << config.seed << "  d_max " << config.d_max << "  k_max " << config.k_max << "  samples " << config.samples << "\n";
  os << std::left << std::setw(17) << "id" << std::setw(7) << "status" << std::right << std::setw(9) << "cases" << "  title\n";
  for (const auto& c : checks) {
    os << std::left << std::setw(17) << c.id << std::setw(7) << (c.pass ? "pass" : "FAIL") << std::right << std::setw(9) << c.cases
       << "  " << c.title << "\n";
    if (!c.pass) os << "    counterexample: " << c.counterexample.dump() << "\n";
  }
  os << passed() << "/" << checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace lagfe
