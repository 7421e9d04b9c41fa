#include <doctest.h>

#include <set>

#include "lagfe/errors.hpp"
#include "lagfe/multi_index.hpp"

using lagfe::IndexSetSpec;
using lagfe::MonomialOrder;
using lagfe::MultiIndex;

namespace {

// every tuple of [0..k]^d
std::vector<MultiIndex> box(std::size_t d, unsigned k) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> c(d, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < d && c[i] == k) c[i++] = 0;
    if (i == d) return out;
    ++c[i];
  }
}

// recursive characterization through the tail without the first component
bool grsymlex_rec(const MultiIndex& a, const MultiIndex& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.dim() < 2) return false;
  return grsymlex_rec(a.drop_first(), b.drop_first());
}

std::vector<MultiIndex> seq(std::initializer_list<std::initializer_list<unsigned>> v) {
  std::vector<MultiIndex> out;
  for (const auto& a : v) out.emplace_back(a);
  return out;
}

}  // namespace

TEST_CASE("basic operations") {
  const MultiIndex a{1, 0, 2};
  CHECK(a.length() == 3);
  CHECK(a.factorial() == 2);
  CHECK(MultiIndex{3, 2}.factorial() == 12);
  CHECK(a.to_string() == "(1,0,2)");
  CHECK(a.drop_first() == MultiIndex{0, 2});
  CHECK(a.drop_last() == MultiIndex{1, 0});
  CHECK(a.with_prepended(4) == MultiIndex{4, 1, 0, 2});
  CHECK(a.with_appended(4) == MultiIndex{1, 0, 2, 4});
  CHECK(a + MultiIndex{0, 5, 1} == MultiIndex{1, 5, 3});
  CHECK(MultiIndex::scaled_unit(3, 2, 4) == MultiIndex{0, 4, 0});
  CHECK(lagfe::mi_kronecker(a, a) == 1);
  CHECK(lagfe::mi_kronecker(a, MultiIndex{2, 0, 1}) == 0);
  CHECK_THROWS_AS((a + MultiIndex{1, 1}), lagfe::DimensionMismatchError);
  CHECK_THROWS_AS((MultiIndex{25}.factorial()), lagfe::BoundsError);
}

TEST_CASE("binomial agrees with a Pascal triangle") {
  std::vector<std::vector<std::uint64_t>> t(40);
  for (std::size_t n = 0; n < t.size(); ++n) {
    t[n].assign(n + 1, 1);
    for (std::size_t p = 1; p < n; ++p) t[n][p] = t[n - 1][p - 1] + t[n - 1][p];
    for (std::size_t p = 0; p <= n; ++p) CHECK(lagfe::binomial(n, p) == t[n][p]);
    CHECK(lagfe::binomial(n, n + 1) == 0);
  }
}

TEST_CASE("cardinals against a brute-force box filter") {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (unsigned k = 0; k <= 5; ++k) {
      std::size_t at_most = 0, exact = 0;
      for (const auto& a : box(d, k)) {
        at_most += a.length() <= k;
        exact += a.length() == k;
      }
      CHECK(lagfe::cardinal(IndexSetSpec::at_most(d, k)) == at_most);
      CHECK(lagfe::enumerate(IndexSetSpec::at_most(d, k)).size() == at_most);
      CHECK(lagfe::cardinal(IndexSetSpec::exact(d, k)) == exact);
      CHECK(lagfe::enumerate(IndexSetSpec::exact(d, k)).size() == exact);
      for (std::size_t i = 1; i <= d; ++i) {
        std::size_t zero = 0;
        for (const auto& a : box(d, k)) zero += a.length() <= k && a[i - 1] == 0;
        CHECK(lagfe::cardinal(IndexSetSpec::zero_at(d, k, i)) == zero);
        for (const auto& a : lagfe::enumerate(IndexSetSpec::zero_at(d, k, i))) CHECK(a[i - 1] == 0);
      }
    }
  }
  CHECK(lagfe::cardinal(IndexSetSpec::at_most(0, 3)) == 1);
}

TEST_CASE("grsymlex matches its recursive characterization") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto all = lagfe::enumerate(IndexSetSpec::at_most(d, 4));
    for (const auto& a : all) {
      for (const auto& b : all) CHECK(lagfe::order_less(MonomialOrder::grsymlex, a, b) == grsymlex_rec(a, b));
    }
    // the default enumeration is sorted by that oracle
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(grsymlex_rec(all[i - 1], all[i]));
  }
}

TEST_CASE("known enumerations of A_3^2 and C_3^3") {
  const auto a_lex = seq({{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0}});
  const auto a_colex = seq({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 3), MonomialOrder::grlex) == a_lex);
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 3), MonomialOrder::grevlex) == a_lex);
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 3), MonomialOrder::grcolex) == a_colex);
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 3), MonomialOrder::grsymlex) == a_colex);
  CHECK(lagfe::enumerate(IndexSetSpec::exact(3, 3), MonomialOrder::grsymlex) ==
        seq({{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}));
  CHECK(lagfe::enumerate(IndexSetSpec::exact(3, 3), MonomialOrder::grcolex) ==
        seq({{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}}));
}

TEST_CASE("ungraded orders on a small set") {
  // hand-sorted A_1^2
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 1), MonomialOrder::lex) == seq({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 1), MonomialOrder::colex) == seq({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 1), MonomialOrder::symlex) == seq({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(lagfe::enumerate(IndexSetSpec::at_most(2, 1), MonomialOrder::revlex) == seq({{0, 1}, {1, 0}, {0, 0}}));
}

TEST_CASE("order names") {
  for (auto o : lagfe::kAllOrders) CHECK(lagfe::parse_order(lagfe::order_name(o)) == o);
  CHECK_THROWS_AS((lagfe::parse_order("degrevlex")), lagfe::ParseError);
  CHECK(lagfe::is_graded(MonomialOrder::grevlex));
  CHECK_FALSE(lagfe::is_graded(MonomialOrder::symlex));
}

TEST_CASE("slices") {
  CHECK(lagfe::slice_vertical(3, 3, 1) == seq({{1, 2, 0}, {1, 1, 1}, {1, 0, 2}}));
  CHECK(lagfe::slice_horizontal(2, 3, 2) == seq({{1, 2}}));
  CHECK_THROWS_AS((lagfe::slice_vertical(1, 3, 1)), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::slice_vertical(2, 3, 4)), lagfe::BoundsError);
}

TEST_CASE("index maps") {
  CHECK(lagfe::f_head(3, 3, MultiIndex{0, 2}) == MultiIndex{1, 0, 2});
  CHECK(lagfe::f_tail(3, 3, MultiIndex{0, 2}) == MultiIndex{0, 2, 1});
  CHECK(lagfe::f_head(1, 4, MultiIndex{}) == MultiIndex{4});
  CHECK(lagfe::f_insert_zero(3, 3, 2, MultiIndex{1, 2}) == MultiIndex{1, 0, 2});
  CHECK(lagfe::f_insert_zero(3, 3, 3, MultiIndex{1, 2}) == MultiIndex{1, 2, 0});
  CHECK_THROWS_AS((lagfe::f_head(3, 1, MultiIndex{1, 1})), lagfe::LengthExceedsError);
  CHECK_THROWS_AS((lagfe::f_head(3, 3, MultiIndex{1})), lagfe::DimensionMismatchError);
  CHECK_THROWS_AS((lagfe::f_insert_zero(3, 3, 0, MultiIndex{1, 1})), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::f_insert_zero(3, 3, 4, MultiIndex{1, 1})), lagfe::BoundsError);
}

TEST_CASE("index permutations") {
  // c_1^3 = (2,3,0,1), tau_1^3 swaps 1 and 3, theta_2^3 skips 2
  CHECK(std::vector<std::size_t>{lagfe::circular_perm(3, 1, 0), lagfe::circular_perm(3, 1, 1), lagfe::circular_perm(3, 1, 2),
                                 lagfe::circular_perm(3, 1, 3)} == std::vector<std::size_t>{2, 3, 0, 1});
  CHECK(lagfe::transposition(3, 1, 1) == 3);
  CHECK(lagfe::transposition(3, 1, 3) == 1);
  CHECK(lagfe::transposition(3, 1, 2) == 2);
  CHECK(lagfe::jump_enum(3, 2, 1) == 1);
  CHECK(lagfe::jump_enum(3, 2, 2) == 3);
  CHECK_THROWS_AS((lagfe::circular_perm(3, 4, 0)), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::jump_enum(3, 5, 0)), lagfe::BoundsError);
}

TEST_CASE("enumeration preconditions") {
  CHECK_THROWS_AS((lagfe::enumerate(IndexSetSpec::at_most(0, 2))), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::enumerate(IndexSetSpec::zero_at(2, 2, 0))), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::enumerate(IndexSetSpec::zero_at(2, 2, 3))), lagfe::BoundsError);
}

TEST_CASE("order conditions carry the known witnesses") {
  const auto gl = lagfe::check_order_conditions(MonomialOrder::grlex, 3, 3);
  CHECK(gl.cond_i.holds);
  CHECK_FALSE(gl.cond_ii());
  CHECK_FALSE(gl.cond_iii.holds);
  bool found = false;
  for (const auto& w : gl.head.witnesses) {
    found = found || (w.a == MultiIndex{1, 0} && w.b == MultiIndex{0, 2} && *w.fa == MultiIndex{2, 1, 0} && *w.fb == MultiIndex{1, 0, 2});
  }
  CHECK(found);
  const auto gs = lagfe::check_order_conditions(MonomialOrder::grsymlex, 3, 3);
  CHECK(gs.cond_i.holds);
  CHECK(gs.cond_ii());
  CHECK(gs.cond_iii.holds);
  const auto ge = lagfe::check_order_conditions(MonomialOrder::grevlex, 2, 3);
  CHECK(ge.cond_ii());
  CHECK(ge.tail.holds);
  REQUIRE_FALSE(ge.cond_iii.holds);
  CHECK(ge.cond_iii.witnesses.front().a == MultiIndex{3, 0});
  CHECK(ge.cond_iii.witnesses.front().b == MultiIndex{0, 3});
}
