#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagfe {

/// alpha in N^d. Dimension 0 is representable (the empty tuple appears as
/// the preimage of f_head/f_tail when d = 1) but rejected by the public
/// set constructors.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> components) : c_(std::move(components)) {}
  MultiIndex(std::initializer_list<unsigned> components) : c_(components) {}

  static MultiIndex zero(std::size_t d) { return MultiIndex(std::vector<unsigned>(d, 0)); }
  /// k * e_i, i in [1..d].
  static MultiIndex scaled_unit(std::size_t d, std::size_t i, unsigned k);

  std::size_t dim() const { return c_.size(); }
  unsigned operator[](std::size_t i) const { return c_[i]; }
  const std::vector<unsigned>& components() const { return c_; }

  /// |alpha|
  std::uint64_t length() const;
  /// prod alpha_i!; throws BoundsError on 64-bit overflow.
  std::uint64_t factorial() const;

  /// alpha-tilde: all but the last component.
  MultiIndex drop_last() const;
  /// alpha-check: all but the first component.
  MultiIndex drop_first() const;
  MultiIndex with_appended(unsigned last) const;
  MultiIndex with_prepended(unsigned first) const;

  /// "(1,0,2)"
  std::string to_string() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

 private:
  std::vector<unsigned> c_;
};

/// Binomial coefficient by Pascal's rule; 0 when p > n.
/// Throws BoundsError if the value does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t p);

std::uint64_t mi_length(const MultiIndex& a);
std::uint64_t mi_factorial(const MultiIndex& a);
unsigned mi_kronecker(const MultiIndex& a, const MultiIndex& b);

enum class MonomialOrder { lex, colex, symlex, revlex, grlex, grcolex, grsymlex, grevlex };

inline constexpr MonomialOrder kAllOrders[] = {
    MonomialOrder::lex,   MonomialOrder::colex,   MonomialOrder::symlex,   MonomialOrder::revlex,
    MonomialOrder::grlex, MonomialOrder::grcolex, MonomialOrder::grsymlex, MonomialOrder::grevlex};

inline constexpr MonomialOrder kGradedOrders[] = {MonomialOrder::grlex, MonomialOrder::grcolex,
                                                  MonomialOrder::grsymlex, MonomialOrder::grevlex};

std::string_view order_name(MonomialOrder o);
/// Throws ParseError for an unknown name.
MonomialOrder parse_order(std::string_view name);
bool is_graded(MonomialOrder o);

/// Throws DimensionMismatchError when dims differ.
std::strong_ordering order_compare(MonomialOrder o, const MultiIndex& a, const MultiIndex& b);

inline bool order_less(MonomialOrder o, const MultiIndex& a, const MultiIndex& b) {
  return order_compare(o, a, b) == std::strong_ordering::less;
}

/// Comparator for ordered containers keyed by MultiIndex.
struct GrsymlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return order_less(MonomialOrder::grsymlex, a, b);
  }
};

enum class SetKind { AtMost, Exact, ZeroAt };

struct IndexSetSpec {
  std::size_t d = 1;
  unsigned k = 0;
  SetKind kind = SetKind::AtMost;
  std::size_t zero_index = 0;  // only for ZeroAt, in [1..d]

  static IndexSetSpec at_most(std::size_t d, unsigned k) { return {d, k, SetKind::AtMost, 0}; }
  static IndexSetSpec exact(std::size_t d, unsigned k) { return {d, k, SetKind::Exact, 0}; }
  static IndexSetSpec zero_at(std::size_t d, unsigned k, std::size_t i) { return {d, k, SetKind::ZeroAt, i}; }
};

std::string_view kind_name(SetKind kind);

/// Every member, strictly increasing under `order`.
/// Throws BoundsError for d = 0 or a zero index outside [1..d].
std::vector<MultiIndex> enumerate(const IndexSetSpec& spec, MonomialOrder order = MonomialOrder::grsymlex);

/// Closed-form cardinal. cardinal(AtMost, d = 0) is 1; other d = 0 requests throw.
std::uint64_t cardinal(const IndexSetSpec& spec);

/// {(i, a) : a in C_{k-i}^{d-1}} and {(a, i) : a in C_{k-i}^{d-1}}, grsymlex order.
std::vector<MultiIndex> slice_vertical(std::size_t d, unsigned k, unsigned i);
std::vector<MultiIndex> slice_horizontal(std::size_t d, unsigned k, unsigned i);

/// (k - |a|, a)
MultiIndex f_head(std::size_t d, unsigned k, const MultiIndex& a);
/// (a, k - |a|)
MultiIndex f_tail(std::size_t d, unsigned k, const MultiIndex& a);
/// a with a zero inserted at position i in [1..d].
MultiIndex f_insert_zero(std::size_t d, unsigned k, std::size_t i, const MultiIndex& a);

/// theta_i^d(j): j if j < i, else j + 1. i in [0..d+1], j in [0..d].
std::size_t jump_enum(std::size_t d, std::size_t i, std::size_t j);
/// c_i^d(j): j + i + 1 if j < d - i, else j - (d - i). i, j in [0..d].
std::size_t circular_perm(std::size_t d, std::size_t i, std::size_t j);
/// tau_i^d(j): swaps i and d. i, j in [0..d].
std::size_t transposition(std::size_t d, std::size_t i, std::size_t j);

// Conditions on a graded order for simplicial Lagrange elements:
//  (i)   C_l entirely precedes C_{l+1};
//  (ii)  f_head (or f_tail) and every f_insert_zero are strictly increasing;
//  (iii) 0 < k e_1 < ... < k e_d.

struct OrderWitness {
  MultiIndex a;
  MultiIndex b;                      // required a < b, fails (for maps: a < b holds, fa < fb fails)
  std::optional<MultiIndex> fa, fb;  // images, for map conditions only
  std::size_t insert_position = 0;   // for f_insert_zero witnesses
};

struct ConditionResult {
  bool holds = true;
  std::vector<OrderWitness> witnesses;
};

struct OrderConditionReport {
  MonomialOrder order;
  std::size_t d;
  unsigned k;
  ConditionResult cond_i;
  ConditionResult head;    // f_head increasing
  ConditionResult tail;    // f_tail increasing
  ConditionResult insert;  // every f_insert_zero increasing
  ConditionResult cond_iii;
  bool cond_ii() const { return (head.holds || tail.holds) && insert.holds; }
};

/// Map conditions are checked on consecutive pairs of the ordered domain,
/// which is equivalent to strict monotonicity; every failing pair is listed.
OrderConditionReport check_order_conditions(MonomialOrder order, std::size_t d, unsigned k);

}  // namespace lagfe
