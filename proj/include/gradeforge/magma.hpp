#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gradeforge/budget.hpp"
#include "gradeforge/element_set.hpp"

namespace gradeforge {

using Element = std::uint32_t;

/// A total map between element ranges, image of element i at index i.
using ElementMap = std::vector<Element>;

/// A finite magma on {0, ..., order - 1} given by its row-major Cayley table,
/// optionally with a designated absorbing element. No axioms are assumed.
class FiniteMagma {
 public:
  /// Checks every entry and, if `zero` is given, the absorbing law.
  /// Throws Error(index_out_of_range) or Error(not_absorbing).
  static FiniteMagma validate(std::size_t order, std::vector<Element> table,
                              std::optional<Element> zero = std::nullopt);
  static FiniteMagma validate(std::vector<std::vector<Element>> const& rows,
                              std::optional<Element> zero = std::nullopt);

  std::size_t order() const noexcept { return _order; }
  Element product(Element a, Element b) const noexcept {
    return _table[static_cast<std::size_t>(a) * _order + b];
  }
  std::optional<Element> zero() const noexcept { return _zero; }
  bool has_zero() const noexcept { return _zero.has_value(); }
  std::span<Element const> table() const noexcept { return _table; }

  /// Same table with a different (validated) zero designation.
  FiniteMagma with_zero(std::optional<Element> zero) const;

  friend bool operator==(FiniteMagma const&, FiniteMagma const&) = default;

 private:
  FiniteMagma(std::size_t order, std::vector<Element> table,
              std::optional<Element> zero)
      : _order(order), _table(std::move(table)), _zero(zero) {}

  std::size_t _order;
  std::vector<Element> _table;
  std::optional<Element> _zero;
};

/// A subset of G x H, stored as a bit set over the encoding g * |H| + h.
class PairRelation {
 public:
  PairRelation(std::size_t left_order, std::size_t right_order);

  std::size_t left_order() const noexcept { return _left; }
  std::size_t right_order() const noexcept { return _right; }

  std::size_t encode(Element g, Element h) const noexcept {
    return static_cast<std::size_t>(g) * _right + h;
  }
  bool contains(Element g, Element h) const { return _pairs.contains(encode(g, h)); }
  void insert(Element g, Element h) { _pairs.insert(encode(g, h)); }
  void erase(Element g, Element h) { _pairs.erase(encode(g, h)); }
  std::size_t size() const { return _pairs.size(); }

  /// f^{-1}(h): every g with (g, h) in the relation.
  ElementSet preimage(Element h) const;
  std::vector<std::pair<Element, Element>> pairs() const;
  ElementSet const& bits() const noexcept { return _pairs; }

  bool is_subset_of(PairRelation const& other) const {
    return _pairs.is_subset_of(other._pairs);
  }

  static PairRelation from_bits(std::size_t left_order, std::size_t right_order,
                                ElementSet const& bits);
  static PairRelation graph(ElementMap const& map, std::size_t right_order);
  static PairRelation full(std::size_t left_order, std::size_t right_order);

  friend bool operator==(PairRelation const&, PairRelation const&) = default;
  friend bool operator<(PairRelation const& a, PairRelation const& b) {
    return a._pairs < b._pairs;
  }

 private:
  std::size_t _left;
  std::size_t _right;
  ElementSet _pairs;
};

/// Componentwise product; (g, h) is encoded as g * |H| + h. No zero is
/// designated on the result.
FiniteMagma product_magma(FiniteMagma const& g, FiniteMagma const& h,
                          Budget const& budget = {});

/// Smallest superset of `seed` closed under the product.
ElementSet closure(FiniteMagma const& g, ElementSet const& seed);

/// Every subset closed under the product, the empty set included, sorted by
/// bit pattern.
std::vector<ElementSet> enumerate_submagmas(FiniteMagma const& g,
                                            Budget const& budget = {});

/// Which optional pairs (0_G, h) with h != 0_H a zero submagma may carry.
/// They never take part in a closure constraint.
enum class ZeroRow {
  any,      // every subset of {0_G} x (H \ {0_H})
  minimal,  // only (0_G, 0_H)
  full,     // all of {0_G} x H
};

/// Zero submagmas of G x H: relations f with f^{-1}(0_H) = {0_G} that are
/// closed under componentwise products whose G-component is nonzero.
/// Throws Error(missing_zero) when either side lacks a zero.
std::vector<PairRelation> enumerate_zero_submagmas(FiniteMagma const& g,
                                                   FiniteMagma const& h,
                                                   ZeroRow row = ZeroRow::any,
                                                   Budget const& budget = {});

/// All maps with f(gg') = f(g)f(g'), in lexicographic order.
std::vector<ElementMap> enumerate_homs(FiniteMagma const& g, FiniteMagma const& h,
                                       Budget const& budget = {});

/// All maps with f^{-1}(0_H) = {0_G} and f(gg') = f(g)f(g') whenever gg' != 0.
std::vector<ElementMap> enumerate_zero_homs(FiniteMagma const& g,
                                            FiniteMagma const& h,
                                            Budget const& budget = {});

bool is_hom(FiniteMagma const& g, FiniteMagma const& h, ElementMap const& f);
bool is_zero_hom(FiniteMagma const& g, FiniteMagma const& h, ElementMap const& f);

/// Largest order accepted by canonical_form and are_isomorphic.
inline constexpr std::size_t kMaxCanonicalOrder = 8;

/// Relabel by a bijection: the result has sigma(x) * sigma(y) = sigma(x * y).
FiniteMagma relabel(FiniteMagma const& g, ElementMap const& sigma);

/// Lexicographically least relabelled table over all permutations, with the
/// zero (if any) carried along.
FiniteMagma canonical_form(FiniteMagma const& g);
bool are_isomorphic(FiniteMagma const& g, FiniteMagma const& h);

/// One canonical representative per isomorphism class of magmas of the given
/// order, in lexicographic table order. Orders above Budget::max_census_order
/// raise size_overflow.
std::vector<FiniteMagma> census(std::size_t order, Budget const& budget = {});

/// Zero magma of matrix units e_{i,j} (index i * n + j, 0-based) and 0
/// (index n * n), with e_{i,j} e_{k,l} = e_{i,l} if j = k and 0 otherwise.
FiniteMagma matrix_unit_zero_magma(std::size_t n);

inline Element matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  return static_cast<Element>(i * n + j);
}

// Small group helpers.
FiniteMagma cyclic_group(std::size_t n);
/// Direct product of cyclic groups of the given orders.
FiniteMagma abelian_group(std::vector<std::size_t> const& cyclic_orders);
/// Appends an absorbing element (index |G|) and designates it as zero.
FiniteMagma adjoin_absorbing_zero(FiniteMagma const& g);

struct GroupStructure {
  Element identity;
  ElementMap inverse;
};
/// Identity and inverses if the table is a group, otherwise nullopt.
std::optional<GroupStructure> group_structure(FiniteMagma const& g);

}  // namespace gradeforge
