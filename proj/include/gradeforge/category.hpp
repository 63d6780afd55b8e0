#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gradeforge/budget.hpp"
#include "gradeforge/magma.hpp"

namespace gradeforge {

using Object = std::uint32_t;
using Morphism = std::uint32_t;

struct MorphismEnds {
  Object dom;
  Object cod;
  friend bool operator==(MorphismEnds const&, MorphismEnds const&) = default;
};

/// A finite precategory: morphisms with domain and codomain, a composition
/// table defined exactly on pairs (s, t) with dom(s) = cod(t) (the result
/// is s after t), and identities at some objects. With an identity at every
/// object it is a category.
class FinitePrecategory {
 public:
  static constexpr std::int32_t kUndefined = -1;

  /// Checks composition shape, domains and codomains of composites,
  /// associativity on every composable triple, and identity laws.
  /// Throws Error(bad_composition | not_associative | bad_identity |
  /// index_out_of_range).
  static FinitePrecategory validate(std::size_t object_count,
                                    std::vector<MorphismEnds> morphisms,
                                    std::vector<std::int32_t> composition,
                                    std::vector<std::optional<Morphism>> identity_at);

  std::size_t object_count() const noexcept { return _objects; }
  std::size_t morphism_count() const noexcept { return _ends.size(); }
  Object dom(Morphism s) const { return _ends[s].dom; }
  Object cod(Morphism s) const { return _ends[s].cod; }
  std::span<MorphismEnds const> morphisms() const noexcept { return _ends; }

  bool composable(Morphism s, Morphism t) const { return dom(s) == cod(t); }
  /// s after t, when dom(s) = cod(t).
  std::optional<Morphism> compose(Morphism s, Morphism t) const {
    auto r = _comp[static_cast<std::size_t>(s) * _ends.size() + t];
    if (r < 0) return std::nullopt;
    return static_cast<Morphism>(r);
  }
  std::span<std::int32_t const> composition() const noexcept { return _comp; }

  std::optional<Morphism> identity(Object e) const { return _identity[e]; }
  bool is_identity(Morphism s) const {
    return _identity[dom(s)] && *_identity[dom(s)] == s;
  }
  /// Identity at every object.
  bool is_category() const;

  /// Morphisms x -> y, in index order.
  std::vector<Morphism> hom(Object x, Object y) const;

  friend bool operator==(FinitePrecategory const&, FinitePrecategory const&) = default;

 private:
  friend struct CategoryBuilder;
  FinitePrecategory() = default;

  std::size_t _objects = 0;
  std::vector<MorphismEnds> _ends;
  std::vector<std::int32_t> _comp;
  std::vector<std::optional<Morphism>> _identity;
};

/// Object and morphism assignments of a (pre)functor.
struct MorphismMap {
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;

  friend bool operator==(MorphismMap const&, MorphismMap const&) = default;
  friend auto operator<=>(MorphismMap const&, MorphismMap const&) = default;
};

bool is_prefunctor(FinitePrecategory const& from, FinitePrecategory const& to,
                   MorphismMap const& f);
bool is_functor(FinitePrecategory const& from, FinitePrecategory const& to,
                MorphismMap const& f);
MorphismMap compose_maps(MorphismMap const& second, MorphismMap const& first);

bool is_groupoid(FinitePrecategory const& c);
/// At most one morphism between any ordered pair of objects.
bool is_thin(FinitePrecategory const& c);
/// At least one morphism between any ordered pair of objects.
bool is_connected(FinitePrecategory const& c);

struct Component {
  FinitePrecategory category;
  std::vector<Object> objects;       // original object of each new object
  std::vector<Morphism> morphisms;   // original morphism of each new morphism
};
/// Pieces of the undirected object graph, ordered by smallest object.
std::vector<Component> connected_components(FinitePrecategory const& c);

/// Connected groupoid on n objects whose vertex groups are `group`.
/// Morphism (c, g, d) : d -> c has index (c * n + d) * |G| + g, and
/// (c, g, d)(d, h, e) = (c, gh, e). Throws Error(not_a_group).
FinitePrecategory connected_groupoid(std::size_t objects, FiniteMagma const& group);
/// The thin connected groupoid on n objects; e_{i,j} : j -> i has index i * n + j.
FinitePrecategory matrix_groupoid(std::size_t n);
/// One object; composition is the group product. Throws Error(not_a_group).
FinitePrecategory group_as_category(FiniteMagma const& group);
/// One object; morphisms and composition from a monoid table.
/// Throws Error(bad_identity) if the table has no two-sided unit.
FinitePrecategory monoid_as_category(FiniteMagma const& monoid);
/// Objects (x, y) -> x * |ob L| + y, morphisms (s, t) -> s * |mor L| + t.
FinitePrecategory product_category(FinitePrecategory const& a, FinitePrecategory const& b,
                                   Budget const& budget = {});
FinitePrecategory disjoint_union(FinitePrecategory const& a, FinitePrecategory const& b);
FinitePrecategory empty_category();

/// Morphisms e -> e as a magma, with the original morphism of each element.
struct VertexMonoid {
  FiniteMagma monoid;
  std::vector<Morphism> morphisms;
};
VertexMonoid vertex_monoid(FinitePrecategory const& c, Object e);

/// Magma on mor(C) plus 0 (index |mor C|): st is the composite when
/// defined and 0 otherwise.
FiniteMagma adjoin_zero(FinitePrecategory const& c);

/// Composition-preserving maps; identities need not go to identities.
/// Lexicographic in (objects, morphisms).
std::vector<MorphismMap> enumerate_prefunctors(FinitePrecategory const& from,
                                               FinitePrecategory const& to,
                                               Budget const& budget = {});
/// Prefunctors that also send identities to identities. Both sides must be
/// categories (Error(not_a_category) otherwise).
std::vector<MorphismMap> enumerate_functors(FinitePrecategory const& from,
                                            FinitePrecategory const& to,
                                            Budget const& budget = {});

struct ReducedPrefunctors {
  std::vector<MorphismMap> prefunctors;
  /// Zero homomorphisms of the adjoined magmas whose induced object
  /// assignment is not well defined.
  std::vector<ElementMap> inconsistent;
};
/// Prefunctors recovered from zero homomorphisms adjoin_zero(from) ->
/// adjoin_zero(to). Objects without morphisms range over every target object.
ReducedPrefunctors prefunctors_via_zero_homs(FinitePrecategory const& from,
                                             FinitePrecategory const& to,
                                             Budget const& budget = {});

/// Morphism sets of `c` closed under defined composition, sorted by bit
/// pattern. Objects are induced by the morphisms.
std::vector<ElementSet> enumerate_subprecategories(FinitePrecategory const& c,
                                                   Budget const& budget = {});
/// Subprecategories of from x to as relations mor(from) x mor(to).
std::vector<PairRelation> enumerate_subprecategories(FinitePrecategory const& from,
                                                     FinitePrecategory const& to,
                                                     Budget const& budget = {});
/// Nonzero parts of the zero submagmas of adjoin_zero(from) x adjoin_zero(to).
/// These are the subprecategories in which every pair (s, s') composable in
/// `from` is also composable in `to`; with a one-object `to` that is all of
/// them.
std::vector<PairRelation> subprecategories_via_zero_submagmas(
    FinitePrecategory const& from, FinitePrecategory const& to, Budget const& budget = {});

}  // namespace gradeforge
