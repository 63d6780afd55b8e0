#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradeforge/category.hpp"
#include "gradeforge/magma.hpp"

namespace gradeforge {

/// Product of two basis elements that is the ring's zero rather than a
/// basis element (non-composable morphisms in a category algebra).
inline constexpr std::int32_t kRingZero = -1;

/// Structure constants of a magma or category algebra K[G] / K[C] over F_p,
/// together with the magma G that grades it through V_g = K g.
///
/// For a magma algebra the basis is G itself. The contracted algebra of a
/// zero magma identifies 0_G with the ring's zero, so V_0 = {0} and the basis
/// is G without 0_G, in index order. For a category algebra the grading
/// magma is adjoin_zero(C); again V_0 = {0} and the basis is mor(C).
class AlgebraPresentation {
 public:
  static AlgebraPresentation magma_algebra(FiniteMagma const& g, std::uint32_t modulus = 2);
  /// Throws Error(missing_zero) when g has no designated zero.
  static AlgebraPresentation contracted_algebra(FiniteMagma const& g,
                                                std::uint32_t modulus = 2);
  static AlgebraPresentation category_algebra(FinitePrecategory const& c,
                                              std::uint32_t modulus = 2);

  std::size_t basis_size() const noexcept { return _basis; }
  std::int32_t product(std::size_t a, std::size_t b) const {
    return _structure[a * _basis + b];
  }
  std::uint32_t modulus() const noexcept { return _modulus; }
  FiniteMagma const& grading_magma() const noexcept { return _grading; }

  /// Basis indices spanning V_g: one index, or none when V_g = {0}.
  ElementSet base_part(Element g) const;

  AlgebraPresentation with_modulus(std::uint32_t modulus) const;

 private:
  AlgebraPresentation(std::size_t basis, std::vector<std::int32_t> structure,
                      std::uint32_t modulus, FiniteMagma grading,
                      std::vector<std::int32_t> basis_of);

  std::size_t _basis;
  std::vector<std::int32_t> _basis_of;  // per grading element, or kRingZero
  std::vector<std::int32_t> _structure;
  std::uint32_t _modulus;
  FiniteMagma _grading;
};

/// Family (W_h) over a target magma H; W_h is the span of parts[h].
/// Category targets use adjoin_zero(L) with an empty part at its zero.
struct ElementaryFamily {
  FiniteMagma target;
  std::vector<ElementSet> parts;

  friend bool operator==(ElementaryFamily const&, ElementaryFamily const&) = default;
  /// Pointwise inclusion.
  bool is_below(ElementaryFamily const& other) const;
};

/// F(f)_h = sum of V_g over g in f^{-1}(h). Throws Error(basis_mismatch) if
/// f is not a relation on grading_magma() x target.
ElementaryFamily grading_from_relation(AlgebraPresentation const& a,
                                       FiniteMagma const& target, PairRelation const& f);

/// M(W) = {(g, h) : V_g in W_h}.
PairRelation relation_from_filter(AlgebraPresentation const& a, ElementaryFamily const& w);

struct Verdict {
  std::string property;
  bool holds = false;
  /// Violating target pair (h, h'), target element, or basis index,
  /// depending on the property. Empty when the property holds.
  std::vector<std::size_t> witness;
  /// Verdict of the independent span computation over F_p.
  bool span_holds = false;

  bool agrees() const noexcept { return holds == span_holds; }
};

Verdict is_filter(AlgebraPresentation const& a, ElementaryFamily const& w);
Verdict is_grading(AlgebraPresentation const& a, ElementaryFamily const& w);
Verdict is_strong(AlgebraPresentation const& a, ElementaryFamily const& w);
/// Every part nonzero; when both the grading magma and the target carry a
/// zero, the part at the target zero is exempt and must equal V_0 instead.
Verdict is_nonzero(AlgebraPresentation const& a, ElementaryFamily const& w);
Verdict is_elementary(AlgebraPresentation const& a, ElementaryFamily const& w);

std::vector<Verdict> verify_all(AlgebraPresentation const& a, ElementaryFamily const& w);

/// Elementary H-gradings on K[G]: F applied to the graphs of hom(G, H), or
/// of the zero homomorphisms when `zero` is set.
std::vector<ElementaryFamily> enumerate_elementary_gradings(AlgebraPresentation const& a,
                                                            FiniteMagma const& target,
                                                            bool zero,
                                                            Budget const& budget = {});
/// Elementary H-filters on K[G]: F applied to the submagmas of G x H, or to
/// the zero submagmas when `zero` is set.
std::vector<ElementaryFamily> enumerate_elementary_filters(AlgebraPresentation const& a,
                                                           FiniteMagma const& target,
                                                           bool zero,
                                                           Budget const& budget = {});

enum class CategoryMaps { prefunctors, functors };

/// Relation on adjoin_zero(from) x adjoin_zero(to) for a prefunctor: its
/// graph with 0 -> 0, plus (0, t) for every t.
PairRelation relation_of_prefunctor(FinitePrecategory const& from,
                                    FinitePrecategory const& to, MorphismMap const& f);
/// Relation for a set of morphism pairs, again with the full zero row.
PairRelation relation_of_subprecategory(FinitePrecategory const& from,
                                        FinitePrecategory const& to,
                                        PairRelation const& pairs);

/// Elementary L-gradings on K[C] from prefunctors or functors C -> L.
std::vector<ElementaryFamily> enumerate_elementary_gradings(FinitePrecategory const& from,
                                                            FinitePrecategory const& to,
                                                            CategoryMaps maps,
                                                            Budget const& budget = {});
/// Elementary L-filters on K[C] from the subprecategories of C x L whose
/// composable pairs stay composable in L.
std::vector<ElementaryFamily> enumerate_elementary_filters(FinitePrecategory const& from,
                                                           FinitePrecategory const& to,
                                                           Budget const& budget = {});

/// True if every pair of members composable in `from` is composable in `to`.
bool respects_target_composition(FinitePrecategory const& from,
                                 FinitePrecategory const& to, PairRelation const& pairs);

}  // namespace gradeforge
