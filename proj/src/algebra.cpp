#include "gradeforge/algebra.hpp"

#include <algorithm>
#include <string>

#include "gradeforge/span.hpp"

namespace gradeforge {

AlgebraPresentation::AlgebraPresentation(std::size_t basis,
                                         std::vector<std::int32_t> structure,
                                         std::uint32_t modulus, FiniteMagma grading,
                                         std::vector<std::int32_t> basis_of)
    : _basis(basis),
      _basis_of(std::move(basis_of)),
      _structure(std::move(structure)),
      _modulus(modulus),
      _grading(std::move(grading)) {
  span::Subspace probe(0, modulus);  // rejects non-prime moduli
}

AlgebraPresentation AlgebraPresentation::magma_algebra(FiniteMagma const& g,
                                                       std::uint32_t modulus) {
  std::vector<std::int32_t> structure(g.table().begin(), g.table().end());
  std::vector<std::int32_t> basis_of(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) basis_of[x] = static_cast<std::int32_t>(x);
  return AlgebraPresentation(g.order(), std::move(structure), modulus, g, std::move(basis_of));
}

AlgebraPresentation AlgebraPresentation::contracted_algebra(FiniteMagma const& g,
                                                            std::uint32_t modulus) {
  if (!g.zero()) throw Error(ErrorCode::missing_zero, "contracted algebra needs a zero magma");
  Element zero = *g.zero();
  std::vector<std::int32_t> basis_of(g.order(), kRingZero);
  std::int32_t next = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (x != zero) basis_of[x] = next++;
  std::size_t n = g.order() - 1;
  std::vector<std::int32_t> structure(n * n, kRingZero);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (x != zero && y != zero)
        structure[basis_of[x] * n + basis_of[y]] = basis_of[g.product(x, y)];
  return AlgebraPresentation(n, std::move(structure), modulus, g, std::move(basis_of));
}

AlgebraPresentation AlgebraPresentation::category_algebra(FinitePrecategory const& c,
                                                          std::uint32_t modulus) {
  std::size_t m = c.morphism_count();
  std::vector<std::int32_t> structure(m * m, kRingZero);
  for (Morphism s = 0; s < m; ++s)
    for (Morphism t = 0; t < m; ++t)
      if (auto st = c.compose(s, t)) structure[s * m + t] = static_cast<std::int32_t>(*st);
  std::vector<std::int32_t> basis_of(m + 1, kRingZero);
  for (std::size_t s = 0; s < m; ++s) basis_of[s] = static_cast<std::int32_t>(s);
  return AlgebraPresentation(m, std::move(structure), modulus, adjoin_zero(c),
                             std::move(basis_of));
}

ElementSet AlgebraPresentation::base_part(Element g) const {
  if (g < _basis_of.size() && _basis_of[g] != kRingZero) {
    return ElementSet{static_cast<std::size_t>(_basis_of[g])};
  }
  return {};
}

AlgebraPresentation AlgebraPresentation::with_modulus(std::uint32_t modulus) const {
  return AlgebraPresentation(_basis, _structure, modulus, _grading, _basis_of);
}

bool ElementaryFamily::is_below(ElementaryFamily const& other) const {
  if (parts.size() != other.parts.size()) return false;
  for (std::size_t h = 0; h < parts.size(); ++h)
    if (!parts[h].is_subset_of(other.parts[h])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// F and M

ElementaryFamily grading_from_relation(AlgebraPresentation const& a,
                                       FiniteMagma const& target, PairRelation const& f) {
  if (f.left_order() != a.grading_magma().order() || f.right_order() != target.order()) {
    throw Error(ErrorCode::basis_mismatch,
                "relation is on " + std::to_string(f.left_order()) + "x" +
                    std::to_string(f.right_order()) + ", algebra and target give " +
                    std::to_string(a.grading_magma().order()) + "x" +
                    std::to_string(target.order()));
  }
  ElementaryFamily w{target, std::vector<ElementSet>(target.order())};
  for (auto [g, h] : f.pairs()) w.parts[h] |= a.base_part(g);
  return w;
}

namespace {

void check_family(AlgebraPresentation const& a, ElementaryFamily const& w) {
  if (w.parts.size() != w.target.order()) {
    throw Error(ErrorCode::basis_mismatch, "family has " + std::to_string(w.parts.size()) +
                                               " parts for a target of order " +
                                               std::to_string(w.target.order()));
  }
  ElementSet basis = ElementSet::range(a.basis_size());
  for (auto const& p : w.parts) {
    if (!p.is_subset_of(basis)) {
      throw Error(ErrorCode::basis_mismatch, "part refers to a basis index out of range");
    }
  }
}

}  // namespace

PairRelation relation_from_filter(AlgebraPresentation const& a, ElementaryFamily const& w) {
  check_family(a, w);
  PairRelation r(a.grading_magma().order(), w.target.order());
  for (Element g = 0; g < a.grading_magma().order(); ++g)
    for (Element h = 0; h < w.target.order(); ++h)
      if (a.base_part(g).is_subset_of(w.parts[h])) r.insert(g, h);
  return r;
}

// ---------------------------------------------------------------------------
// Verdicts

namespace {

ElementSet basis_products(AlgebraPresentation const& a, ElementSet const& p,
                          ElementSet const& q) {
  ElementSet out;
  p.for_each([&](std::size_t x) {
    q.for_each([&](std::size_t y) {
      auto r = a.product(x, y);
      if (r != kRingZero) out.insert(static_cast<std::size_t>(r));
    });
  });
  return out;
}

bool zero_variant(AlgebraPresentation const& a, ElementaryFamily const& w) {
  return a.grading_magma().has_zero() && w.target.has_zero();
}

// Span side. Each W_h is presented by the spanning vectors
// e_{b1}, e_{b1} + e_{b2}, ..., so products mix basis elements.
class SpanModel {
 public:
  SpanModel(AlgebraPresentation const& a, ElementaryFamily const& w) : _a(a) {
    for (auto const& p : w.parts) _gens.push_back(generators(p));
  }

  span::Subspace part(std::size_t h) const { return subspace(_gens[h]); }

  span::Subspace subspace(std::vector<span::Vector> const& gens) const {
    span::Subspace s(_a.basis_size(), _a.modulus());
    for (auto const& v : gens) s.add(v);
    return s;
  }

  span::Subspace product_space(std::size_t h, std::size_t k) const {
    span::Subspace s(_a.basis_size(), _a.modulus());
    for (auto const& u : _gens[h])
      for (auto const& v : _gens[k]) s.add(multiply(u, v));
    return s;
  }

  std::vector<span::Vector> generators(ElementSet const& p) const {
    std::vector<span::Vector> out;
    span::Vector acc(_a.basis_size(), 0);
    p.for_each([&](std::size_t b) {
      acc[b] = 1;
      out.push_back(acc);
    });
    return out;
  }

 private:
  span::Vector multiply(span::Vector const& u, span::Vector const& v) const {
    std::uint64_t p = _a.modulus();
    span::Vector out(_a.basis_size(), 0);
    for (std::size_t x = 0; x < u.size(); ++x) {
      if (u[x] == 0) continue;
      for (std::size_t y = 0; y < v.size(); ++y) {
        if (v[y] == 0) continue;
        auto r = _a.product(x, y);
        if (r == kRingZero) continue;
        auto& cell = out[static_cast<std::size_t>(r)];
        cell = static_cast<std::uint32_t>((cell + std::uint64_t{u[x]} * v[y]) % p);
      }
    }
    return out;
  }

  AlgebraPresentation const& _a;
  std::vector<std::vector<span::Vector>> _gens;
};

bool equal_spaces(span::Subspace const& x, span::Subspace const& y) {
  return x.rank() == y.rank() && x.is_subspace_of(y);
}

bool span_filter(AlgebraPresentation const& a, ElementaryFamily const& w, bool strong) {
  SpanModel model(a, w);
  std::size_t n = w.target.order();
  std::vector<span::Subspace> parts;
  for (std::size_t h = 0; h < n; ++h) parts.push_back(model.part(h));
  for (Element h = 0; h < n; ++h)
    for (Element k = 0; k < n; ++k) {
      auto prod = model.product_space(h, k);
      auto const& target = parts[w.target.product(h, k)];
      if (strong ? !equal_spaces(prod, target) : !prod.is_subspace_of(target)) return false;
    }
  return true;
}

Verdict set_filter(AlgebraPresentation const& a, ElementaryFamily const& w, bool strong,
                   char const* name) {
  Verdict v{name, true, {}, false};
  std::size_t n = w.target.order();
  for (Element h = 0; h < n && v.holds; ++h)
    for (Element k = 0; k < n && v.holds; ++k) {
      auto prod = basis_products(a, w.parts[h], w.parts[k]);
      auto const& target = w.parts[w.target.product(h, k)];
      bool ok = strong ? prod == target : prod.is_subset_of(target);
      if (!ok) {
        v.holds = false;
        v.witness = {h, k};
      }
    }
  return v;
}

}  // namespace

Verdict is_filter(AlgebraPresentation const& a, ElementaryFamily const& w) {
  check_family(a, w);
  Verdict v = set_filter(a, w, false, "filter");
  v.span_holds = span_filter(a, w, false);
  return v;
}

Verdict is_strong(AlgebraPresentation const& a, ElementaryFamily const& w) {
  check_family(a, w);
  Verdict v = set_filter(a, w, true, "strong");
  v.span_holds = span_filter(a, w, true);
  return v;
}

Verdict is_grading(AlgebraPresentation const& a, ElementaryFamily const& w) {
  check_family(a, w);
  Verdict v = set_filter(a, w, false, "grading");
  v.property = "grading";
  if (v.holds) {
    // Every basis index in exactly one part.
    std::vector<std::size_t> seen(a.basis_size(), 0);
    for (auto const& p : w.parts) p.for_each([&](std::size_t b) { ++seen[b]; });
    for (std::size_t b = 0; b < a.basis_size(); ++b) {
      if (seen[b] != 1) {
        v.holds = false;
        v.witness = {b};
        break;
      }
    }
  }

  SpanModel model(a, w);
  span::Subspace total(a.basis_size(), a.modulus());
  std::size_t dims = 0;
  for (std::size_t h = 0; h < w.parts.size(); ++h) {
    auto part = model.part(h);
    dims += part.rank();
    for (auto const& row : part.rows()) total.add(row);
  }
  v.span_holds = span_filter(a, w, false) && dims == a.basis_size() &&
                 total.rank() == a.basis_size();
  return v;
}

Verdict is_nonzero(AlgebraPresentation const& a, ElementaryFamily const& w) {
  check_family(a, w);
  Verdict v{"nonzero", true, {}, true};
  bool zero = zero_variant(a, w);
  std::size_t hz = zero ? *w.target.zero() : w.parts.size();
  ElementSet base_zero = zero ? a.base_part(*a.grading_magma().zero()) : ElementSet{};

  for (std::size_t h = 0; h < w.parts.size() && v.holds; ++h) {
    bool ok = h == hz ? w.parts[h] == base_zero : !w.parts[h].empty();
    if (!ok) {
      v.holds = false;
      v.witness = {h};
    }
  }

  SpanModel model(a, w);
  for (std::size_t h = 0; h < w.parts.size() && v.span_holds; ++h) {
    auto part = model.part(h);
    if (h == hz) {
      v.span_holds = equal_spaces(part, model.subspace(model.generators(base_zero)));
    } else {
      v.span_holds = part.rank() > 0;
    }
  }
  return v;
}

Verdict is_elementary(AlgebraPresentation const& a, ElementaryFamily const& w) {
  check_family(a, w);
  // A family of basis subsets is elementary by construction.
  Verdict v{"elementary", true, {}, true};
  SpanModel model(a, w);
  for (std::size_t h = 0; h < w.parts.size() && v.span_holds; ++h) {
    auto part = model.part(h);
    span::Subspace sum(a.basis_size(), a.modulus());
    for (Element g = 0; g < a.grading_magma().order(); ++g) {
      auto vg = model.subspace(model.generators(a.base_part(g)));
      if (vg.is_subspace_of(part))
        for (auto const& row : vg.rows()) sum.add(row);
    }
    v.span_holds = equal_spaces(sum, part);
  }
  return v;
}

std::vector<Verdict> verify_all(AlgebraPresentation const& a, ElementaryFamily const& w) {
  return {is_filter(a, w), is_grading(a, w), is_strong(a, w), is_nonzero(a, w),
          is_elementary(a, w)};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<ElementaryFamily> enumerate_elementary_gradings(AlgebraPresentation const& a,
                                                            FiniteMagma const& target,
                                                            bool zero,
                                                            Budget const& budget) {
  auto const& g = a.grading_magma();
  auto maps = zero ? enumerate_zero_homs(g, target, budget) : enumerate_homs(g, target, budget);
  std::vector<ElementaryFamily> out;
  for (auto const& f : maps)
    out.push_back(grading_from_relation(a, target, PairRelation::graph(f, target.order())));
  return out;
}

std::vector<ElementaryFamily> enumerate_elementary_filters(AlgebraPresentation const& a,
                                                           FiniteMagma const& target,
                                                           bool zero,
                                                           Budget const& budget) {
  auto const& g = a.grading_magma();
  std::vector<PairRelation> relations;
  if (zero) {
    // (0_G, h) is in M(W) exactly when V_0 lies in W_h; with V_0 = {0}
    // that is every h.
    bool v0_trivial = !g.zero() || a.base_part(*g.zero()).empty();
    relations = enumerate_zero_submagmas(g, target, v0_trivial ? ZeroRow::full : ZeroRow::any,
                                         budget);
  } else {
    auto product = product_magma(g, target, budget);
    for (auto const& s : enumerate_submagmas(product, budget))
      relations.push_back(PairRelation::from_bits(g.order(), target.order(), s));
  }
  std::vector<ElementaryFamily> out;
  for (auto const& f : relations) out.push_back(grading_from_relation(a, target, f));
  return out;
}

PairRelation relation_of_prefunctor(FinitePrecategory const& from,
                                    FinitePrecategory const& to, MorphismMap const& f) {
  auto zero_from = static_cast<Element>(from.morphism_count());
  auto zero_to = static_cast<Element>(to.morphism_count());
  PairRelation r(from.morphism_count() + 1, to.morphism_count() + 1);
  for (Morphism s = 0; s < from.morphism_count(); ++s) r.insert(s, f.morphisms[s]);
  for (Element t = 0; t <= zero_to; ++t) r.insert(zero_from, t);
  return r;
}

PairRelation relation_of_subprecategory(FinitePrecategory const& from,
                                        FinitePrecategory const& to,
                                        PairRelation const& pairs) {
  auto zero_from = static_cast<Element>(from.morphism_count());
  auto zero_to = static_cast<Element>(to.morphism_count());
  PairRelation r(from.morphism_count() + 1, to.morphism_count() + 1);
  for (auto [s, t] : pairs.pairs()) r.insert(s, t);
  for (Element t = 0; t <= zero_to; ++t) r.insert(zero_from, t);
  return r;
}

std::vector<ElementaryFamily> enumerate_elementary_gradings(FinitePrecategory const& from,
                                                            FinitePrecategory const& to,
                                                            CategoryMaps maps,
                                                            Budget const& budget) {
  auto a = AlgebraPresentation::category_algebra(from);
  auto target = adjoin_zero(to);
  auto found = maps == CategoryMaps::functors ? enumerate_functors(from, to, budget)
                                              : enumerate_prefunctors(from, to, budget);
  std::vector<ElementaryFamily> out;
  for (auto const& f : found)
    out.push_back(grading_from_relation(a, target, relation_of_prefunctor(from, to, f)));
  return out;
}

bool respects_target_composition(FinitePrecategory const& from,
                                 FinitePrecategory const& to, PairRelation const& pairs) {
  auto list = pairs.pairs();
  for (auto [s, t] : list)
    for (auto [s2, t2] : list)
      if (from.composable(s, s2) && !to.composable(t, t2)) return false;
  return true;
}

std::vector<ElementaryFamily> enumerate_elementary_filters(FinitePrecategory const& from,
                                                           FinitePrecategory const& to,
                                                           Budget const& budget) {
  auto a = AlgebraPresentation::category_algebra(from);
  auto target = adjoin_zero(to);
  std::vector<ElementaryFamily> out;
  for (auto const& p : enumerate_subprecategories(from, to, budget)) {
    if (!respects_target_composition(from, to, p)) continue;
    out.push_back(grading_from_relation(a, target, relation_of_subprecategory(from, to, p)));
  }
  return out;
}

}  // namespace gradeforge
