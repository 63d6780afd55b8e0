#include "gradeforge/category.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gradeforge/search.hpp"

namespace gradeforge {

struct CategoryBuilder {
  static FinitePrecategory make(std::size_t objects, std::vector<MorphismEnds> ends,
                                std::vector<std::int32_t> comp,
                                std::vector<std::optional<Morphism>> identity) {
    FinitePrecategory c;
    c._objects = objects;
    c._ends = std::move(ends);
    c._comp = std::move(comp);
    c._identity = std::move(identity);
    return c;
  }
};

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

FinitePrecategory FinitePrecategory::validate(
    std::size_t object_count, std::vector<MorphismEnds> morphisms,
    std::vector<std::int32_t> composition,
    std::vector<std::optional<Morphism>> identity_at) {
  std::size_t m = morphisms.size();
  if (identity_at.size() != object_count) {
    throw Error(ErrorCode::index_out_of_range, "identity list does not match objects");
  }
  if (composition.size() != m * m) {
    throw Error(ErrorCode::bad_composition, "composition table is not |mor| x |mor|");
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (morphisms[s].dom >= object_count || morphisms[s].cod >= object_count) {
      throw Error(ErrorCode::index_out_of_range,
                  "morphism " + str(s) + " has an endpoint outside the objects");
    }
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      std::int32_t r = composition[s * m + t];
      bool composable = morphisms[s].dom == morphisms[t].cod;
      if (!composable) {
        if (r >= 0) {
          throw Error(ErrorCode::bad_composition,
                      "composite given for non-composable pair (" + str(s) + "," +
                          str(t) + ")");
        }
        continue;
      }
      if (r < 0 || static_cast<std::size_t>(r) >= m) {
        throw Error(ErrorCode::bad_composition,
                    "missing composite for (" + str(s) + "," + str(t) + ")");
      }
      auto const& e = morphisms[static_cast<std::size_t>(r)];
      if (e.dom != morphisms[t].dom || e.cod != morphisms[s].cod) {
        throw Error(ErrorCode::bad_composition,
                    "composite of (" + str(s) + "," + str(t) + ") has the wrong ends");
      }
    }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      std::int32_t st = composition[s * m + t];
      if (st < 0) continue;
      for (std::size_t u = 0; u < m; ++u) {
        std::int32_t tu = composition[t * m + u];
        if (tu < 0) continue;
        std::int32_t left = composition[static_cast<std::size_t>(st) * m + u];
        std::int32_t right = composition[s * m + static_cast<std::size_t>(tu)];
        if (left != right) {
          throw Error(ErrorCode::not_associative,
                      "(st)u != s(tu) for s=" + str(s) + " t=" + str(t) + " u=" + str(u));
        }
      }
    }
  for (std::size_t e = 0; e < object_count; ++e) {
    if (!identity_at[e]) continue;
    std::size_t i = *identity_at[e];
    if (i >= m || morphisms[i].dom != e || morphisms[i].cod != e) {
      throw Error(ErrorCode::bad_identity, "identity at object " + str(e) + " is not a loop");
    }
    for (std::size_t s = 0; s < m; ++s) {
      if (morphisms[s].dom == e && composition[s * m + i] != static_cast<std::int32_t>(s)) {
        throw Error(ErrorCode::bad_identity,
                    "morphism " + str(i) + " is not a right unit for " + str(s));
      }
      if (morphisms[s].cod == e && composition[i * m + s] != static_cast<std::int32_t>(s)) {
        throw Error(ErrorCode::bad_identity,
                    "morphism " + str(i) + " is not a left unit for " + str(s));
      }
    }
  }
  return CategoryBuilder::make(object_count, std::move(morphisms), std::move(composition),
                               std::move(identity_at));
}

bool FinitePrecategory::is_category() const {
  return std::all_of(_identity.begin(), _identity.end(),
                     [](auto const& i) { return i.has_value(); });
}

std::vector<Morphism> FinitePrecategory::hom(Object x, Object y) const {
  std::vector<Morphism> out;
  for (Morphism s = 0; s < _ends.size(); ++s)
    if (_ends[s].dom == x && _ends[s].cod == y) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Maps

bool is_prefunctor(FinitePrecategory const& from, FinitePrecategory const& to,
                   MorphismMap const& f) {
  if (f.objects.size() != from.object_count() ||
      f.morphisms.size() != from.morphism_count())
    return false;
  for (auto x : f.objects)
    if (x >= to.object_count()) return false;
  for (Morphism s = 0; s < from.morphism_count(); ++s) {
    Morphism fs = f.morphisms[s];
    if (fs >= to.morphism_count()) return false;
    if (to.dom(fs) != f.objects[from.dom(s)] || to.cod(fs) != f.objects[from.cod(s)])
      return false;
  }
  for (Morphism s = 0; s < from.morphism_count(); ++s)
    for (Morphism t = 0; t < from.morphism_count(); ++t) {
      auto st = from.compose(s, t);
      if (!st) continue;
      auto image = to.compose(f.morphisms[s], f.morphisms[t]);
      if (!image || *image != f.morphisms[*st]) return false;
    }
  return true;
}

bool is_functor(FinitePrecategory const& from, FinitePrecategory const& to,
                MorphismMap const& f) {
  if (!is_prefunctor(from, to, f)) return false;
  for (Object e = 0; e < from.object_count(); ++e) {
    auto i = from.identity(e);
    if (!i) continue;
    auto j = to.identity(f.objects[e]);
    if (!j || f.morphisms[*i] != *j) return false;
  }
  return true;
}

MorphismMap compose_maps(MorphismMap const& second, MorphismMap const& first) {
  MorphismMap out;
  for (auto x : first.objects) out.objects.push_back(second.objects[x]);
  for (auto s : first.morphisms) out.morphisms.push_back(second.morphisms[s]);
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_groupoid(FinitePrecategory const& c) {
  if (!c.is_category()) return false;
  for (Morphism s = 0; s < c.morphism_count(); ++s) {
    bool invertible = false;
    for (Morphism t : c.hom(c.cod(s), c.dom(s))) {
      if (*c.compose(s, t) == *c.identity(c.cod(s)) &&
          *c.compose(t, s) == *c.identity(c.dom(s))) {
        invertible = true;
        break;
      }
    }
    if (!invertible) return false;
  }
  return true;
}

bool is_thin(FinitePrecategory const& c) {
  std::vector<std::size_t> count(c.object_count() * c.object_count(), 0);
  for (auto const& e : c.morphisms())
    if (++count[e.dom * c.object_count() + e.cod] > 1) return false;
  return true;
}

bool is_connected(FinitePrecategory const& c) {
  std::vector<bool> seen(c.object_count() * c.object_count(), false);
  for (auto const& e : c.morphisms()) seen[e.dom * c.object_count() + e.cod] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Component> connected_components(FinitePrecategory const& c) {
  std::size_t n = c.object_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const& e : c.morphisms()) {
    auto a = find(e.dom), b = find(e.cod);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Component> out;
  std::vector<std::int64_t> slot(n, -1);
  for (Object x = 0; x < n; ++x) {
    auto root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.size());
      out.push_back(Component{empty_category(), {}, {}});
    }
    out[static_cast<std::size_t>(slot[root])].objects.push_back(x);
  }
  std::size_t m = c.morphism_count();
  for (auto& comp : out) {
    std::vector<std::int64_t> new_object(n, -1), new_morphism(m, -1);
    for (std::size_t i = 0; i < comp.objects.size(); ++i)
      new_object[comp.objects[i]] = static_cast<std::int64_t>(i);
    for (Morphism s = 0; s < m; ++s) {
      if (new_object[c.dom(s)] >= 0) {
        new_morphism[s] = static_cast<std::int64_t>(comp.morphisms.size());
        comp.morphisms.push_back(s);
      }
    }
    std::size_t k = comp.morphisms.size();
    std::vector<MorphismEnds> ends;
    for (auto s : comp.morphisms)
      ends.push_back({static_cast<Object>(new_object[c.dom(s)]),
                      static_cast<Object>(new_object[c.cod(s)])});
    std::vector<std::int32_t> comp_table(k * k, FinitePrecategory::kUndefined);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (auto st = c.compose(comp.morphisms[i], comp.morphisms[j]))
          comp_table[i * k + j] = static_cast<std::int32_t>(new_morphism[*st]);
    std::vector<std::optional<Morphism>> ids;
    for (auto x : comp.objects) {
      auto i = c.identity(x);
      ids.push_back(i ? std::optional<Morphism>(static_cast<Morphism>(new_morphism[*i]))
                      : std::nullopt);
    }
    comp.category = CategoryBuilder::make(comp.objects.size(), std::move(ends),
                                          std::move(comp_table), std::move(ids));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

FinitePrecategory connected_groupoid(std::size_t objects, FiniteMagma const& group) {
  auto gs = group_structure(group);
  if (!gs) throw Error(ErrorCode::not_a_group, "vertex table is not a group");
  std::size_t q = group.order();
  std::size_t m = objects * objects * q;
  auto index = [&](std::size_t c, std::size_t g, std::size_t d) {
    return (c * objects + d) * q + g;
  };
  std::vector<MorphismEnds> ends(m);
  std::vector<std::int32_t> comp(m * m, FinitePrecategory::kUndefined);
  for (std::size_t c = 0; c < objects; ++c)
    for (std::size_t d = 0; d < objects; ++d)
      for (std::size_t g = 0; g < q; ++g)
        ends[index(c, g, d)] = {static_cast<Object>(d), static_cast<Object>(c)};
  for (std::size_t c = 0; c < objects; ++c)
    for (std::size_t d = 0; d < objects; ++d)
      for (std::size_t e = 0; e < objects; ++e)
        for (std::size_t g = 0; g < q; ++g)
          for (std::size_t h = 0; h < q; ++h)
            comp[index(c, g, d) * m + index(d, h, e)] = static_cast<std::int32_t>(
                index(c, group.product(static_cast<Element>(g), static_cast<Element>(h)), e));
  std::vector<std::optional<Morphism>> ids(objects);
  for (std::size_t e = 0; e < objects; ++e)
    ids[e] = static_cast<Morphism>(index(e, gs->identity, e));
  return CategoryBuilder::make(objects, std::move(ends), std::move(comp), std::move(ids));
}

FinitePrecategory matrix_groupoid(std::size_t n) {
  return connected_groupoid(n, cyclic_group(1));
}

FinitePrecategory group_as_category(FiniteMagma const& group) {
  return connected_groupoid(1, group);
}

FinitePrecategory monoid_as_category(FiniteMagma const& monoid) {
  std::size_t m = monoid.order();
  std::vector<std::int32_t> comp(monoid.table().begin(), monoid.table().end());
  std::optional<Morphism> unit;
  for (Element e = 0; e < m && !unit; ++e) {
    bool ok = true;
    for (Element a = 0; a < m && ok; ++a)
      ok = monoid.product(e, a) == a && monoid.product(a, e) == a;
    if (ok) unit = e;
  }
  if (!unit) throw Error(ErrorCode::bad_identity, "monoid table has no unit");
  return FinitePrecategory::validate(1, std::vector<MorphismEnds>(m, MorphismEnds{0, 0}),
                                     std::move(comp), {unit});
}

FinitePrecategory product_category(FinitePrecategory const& a, FinitePrecategory const& b,
                                   Budget const& budget) {
  std::size_t am = a.morphism_count(), bm = b.morphism_count();
  std::size_t m = am * bm;
  if (m > kMaxElements || m > budget.max_order * budget.max_order) {
    throw Error(ErrorCode::size_overflow, "product category has " + str(m) + " morphisms");
  }
  std::size_t bo = b.object_count();
  std::vector<MorphismEnds> ends(m);
  for (Morphism s = 0; s < am; ++s)
    for (Morphism t = 0; t < bm; ++t)
      ends[s * bm + t] = {static_cast<Object>(a.dom(s) * bo + b.dom(t)),
                          static_cast<Object>(a.cod(s) * bo + b.cod(t))};
  std::vector<std::int32_t> comp(m * m, FinitePrecategory::kUndefined);
  for (Morphism s = 0; s < am; ++s)
    for (Morphism s2 = 0; s2 < am; ++s2) {
      auto ss = a.compose(s, s2);
      if (!ss) continue;
      for (Morphism t = 0; t < bm; ++t)
        for (Morphism t2 = 0; t2 < bm; ++t2)
          if (auto tt = b.compose(t, t2))
            comp[(s * bm + t) * m + (s2 * bm + t2)] =
                static_cast<std::int32_t>(*ss * bm + *tt);
    }
  std::vector<std::optional<Morphism>> ids(a.object_count() * bo);
  for (Object x = 0; x < a.object_count(); ++x)
    for (Object y = 0; y < bo; ++y)
      if (a.identity(x) && b.identity(y))
        ids[x * bo + y] = static_cast<Morphism>(*a.identity(x) * bm + *b.identity(y));
  return CategoryBuilder::make(a.object_count() * bo, std::move(ends), std::move(comp),
                               std::move(ids));
}

FinitePrecategory disjoint_union(FinitePrecategory const& a, FinitePrecategory const& b) {
  std::size_t am = a.morphism_count(), m = am + b.morphism_count();
  auto ao = static_cast<Object>(a.object_count());
  std::vector<MorphismEnds> ends(a.morphisms().begin(), a.morphisms().end());
  for (auto e : b.morphisms()) ends.push_back({e.dom + ao, e.cod + ao});
  std::vector<std::int32_t> comp(m * m, FinitePrecategory::kUndefined);
  for (Morphism s = 0; s < am; ++s)
    for (Morphism t = 0; t < am; ++t)
      if (auto st = a.compose(s, t)) comp[s * m + t] = static_cast<std::int32_t>(*st);
  for (Morphism s = 0; s < b.morphism_count(); ++s)
    for (Morphism t = 0; t < b.morphism_count(); ++t)
      if (auto st = b.compose(s, t))
        comp[(s + am) * m + t + am] = static_cast<std::int32_t>(*st + am);
  std::vector<std::optional<Morphism>> ids;
  for (Object x = 0; x < a.object_count(); ++x) ids.push_back(a.identity(x));
  for (Object x = 0; x < b.object_count(); ++x) {
    auto i = b.identity(x);
    ids.push_back(i ? std::optional<Morphism>(*i + static_cast<Morphism>(am)) : std::nullopt);
  }
  return CategoryBuilder::make(a.object_count() + b.object_count(), std::move(ends),
                               std::move(comp), std::move(ids));
}

FinitePrecategory empty_category() { return CategoryBuilder::make(0, {}, {}, {}); }

VertexMonoid vertex_monoid(FinitePrecategory const& c, Object e) {
  auto loops = c.hom(e, e);
  if (loops.empty()) throw Error(ErrorCode::index_out_of_range, "no morphisms at object");
  std::vector<std::int64_t> pos(c.morphism_count(), -1);
  for (std::size_t i = 0; i < loops.size(); ++i) pos[loops[i]] = static_cast<std::int64_t>(i);
  std::vector<Element> table;
  for (auto s : loops)
    for (auto t : loops) table.push_back(static_cast<Element>(pos[*c.compose(s, t)]));
  return {FiniteMagma::validate(loops.size(), std::move(table)), loops};
}

FiniteMagma adjoin_zero(FinitePrecategory const& c) {
  std::size_t m = c.morphism_count();
  std::size_t n = m + 1;
  auto zero = static_cast<Element>(m);
  std::vector<Element> table(n * n, zero);
  for (Morphism s = 0; s < m; ++s)
    for (Morphism t = 0; t < m; ++t)
      if (auto st = c.compose(s, t)) table[s * n + t] = *st;
  return FiniteMagma::validate(n, std::move(table), zero);
}

// ---------------------------------------------------------------------------
// Functor search

namespace {

std::vector<std::int32_t> target_table(FinitePrecategory const& c) {
  return {c.composition().begin(), c.composition().end()};
}

std::vector<std::int32_t> source_table(FinitePrecategory const& c) {
  return {c.composition().begin(), c.composition().end()};
}

// Object maps first, pruned whenever a morphism between assigned objects has
// nowhere to go; then the morphism search with hom-set domains.
std::vector<MorphismMap> search_maps(FinitePrecategory const& from,
                                     FinitePrecategory const& to, bool functors,
                                     Budget const& budget) {
  if (from.morphism_count() > kMaxElements || to.morphism_count() > kMaxElements) {
    throw Error(ErrorCode::size_overflow, "too many morphisms for the search");
  }
  NodeCounter counter(budget);
  std::size_t n = from.object_count();
  std::size_t tn = to.object_count();

  std::vector<ElementSet> hom_sets(tn * tn);
  for (Morphism t = 0; t < to.morphism_count(); ++t)
    hom_sets[to.dom(t) * tn + to.cod(t)].insert(t);

  search::HomProblem problem;
  problem.source_size = from.morphism_count();
  problem.source = source_table(from);
  problem.target_size = to.morphism_count();
  problem.target = target_table(to);
  problem.domains.resize(from.morphism_count());

  std::vector<MorphismMap> out;
  std::vector<Object> objects(n, 0);

  auto feasible = [&](std::size_t assigned) {
    for (Morphism s = 0; s < from.morphism_count(); ++s) {
      if (from.dom(s) >= assigned || from.cod(s) >= assigned) continue;
      if (hom_sets[objects[from.dom(s)] * tn + objects[from.cod(s)]].empty()) return false;
    }
    return true;
  };

  auto finish = [&]() {
    for (Morphism s = 0; s < from.morphism_count(); ++s) {
      problem.domains[s] = hom_sets[objects[from.dom(s)] * tn + objects[from.cod(s)]];
      if (functors && from.is_identity(s)) {
        problem.domains[s] = ElementSet{*to.identity(objects[from.dom(s)])};
      }
    }
    search::solve_homs(problem, counter, [&](ElementMap const& m) {
      out.push_back(MorphismMap{objects, m});
    });
  };

  auto assign = [&](auto&& self, std::size_t x) -> void {
    counter.tick();
    if (x == n) {
      finish();
      return;
    }
    for (Object y = 0; y < tn; ++y) {
      objects[x] = y;
      if (feasible(x + 1)) self(self, x + 1);
    }
  };
  assign(assign, 0);
  return out;
}

}  // namespace

std::vector<MorphismMap> enumerate_prefunctors(FinitePrecategory const& from,
                                               FinitePrecategory const& to,
                                               Budget const& budget) {
  return search_maps(from, to, false, budget);
}

std::vector<MorphismMap> enumerate_functors(FinitePrecategory const& from,
                                            FinitePrecategory const& to,
                                            Budget const& budget) {
  if (!from.is_category() || !to.is_category()) {
    throw Error(ErrorCode::not_a_category,
                "functor enumeration needs identities at every object on both sides");
  }
  return search_maps(from, to, true, budget);
}

ReducedPrefunctors prefunctors_via_zero_homs(FinitePrecategory const& from,
                                             FinitePrecategory const& to,
                                             Budget const& budget) {
  auto g = adjoin_zero(from);
  auto h = adjoin_zero(to);
  Budget b = budget;
  b.max_order = std::max(b.max_order, std::max(g.order(), h.order()));
  ReducedPrefunctors result;
  std::size_t n = from.object_count();
  for (auto const& f : enumerate_zero_homs(g, h, b)) {
    std::vector<std::int64_t> objects(n, -1);
    bool consistent = true;
    auto pin = [&](Object x, Object y) {
      if (objects[x] < 0) objects[x] = y;
      else if (objects[x] != static_cast<std::int64_t>(y)) consistent = false;
    };
    for (Morphism s = 0; s < from.morphism_count() && consistent; ++s) {
      pin(from.dom(s), to.dom(f[s]));
      pin(from.cod(s), to.cod(f[s]));
    }
    if (!consistent) {
      result.inconsistent.push_back(f);
      continue;
    }
    MorphismMap base{std::vector<Object>(n, 0), ElementMap(f.begin(), f.end() - 1)};
    std::vector<Object> free;
    for (Object x = 0; x < n; ++x) {
      if (objects[x] < 0) free.push_back(x);
      else base.objects[x] = static_cast<Object>(objects[x]);
    }
    // Objects without morphisms take every target object.
    auto expand = [&](auto&& self, std::size_t k) -> void {
      if (k == free.size()) {
        result.prefunctors.push_back(base);
        return;
      }
      for (Object y = 0; y < to.object_count(); ++y) {
        base.objects[free[k]] = y;
        self(self, k + 1);
      }
    };
    expand(expand, 0);
  }
  std::sort(result.prefunctors.begin(), result.prefunctors.end());
  return result;
}

// ---------------------------------------------------------------------------
// Subprecategories

std::vector<ElementSet> enumerate_subprecategories(FinitePrecategory const& c,
                                                   Budget const& budget) {
  std::size_t m = c.morphism_count();
  if (m > kMaxElements) throw Error(ErrorCode::size_overflow, "too many morphisms");
  std::vector<std::int32_t> product(c.composition().begin(), c.composition().end());
  for (auto& r : product)
    if (r < 0) r = search::kNoConstraint;
  NodeCounter counter(budget);
  return search::closed_subsets(m, product, ElementSet{}, counter);
}

std::vector<PairRelation> enumerate_subprecategories(FinitePrecategory const& from,
                                                     FinitePrecategory const& to,
                                                     Budget const& budget) {
  auto product = product_category(from, to, budget);
  std::vector<PairRelation> out;
  for (auto const& s : enumerate_subprecategories(product, budget))
    out.push_back(PairRelation::from_bits(from.morphism_count(), to.morphism_count(), s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PairRelation> subprecategories_via_zero_submagmas(
    FinitePrecategory const& from, FinitePrecategory const& to, Budget const& budget) {
  auto g = adjoin_zero(from);
  auto h = adjoin_zero(to);
  std::vector<PairRelation> out;
  for (auto const& z : enumerate_zero_submagmas(g, h, ZeroRow::minimal, budget)) {
    PairRelation r(from.morphism_count(), to.morphism_count());
    for (auto [s, t] : z.pairs())
      if (s != *g.zero()) r.insert(s, t);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gradeforge
