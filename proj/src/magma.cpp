#include "gradeforge/magma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gradeforge/search.hpp"

namespace gradeforge {

// ---------------------------------------------------------------------------
// FiniteMagma

FiniteMagma FiniteMagma::validate(std::size_t order, std::vector<Element> table,
                                  std::optional<Element> zero) {
  if (order == 0) throw Error(ErrorCode::index_out_of_range, "order must be positive");
  if (table.size() != order * order) {
    throw Error(ErrorCode::index_out_of_range,
                "table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(order * order));
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= order) {
      throw Error(ErrorCode::index_out_of_range,
                  "entry " + std::to_string(table[k]) + " at (" +
                      std::to_string(k / order) + "," + std::to_string(k % order) +
                      ") is not below " + std::to_string(order));
    }
  }
  if (zero) {
    if (*zero >= order) {
      throw Error(ErrorCode::index_out_of_range,
                  "zero " + std::to_string(*zero) + " is not an element");
    }
    for (std::size_t g = 0; g < order; ++g) {
      if (table[*zero * order + g] != *zero || table[g * order + *zero] != *zero) {
        throw Error(ErrorCode::not_absorbing,
                    "element " + std::to_string(*zero) + " does not absorb " +
                        std::to_string(g));
      }
    }
  }
  return FiniteMagma(order, std::move(table), zero);
}

FiniteMagma FiniteMagma::validate(std::vector<std::vector<Element>> const& rows,
                                  std::optional<Element> zero) {
  std::vector<Element> flat;
  for (auto const& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::index_out_of_range, "table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate(rows.size(), std::move(flat), zero);
}

FiniteMagma FiniteMagma::with_zero(std::optional<Element> zero) const {
  return validate(_order, _table, zero);
}

// ---------------------------------------------------------------------------
// PairRelation

PairRelation::PairRelation(std::size_t left_order, std::size_t right_order)
    : _left(left_order), _right(right_order) {
  if (left_order * right_order > kMaxElements) {
    throw Error(ErrorCode::size_overflow,
                "relation carrier " + std::to_string(left_order) + "x" +
                    std::to_string(right_order) + " exceeds " +
                    std::to_string(kMaxElements) + " pairs");
  }
}

ElementSet PairRelation::preimage(Element h) const {
  ElementSet out;
  for (Element g = 0; g < _left; ++g)
    if (contains(g, h)) out.insert(g);
  return out;
}

std::vector<std::pair<Element, Element>> PairRelation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  _pairs.for_each([&](std::size_t k) {
    out.emplace_back(static_cast<Element>(k / _right), static_cast<Element>(k % _right));
  });
  return out;
}

PairRelation PairRelation::from_bits(std::size_t left_order, std::size_t right_order,
                                     ElementSet const& bits) {
  PairRelation r(left_order, right_order);
  r._pairs = bits & ElementSet::range(left_order * right_order);
  return r;
}

PairRelation PairRelation::graph(ElementMap const& map, std::size_t right_order) {
  PairRelation r(map.size(), right_order);
  for (Element g = 0; g < map.size(); ++g) r.insert(g, map[g]);
  return r;
}

PairRelation PairRelation::full(std::size_t left_order, std::size_t right_order) {
  return from_bits(left_order, right_order, ElementSet::range(left_order * right_order));
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

void check_order(std::size_t order, Budget const& budget, char const* what) {
  if (order > budget.max_order || order > kMaxElements) {
    throw Error(ErrorCode::size_overflow,
                std::string(what) + " of order " + std::to_string(order) +
                    " exceeds the budget of " +
                    std::to_string(std::min(budget.max_order, kMaxElements)));
  }
}

std::vector<std::int32_t> signed_table(FiniteMagma const& m) {
  return {m.table().begin(), m.table().end()};
}

}  // namespace

FiniteMagma product_magma(FiniteMagma const& g, FiniteMagma const& h,
                          Budget const& budget) {
  std::size_t n = g.order() * h.order();
  check_order(n, budget, "product magma");
  std::vector<Element> table(n * n);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < h.order(); ++b)
      for (Element c = 0; c < g.order(); ++c)
        for (Element d = 0; d < h.order(); ++d) {
          std::size_t x = a * h.order() + b;
          std::size_t y = c * h.order() + d;
          table[x * n + y] =
              static_cast<Element>(g.product(a, c) * h.order() + h.product(b, d));
        }
  return FiniteMagma::validate(n, std::move(table));
}

ElementSet closure(FiniteMagma const& g, ElementSet const& seed) {
  return *search::close(g.order(), signed_table(g), seed);
}

std::vector<ElementSet> enumerate_submagmas(FiniteMagma const& g, Budget const& budget) {
  check_order(g.order(), budget, "magma");
  NodeCounter counter(budget);
  return search::closed_subsets(g.order(), signed_table(g), ElementSet{}, counter);
}

std::vector<PairRelation> enumerate_zero_submagmas(FiniteMagma const& g,
                                                   FiniteMagma const& h, ZeroRow row,
                                                   Budget const& budget) {
  if (!g.has_zero() || !h.has_zero()) {
    throw Error(ErrorCode::missing_zero, "zero submagmas need zeros on both sides");
  }
  Element gz = *g.zero();
  Element hz = *h.zero();
  std::size_t gn = g.order();
  std::size_t hn = h.order();
  PairRelation shape(gn, hn);  // size check

  // The search runs over pairs with both components nonzero. A product whose
  // G-component vanishes is unconstrained; one whose H-component vanishes
  // would put a nonzero g over 0_H and is forbidden.
  std::vector<std::pair<Element, Element>> core;
  for (Element a = 0; a < gn; ++a)
    for (Element b = 0; b < hn; ++b)
      if (a != gz && b != hz) core.emplace_back(a, b);
  std::vector<std::int32_t> index(gn * hn, -1);
  for (std::size_t k = 0; k < core.size(); ++k)
    index[core[k].first * hn + core[k].second] = static_cast<std::int32_t>(k);

  std::vector<std::int32_t> product(core.size() * core.size());
  for (std::size_t x = 0; x < core.size(); ++x)
    for (std::size_t y = 0; y < core.size(); ++y) {
      Element gg = g.product(core[x].first, core[y].first);
      Element hh = h.product(core[x].second, core[y].second);
      std::int32_t& cell = product[x * core.size() + y];
      if (gg == gz)
        cell = search::kNoConstraint;
      else if (hh == hz)
        cell = search::kPoison;
      else
        cell = index[gg * hn + hh];
    }

  NodeCounter counter(budget);
  auto cores = search::closed_subsets(core.size(), product, ElementSet{}, counter);

  std::vector<Element> optional_row;
  if (row == ZeroRow::any || row == ZeroRow::full) {
    for (Element b = 0; b < hn; ++b)
      if (b != hz) optional_row.push_back(b);
  }
  std::size_t variants = row == ZeroRow::any ? std::size_t{1} << optional_row.size() : 1;
  if (row == ZeroRow::any && optional_row.size() >= 20) {
    throw Error(ErrorCode::size_overflow, "too many zero-row variants");
  }

  std::vector<PairRelation> out;
  for (auto const& c : cores) {
    PairRelation base(gn, hn);
    base.insert(gz, hz);
    c.for_each([&](std::size_t k) { base.insert(core[k].first, core[k].second); });
    for (std::size_t mask = 0; mask < variants; ++mask) {
      counter.tick();
      PairRelation r = base;
      for (std::size_t i = 0; i < optional_row.size(); ++i) {
        if (row == ZeroRow::full || ((mask >> i) & 1u)) r.insert(gz, optional_row[i]);
      }
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

namespace {

std::vector<ElementMap> run_homs(search::HomProblem const& problem, Budget const& budget) {
  NodeCounter counter(budget);
  std::vector<ElementMap> out;
  search::solve_homs(problem, counter, [&](ElementMap const& m) { out.push_back(m); });
  return out;
}

}  // namespace

std::vector<ElementMap> enumerate_homs(FiniteMagma const& g, FiniteMagma const& h,
                                       Budget const& budget) {
  check_order(g.order(), budget, "source magma");
  check_order(h.order(), budget, "target magma");
  search::HomProblem p;
  p.source_size = g.order();
  p.source = signed_table(g);
  p.target_size = h.order();
  p.target = signed_table(h);
  p.domains.assign(g.order(), ElementSet::range(h.order()));
  return run_homs(p, budget);
}

std::vector<ElementMap> enumerate_zero_homs(FiniteMagma const& g, FiniteMagma const& h,
                                            Budget const& budget) {
  if (!g.has_zero() || !h.has_zero()) {
    throw Error(ErrorCode::missing_zero, "zero homomorphisms need zeros on both sides");
  }
  check_order(g.order(), budget, "source magma");
  check_order(h.order(), budget, "target magma");
  Element gz = *g.zero();
  Element hz = *h.zero();
  search::HomProblem p;
  p.source_size = g.order();
  p.source = signed_table(g);
  for (auto& r : p.source)
    if (static_cast<Element>(r) == gz) r = search::kNoConstraint;
  p.target_size = h.order();
  p.target = signed_table(h);
  ElementSet nonzero = ElementSet::range(h.order());
  nonzero.erase(hz);
  p.domains.assign(g.order(), nonzero);
  p.domains[gz] = ElementSet{hz};
  return run_homs(p, budget);
}

bool is_hom(FiniteMagma const& g, FiniteMagma const& h, ElementMap const& f) {
  if (f.size() != g.order()) return false;
  for (Element x : f)
    if (x >= h.order()) return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (f[g.product(a, b)] != h.product(f[a], f[b])) return false;
  return true;
}

bool is_zero_hom(FiniteMagma const& g, FiniteMagma const& h, ElementMap const& f) {
  if (!g.has_zero() || !h.has_zero() || f.size() != g.order()) return false;
  for (Element a = 0; a < g.order(); ++a) {
    if (f[a] >= h.order()) return false;
    if ((f[a] == *h.zero()) != (a == *g.zero())) return false;
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      Element ab = g.product(a, b);
      if (ab != *g.zero() && f[ab] != h.product(f[a], f[b])) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism

FiniteMagma relabel(FiniteMagma const& g, ElementMap const& sigma) {
  std::size_t n = g.order();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[sigma[a] * n + sigma[b]] = sigma[g.product(a, b)];
  std::optional<Element> zero;
  if (g.zero()) zero = sigma[*g.zero()];
  return FiniteMagma::validate(n, std::move(table), zero);
}

namespace {

// Compares the table relabelled by the inverse of `order_` (new element i is
// old element order_[i]) against `best`, stopping at the first difference.
// Returns <0, 0, >0.
int compare_relabelled(FiniteMagma const& g, std::vector<Element> const& old_of,
                       std::vector<Element> const& new_of,
                       std::vector<Element> const& best) {
  std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v = new_of[g.product(old_of[i], old_of[j])];
      Element w = best[i * n + j];
      if (v != w) return v < w ? -1 : 1;
    }
  return 0;
}

// True if some relabelling gives a strictly smaller table.
bool has_smaller_relabelling(FiniteMagma const& g) {
  std::size_t n = g.order();
  std::vector<Element> old_of(n), new_of(n);
  std::iota(old_of.begin(), old_of.end(), Element{0});
  std::vector<Element> best(g.table().begin(), g.table().end());
  while (std::next_permutation(old_of.begin(), old_of.end())) {
    for (std::size_t i = 0; i < n; ++i) new_of[old_of[i]] = static_cast<Element>(i);
    if (compare_relabelled(g, old_of, new_of, best) < 0) return true;
  }
  return false;
}

}  // namespace

FiniteMagma canonical_form(FiniteMagma const& g) {
  std::size_t n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::size_overflow,
                "canonical form scans all permutations; order " + std::to_string(n) +
                    " exceeds " + std::to_string(kMaxCanonicalOrder));
  }
  std::vector<Element> old_of(n), new_of(n);
  std::iota(old_of.begin(), old_of.end(), Element{0});
  std::vector<Element> best(g.table().begin(), g.table().end());
  ElementMap best_sigma(old_of);
  do {
    for (std::size_t i = 0; i < n; ++i) new_of[old_of[i]] = static_cast<Element>(i);
    if (compare_relabelled(g, old_of, new_of, best) < 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          best[i * n + j] = new_of[g.product(old_of[i], old_of[j])];
      best_sigma = new_of;
    }
  } while (std::next_permutation(old_of.begin(), old_of.end()));
  // An absorbing element is unique, so every minimising relabelling sends
  // the zero to the same place.
  return relabel(g, best_sigma);
}

bool are_isomorphic(FiniteMagma const& g, FiniteMagma const& h) {
  if (g.order() != h.order() || g.has_zero() != h.has_zero()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<FiniteMagma> census(std::size_t order, Budget const& budget) {
  if (order == 0) throw Error(ErrorCode::index_out_of_range, "order must be positive");
  if (order > budget.max_census_order || order > kMaxCanonicalOrder) {
    throw Error(ErrorCode::size_overflow,
                "census of order " + std::to_string(order) + " exceeds the budget of " +
                    std::to_string(budget.max_census_order));
  }
  std::size_t cells = order * order;
  std::vector<Element> table(cells, 0);
  std::vector<FiniteMagma> out;
  NodeCounter counter(budget);
  // Odometer over all tables in lexicographic order; keep those that are
  // their own canonical form.
  for (;;) {
    counter.tick();
    auto m = FiniteMagma::validate(order, table);
    if (!has_smaller_relabelling(m)) out.push_back(std::move(m));
    std::size_t k = cells;
    while (k > 0) {
      --k;
      if (++table[k] < order) break;
      table[k] = 0;
      if (k == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Named magmas

FiniteMagma matrix_unit_zero_magma(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::index_out_of_range, "n must be positive");
  if (n * n + 1 > kMaxElements) {
    throw Error(ErrorCode::size_overflow, "matrix-unit magma too large");
  }
  std::size_t order = n * n + 1;
  auto zero = static_cast<Element>(n * n);
  std::vector<Element> table(order * order, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        table[matrix_unit(n, i, j) * order + matrix_unit(n, j, l)] = matrix_unit(n, i, l);
  return FiniteMagma::validate(order, std::move(table), zero);
}

FiniteMagma cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::index_out_of_range, "n must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteMagma::validate(n, std::move(table));
}

FiniteMagma abelian_group(std::vector<std::size_t> const& cyclic_orders) {
  auto g = cyclic_group(1);
  Budget unlimited;
  unlimited.max_order = kMaxElements;
  for (auto n : cyclic_orders) g = product_magma(g, cyclic_group(n), unlimited);
  return g;
}

FiniteMagma adjoin_absorbing_zero(FiniteMagma const& g) {
  std::size_t n = g.order() + 1;
  auto zero = static_cast<Element>(g.order());
  std::vector<Element> table(n * n, zero);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) table[a * n + b] = g.product(a, b);
  return FiniteMagma::validate(n, std::move(table), zero);
}

std::optional<GroupStructure> group_structure(FiniteMagma const& g) {
  std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c)))
          return std::nullopt;
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool unit = true;
    for (Element a = 0; a < n && unit; ++a)
      unit = g.product(e, a) == a && g.product(a, e) == a;
    if (unit) identity = e;
  }
  if (!identity) return std::nullopt;
  GroupStructure s{*identity, ElementMap(n)};
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (g.product(a, b) == *identity && g.product(b, a) == *identity) {
        s.inverse[a] = b;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return s;
}

}  // namespace gradeforge
