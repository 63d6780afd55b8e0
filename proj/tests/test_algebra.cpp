#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace gradeforge;

namespace {

using Parts = std::vector<std::set<std::size_t>>;

Parts parts_of(ElementaryFamily const& w) {
  Parts out;
  for (auto const& p : w.parts) {
    auto m = p.members();
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

std::vector<PairRelation> product_submagmas(FiniteMagma const& g, FiniteMagma const& h) {
  std::vector<PairRelation> out;
  for (auto const& s : enumerate_submagmas(product_magma(g, h)))
    out.push_back(PairRelation::from_bits(g.order(), h.order(), s));
  return out;
}

ElementaryFamily random_family(AlgebraPresentation const& a, FiniteMagma const& target,
                               std::mt19937& rng) {
  ElementaryFamily w{target, std::vector<ElementSet>(target.order())};
  std::bernoulli_distribution coin(0.4);
  for (auto& p : w.parts)
    for (std::size_t b = 0; b < a.basis_size(); ++b)
      if (coin(rng)) p.insert(b);
  return w;
}

// Parts over {id_c, delta, 0} with basis id_a=0 id_b=1 alpha=2 beta=3 gamma=4.
Parts category_parts(std::set<std::size_t> id_c, std::set<std::size_t> delta) {
  return {std::move(id_c), std::move(delta), {}};
}

}  // namespace

TEST_CASE("shape errors") {
  auto g = fixtures::from_letters("abba");
  auto a = AlgebraPresentation::magma_algebra(g);
  CHECK_THROWS_AS(grading_from_relation(a, g, PairRelation(3, 2)), Error);
  ElementaryFamily w{g, {ElementSet{0, 5}, ElementSet{}}};
  CHECK_THROWS_AS(relation_from_filter(a, w), Error);
  CHECK_THROWS_AS(is_filter(a, ElementaryFamily{g, {ElementSet{}}}), Error);
  CHECK_THROWS_AS(AlgebraPresentation::contracted_algebra(g), Error);
  CHECK_THROWS_AS(AlgebraPresentation::magma_algebra(g, 4), std::invalid_argument);
}

TEST_CASE("contracted algebra of the matrix units is the matrix ring") {
  auto a = AlgebraPresentation::contracted_algebra(matrix_unit_zero_magma(2));
  CHECK(a.basis_size() == 4);
  CHECK(a.product(matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)) == matrix_unit(2, 0, 0));
  CHECK(a.product(matrix_unit(2, 0, 1), matrix_unit(2, 0, 1)) == kRingZero);
  CHECK(a.base_part(4).empty());
  // a zero that is not the last element
  auto z = AlgebraPresentation::contracted_algebra(fixtures::magma("order4/z3_with_zero.mag"));
  CHECK(z.base_part(0).empty());
  CHECK(z.base_part(1) == ElementSet{0});
  CHECK(z.product(0, 0) == 0);  // 1 * 1 = 1
}

TEST_CASE("M(F(f)) = f, F(M(W)) = W and monotonicity on order-two pairs") {
  for (auto const& gn : fixtures::order2_names())
    for (auto const& hn : fixtures::order2_names()) {
      auto g = fixtures::from_letters(gn);
      auto h = fixtures::from_letters(hn);
      auto a = AlgebraPresentation::magma_algebra(g);
      auto subs = product_submagmas(g, h);
      std::vector<ElementaryFamily> families;
      for (auto const& f : subs) {
        auto w = grading_from_relation(a, h, f);
        CHECK(relation_from_filter(a, w) == f);
        CHECK(grading_from_relation(a, h, relation_from_filter(a, w)) == w);
        CHECK(is_filter(a, w).holds);
        families.push_back(w);
      }
      for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j) {
          CHECK(subs[i].is_subset_of(subs[j]) == families[i].is_below(families[j]));
        }
    }
}

TEST_CASE("gradings correspond to homomorphisms") {
  for (auto const& gn : fixtures::order2_names())
    for (auto const& hn : fixtures::order2_names()) {
      auto g = fixtures::from_letters(gn);
      auto h = fixtures::from_letters(hn);
      auto a = AlgebraPresentation::magma_algebra(g);
      auto gradings = enumerate_elementary_gradings(a, h, false);
      CHECK(gradings.size() == oracle::homs(g, h).size());
      for (auto const& w : gradings) {
        CHECK(is_grading(a, w).holds);
        CHECK(is_elementary(a, w).holds);
      }
    }
}

TEST_CASE("zero variants on contracted algebras") {
  std::vector<FiniteMagma> zs;
  for (char const* n : {"zero/g1.mag", "zero/g2.mag", "zero/remark_g.mag", "zero/remark_h.mag",
                        "order4/z3_with_zero.mag"})
    zs.push_back(fixtures::magma(n));
  for (auto const& g : zs)
    for (auto const& h : zs) {
      auto a = AlgebraPresentation::contracted_algebra(g);
      auto gradings = enumerate_elementary_gradings(a, h, true);
      CHECK(gradings.size() == oracle::zero_homs(g, h).size());
      for (auto const& w : gradings) CHECK(is_grading(a, w).holds);
      for (auto const& f : enumerate_zero_submagmas(g, h, ZeroRow::full)) {
        auto w = grading_from_relation(a, h, f);
        CHECK(is_filter(a, w).holds);
        CHECK(relation_from_filter(a, w) == f);
      }
      for (auto const& w : enumerate_elementary_filters(a, h, true)) {
        CHECK(is_filter(a, w).holds);
        CHECK(w.parts[*h.zero()].empty());
      }
    }
}

TEST_CASE("the remark's map grades the contracted algebra but not the full one") {
  auto g = fixtures::magma("zero/remark_g.mag");
  auto h = fixtures::magma("zero/remark_h.mag");
  auto f = PairRelation::graph({0, 0, 1}, 2);
  auto contracted = AlgebraPresentation::contracted_algebra(g);
  CHECK(is_grading(contracted, grading_from_relation(contracted, h, f)).holds);
  // with K0 as a basis line, ab = 0 lands outside W_c
  auto full = AlgebraPresentation::magma_algebra(g);
  CHECK_FALSE(is_filter(full, grading_from_relation(full, h, f)).holds);
}

TEST_CASE("set and span verdicts agree on random families") {
  std::mt19937 rng(7);
  std::vector<std::pair<AlgebraPresentation, FiniteMagma>> cases;
  for (auto const& n : {"aaaa", "abba", "abaa", "aabb"})
    for (auto const& m : {"aaab", "abab", "baba"})
      cases.emplace_back(AlgebraPresentation::magma_algebra(fixtures::from_letters(n)),
                         fixtures::from_letters(m));
  auto gamma = fixtures::category("category/gamma.cat");
  cases.emplace_back(AlgebraPresentation::category_algebra(gamma),
                     adjoin_zero(fixtures::category("category/lambda_group.cat")));
  cases.emplace_back(AlgebraPresentation::contracted_algebra(matrix_unit_zero_magma(2)),
                     fixtures::magma("order4/z3_with_zero.mag"));
  for (std::uint32_t p : {2u, 5u, 7u}) {
    for (auto const& [a0, target] : cases) {
      auto a = a0.with_modulus(p);
      for (int trial = 0; trial < 60; ++trial) {
        auto w = random_family(a, target, rng);
        for (auto const& v : verify_all(a, w)) {
          CAPTURE(v.property);
          CHECK(v.agrees());
        }
      }
    }
  }
}

TEST_CASE("verdicts do not depend on the field") {
  auto g = fixtures::category("category/gamma.cat");
  auto l = fixtures::category("category/lambda_idempotent.cat");
  auto a2 = AlgebraPresentation::category_algebra(g, 2);
  auto a5 = AlgebraPresentation::category_algebra(g, 5);
  for (auto const& w : enumerate_elementary_filters(g, l)) {
    auto v2 = verify_all(a2, w);
    auto v5 = verify_all(a5, w);
    for (std::size_t i = 0; i < v2.size(); ++i) {
      CHECK(v2[i].holds == v5[i].holds);
      CHECK(v2[i].span_holds == v5[i].span_holds);
    }
  }
}

TEST_CASE("filters on order-two magma algebras") {
  auto count = [](char const* g, char const* h) {
    auto a = AlgebraPresentation::magma_algebra(fixtures::from_letters(g));
    return enumerate_elementary_filters(a, fixtures::from_letters(h), false).size();
  };
  CHECK(count("aaaa", "aaaa") == 9);
  CHECK(count("abba", "abba") == 6);
  // brute force finds {(a,b),(b,b)} besides the six listed
  CHECK(count("abaa", "aabb") == oracle::product_submagmas(fixtures::from_letters("abaa"),
                                                           fixtures::from_letters("aabb")).size());
  CHECK(count("abaa", "aabb") == 7);
}

TEST_CASE("functor gradings of the two-object example") {
  auto g = fixtures::category("category/gamma.cat");
  auto l = fixtures::category("category/lambda_group.cat");
  std::set<Parts> want{category_parts({0, 1, 2, 3, 4}, {}), category_parts({0, 1, 3}, {2, 4}),
                       category_parts({0, 1, 2}, {3, 4}), category_parts({0, 1, 4}, {2, 3})};
  std::set<Parts> got;
  for (auto const& w : enumerate_elementary_gradings(g, l, CategoryMaps::functors))
    got.insert(parts_of(w));
  CHECK(got == want);
}

TEST_CASE("prefunctor gradings of the two-object example") {
  auto g = fixtures::category("category/gamma.cat");
  auto l = fixtures::category("category/lambda_idempotent.cat");
  // the eight part-sets as listed
  std::vector<Parts> listed{
      category_parts({0, 1, 2, 3, 4}, {}), category_parts({1, 3}, {0, 2, 4}),
      category_parts({0, 1, 2}, {3, 4}),   category_parts({0, 2, 3, 4}, {1}),
      category_parts({1}, {0, 2, 3, 4}),   category_parts({3}, {0, 1, 2, 4}),
      category_parts({0, 2}, {1, 3, 4}),   category_parts({}, {0, 1, 2, 3, 4})};
  std::set<Parts> got;
  for (auto const& w : enumerate_elementary_gradings(g, l, CategoryMaps::prefunctors))
    got.insert(parts_of(w));
  CHECK(got.size() == 5);
  auto a = AlgebraPresentation::category_algebra(g);
  for (auto const& parts : listed) {
    // a listed grading is produced exactly when its map preserves composition
    MorphismMap f{{0, 0}, std::vector<Morphism>(5)};
    for (Morphism s = 0; s < 5; ++s) f.morphisms[s] = parts[1].count(s) ? 1 : 0;
    CHECK(got.count(parts) == (is_prefunctor(g, l, f) ? 1u : 0u));
    ElementaryFamily w{adjoin_zero(l), {}};
    for (auto const& p : parts) w.parts.push_back(ElementSet::from_indices({p.begin(), p.end()}));
    CHECK(is_filter(a, w).holds == is_prefunctor(g, l, f));
  }
}

TEST_CASE("filter fixtures of the two-object examples") {
  auto g = fixtures::category("category/gamma.cat");
  auto a = AlgebraPresentation::category_algebra(g);
  struct Case {
    char const* target;
    std::vector<std::pair<Morphism, Morphism>> pairs;
    Parts listed;     // the filter as printed
    Parts image;      // F of the printed morphism set
  };
  // (s, t): s in id_a id_b alpha beta gamma, t in id_c delta
  std::vector<Case> cases{
      {"lambda_group", {{0, 0}, {3, 0}, {3, 1}, {1, 0}, {1, 1}},
       category_parts({0, 1, 3}, {1, 3}), category_parts({0, 1, 3}, {1, 3})},
      {"lambda_group",
       {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {1, 0}},
       category_parts({0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}),
       category_parts({0, 1, 2, 3, 4}, {0, 2, 3, 4})},
      {"lambda_idempotent", {{0, 0}, {3, 0}, {3, 1}, {1, 1}},
       category_parts({0, 3}, {1, 3}), category_parts({0, 3}, {1, 3})},
      {"lambda_idempotent",
       {{0, 0}, {0, 1}, {2, 0}, {2, 1}, {3, 1}, {4, 1}, {1, 0}},
       category_parts({0, 1, 2}, {0, 1, 2, 3, 4}),
       category_parts({0, 1, 2}, {0, 2, 3, 4})}};
  for (auto const& c : cases) {
    CAPTURE(c.target);
    auto l = fixtures::category(std::string("category/") + c.target + ".cat");
    auto target = adjoin_zero(l);
    PairRelation r(5, 2);
    for (auto [s, t] : c.pairs) r.insert(s, t);
    auto subs = enumerate_subprecategories(g, l);
    CHECK(std::find(subs.begin(), subs.end(), r) != subs.end());
    auto image = grading_from_relation(a, target, relation_of_subprecategory(g, l, r));
    CHECK(parts_of(image) == c.image);

    // The printed filter is itself an elementary filter in the enumeration.
    ElementaryFamily listed{target, {}};
    for (auto const& p : c.listed) listed.parts.push_back(ElementSet::from_indices({p.begin(), p.end()}));
    auto all = enumerate_elementary_filters(g, l);
    CHECK(std::find(all.begin(), all.end(), listed) != all.end());
    CHECK(is_filter(a, listed).holds);
    CHECK(grading_from_relation(a, target, relation_from_filter(a, listed)) == listed);
    if (c.listed != c.image) {
      // it comes from the printed set with (id_b, delta) added
      PairRelation wider = r;
      wider.insert(1, 1);
      CHECK(relation_from_filter(a, listed) == relation_of_subprecategory(g, l, wider));
    }
  }
}

TEST_CASE("on thin connected categories nonzero gradings are the strong ones") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto from = matrix_groupoid(m);
      auto to = matrix_groupoid(n);
      auto a = AlgebraPresentation::category_algebra(from);
      for (auto const& w : enumerate_elementary_gradings(from, to, CategoryMaps::functors))
        CHECK(is_nonzero(a, w).holds == is_strong(a, w).holds);
    }
}
