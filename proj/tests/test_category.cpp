#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gradeforge;

namespace {

ErrorCode code_of(std::function<void()> const& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::parse_error;
}

// One object and one idempotent morphism, with no identity.
FinitePrecategory idempotent_precategory() {
  return FinitePrecategory::validate(1, {{0, 0}}, {0}, {std::nullopt});
}

std::vector<std::pair<std::string, FinitePrecategory>> small_categories() {
  std::vector<std::pair<std::string, FinitePrecategory>> out;
  for (char const* n : {"gamma", "lambda_group", "lambda_idempotent", "thin2", "z3"})
    out.emplace_back(n, fixtures::category(std::string("category/") + n + ".cat"));
  out.emplace_back("idempotent", idempotent_precategory());
  out.emplace_back("thin2+z2", disjoint_union(matrix_groupoid(2), group_as_category(cyclic_group(2))));
  return out;
}

std::vector<std::pair<oracle::Map, oracle::Map>> as_pairs(std::vector<MorphismMap> const& maps) {
  std::vector<std::pair<oracle::Map, oracle::Map>> out;
  for (auto const& m : maps) out.emplace_back(m.objects, m.morphisms);
  return out;
}

double search_space(FinitePrecategory const& c, FinitePrecategory const& d) {
  return std::pow(double(d.morphism_count()), double(c.morphism_count())) *
         std::pow(double(d.object_count()), double(c.object_count()));
}

}  // namespace

TEST_CASE("validation") {
  // composite defined on a non-composable pair
  CHECK(code_of([] {
          FinitePrecategory::validate(2, {{0, 0}, {1, 1}}, {0, 0, -1, 1}, {0, 1});
        }) == ErrorCode::bad_composition);
  // composite missing on a composable pair
  CHECK(code_of([] {
          FinitePrecategory::validate(2, {{0, 0}, {1, 1}}, {0, -1, -1, -1}, {0, 1});
        }) == ErrorCode::bad_composition);
  // composite with the wrong ends
  CHECK(code_of([] {
          FinitePrecategory::validate(2, {{0, 1}, {1, 1}}, {-1, 1, -1, 1}, {std::nullopt, 1});
        }) == ErrorCode::bad_composition);
  // the non-associative magma 'baaa' on one object
  CHECK(code_of([] {
          FinitePrecategory::validate(1, {{0, 0}, {0, 0}}, {1, 0, 0, 0}, {std::nullopt});
        }) == ErrorCode::not_associative);
  // an identity that is not neutral
  CHECK(code_of([] {
          FinitePrecategory::validate(1, {{0, 0}, {0, 0}}, {0, 0, 0, 0}, {1});
        }) == ErrorCode::bad_identity);
  CHECK(code_of([] { FinitePrecategory::validate(1, {{0, 3}}, {-1}, {std::nullopt}); }) ==
        ErrorCode::index_out_of_range);
}

TEST_CASE("the two-object example category") {
  auto g = fixtures::category("category/gamma.cat");
  CHECK(g.is_category());
  std::size_t composable = 0;
  for (Morphism s = 0; s < 5; ++s)
    for (Morphism t = 0; t < 5; ++t) composable += g.compose(s, t).has_value();
  CHECK(composable == 11);
  CHECK(*g.compose(2, 2) == 0);  // alpha^2 = id_a
  CHECK(*g.compose(3, 2) == 4);  // beta alpha = gamma
  CHECK(*g.compose(4, 2) == 3);  // gamma alpha = beta
  CHECK_FALSE(is_groupoid(g));
  CHECK_FALSE(is_thin(g));
  CHECK_FALSE(is_connected(g));
  CHECK(g.hom(0, 1) == std::vector<Morphism>{3, 4});
  CHECK(connected_components(g).size() == 1);
}

TEST_CASE("constructions") {
  CHECK(fixtures::category("category/thin2.cat") == matrix_groupoid(2));
  CHECK(fixtures::category("category/thin3.cat") == matrix_groupoid(3));
  CHECK(fixtures::category("category/z2_on_2.cat") == connected_groupoid(2, cyclic_group(2)));
  CHECK(fixtures::category("category/lambda_group.cat") == group_as_category(cyclic_group(2)));
  CHECK(fixtures::category("category/lambda_idempotent.cat") ==
        monoid_as_category(fixtures::from_letters("abbb")));
  CHECK(code_of([] { group_as_category(fixtures::from_letters("aaaa")); }) == ErrorCode::not_a_group);
  CHECK(code_of([] { monoid_as_category(fixtures::from_letters("aaaa")); }) == ErrorCode::bad_identity);

  for (std::size_t n = 1; n <= 3; ++n) {
    auto m = matrix_groupoid(n);
    CHECK(is_thin(m));
    CHECK(is_connected(m));
    CHECK(is_groupoid(m));
    CHECK(adjoin_zero(m) == matrix_unit_zero_magma(n));
  }
  auto g = connected_groupoid(3, abelian_group({2, 2}));
  CHECK(g.morphism_count() == 36);
  CHECK(is_groupoid(g));
  CHECK(is_connected(g));
  CHECK_FALSE(is_thin(g));
  auto v = vertex_monoid(g, 1);
  CHECK(are_isomorphic(v.monoid, abelian_group({2, 2})));
}

TEST_CASE("components of a disjoint union") {
  auto a = matrix_groupoid(2);
  auto b = group_as_category(cyclic_group(3));
  auto u = disjoint_union(a, b);
  CHECK_FALSE(is_connected(u));
  CHECK(is_groupoid(u));
  auto parts = connected_components(u);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].category == a);
  CHECK(parts[1].category == b);
  CHECK(parts[0].morphisms.size() + parts[1].morphisms.size() == u.morphism_count());
  CHECK(connected_components(empty_category()).empty());
}

TEST_CASE("prefunctors and functors agree with the brute-force oracle") {
  auto cats = small_categories();
  for (auto const& [an, a] : cats)
    for (auto const& [bn, b] : cats) {
      if (search_space(a, b) > 2e6) continue;
      CAPTURE(an);
      CAPTURE(bn);
      auto pre = enumerate_prefunctors(a, b);
      CHECK(as_pairs(pre) == oracle::prefunctors(a, b));
      for (auto const& f : pre) CHECK(is_prefunctor(a, b, f));
      if (a.is_category() && b.is_category()) {
        auto fun = enumerate_functors(a, b);
        CHECK(as_pairs(fun) == oracle::prefunctors(a, b, true));
        for (auto const& f : fun) CHECK(is_functor(a, b, f));
      } else {
        CHECK(code_of([&] { enumerate_functors(a, b); }) == ErrorCode::not_a_category);
      }
    }
}

TEST_CASE("worked example functor and prefunctor sets") {
  auto g = fixtures::category("category/gamma.cat");
  auto group = fixtures::category("category/lambda_group.cat");
  auto idem = fixtures::category("category/lambda_idempotent.cat");
  // morphisms id_a id_b alpha beta gamma, images in {id_c = 0, delta = 1}
  std::set<std::vector<Morphism>> want{
      {0, 0, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 1, 1, 0}};
  std::set<std::vector<Morphism>> got;
  for (auto const& f : enumerate_functors(g, group)) got.insert(f.morphisms);
  CHECK(got == want);
  CHECK(enumerate_prefunctors(g, idem).size() == oracle::prefunctors(g, idem).size());
  CHECK(enumerate_prefunctors(g, idem).size() == 5);
}

TEST_CASE("functors compose") {
  auto g = fixtures::category("category/gamma.cat");
  auto t = matrix_groupoid(2);
  auto z = group_as_category(cyclic_group(2));
  for (auto const& f1 : enumerate_functors(g, t))
    for (auto const& f2 : enumerate_functors(t, z)) CHECK(is_functor(g, z, compose_maps(f2, f1)));
}

TEST_CASE("hom counts factor over source components") {
  auto a = matrix_groupoid(2);
  auto b = group_as_category(cyclic_group(2));
  auto target = connected_groupoid(2, cyclic_group(2));
  auto u = disjoint_union(a, b);
  CHECK(enumerate_functors(u, target).size() ==
        enumerate_functors(a, target).size() * enumerate_functors(b, target).size());
  CHECK(enumerate_functors(empty_category(), target).size() == 1);
  CHECK(enumerate_functors(a, empty_category()).empty());
}

TEST_CASE("prefunctors recovered from zero homomorphisms") {
  auto cats = small_categories();
  for (auto const& [an, a] : cats)
    for (auto const& [bn, b] : cats) {
      if (search_space(a, b) > 2e6) continue;
      CAPTURE(an);
      CAPTURE(bn);
      auto reduced = prefunctors_via_zero_homs(a, b);
      auto direct = enumerate_prefunctors(a, b);
      CHECK(reduced.prefunctors == direct);
    }
}

TEST_CASE("subprecategories agree with exhaustive subset testing") {
  for (auto const& [name, c] : small_categories()) {
    CAPTURE(name);
    std::vector<std::uint64_t> got;
    for (auto const& s : enumerate_subprecategories(c)) got.push_back(mask_of(s));
    CHECK(got == oracle::subprecategories(c));
  }
  auto product = product_category(fixtures::category("category/gamma.cat"),
                                  fixtures::category("category/lambda_group.cat"));
  CHECK(enumerate_subprecategories(product).size() == oracle::subprecategories(product).size());
}

TEST_CASE("subprecategories through zero submagmas") {
  auto g = fixtures::category("category/gamma.cat");
  for (char const* n : {"lambda_group", "lambda_idempotent", "z3"}) {
    auto l = fixtures::category(std::string("category/") + n + ".cat");
    CHECK(subprecategories_via_zero_submagmas(g, l) == enumerate_subprecategories(g, l));
  }
  // With two target objects only the pairs that keep composable pairs
  // composable survive the reduction.
  auto t = matrix_groupoid(2);
  auto direct = enumerate_subprecategories(g, t);
  auto reduced = subprecategories_via_zero_submagmas(g, t);
  std::vector<PairRelation> respecting;
  for (auto const& r : direct)
    if (respects_target_composition(g, t, r)) respecting.push_back(r);
  CHECK(reduced == respecting);
  CHECK(reduced.size() < direct.size());
}
