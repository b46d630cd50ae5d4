#include "doctest.h"

#include <set>

#include "moddeg/lex_builder.hpp"
#include "moddeg/saturation_chain.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace moddeg;
using fixtures::mono;

namespace {

/// Every degree piece of L (up to max generator degree + n) must be the top
/// lex segment of its size.
void check_segment_property(const MonomialSubmodule& L) {
  long long top = L.max_generator_degree() + L.nvars();
  long long lo = L.shape().min_twist();
  for (long long d = lo; d <= lo + top; ++d) {
    auto standard = standard_monomials_desc(L, d);
    if (standard.empty()) continue;
    // Non-members must occupy exactly the bottom lex positions.
    CHECK(lex_rank_from_bottom_in_F(standard.front(), d, L.shape()) ==
          Int(standard.size()));
  }
}

}  // namespace

TEST_CASE("lex_segment basics in K[x,y]") {
  RingContext ring = RingContext::make({"x", "y"});
  FreeModuleShape shape = FreeModuleShape::ideal();
  auto seg = lex_segment(ring, shape, 2, 2);
  REQUIRE(seg.size() == 2);
  CHECK(seg[0].mono == mono({2, 0}));
  CHECK(seg[1].mono == mono({1, 1}));
  CHECK(lex_segment(ring, shape, 2, 0).empty());
  CHECK(lex_segment(ring, shape, 2, 3).size() == 3);
  CHECK_THROWS_AS(lex_segment(ring, shape, 2, 4), Error);
}

TEST_CASE("lex_segment is component-major with twists") {
  RingContext ring = RingContext::make({"x", "y"});
  FreeModuleShape shape = FreeModuleShape::make({0, 1});
  // Degree 2: e1 carries the quadrics, e2 the linear forms; e1 first.
  auto seg = lex_segment(ring, shape, 2, 4);
  REQUIRE(seg.size() == 4);
  CHECK(seg[0] == FMonomial{mono({2, 0}), 0});
  CHECK(seg[2] == FMonomial{mono({0, 2}), 0});
  CHECK(seg[3] == FMonomial{mono({1, 0}), 1});
}

TEST_CASE("lex_module fixtures") {
  SUBCASE("already lex: (x^2, xy)") {
    auto U = MonomialSubmodule::ideal(RingContext::make({"x", "y"}),
                                      {mono({2, 0}), mono({1, 1})});
    CHECK(lex_module(U) == U);
  }
  SUBCASE("(y^2) -> (x^2)") {
    auto U = MonomialSubmodule::ideal(RingContext::make({"x", "y"}),
                                      {mono({0, 2})});
    CHECK(lex_module(U) ==
          MonomialSubmodule::ideal(RingContext::make({"x", "y"}),
                                   {mono({2, 0})}));
  }
  SUBCASE("gin fixture: I^lex and its saturation") {
    auto L = lex_module(fixtures::gin_curve(2));
    auto expected = MonomialSubmodule::ideal(
        fixtures::xyzt(),
        {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({1, 0, 2, 0}),
         mono({1, 0, 1, 1}), mono({1, 0, 0, 3}), mono({0, 4, 0, 0}),
         mono({0, 3, 2, 0})});
    CHECK(L == expected);
    CHECK(saturate_lex(L) == fixtures::lex_saturation_a2());
  }
  SUBCASE("a = 5: saturation of I^lex is (x, y^4, y^3 z^5)") {
    auto L = lex_module(fixtures::gin_curve(5));
    CHECK(saturate_lex(L) ==
          MonomialSubmodule::ideal(fixtures::xyzt(),
                                   {mono({1, 0, 0, 0}), mono({0, 4, 0, 0}),
                                    mono({0, 3, 5, 0})}));
    CHECK(saturation_chain(L).lambdas() ==
          std::vector<Int>{10, 5, 3, 0, 0});
  }
}

TEST_CASE("lex_module invariants") {
  std::mt19937_64 rng(808);
  for (int it = 0; it < 12; ++it) {
    auto U = oracle::random_borel_ideal(rng, 4, 5);
    auto L = lex_module(U);
    CHECK(hilbert_series(L) == hilbert_series(U));  // exact identity
    CHECK(L.is_borel_type());
    CHECK(lex_module(L) == L);  // idempotent
    check_segment_property(L);
  }
}

TEST_CASE("lex_module on modules with twists") {
  RingContext ring = RingContext::make({"x", "y"});
  FreeModuleShape shape = FreeModuleShape::make({0, 1});
  auto U = MonomialSubmodule::make(
      ring, shape, {{mono({0, 2}), 0}, {mono({1, 0}), 1}});
  auto L = lex_module(U);
  CHECK(hilbert_series(L) == hilbert_series(U));
  CHECK(L.is_borel_type());
  check_segment_property(L);
  CHECK(lex_module(L) == L);
}

TEST_CASE("lex_module zero and full edge cases") {
  auto Z = MonomialSubmodule::ideal(RingContext::standard(3), {});
  CHECK(lex_module(Z).is_zero_module());
  auto F = MonomialSubmodule::full(RingContext::standard(2),
                                   FreeModuleShape::make({0, 0}));
  CHECK(lex_module(F) == F);
}

TEST_CASE("degree cap aborts instead of truncating") {
  CHECK_THROWS_WITH_AS(lex_module(fixtures::gin_curve(2), 2),
                       doctest::Contains("cap"), Error);
}

TEST_CASE("multiplying a lex segment by S_1 gives a lex segment") {
  // Exhaustive for n <= 4, degrees <= 5, every segment size.
  for (int n = 1; n <= 4; ++n) {
    RingContext ring = RingContext::standard(n);
    FreeModuleShape shape = FreeModuleShape::ideal();
    for (long long d = 0; d <= 5; ++d) {
      long long total = to_ll(monomial_count(n, d));
      for (long long s = 0; s <= total; ++s) {
        auto seg = lex_segment(ring, shape, d, s);
        std::set<Monomial> shadow;
        for (const auto& m : seg)
          for (int v = 0; v < n; ++v)
            shadow.insert(m.mono.times(Monomial::variable(n, v)));
        auto top = lex_segment(ring, shape, d + 1,
                               static_cast<long long>(shadow.size()));
        std::set<Monomial> expect;
        for (const auto& m : top) expect.insert(m.mono);
        CHECK(shadow == expect);
      }
    }
  }
}

TEST_CASE("saturate_lex") {
  auto L = lex_module(fixtures::gin_curve(2));
  auto S = saturate_lex(L);
  CHECK(saturate_lex(S) == S);  // saturated input is fixed
  auto primary = MonomialSubmodule::ideal(
      RingContext::make({"x", "y"}),
      {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  CHECK(saturate_lex(primary).is_full());
}

TEST_CASE("sdeg F/U <= sdeg F/U^lex on random Borel-type ideals") {
  std::mt19937_64 rng(909);
  for (int it = 0; it < 15; ++it) {
    auto U = oracle::random_borel_ideal(rng, 4, 5);
    auto L = lex_module(U);
    CHECK(sdeg_borel(U) <= sdeg_borel(L));
  }
}
