#include "doctest.h"

#include "moddeg/saturation_chain.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace moddeg;
using fixtures::mono;

TEST_CASE("chain of the gin fixture: lambda = (0, 1, 3, 0, 0)") {
  auto chain = saturation_chain(fixtures::gin_curve(2));
  CHECK(chain.lambdas() == std::vector<Int>{0, 1, 3, 0, 0});
  // Index semantics: entry i is deg Ext^{n-i}, so Ext^3 = 1 and Ext^2 = 3.
  CHECK(ext_degrees(chain)[1] == 1);
  CHECK(ext_degrees(chain)[2] == 3);
  CHECK(sdeg_borel(fixtures::gin_curve(2)) == 4);
  CHECK(adeg_borel(fixtures::gin_curve(2)) == 4);
  CHECK(hdeg_borel(fixtures::gin_curve(2)) == 4);
}

TEST_CASE("chain of U = 0 in S: only lambda_n = 1") {
  auto U = MonomialSubmodule::ideal(RingContext::standard(3), {});
  auto chain = saturation_chain(U);
  CHECK(chain.lambdas() == std::vector<Int>{0, 0, 0, 1});
  CHECK(sdeg_borel(U) == 1);
  CHECK(hdeg_borel(U) == 1);
}

TEST_CASE("chain of (x,y)^2: lambda_0 = 3 only") {
  auto U = MonomialSubmodule::ideal(
      RingContext::make({"x", "y"}),
      {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  CHECK(saturation_chain(U).lambdas() == std::vector<Int>{3, 0, 0});
  CHECK(hdeg_borel(U) == 3);  // dim 0: hdeg = length
}

TEST_CASE("CM quotient K[x,y,z]/(x^2,xy,y^2): single lambda at i = d") {
  auto U = MonomialSubmodule::ideal(
      RingContext::make({"x", "y", "z"}),
      {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
  CHECK(saturation_chain(U).lambdas() == std::vector<Int>{0, 3, 0, 0});
  CHECK(sdeg_borel(U) == 3);
  CHECK(hdeg_borel(U) == 3);
}

TEST_CASE("lex fixture chain: lambda = (4, 2, 3, 0, 0), sdeg = hdeg = 9") {
  auto L = MonomialSubmodule::ideal(
      fixtures::xyzt(),
      {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({1, 0, 2, 0}),
       mono({1, 0, 1, 1}), mono({1, 0, 0, 3}), mono({0, 4, 0, 0}),
       mono({0, 3, 2, 0})});
  CHECK(saturation_chain(L).lambdas() == std::vector<Int>{4, 2, 3, 0, 0});
  CHECK(sdeg_borel(L) == 9);
  CHECK(hdeg_borel(L) == 9);
}

TEST_CASE("non-Borel input fails with the offending index") {
  auto U = MonomialSubmodule::ideal(RingContext::make({"x", "y"}),
                                    {mono({0, 2})});
  CHECK_THROWS_WITH_AS(saturation_chain(U), doctest::Contains("i = 2"), Error);
  // Callers that already know the input is Borel-type may skip the check.
  ChainOptions unchecked;
  unchecked.check_borel = false;
  CHECK(saturation_chain(fixtures::gin_curve(2), unchecked).lambdas() ==
        std::vector<Int>{0, 1, 3, 0, 0});
}

TEST_CASE("fast colon path equals the generic saturation path") {
  ChainOptions verify;
  verify.verify_generic_saturation = true;
  CHECK_NOTHROW(saturation_chain(fixtures::gin_curve(2), verify));
  CHECK_NOTHROW(saturation_chain(fixtures::gin_curve(5), verify));
}

TEST_CASE("chain is additive across components, twists included") {
  RingContext ring = RingContext::make({"x", "y"});
  FreeModuleShape shape = FreeModuleShape::make({0, 1});
  // F/U = K[x,y]/(x,y)^2 (+) S(-1).
  auto U = MonomialSubmodule::make(
      ring, shape, {{mono({2, 0}), 0}, {mono({1, 1}), 0}, {mono({0, 2}), 0}});
  CHECK(saturation_chain(U).lambdas() == std::vector<Int>{3, 0, 1});
  CHECK(sdeg_borel(U) == 4);
  CHECK(hdeg_borel(U) == 4);  // 1 + C(1,0)*3
}

TEST_CASE("hyperplane identity") {
  SUBCASE("dim 2 fixture: hdeg M = hdeg M/tM") {
    auto h = hdeg_hyperplane_identity(fixtures::gin_curve(2));
    CHECK(h.holds);
    CHECK(h.shift_holds);
    CHECK(h.hdeg_m == 4);
    CHECK(h.hdeg_quotient == 4);
    CHECK(h.correction == 0);
  }
  SUBCASE("CM module: both sides equal deg") {
    auto U = MonomialSubmodule::ideal(
        RingContext::make({"x", "y", "z"}),
        {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
    auto h = hdeg_hyperplane_identity(U);
    CHECK(h.holds);
    CHECK(h.hdeg_m == 3);
    CHECK(h.hdeg_quotient == 3);
  }
  SUBCASE("dim 3 with a genuine correction term") {
    // The a=2 lex ideal read in five variables: lambda = (0,4,2,3,0,0),
    // dim 3, hdeg = 3 + C(2,1)*4 + C(2,2)*2 = 13; the quotient by x_5 is the
    // four-variable lex ideal with hdeg 9 and the correction is C(1,1)*4.
    auto L5 = oracle::extend_ring(
        MonomialSubmodule::ideal(
            fixtures::xyzt(),
            {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({1, 0, 2, 0}),
             mono({1, 0, 1, 1}), mono({1, 0, 0, 3}), mono({0, 4, 0, 0}),
             mono({0, 3, 2, 0})}),
        5);
    auto h = hdeg_hyperplane_identity(L5);
    CHECK(h.holds);
    CHECK(h.shift_holds);
    CHECK(h.hdeg_m == 13);
    CHECK(h.hdeg_quotient == 9);
    CHECK(h.correction == 4);
  }
  SUBCASE("preconditions") {
    // (x^2, xy) has dim 1 but depth 0 (x spans H^0).
    auto depth_zero = MonomialSubmodule::ideal(
        RingContext::make({"x", "y"}), {mono({2, 0}), mono({1, 1})});
    CHECK_THROWS_WITH_AS(hdeg_hyperplane_identity(depth_zero),
                         doctest::Contains("depth"), Error);
    auto artinian = MonomialSubmodule::ideal(
        RingContext::make({"x", "y"}),
        {mono({2, 0}), mono({1, 1}), mono({0, 2})});
    CHECK_THROWS_WITH_AS(hdeg_hyperplane_identity(artinian),
                         doctest::Contains("dim"), Error);
  }
}

TEST_CASE("chain lengths equal the brute-force counting oracle") {
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 8; ++it) {
    auto U = oracle::random_borel_ideal(rng, 4, 4);
    auto chain = saturation_chain(U);
    for (const auto& st : chain.stages)
      CHECK(st.lambda == oracle::length_by_counting(st.Vsat, st.V));
  }
}

TEST_CASE("lambda_0 equals the length of (U : m^inf)/U") {
  std::mt19937_64 rng(424242);
  for (int it = 0; it < 15; ++it) {
    auto U = oracle::random_borel_ideal(rng, 4, 5);
    auto chain = saturation_chain(U);
    CHECK(chain.stages[0].lambda == length_of_quotient(saturate(U), U));
  }
}
