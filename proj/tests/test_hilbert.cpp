#include "doctest.h"

#include "moddeg/hilbert.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace moddeg;
using fixtures::mono;

namespace {

MonomialSubmodule ideal2(std::vector<Monomial> gens) {
  return MonomialSubmodule::ideal(RingContext::make({"x", "y"}),
                                  std::move(gens));
}

std::vector<Int> coeffs(const IntPoly& p) { return p.coeffs(); }

}  // namespace

TEST_CASE("series of F = S is 1/(1-t)^n") {
  auto U = MonomialSubmodule::ideal(RingContext::standard(3), {});
  auto h = hilbert_series(U);
  CHECK(h.numerator == IntPoly::one());
  auto dd = dimension_and_degree(h);
  CHECK(dd.dim == 3);
  CHECK(dd.deg == 1);
}

TEST_CASE("K[x,y]/(x^2,xy,y^2): numerator [1,0,-3,2], dim 0, deg 3") {
  auto U = ideal2({mono({2, 0}), mono({1, 1}), mono({0, 2})});
  auto h = hilbert_series(U);
  CHECK(coeffs(h.numerator) == std::vector<Int>{1, 0, -3, 2});
  CHECK(h.numerator.low() == 0);
  auto dd = dimension_and_degree(h);
  CHECK(dd.dim == 0);
  CHECK(dd.deg == 3);
  auto vals = hilbert_function(h, 0, 4);
  CHECK(vals == std::vector<Int>{1, 2, 0, 0, 0});
}

TEST_CASE("K[x,y]/(x^2): reduced (1+t)/(1-t), dim 1, deg 2") {
  auto U = ideal2({mono({2, 0})});
  auto h = hilbert_series(U);
  // Standard monomials 1; x, y; xy, y^2; ... give H = 1, 2, 2, 2, ...
  // so the numerator over (1-t)^2 is 1 - t^2.
  CHECK(coeffs(h.numerator) == std::vector<Int>{1, 0, -1});
  auto red = reduced_numerator(h);
  CHECK(coeffs(red) == std::vector<Int>{1, 1});
  auto dd = dimension_and_degree(h);
  CHECK(dd.dim == 1);
  CHECK(dd.deg == 2);
  CHECK(hilbert_function(h, 0, 5) ==
        std::vector<Int>{1, 2, 2, 2, 2, 2});
}

TEST_CASE("zero quotient is flagged") {
  auto F = MonomialSubmodule::full(RingContext::standard(2),
                                   FreeModuleShape::ideal());
  auto dd = dimension_and_degree(hilbert_series(F));
  CHECK(dd.is_zero);
}

TEST_CASE("gin fixture has dim 2, deg 3") {
  auto dd = dimension_and_degree(hilbert_series(fixtures::gin_curve(2)));
  CHECK(dd.dim == 2);
  CHECK(dd.deg == 3);
}

TEST_CASE("series of a direct sum is the sum of component series") {
  RingContext ring = RingContext::make({"x", "y"});
  FreeModuleShape shape = FreeModuleShape::make({0, 2});
  auto U = MonomialSubmodule::make(
      ring, shape, {{mono({2, 0}), 0}, {mono({1, 1}), 0}, {mono({0, 1}), 1}});
  auto h = hilbert_series(U);
  auto h1 = hilbert_series(ideal2({mono({2, 0}), mono({1, 1})}));
  auto h2 = hilbert_series(ideal2({mono({0, 1})}));
  CHECK(h.numerator == h1.numerator + h2.numerator.shifted(2));
  for (long long d = 0; d <= 8; ++d)
    CHECK(hilbert_function(h, d, d)[0] == oracle::dim_quotient_at(U, d));
}

TEST_CASE("twists shift the series") {
  auto U = MonomialSubmodule::make(RingContext::standard(2),
                                   FreeModuleShape::make({-1}), {});
  auto h = hilbert_series(U);
  CHECK(h.numerator == IntPoly::term(1, -1));
  CHECK(hilbert_function(h, -1, 2) == std::vector<Int>{1, 2, 3, 4});
}

TEST_CASE("length of a quotient") {
  SUBCASE("W = V gives 0") {
    auto W = ideal2({mono({1, 0}), mono({0, 2})});
    CHECK(length_of_quotient(W, W) == 0);
  }
  SUBCASE("(x, y^2)/(x, y^3) has length 1") {
    auto W = ideal2({mono({1, 0}), mono({0, 2})});
    auto V = ideal2({mono({1, 0}), mono({0, 3})});
    CHECK(length_of_quotient(W, V) == 1);
  }
  SUBCASE("S/(x,y)^2 has length 3") {
    auto W = MonomialSubmodule::full(RingContext::make({"x", "y"}),
                                     FreeModuleShape::ideal());
    auto V = ideal2({mono({2, 0}), mono({1, 1}), mono({0, 2})});
    CHECK(length_of_quotient(W, V) == 3);
  }
  SUBCASE("containment is checked") {
    auto W = ideal2({mono({2, 0})});
    auto V = ideal2({mono({0, 1})});
    CHECK_THROWS_WITH_AS(length_of_quotient(W, V),
                         doctest::Contains("contained"), Error);
  }
  SUBCASE("infinite length is detected") {
    auto W = ideal2({mono({1, 0})});
    auto V = ideal2({mono({2, 0})});
    CHECK_THROWS_AS(length_of_quotient(W, V), Error);
  }
}

TEST_CASE("hilbert function values match brute-force counting") {
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 12; ++it) {
    auto U = oracle::random_borel_ideal(rng, 4, 5);
    auto h = hilbert_series(U);
    for (long long d = 0; d <= 8; ++d)
      CHECK(hilbert_function(h, d, d)[0] == oracle::dim_quotient_at(U, d));
  }
}

TEST_CASE("dimension and degree agree with Hilbert-polynomial fitting") {
  // Finite differences of H on degrees 10..14: for dim d the (d-1)-st
  // difference is the degree and the d-th vanishes (regularity < 10 here).
  std::mt19937_64 rng(555);
  for (int it = 0; it < 40; ++it) {
    auto U = oracle::random_borel_ideal(rng, 4, 6);
    auto h = hilbert_series(U);
    auto dd = dimension_and_degree(h);
    std::vector<Int> vals = hilbert_function(h, 10, 14);
    if (dd.dim == 0) {
      CHECK(vals == std::vector<Int>(5, 0));
      continue;
    }
    std::vector<Int> diff = vals;
    for (int k = 0; k < dd.dim - 1; ++k)
      for (std::size_t i = 0; i + 1 < diff.size(); ++i)
        diff[i] = diff[i + 1] - diff[i];
    diff.resize(vals.size() - static_cast<std::size_t>(dd.dim - 1));
    for (std::size_t i = 0; i + 1 < diff.size(); ++i)
      CHECK(diff[i] == diff[i + 1]);  // constant leading difference
    CHECK(diff[0] == dd.deg);
  }
}
