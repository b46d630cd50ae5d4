#pragma once

// Shared fixtures: the d = 3 extremal-curve family at a = 2 and a = 5,
// exercised across the unit, property and acceptance suites.

#include <vector>

#include "moddeg/module_element.hpp"
#include "moddeg/monomial_submodule.hpp"

namespace fixtures {

using namespace moddeg;

inline Monomial mono(std::vector<std::uint32_t> e) { return Monomial(e); }

inline RingContext xyzt() {
  return RingContext::make({"x", "y", "z", "t"});
}

/// gin(I) = (x^2, xy, y^3, y^2 z^{a-2}) for the d = 3 family.
inline MonomialSubmodule gin_curve(int a) {
  return MonomialSubmodule::ideal(
      xyzt(), {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({0, 3, 0, 0}),
               mono({0, 2, static_cast<std::uint32_t>(a - 1), 0})});
}

/// I = (x^2, xy, y^3, y^2 z^{a-1} + x t^a), the d = 3 extremal curve ideal.
inline std::vector<ModuleElement<RationalField>> curve_ideal(
    const RationalField& field, int a,
    TermOrder order = TermOrder::RevlexModule) {
  RingContext ring = xyzt();
  FreeModuleShape shape = FreeModuleShape::ideal();
  auto elem = [&](std::vector<Term<RationalField>> ts) {
    return ModuleElement<RationalField>::make(field, order, ring, shape,
                                              std::move(ts));
  };
  auto one = field.one();
  std::vector<ModuleElement<RationalField>> gens;
  gens.push_back(elem({{one, {mono({2, 0, 0, 0}), 0}}}));
  gens.push_back(elem({{one, {mono({1, 1, 0, 0}), 0}}}));
  gens.push_back(elem({{one, {mono({0, 3, 0, 0}), 0}}}));
  gens.push_back(
      elem({{one, {mono({0, 2, static_cast<std::uint32_t>(a - 1), 0}), 0}},
            {one, {mono({1, 0, 0, static_cast<std::uint32_t>(a)}), 0}}}));
  return gens;
}

/// (I^lex)^sat = (x, y^4, y^3 z^2) at d = 3, a = 2.
inline MonomialSubmodule lex_saturation_a2() {
  return MonomialSubmodule::ideal(
      xyzt(), {mono({1, 0, 0, 0}), mono({0, 4, 0, 0}), mono({0, 3, 2, 0})});
}

}  // namespace fixtures
