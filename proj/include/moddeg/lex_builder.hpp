#pragma once

#include <optional>
#include <vector>

#include "moddeg/hilbert.hpp"
#include "moddeg/monomial_submodule.hpp"

namespace moddeg {

/// All monomials of S-degree `degree` in descending pure lex order.
std::vector<Monomial> monomials_of_degree(int nvars, long long degree);

/// Number of monomials of the given S-degree: C(degree + n - 1, n - 1).
Int monomial_count(int nvars, long long degree);

/// Number of monomials w of the same degree with w <=_lex m, m included.
Int lex_rank_from_bottom(const Monomial& m);

/// As above but inside F_d with the component-major lex order on F.
Int lex_rank_from_bottom_in_F(const FMonomial& m, long long degree,
                              const FreeModuleShape& shape);

/// The first `size` monomials of F_degree in the lex order on F
/// (component-major; twists shift the S-degree per component).
std::vector<FMonomial> lex_segment(const RingContext& ring,
                                   const FreeModuleShape& shape,
                                   long long degree, long long size);

/// Monomials of F_degree outside U, in descending lex order on F. With
/// `only_first`, stops after the lex-largest one.
std::vector<FMonomial> standard_monomials_desc(const MonomialSubmodule& U,
                                               long long degree,
                                               bool only_first = false);

/// The lexicographic submodule U^lex with the same Hilbert function as U,
/// built degree by degree; terminates when the Hilbert series of the module
/// generated so far equals the target series exactly.
MonomialSubmodule lex_module(const MonomialSubmodule& U, int degree_cap = 50);

/// L : m^inf over L's own ring.
MonomialSubmodule saturate_lex(const MonomialSubmodule& L);

}  // namespace moddeg
