#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moddeg/int_poly.hpp"
#include "moddeg/module_element.hpp"
#include "moddeg/monomial_submodule.hpp"

namespace moddeg {

/// One parsed generator term: (num/den) * x^u * e_{comp+1}.
struct RawTerm {
  Int num = 1;
  Int den = 1;
  Monomial mono;
  int comp = 0;
};

struct RawGen {
  std::vector<RawTerm> terms;
};

/// A parsed problem description: ring, free-module shape, generators and
/// optional run defaults (flags override them).
struct ProblemFile {
  RingContext ring;
  FreeModuleShape shape = FreeModuleShape::ideal();
  std::vector<RawGen> gens;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> degree_cap;
};

ProblemFile parse_problem(const std::string& text);
std::string format_problem(const ProblemFile& pf);

/// Generators as field elements under the given order; zero generators drop.
template <class F>
std::vector<ModuleElement<F>> problem_elements(const F& field,
                                               const ProblemFile& pf,
                                               TermOrder order) {
  std::vector<ModuleElement<F>> out;
  for (const auto& g : pf.gens) {
    std::vector<Term<F>> terms;
    terms.reserve(g.terms.size());
    for (const auto& t : g.terms)
      terms.push_back({field.from_ratio(t.num, t.den), {t.mono, t.comp}});
    auto e = ModuleElement<F>::make(field, order, pf.ring, pf.shape,
                                    std::move(terms));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

/// Problem file describing a monomial submodule (used to emit gin/lex output
/// in a re-parseable form).
ProblemFile problem_from_submodule(const MonomialSubmodule& U);

}  // namespace moddeg
