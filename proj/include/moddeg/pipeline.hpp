#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moddeg/degree_report.hpp"
#include "moddeg/groebner.hpp"
#include "moddeg/lex_builder.hpp"

namespace moddeg {

struct PipelineOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  int degree_cap = 50;
};

inline std::string characteristic_warning(const FieldSpec& field) {
  return "computed over GF(" + std::to_string(field.p) +
         "); gin and Borel-fixedness depend on the characteristic, and the "
         "degree theorems assume an infinite field";
}

/// If every generator is a single term, the monomial submodule they generate.
template <class F>
std::optional<MonomialSubmodule> as_monomial_submodule(
    const RingContext& ring, const FreeModuleShape& shape,
    const std::vector<ModuleElement<F>>& gens) {
  std::vector<FMonomial> monos;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.shape() == shape))
      fail("shape-mismatch", "generator shape differs from the module shape");
    if (g.terms().size() != 1) return std::nullopt;
    monos.push_back(g.leading_term().mono);
  }
  return MonomialSubmodule::make(ring, shape, std::move(monos));
}

/// Full degree pipeline. Monomial Borel-type input is reported directly;
/// everything else goes through gin. In the gin path sdeg is genuine while
/// the adeg/hdeg fields carry the values of F/gin(U), never of F/U itself.
template <class F>
DegreeReport full_report(const F& field, const RingContext& ring,
                         const FreeModuleShape& shape,
                         const std::vector<ModuleElement<F>>& gens,
                         const PipelineOptions& opts = {}) {
  auto monomial = as_monomial_submodule<F>(ring, shape, gens);
  if (monomial && monomial->is_borel_type()) {
    DegreeReport r = report_for_borel(*monomial);
    if (ring.field.kind == FieldKind::PrimeField)
      r.disclaimers.push_back(characteristic_warning(ring.field));
    return r;
  }

  GinOptions gopts;
  gopts.trials = opts.trials;
  gopts.seed = opts.seed;
  MonomialSubmodule g = gin(field, ring, gens, gopts);
  DegreeReport r = report_for_borel(g);
  r.structure = "via-gin";
  r.disclaimers.push_back(
      "adeg and hdeg are those of F/gin(U), not of F/U; equality needs "
      "sequential Cohen-Macaulayness of F/U and can fail in general");
  r.disclaimers.push_back(
      "gin computed probabilistically (trials=" + std::to_string(opts.trials) +
      ", seed=" + std::to_string(opts.seed) +
      "); all trials agreed but the result is not certified");
  if (ring.field.kind == FieldKind::PrimeField)
    r.disclaimers.push_back(characteristic_warning(ring.field));
  return r;
}

template <class F>
std::vector<ModuleElement<F>> to_elements(const F& field, TermOrder order,
                                          const MonomialSubmodule& U) {
  std::vector<ModuleElement<F>> out;
  RingContext ring = U.ring();
  for (const auto& g : U.gens())
    out.push_back(ModuleElement<F>::make(field, order, ring, U.shape(),
                                         {{field.one(), g}}));
  return out;
}

struct GinLexComparison {
  DegreeReport direct;  // F/U
  DegreeReport of_gin;  // F/gin(U)
  DegreeReport of_lex;  // F/U^lex
  bool sdeg_gin_equal = false;  // sdeg F/U = sdeg F/gin(U)
  bool sdeg_le_lex = false;     // sdeg F/gin(U) <= sdeg F/U^lex
  bool hdeg_le_lex = false;     // hdeg F/U <= hdeg F/U^lex
  bool adeg_le_gin = false;     // adeg F/U <= adeg F/gin(U)

  bool all_hold() const {
    return sdeg_gin_equal && sdeg_le_lex && hdeg_le_lex && adeg_le_gin;
  }
};

/// For a Borel-type monomial U, compute F/U, F/gin(U) and F/U^lex and check
/// the bound theorems relating them.
template <class F>
GinLexComparison compare_gin_lex(const F& field, const MonomialSubmodule& U,
                                 const PipelineOptions& opts = {}) {
  if (int i = U.first_non_borel_index(); i != 0)
    fail("not-borel",
         "compare_gin_lex requires a Borel-type module (fails at i = " +
             std::to_string(i) + ")");
  GinLexComparison cmp;
  cmp.direct = report_for_borel(U);

  GinOptions gopts;
  gopts.trials = opts.trials;
  gopts.seed = opts.seed;
  MonomialSubmodule G =
      gin(field, U.ring(), to_elements(field, TermOrder::RevlexModule, U),
          gopts);
  cmp.of_gin = report_for_borel(G);

  MonomialSubmodule L = lex_module(U, opts.degree_cap);
  cmp.of_lex = report_for_borel(L);

  cmp.sdeg_gin_equal = cmp.direct.sdeg == cmp.of_gin.sdeg;
  cmp.sdeg_le_lex = cmp.of_gin.sdeg <= cmp.of_lex.sdeg;
  cmp.hdeg_le_lex = cmp.direct.hdeg <= cmp.of_lex.hdeg;
  cmp.adeg_le_gin = cmp.direct.adeg <= cmp.of_gin.adeg;
  return cmp;
}

}  // namespace moddeg
