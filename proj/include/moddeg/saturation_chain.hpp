#pragma once

#include <vector>

#include "moddeg/hilbert.hpp"
#include "moddeg/monomial_submodule.hpp"

namespace moddeg {

/// One stage of the saturation chain: U_i over the full ring, its
/// restriction V_i to K[x_1..x_{n-i}], the saturation of V_i over that ring,
/// and lambda_i = l(V_i^sat / V_i) = deg Ext^{n-i}(F/U).
struct ChainStage {
  MonomialSubmodule U;
  MonomialSubmodule V;
  MonomialSubmodule Vsat;
  Int lambda;
};

struct SaturationChain {
  std::vector<ChainStage> stages;  // indices 0..n

  std::vector<Int> lambdas() const {
    std::vector<Int> out;
    out.reserve(stages.size());
    for (const auto& s : stages) out.push_back(s.lambda);
    return out;
  }
};

struct ChainOptions {
  bool check_borel = true;
  /// Re-derive every saturation through the intersection of single-variable
  /// saturations and compare against the fast single-colon path. On by
  /// default in debug builds.
#ifdef NDEBUG
  bool verify_generic_saturation = false;
#else
  bool verify_generic_saturation = true;
#endif
};

/// Saturation V : m^inf over V's own ring, as the intersection of the
/// single-variable saturations; over zero variables the maximal ideal is (0)
/// and the saturation is the full module.
MonomialSubmodule saturate(const MonomialSubmodule& V);

SaturationChain saturation_chain(const MonomialSubmodule& U,
                                 const ChainOptions& opts = {});

/// lambda vector, index i corresponding to Ext^{n-i}(F/U).
std::vector<Int> ext_degrees(const SaturationChain& chain);

Int sdeg_borel(const MonomialSubmodule& U);
Int adeg_borel(const MonomialSubmodule& U);
Int hdeg_borel(const MonomialSubmodule& U);

/// hdeg via the lambda vector: deg + sum_{i=0}^{d-1} C(d-1,i) lambda_i.
Int hdeg_from_ext(const Int& deg, int dim, const std::vector<Int>& lambdas);

struct HyperplaneIdentity {
  bool holds = false;        // hdeg M = hdeg M/x_nM + correction
  bool shift_holds = false;  // lambda'_i = lambda_{i+1}
  Int hdeg_m;
  Int hdeg_quotient;
  Int correction;
};

/// Evaluates the hyperplane-section identity with y = x_n. Requires U
/// Borel-type with depth F/U > 0 and dim F/U >= 1.
HyperplaneIdentity hdeg_hyperplane_identity(const MonomialSubmodule& U);

}  // namespace moddeg
