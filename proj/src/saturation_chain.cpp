#include "moddeg/saturation_chain.hpp"

#include <string>

namespace moddeg {

MonomialSubmodule saturate(const MonomialSubmodule& V) {
  int n = V.nvars();
  if (n == 0) return MonomialSubmodule::full(V.ring(), V.shape());
  return V.colon_ideal_power(n);
}

SaturationChain saturation_chain(const MonomialSubmodule& U,
                                 const ChainOptions& opts) {
  if (opts.check_borel) {
    if (int i = U.first_non_borel_index(); i != 0)
      fail("not-borel", "module is not of Borel type: U : x_i^inf != U : "
                        "(x_1..x_i)^inf at i = " + std::to_string(i));
  }
  int n = U.nvars();
  SaturationChain chain;
  MonomialSubmodule Ui = U;
  for (int i = 0; i <= n; ++i) {
    MonomialSubmodule Vi = Ui.restrict_variables(n - i);
    // Fast path (Remark-7.2 colon): over k = n-i variables the saturation of
    // the Borel-type V_i is V_i : x_k^inf, whose generators are those of the
    // next chain module U_{i+1}.
    MonomialSubmodule Unext =
        i < n ? Ui.colon_variable_power(n - i - 1) : Ui;
    MonomialSubmodule Vsat = i < n
                                 ? Unext.restrict_variables(n - i)
                                 : MonomialSubmodule::full(Vi.ring(), Vi.shape());
    if (opts.verify_generic_saturation) {
      MonomialSubmodule generic = saturate(Vi);
      if (!(generic == Vsat))
        fail("invariant",
             "fast colon saturation disagrees with the generic path at stage " +
                 std::to_string(i));
    }
    Int lambda = length_of_quotient(Vsat, Vi);
    chain.stages.push_back({Ui, std::move(Vi), std::move(Vsat),
                            std::move(lambda)});
    Ui = std::move(Unext);
  }
  return chain;
}

std::vector<Int> ext_degrees(const SaturationChain& chain) {
  return chain.lambdas();
}

namespace {

struct BorelDegrees {
  DimDeg dd;
  std::vector<Int> lambdas;
};

BorelDegrees chain_and_dims(const MonomialSubmodule& U) {
  BorelDegrees out;
  out.lambdas = saturation_chain(U).lambdas();
  out.dd = dimension_and_degree(hilbert_series(U));
  if (!out.dd.is_zero) {
    for (std::size_t i = static_cast<std::size_t>(out.dd.dim) + 1;
         i < out.lambdas.size(); ++i)
      if (out.lambdas[i] != 0)
        fail("invariant", "nonzero ext degree above the dimension");
    if (out.lambdas[static_cast<std::size_t>(out.dd.dim)] != out.dd.deg)
      fail("invariant", "lambda_d does not equal deg F/U");
  }
  return out;
}

}  // namespace

Int sdeg_borel(const MonomialSubmodule& U) {
  Int s = 0;
  for (const auto& l : chain_and_dims(U).lambdas) s += l;
  return s;
}

Int adeg_borel(const MonomialSubmodule& U) { return sdeg_borel(U); }

Int hdeg_from_ext(const Int& deg, int dim, const std::vector<Int>& lambdas) {
  Int h = deg;
  for (int i = 0; i < dim; ++i)
    h += binomial(dim - 1, i) *
         (static_cast<std::size_t>(i) < lambdas.size()
              ? lambdas[static_cast<std::size_t>(i)]
              : Int(0));
  return h;
}

Int hdeg_borel(const MonomialSubmodule& U) {
  auto bd = chain_and_dims(U);
  if (bd.dd.is_zero) return 0;
  return hdeg_from_ext(bd.dd.deg, bd.dd.dim, bd.lambdas);
}

HyperplaneIdentity hdeg_hyperplane_identity(const MonomialSubmodule& U) {
  auto bd = chain_and_dims(U);
  if (bd.dd.is_zero || bd.dd.dim < 1)
    fail("precondition", "hyperplane identity needs dim F/U >= 1");
  if (bd.lambdas[0] != 0)
    fail("precondition", "hyperplane identity needs depth F/U > 0");

  MonomialSubmodule Q = U.quotient_by_last_variable();
  auto bq = chain_and_dims(Q);

  HyperplaneIdentity out;
  out.shift_holds = true;
  for (std::size_t i = 0; i < bq.lambdas.size(); ++i)
    if (bq.lambdas[i] != bd.lambdas[i + 1]) out.shift_holds = false;

  out.hdeg_m = hdeg_from_ext(bd.dd.deg, bd.dd.dim, bd.lambdas);
  out.hdeg_quotient =
      bq.dd.is_zero ? Int(0) : hdeg_from_ext(bq.dd.deg, bq.dd.dim, bq.lambdas);
  out.correction = 0;
  for (int i = 1; i <= bd.dd.dim - 2; ++i)
    out.correction += binomial(bd.dd.dim - 2, i) *
                      bd.lambdas[static_cast<std::size_t>(i)];
  out.holds = (out.hdeg_m == out.hdeg_quotient + out.correction);
  return out;
}

}  // namespace moddeg
