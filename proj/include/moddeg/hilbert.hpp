#pragma once

#include <vector>

#include "moddeg/int_poly.hpp"
#include "moddeg/monomial_submodule.hpp"

namespace moddeg {

/// Hilbert series of F/U as numerator/(1-t)^n, twists folded into the
/// numerator as t^(twist) factors per component.
struct HilbertSeries {
  int nvars = 0;
  IntPoly numerator;

  bool operator==(const HilbertSeries&) const = default;
};

struct DimDeg {
  bool is_zero = false;  // F/U = 0; dim/deg undefined by contract
  int dim = -1;
  Int deg = 0;
};

HilbertSeries hilbert_series(const MonomialSubmodule& U);

/// Cancel (1-t) factors down to Q(t)/(1-t)^dim with Q(1) != 0;
/// deg = Q(1). For dim = 0 this is the total length.
DimDeg dimension_and_degree(const HilbertSeries& h);

/// Fully reduced numerator (paired with dimension_and_degree's dim).
IntPoly reduced_numerator(const HilbertSeries& h);

/// Values H_{F/U}(j) for lo <= j <= hi.
std::vector<Int> hilbert_function(const HilbertSeries& h, long long lo,
                                  long long hi);

/// l(W/V) for V ⊆ W via the series difference; throws "containment" if
/// V ⊄ W and "infinite-length" if the difference is not a polynomial.
Int length_of_quotient(const MonomialSubmodule& W, const MonomialSubmodule& V);

inline long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    fail("overflow", "value exceeds machine range");
  return v.convert_to<long long>();
}

}  // namespace moddeg
