#include "moddeg/hilbert.hpp"

#include <algorithm>
#include <map>

namespace moddeg {

namespace {

using Key = std::vector<std::uint32_t>;

Key make_key(const std::vector<Monomial>& gens) {
  Key k;
  for (const auto& g : gens)
    k.insert(k.end(), g.exps().begin(), g.exps().end());
  return k;
}

bool is_pure_power(const Monomial& m) {
  int support = 0;
  for (int i = 0; i < m.nvars(); ++i)
    if (m.exp(i) > 0) ++support;
  return support <= 1;
}

std::vector<Monomial> minimal_ideal_gens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) && gens[j] != gens[i])
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

/// Numerator of HS(S/I) over (1-t)^n via the pivot exact sequence
///   0 -> (S/(I:x))(-1) -> S/I -> S/(I,x) -> 0.
class NumeratorCache {
 public:
  IntPoly quotient_numerator(const std::vector<Monomial>& gens) {
    if (gens.empty()) return IntPoly::one();
    Key key = make_key(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPoly result;
    if (std::any_of(gens.begin(), gens.end(),
                    [](const Monomial& g) { return g.is_unit(); })) {
      result = IntPoly::zero();
    } else if (std::all_of(gens.begin(), gens.end(), is_pure_power)) {
      // Minimal pure powers live in distinct variables: complete intersection.
      result = IntPoly::one();
      for (const auto& g : gens)
        result = result * IntPoly::one_minus_power(g.degree());
    } else {
      int pivot = pick_pivot(gens);
      std::vector<Monomial> colon, plus;
      int n = gens[0].nvars();
      plus.push_back(Monomial::variable(n, pivot));
      for (const auto& g : gens) {
        if (g.exp(pivot) > 0) {
          Monomial d(g);
          d = d.divide(Monomial::variable(n, pivot));
          colon.push_back(std::move(d));
        } else {
          colon.push_back(g);
          plus.push_back(g);
        }
      }
      result = quotient_numerator(minimal_ideal_gens(std::move(colon)))
                   .shifted(1) +
               quotient_numerator(minimal_ideal_gens(std::move(plus)));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Most frequent variable among generators, counted over generators that
  // are not pure powers (guarantees both recursion branches shrink).
  static int pick_pivot(const std::vector<Monomial>& gens) {
    int n = gens[0].nvars();
    std::vector<int> freq(static_cast<std::size_t>(n), 0);
    for (const auto& g : gens) {
      if (is_pure_power(g)) continue;
      for (int i = 0; i < n; ++i)
        if (g.exp(i) > 0) ++freq[static_cast<std::size_t>(i)];
    }
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (freq[static_cast<std::size_t>(i)] >
          freq[static_cast<std::size_t>(best)])
        best = i;
    return best;
  }

  std::map<Key, IntPoly> memo_;
};

}  // namespace

HilbertSeries hilbert_series(const MonomialSubmodule& U) {
  NumeratorCache cache;
  IntPoly num = IntPoly::zero();
  for (int j = 0; j < U.shape().rank(); ++j) {
    IntPoly nj = cache.quotient_numerator(U.component_gens(j));
    num = num + nj.shifted(U.shape().twists[static_cast<std::size_t>(j)]);
  }
  return HilbertSeries{U.nvars(), std::move(num)};
}

DimDeg dimension_and_degree(const HilbertSeries& h) {
  if (h.numerator.is_zero()) return DimDeg{true, -1, 0};
  IntPoly q = h.numerator;
  int cancelled = 0;
  while (q.divisible_by_one_minus_t()) {
    q = q.divided_by_one_minus_t();
    ++cancelled;
    if (cancelled > h.nvars)
      fail("invariant", "Hilbert numerator cancels more than (1-t)^n");
  }
  Int deg = q.value_at_one();
  if (deg <= 0)
    fail("invariant", "nonzero module with non-positive degree");
  return DimDeg{false, h.nvars - cancelled, std::move(deg)};
}

IntPoly reduced_numerator(const HilbertSeries& h) {
  IntPoly q = h.numerator;
  while (!q.is_zero() && q.divisible_by_one_minus_t())
    q = q.divided_by_one_minus_t();
  return q;
}

std::vector<Int> hilbert_function(const HilbertSeries& h, long long lo,
                                  long long hi) {
  std::vector<Int> out;
  for (long long j = lo; j <= hi; ++j) {
    Int v = 0;
    if (!h.numerator.is_zero()) {
      for (long long e = h.numerator.low();
           e <= std::min(h.numerator.high(), j); ++e) {
        if (h.nvars == 0) {
          if (e == j) v += h.numerator.coeff(e);
        } else {
          v += h.numerator.coeff(e) * binomial(h.nvars - 1 + j - e,
                                               h.nvars - 1);
        }
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

Int length_of_quotient(const MonomialSubmodule& W, const MonomialSubmodule& V) {
  if (W.nvars() != V.nvars())
    fail("ring-mismatch", "quotient of modules over different rings");
  if (!(W.shape() == V.shape()))
    fail("shape-mismatch", "quotient of modules of different shapes");
  if (!W.contains_submodule(V))
    fail("containment", "length_of_quotient requires V contained in W");
  IntPoly diff = hilbert_series(V).numerator - hilbert_series(W).numerator;
  for (int i = 0; i < W.nvars(); ++i) {
    if (!diff.divisible_by_one_minus_t())
      fail("infinite-length", "W/V is not of finite length");
    diff = diff.divided_by_one_minus_t();
  }
  for (const auto& c : diff.coeffs())
    if (c < 0) fail("invariant", "negative dimension in quotient series");
  return diff.value_at_one();
}

}  // namespace moddeg
