#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "moddeg/hilbert.hpp"
#include "moddeg/module_element.hpp"
#include "moddeg/monomial_submodule.hpp"
#include "moddeg/rng.hpp"

namespace moddeg {

template <class F>
using FieldMatrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
bool is_invertible(const F& field, FieldMatrix<F> m) {
  std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (field.is_zero(m[r][col])) continue;
      auto factor = field.div(m[r][col], m[col][col]);
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
    }
  }
  return true;
}

template <class F>
FieldMatrix<F> invert_matrix(const F& field, FieldMatrix<F> m) {
  std::size_t n = m.size();
  FieldMatrix<F> inv(n, std::vector<typename F::Elem>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) fail("singular-sample", "matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    auto d = field.inv(m[col][col]);
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] = field.mul(m[col][c], d);
      inv[col][c] = field.mul(inv[col][c], d);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || field.is_zero(m[r][col])) continue;
      auto factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
        inv[r][c] = field.sub(inv[r][c], field.mul(factor, inv[col][c]));
      }
    }
  }
  return inv;
}

/// A point of GL(n) ⋉ GL(F): a graded change of ring coordinates plus a
/// constant invertible block change among basis elements of equal twist.
template <class F>
struct CoordinateChange {
  FieldMatrix<F> ring_change;    // φ(x_i) = Σ_j ring_change[i][j] x_j
  FieldMatrix<F> module_change;  // e_k ↦ Σ_l module_change[k][l] e_l
  std::uint64_t seed = 0;
};

namespace detail {

template <class F>
typename F::Elem sample_entry(const F& field, std::mt19937_64& rng) {
  if constexpr (F::kExactRationals) {
    return field.from_int(draw_range(rng, -10000, 10000));
  } else {
    return 1 + draw_below(rng, field.p - 1);  // uniform nonzero residue
  }
}

}  // namespace detail

template <class F>
CoordinateChange<F> random_change(const F& field, const RingContext& ring,
                                  const FreeModuleShape& shape,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  CoordinateChange<F> change;
  change.seed = seed;

  auto sample_square = [&](const std::vector<std::size_t>& idx,
                           FieldMatrix<F>& target) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      FieldMatrix<F> block(idx.size(),
                           std::vector<typename F::Elem>(idx.size()));
      for (auto& row : block)
        for (auto& e : row) e = detail::sample_entry(field, rng);
      if (!is_invertible(field, block)) continue;
      for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
          target[idx[r]][idx[c]] = block[r][c];
      return;
    }
    fail("singular-sample", "no invertible sample found in 100 attempts");
  };

  std::size_t n = static_cast<std::size_t>(ring.nvars);
  change.ring_change.assign(n, std::vector<typename F::Elem>(n, field.zero()));
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (n > 0) sample_square(all, change.ring_change);

  std::size_t m = static_cast<std::size_t>(shape.rank());
  change.module_change.assign(m, std::vector<typename F::Elem>(m, field.zero()));
  std::map<long long, std::vector<std::size_t>> twist_classes;
  for (std::size_t k = 0; k < m; ++k)
    twist_classes[shape.twists[k]].push_back(k);
  for (auto& [twist, idx] : twist_classes)
    sample_square(idx, change.module_change);
  return change;
}

template <class F>
CoordinateChange<F> inverse_change(const F& field,
                                   const CoordinateChange<F>& change) {
  CoordinateChange<F> inv;
  inv.seed = change.seed;
  inv.ring_change = invert_matrix(field, change.ring_change);
  inv.module_change = invert_matrix(field, change.module_change);
  return inv;
}

namespace detail {

/// Scratch polynomial of the ring, used while substituting linear forms.
template <class F>
using RingPoly = std::vector<std::pair<typename F::Elem, Monomial>>;

template <class F>
RingPoly<F> ring_normalize(const F& field, RingPoly<F> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  RingPoly<F> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().second == t.second)
      out.back().first = field.add(out.back().first, t.first);
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out,
                [&](const auto& t) { return field.is_zero(t.first); });
  return out;
}

template <class F>
RingPoly<F> ring_mul(const F& field, const RingPoly<F>& a,
                     const RingPoly<F>& b) {
  RingPoly<F> out;
  out.reserve(a.size() * b.size());
  for (const auto& [ca, ma] : a)
    for (const auto& [cb, mb] : b)
      out.emplace_back(field.mul(ca, cb), ma.times(mb));
  return ring_normalize(field, std::move(out));
}

}  // namespace detail

/// Substitute the coordinate change into an element.
template <class F>
ModuleElement<F> apply_change(const F& field, const CoordinateChange<F>& change,
                              const ModuleElement<F>& e) {
  using detail::RingPoly;
  int n = e.nvars();
  std::vector<std::uint32_t> max_exp(static_cast<std::size_t>(n), 0);
  for (const auto& t : e.terms())
    for (int i = 0; i < n; ++i)
      max_exp[static_cast<std::size_t>(i)] =
          std::max(max_exp[static_cast<std::size_t>(i)], t.mono.mono.exp(i));

  // powers[i][k] = φ(x_i)^k
  std::vector<std::vector<RingPoly<F>>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RingPoly<F> lin;
    for (int j = 0; j < n; ++j) {
      const auto& c = change.ring_change[static_cast<std::size_t>(i)]
                                        [static_cast<std::size_t>(j)];
      if (!field.is_zero(c)) lin.emplace_back(c, Monomial::variable(n, j));
    }
    auto& pw = powers[static_cast<std::size_t>(i)];
    pw.push_back({{field.one(), Monomial(n)}});
    for (std::uint32_t k = 1; k <= max_exp[static_cast<std::size_t>(i)]; ++k)
      pw.push_back(detail::ring_mul(field, pw.back(), lin));
  }

  std::vector<Term<F>> out;
  int rank = e.shape().rank();
  for (const auto& t : e.terms()) {
    RingPoly<F> p = {{field.one(), Monomial(n)}};
    for (int i = 0; i < n; ++i) {
      std::uint32_t k = t.mono.mono.exp(i);
      if (k > 0)
        p = detail::ring_mul(field, p,
                             powers[static_cast<std::size_t>(i)][k]);
    }
    for (int l = 0; l < rank; ++l) {
      const auto& b = change.module_change[static_cast<std::size_t>(t.mono.comp)]
                                          [static_cast<std::size_t>(l)];
      if (field.is_zero(b)) continue;
      auto cb = field.mul(t.coeff, b);
      for (const auto& [pc, pm] : p)
        out.push_back({field.mul(cb, pc), {pm, l}});
    }
  }
  RingContext ring;
  ring.nvars = n;
  return ModuleElement<F>::make(field, e.order(), ring, e.shape(),
                                std::move(out));
}

template <class F>
std::vector<ModuleElement<F>> apply_change(
    const F& field, const CoordinateChange<F>& change,
    const std::vector<ModuleElement<F>>& gens) {
  std::vector<ModuleElement<F>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(apply_change(field, change, g));
  return out;
}

/// Scale so that rational elements have coprime integer coefficients with a
/// positive leading one; prime-field elements are made monic.
template <class F>
ModuleElement<F> normalize_content(const F& field, const ModuleElement<F>& e) {
  if (e.is_zero()) return e;
  if constexpr (F::kExactRationals) {
    using boost::multiprecision::cpp_int;
    cpp_int num_gcd = 0, den_lcm = 1;
    for (const auto& t : e.terms()) {
      num_gcd = gcd(num_gcd, cpp_int(numerator(t.coeff)));
      den_lcm = lcm(den_lcm, cpp_int(denominator(t.coeff)));
    }
    typename F::Elem factor(den_lcm, num_gcd);
    if (e.leading_term().coeff < 0) factor = -factor;
    return scale(field, e, factor);
  } else {
    return scale(field, e, field.inv(e.leading_term().coeff));
  }
}

template <class F>
ModuleElement<F> monic(const F& field, const ModuleElement<F>& e) {
  if (e.is_zero()) return e;
  return scale(field, e, field.inv(e.leading_term().coeff));
}

/// Full normal form: no term of the result is divisible (same component) by
/// any leading term of the basis. Divisors are tried in basis order.
template <class F>
ModuleElement<F> reduce(const F& field, const ModuleElement<F>& e,
                        const std::vector<ModuleElement<F>>& basis) {
  std::vector<Term<F>> remainder;
  ModuleElement<F> h = e;
  while (!h.is_zero()) {
    const Term<F>& lt = h.leading_term();
    const ModuleElement<F>* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const Term<F>& glt = g.leading_term();
      if (glt.mono.comp == lt.mono.comp &&
          glt.mono.mono.divides(lt.mono.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Term<F>& glt = divisor->leading_term();
      h = sub(field, h,
              term_multiply(field, *divisor,
                            field.div(lt.coeff, glt.coeff),
                            lt.mono.mono.divide(glt.mono.mono)));
    } else {
      remainder.push_back(lt);
      h = h.tail();
    }
  }
  RingContext ring;
  ring.nvars = e.nvars();
  return ModuleElement<F>::make(field, e.order(), ring, e.shape(),
                                std::move(remainder));
}

template <class F>
struct GroebnerBasis {
  TermOrder order;
  RingContext ring;
  FreeModuleShape shape;
  std::vector<ModuleElement<F>> elements;  // reduced, monic, sorted by lt
  std::vector<ModuleElement<F>> source;
};

template <class F>
ModuleElement<F> spair(const F& field, const ModuleElement<F>& f,
                       const ModuleElement<F>& g) {
  const Term<F>& lf = f.leading_term();
  const Term<F>& lg = g.leading_term();
  Monomial l = Monomial::lcm(lf.mono.mono, lg.mono.mono);
  return sub(field,
             term_multiply(field, f, lg.coeff, l.divide(lf.mono.mono)),
             term_multiply(field, g, lf.coeff, l.divide(lg.mono.mono)));
}

/// Buchberger's algorithm for graded submodules of F; S-pairs are formed only
/// between elements whose leading terms share a component. Returns the
/// reduced monic basis (canonical for the submodule and order).
template <class F>
GroebnerBasis<F> buchberger(const F& field, const RingContext& ring,
                            const std::vector<ModuleElement<F>>& gens,
                            TermOrder order) {
  FreeModuleShape shape = gens.empty() ? FreeModuleShape::ideal()
                                       : gens.front().shape();
  for (const auto& g : gens) {
    if (!g.is_homogeneous())
      fail("inhomogeneous", "Buchberger input must be homogeneous");
    if (g.order() != order)
      fail("order-mismatch", "generator carries a different term order");
  }

  std::vector<ModuleElement<F>> basis;
  // Normal strategy: S-pairs by ascending degree of the lcm.
  std::set<std::tuple<long long, std::size_t, std::size_t>> pairs;
  bool rank_one = shape.rank() == 1;

  auto push_element = [&](ModuleElement<F> h) {
    std::size_t idx = basis.size();
    const Term<F>& lh = h.leading_term();
    for (std::size_t i = 0; i < idx; ++i) {
      const Term<F>& li = basis[i].leading_term();
      if (li.mono.comp != lh.mono.comp) continue;
      if (rank_one && Monomial::coprime(li.mono.mono, lh.mono.mono))
        continue;  // product criterion (ideals only)
      Monomial l = Monomial::lcm(li.mono.mono, lh.mono.mono);
      pairs.insert({l.degree() +
                        shape.twists[static_cast<std::size_t>(lh.mono.comp)],
                    i, idx});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : gens) {
    ModuleElement<F> nf = reduce(field, g, basis);
    if (!nf.is_zero()) push_element(normalize_content(field, nf));
  }
  while (!pairs.empty()) {
    auto [d, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    ModuleElement<F> nf =
        reduce(field, spair(field, basis[i], basis[j]), basis);
    if (!nf.is_zero()) push_element(normalize_content(field, nf));
  }

  // Minimalize leading terms, then tail-reduce and make monic.
  std::vector<ModuleElement<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Term<F>& li = basis[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Term<F>& lj = basis[j].leading_term();
      if (lj.mono.comp != li.mono.comp) continue;
      if (lj.mono == li.mono) {
        redundant = j < i;  // keep the first of equal leading terms
      } else if (lj.mono.mono.divides(li.mono.mono)) {
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<ModuleElement<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(monic(field, reduce(field, minimal[i], others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModuleElement<F>& a, const ModuleElement<F>& b) {
              return compare_terms(order, a.leading_term().mono,
                                   b.leading_term().mono, shape) > 0;
            });
  return GroebnerBasis<F>{order, ring, shape, std::move(reduced), gens};
}

/// Minimalized module of leading terms; its Hilbert series equals that of
/// the source submodule.
template <class F>
MonomialSubmodule initial_module(const GroebnerBasis<F>& gb) {
  std::vector<FMonomial> lts;
  lts.reserve(gb.elements.size());
  for (const auto& g : gb.elements) lts.push_back(g.leading_term().mono);
  return MonomialSubmodule::make(gb.ring, gb.shape, std::move(lts));
}

struct GinOptions {
  TermOrder order = TermOrder::RevlexModule;
  int trials = 3;
  std::uint64_t seed = 1;
};

/// Probabilistic generic initial module: all `trials` random coordinate
/// changes must give the same initial module, which must preserve the Hilbert
/// series and be of Borel type. Agreement does not certify the result.
template <class F>
MonomialSubmodule gin(const F& field, const RingContext& ring,
                      const std::vector<ModuleElement<F>>& gens,
                      const GinOptions& opts = {}) {
  if (opts.trials < 2)
    fail("precondition", "gin needs at least 2 consensus trials");
  FreeModuleShape shape = gens.empty() ? FreeModuleShape::ideal()
                                       : gens.front().shape();
  MonomialSubmodule plain =
      initial_module(buchberger(field, ring, gens, opts.order));

  std::vector<MonomialSubmodule> candidates;
  for (int t = 0; t < opts.trials; ++t) {
    std::uint64_t trial_seed =
        splitmix64(opts.seed ^ (0xa0761d6478bd642fULL * (t + 1)));
    CoordinateChange<F> change = random_change(field, ring, shape, trial_seed);
    candidates.push_back(initial_module(
        buchberger(field, ring, apply_change(field, change, gens),
                   opts.order)));
  }
  for (std::size_t t = 1; t < candidates.size(); ++t) {
    if (!(candidates[t] == candidates[0]))
      fail("gin-disagreement",
           "random coordinate trials disagree: " + candidates[0].str() +
               " vs " + candidates[t].str() +
               "; rerun with another seed or more trials");
  }
  if (!(hilbert_series(candidates[0]) == hilbert_series(plain)))
    fail("invariant", "gin does not preserve the Hilbert series");
  if (!candidates[0].is_borel_type())
    fail("gin-not-borel",
         "gin candidate " + candidates[0].str() +
             " is not of Borel type; bad randomness or small characteristic");
  return candidates[0];
}

}  // namespace moddeg
