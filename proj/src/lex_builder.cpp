#include "moddeg/lex_builder.hpp"

#include <algorithm>
#include <string>

#include "moddeg/saturation_chain.hpp"

namespace moddeg {

namespace {

/// Descending-lex successor among exponent vectors of fixed total degree;
/// returns false past the last one (0,...,0,k).
bool next_monomial_desc(std::vector<std::uint32_t>& u) {
  int n = static_cast<int>(u.size());
  int i = -1;
  for (int j = n - 2; j >= 0; --j)
    if (u[static_cast<std::size_t>(j)] > 0) {
      i = j;
      break;
    }
  if (i < 0) return false;
  std::uint64_t tail = 0;
  for (int j = i + 1; j < n; ++j) tail += u[static_cast<std::size_t>(j)];
  u[static_cast<std::size_t>(i)] -= 1;
  for (int j = i + 1; j < n; ++j) u[static_cast<std::size_t>(j)] = 0;
  u[static_cast<std::size_t>(i + 1)] = static_cast<std::uint32_t>(tail + 1);
  return true;
}

/// Monomials of degree k strictly lex-greater than m (same variable count).
Int count_lex_greater(const Monomial& m) {
  int n = m.nvars();
  long long k = m.degree();
  Int greater = 0;
  long long remaining = k;
  for (int i = 0; i + 1 < n; ++i) {
    for (long long c = m.exp(i) + 1; c <= remaining; ++c)
      greater += monomial_count(n - i - 1, remaining - c);
    remaining -= m.exp(i);
  }
  return greater;
}

}  // namespace

Int monomial_count(int nvars, long long degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + nvars - 1, nvars - 1);
}

std::vector<Monomial> monomials_of_degree(int nvars, long long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> u(static_cast<std::size_t>(nvars), 0);
  u[0] = static_cast<std::uint32_t>(degree);
  do {
    out.emplace_back(u);
  } while (next_monomial_desc(u));
  return out;
}

Int lex_rank_from_bottom(const Monomial& m) {
  return monomial_count(m.nvars(), m.degree()) - count_lex_greater(m);
}

Int lex_rank_from_bottom_in_F(const FMonomial& m, long long degree,
                              const FreeModuleShape& shape) {
  Int rank = lex_rank_from_bottom(m.mono);
  for (int j = m.comp + 1; j < shape.rank(); ++j)
    rank += monomial_count(m.mono.nvars(),
                           degree - shape.twists[static_cast<std::size_t>(j)]);
  return rank;
}

std::vector<FMonomial> lex_segment(const RingContext& ring,
                                   const FreeModuleShape& shape,
                                   long long degree, long long size) {
  Int total = 0;
  for (long long t : shape.twists)
    total += monomial_count(ring.nvars, degree - t);
  if (size < 0 || Int(size) > total)
    fail("segment-range", "segment size " + std::to_string(size) +
                              " out of range for this degree");
  std::vector<FMonomial> out;
  for (int j = 0; j < shape.rank() && std::cmp_less(out.size(), size); ++j) {
    long long k = degree - shape.twists[static_cast<std::size_t>(j)];
    for (auto& m : monomials_of_degree(ring.nvars, k)) {
      if (std::cmp_equal(out.size(), size)) break;
      out.push_back({std::move(m), j});
    }
  }
  return out;
}

namespace {

class StandardMonomialEnumerator {
 public:
  StandardMonomialEnumerator(const MonomialSubmodule& U, bool only_first)
      : U_(U), only_first_(only_first) {}

  std::vector<FMonomial> run(long long degree) {
    out_.clear();
    for (int j = 0; j < U_.shape().rank(); ++j) {
      if (only_first_ && !out_.empty()) break;
      long long k = degree - U_.shape().twists[static_cast<std::size_t>(j)];
      if (k < 0) continue;
      comp_gens_ = U_.component_gens(j);
      comp_ = j;
      int n = U_.nvars();
      if (n == 0) {
        if (k == 0 && comp_gens_.empty()) out_.push_back({Monomial(0), j});
        continue;
      }
      exps_.assign(static_cast<std::size_t>(n), 0);
      descend(0, k);
    }
    return std::move(out_);
  }

 private:
  // Every completion of the current prefix is divisible by g.
  bool prefix_covered(int idx) const {
    for (const auto& g : comp_gens_) {
      bool covered = true;
      for (int i = 0; i <= idx && covered; ++i)
        if (g.exp(i) > exps_[static_cast<std::size_t>(i)]) covered = false;
      for (int i = idx + 1; i < g.nvars() && covered; ++i)
        if (g.exp(i) > 0) covered = false;
      if (covered) return true;
    }
    return false;
  }

  void descend(int idx, long long remaining) {
    if (only_first_ && !out_.empty()) return;
    int n = static_cast<int>(exps_.size());
    if (idx == n - 1) {
      exps_[static_cast<std::size_t>(idx)] =
          static_cast<std::uint32_t>(remaining);
      Monomial m(exps_);
      bool member = std::any_of(
          comp_gens_.begin(), comp_gens_.end(),
          [&m](const Monomial& g) { return g.divides(m); });
      if (!member) out_.push_back({std::move(m), comp_});
      exps_[static_cast<std::size_t>(idx)] = 0;
      return;
    }
    for (long long e = remaining; e >= 0; --e) {
      exps_[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(e);
      if (!prefix_covered(idx)) descend(idx + 1, remaining - e);
      if (only_first_ && !out_.empty()) break;
    }
    exps_[static_cast<std::size_t>(idx)] = 0;
  }

  const MonomialSubmodule& U_;
  bool only_first_;
  std::vector<Monomial> comp_gens_;
  std::vector<std::uint32_t> exps_;
  std::vector<FMonomial> out_;
  int comp_ = 0;
};

}  // namespace

std::vector<FMonomial> standard_monomials_desc(const MonomialSubmodule& U,
                                               long long degree,
                                               bool only_first) {
  return StandardMonomialEnumerator(U, only_first).run(degree);
}

MonomialSubmodule lex_module(const MonomialSubmodule& U, int degree_cap) {
  const HilbertSeries target = hilbert_series(U);
  std::vector<FMonomial> gens;
  MonomialSubmodule L = MonomialSubmodule::make(U.ring(), U.shape(), {});
  HilbertSeries current = hilbert_series(L);
  long long lo = U.shape().min_twist();

  for (long long d = lo; d <= lo + degree_cap; ++d) {
    if (current == target) return L;
    Int Ht = hilbert_function(target, d, d)[0];
    Int Hc = hilbert_function(current, d, d)[0];
    if (Hc < Ht)
      fail("macaulay-consistency",
           "module generated so far exceeds the target Hilbert function in "
           "degree " + std::to_string(d));
    if (Hc > Ht) {
      auto standard = standard_monomials_desc(L, d);
      if (Int(standard.size()) != Hc)
        fail("invariant", "standard monomial count disagrees with the series");
      long long r = to_ll(Hc - Ht);
      for (long long i = 0; i < r; ++i)
        gens.push_back(standard[static_cast<std::size_t>(i)]);
      if (std::cmp_less(r, standard.size())) {
        // The untaken standard monomials must fill exactly the bottom Ht
        // lex positions, otherwise the accumulated module sticks out of the
        // target segment.
        const FMonomial& top_untaken = standard[static_cast<std::size_t>(r)];
        if (lex_rank_from_bottom_in_F(top_untaken, d, U.shape()) != Ht)
          fail("macaulay-consistency",
               "degree " + std::to_string(d) +
                   " piece is not a lexicographic segment");
      }
      L = MonomialSubmodule::make(U.ring(), U.shape(), gens);
      gens = L.gens();
      current = hilbert_series(L);
    } else if (Hc > 0) {
      // Defensive segment check on a degree that adds no generators.
      auto first = standard_monomials_desc(L, d, /*only_first=*/true);
      if (!first.empty() &&
          lex_rank_from_bottom_in_F(first[0], d, U.shape()) != Hc)
        fail("macaulay-consistency",
             "degree " + std::to_string(d) +
                 " piece is not a lexicographic segment");
    }
  }
  if (current == target) return L;
  fail("degree-cap", "lex construction did not stabilize within the degree "
                     "cap of " + std::to_string(degree_cap));
}

MonomialSubmodule saturate_lex(const MonomialSubmodule& L) {
  return saturate(L);
}

}  // namespace moddeg
