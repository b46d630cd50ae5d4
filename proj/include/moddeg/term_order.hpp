#pragma once

#include "moddeg/monomial.hpp"
#include "moddeg/ring.hpp"

namespace moddeg {

/// The two module term orders on F.
enum class TermOrder { RevlexModule, LexModule };

inline const char* order_name(TermOrder o) {
  return o == TermOrder::RevlexModule ? "revlex" : "lex";
}

/// Degree reverse lexicographic order on monomials of S, x_1 > ... > x_n.
/// Returns -1, 0, or 1 as a <, =, > b.
inline int compare_monomials_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail("ring-mismatch", "comparing monomials with mismatched variable counts");
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: a > b iff the last nonzero entry of a - b is negative.
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  }
  return 0;
}

/// Pure lexicographic order on monomials of S, x_1 > ... > x_n.
inline int compare_monomials_purelex(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail("ring-mismatch", "comparing monomials with mismatched variable counts");
  // a > b iff the first nonzero entry of a - b is positive.
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
  }
  return 0;
}

/// Compare two monomials of F under the given module order.
///
/// Revlex: by total degree in F (twists included), then degrevlex on the
/// monomial parts, then the smaller basis index wins.
/// Lex: by basis index (e_1 largest), then pure lex on the monomial parts.
inline int compare_terms(TermOrder order, const FMonomial& a,
                         const FMonomial& b, const FreeModuleShape& shape) {
  if (a.mono.nvars() != b.mono.nvars())
    fail("ring-mismatch", "comparing terms with mismatched variable counts");
  if (a.comp < 0 || a.comp >= shape.rank() || b.comp < 0 ||
      b.comp >= shape.rank())
    fail("shape-mismatch", "component index outside the free module rank");
  switch (order) {
    case TermOrder::RevlexModule: {
      long long da = a.degree(shape), db = b.degree(shape);
      if (da != db) return da < db ? -1 : 1;
      if (int c = compare_monomials_degrevlex(a.mono, b.mono); c != 0) return c;
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return 0;
    }
    case TermOrder::LexModule: {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return compare_monomials_purelex(a.mono, b.mono);
    }
  }
  return 0;
}

}  // namespace moddeg
