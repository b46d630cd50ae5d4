#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "moddeg/error.hpp"

namespace moddeg {

inline constexpr std::uint32_t kDefaultPrime = 32003;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p = kDefaultPrime) {
    return {FieldKind::PrimeField, p};
  }
  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The polynomial ring S = K[x_1,...,x_n]. Internal constructions (chain
/// stages) may restrict down to n = 0 variables, i.e. the field itself.
struct RingContext {
  int nvars = 0;
  std::vector<std::string> names;
  FieldSpec field = FieldSpec::rationals();

  static RingContext make(std::vector<std::string> names,
                          FieldSpec field = FieldSpec::rationals()) {
    RingContext r;
    r.nvars = static_cast<int>(names.size());
    r.names = std::move(names);
    r.field = field;
    r.validate();
    return r;
  }

  /// n variables named x1..xn.
  static RingContext standard(int n, FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n < 0 ? 0 : n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make(std::move(names), field);
  }

  void validate() const {
    if (nvars < 0 || names.size() != static_cast<std::size_t>(nvars))
      fail("bad-ring", "variable name list does not match variable count");
    std::unordered_set<std::string> seen;
    for (const auto& v : names)
      if (!seen.insert(v).second)
        fail("bad-ring", "duplicate variable name '" + v + "'");
    if (field.kind == FieldKind::PrimeField && !is_prime(field.p))
      fail("bad-field", "characteristic " + std::to_string(field.p) +
                            " is not prime");
  }

  RingContext restricted(int keep) const {
    if (keep < 0 || keep > nvars)
      fail("bad-ring", "cannot restrict to " + std::to_string(keep) +
                           " of " + std::to_string(nvars) + " variables");
    RingContext r;
    r.nvars = keep;
    r.names.assign(names.begin(), names.begin() + keep);
    r.field = field;
    return r;
  }

  bool operator==(const RingContext&) const = default;
};

/// Graded free module F = ⊕ S(-f_j); twists[j] is the degree of e_{j+1}.
struct FreeModuleShape {
  std::vector<long long> twists;

  static FreeModuleShape make(std::vector<long long> twists) {
    if (twists.empty()) fail("bad-shape", "free module must have rank >= 1");
    return FreeModuleShape{std::move(twists)};
  }
  static FreeModuleShape ideal() { return FreeModuleShape{{0}}; }

  int rank() const { return static_cast<int>(twists.size()); }
  long long min_twist() const {
    long long m = twists[0];
    for (long long t : twists) m = std::min(m, t);
    return m;
  }
  bool operator==(const FreeModuleShape&) const = default;
};

}  // namespace moddeg
