#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "moddeg/error.hpp"
#include "moddeg/ring.hpp"

namespace moddeg {

/// x^u as an exponent vector of fixed length n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0u) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(int nvars, int i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_[static_cast<std::size_t>(i)] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  std::uint32_t exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  long long degree() const {
    long long d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](std::uint32_t e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    check_same_ring(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& other) const {
    check_same_ring(other);
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      std::uint64_t s = std::uint64_t(r.exps_[i]) + other.exps_[i];
      if (s > std::numeric_limits<std::uint32_t>::max() / 2)
        fail("overflow", "monomial exponent overflow");
      r.exps_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
  }

  /// this / other; requires other | this.
  Monomial divide(const Monomial& other) const {
    check_same_ring(other);
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (other.exps_[i] > r.exps_[i])
        fail("invariant", "monomial division without divisibility");
      r.exps_[i] -= other.exps_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_ring(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    a.check_same_ring(b);
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

  /// Divide out the full power of x_var (Remark-7.2 style colon step).
  Monomial without_variable_power(int var) const {
    Monomial r(*this);
    r.exps_[static_cast<std::size_t>(var)] = 0;
    return r;
  }

  /// Re-read over the first `keep` variables; trailing exponents must vanish.
  Monomial restricted(int keep) const {
    for (std::size_t i = static_cast<std::size_t>(keep); i < exps_.size(); ++i)
      if (exps_[i] != 0)
        fail("precondition",
             "generator involves a variable outside the restricted ring");
    return Monomial(std::vector<std::uint32_t>(
        exps_.begin(), exps_.begin() + keep));
  }

  bool operator==(const Monomial&) const = default;
  /// Structural order, used only for canonical storage.
  auto operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

  std::string str(const RingContext& ring) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (exp(i) == 0) continue;
      if (!s.empty()) s += "*";
      s += ring.names[static_cast<std::size_t>(i)];
      if (exp(i) > 1) s += "^" + std::to_string(exp(i));
    }
    return s.empty() ? "1" : s;
  }

 private:
  void check_same_ring(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      fail("ring-mismatch", "monomials live in different rings");
  }

  std::vector<std::uint32_t> exps_;
};

/// A monomial of the free module, x^u e_j (comp is 0-based).
struct FMonomial {
  Monomial mono;
  int comp = 0;

  bool operator==(const FMonomial&) const = default;
  auto operator<=>(const FMonomial& o) const {
    if (auto c = comp <=> o.comp; c != 0) return c;
    return mono <=> o.mono;
  }

  long long degree(const FreeModuleShape& shape) const {
    return mono.degree() + shape.twists[static_cast<std::size_t>(comp)];
  }

  std::string str(const RingContext& ring, const FreeModuleShape& shape) const {
    std::string s = mono.str(ring);
    if (shape.rank() > 1) s += "*e" + std::to_string(comp + 1);
    return s;
  }
};

}  // namespace moddeg
