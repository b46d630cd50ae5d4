#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "moddeg/error.hpp"

namespace moddeg {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in t with cpp_int coefficients; used for Hilbert series
/// numerators (negative exponents arise from negative twists).
class IntPoly {
 public:
  IntPoly() = default;

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return term(1, 0); }
  static IntPoly term(Int c, long long e) {
    IntPoly p;
    if (c != 0) {
      p.off_ = e;
      p.coeffs_ = {std::move(c)};
    }
    return p;
  }
  static IntPoly from_coeffs(std::vector<Int> coeffs, long long offset = 0) {
    IntPoly p;
    p.off_ = offset;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  long long low() const { return off_; }
  long long high() const {
    return off_ + static_cast<long long>(coeffs_.size()) - 1;
  }
  Int coeff(long long e) const {
    if (is_zero() || e < low() || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - off_)];
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int value_at_one() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long lo = std::min(a.low(), b.low());
    long long hi = std::max(a.high(), b.high());
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
    for (long long e = a.low(); e <= a.high(); ++e)
      c[static_cast<std::size_t>(e - lo)] += a.coeff(e);
    for (long long e = b.low(); e <= b.high(); ++e)
      c[static_cast<std::size_t>(e - lo)] += b.coeff(e);
    return from_coeffs(std::move(c), lo);
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    return a + (-b);
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coeffs(std::move(c), a.off_ + b.off_);
  }

  /// Multiply by t^k.
  IntPoly shifted(long long k) const {
    IntPoly r(*this);
    if (!r.is_zero()) r.off_ += k;
    return r;
  }

  /// 1 - t^d.
  static IntPoly one_minus_power(long long d) {
    return one() - term(1, d);
  }

  bool divisible_by_one_minus_t() const { return value_at_one() == 0; }

  /// Exact quotient by (1 - t); requires divisibility.
  IntPoly divided_by_one_minus_t() const {
    if (is_zero()) return zero();
    if (!divisible_by_one_minus_t())
      fail("invariant", "polynomial not divisible by (1 - t)");
    // q(t) with (1 - t) q = p: q_e = sum_{i <= e} p_i, running from below.
    std::vector<Int> q(coeffs_.size() - 1);
    Int run = 0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
      run += coeffs_[i];
      q[i] = run;
    }
    return from_coeffs(std::move(q), off_);
  }

  bool operator==(const IntPoly&) const = default;

 private:
  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      off_ = 0;
      return;
    }
    std::size_t tail = coeffs_.size();
    while (coeffs_[tail - 1] == 0) --tail;
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(lead),
                               coeffs_.begin() + static_cast<long>(tail));
    off_ += static_cast<long long>(lead);
  }

  long long off_ = 0;
  std::vector<Int> coeffs_;  // trimmed; empty means zero
};

/// Exact binomial coefficient C(n, k); zero outside the Pascal triangle.
inline Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace moddeg
