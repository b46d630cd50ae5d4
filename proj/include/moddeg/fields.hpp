#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "moddeg/error.hpp"
#include "moddeg/ring.hpp"

namespace moddeg {

/// The rationals with arbitrary-precision arithmetic.
struct RationalField {
  using Elem = boost::multiprecision::cpp_rational;
  static constexpr bool kExactRationals = true;

  static FieldSpec spec() { return FieldSpec::rationals(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return v; }
  Elem from_ratio(const boost::multiprecision::cpp_int& num,
                  const boost::multiprecision::cpp_int& den) const {
    if (den == 0) fail("bad-field", "zero denominator");
    return Elem(num, den);
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) fail("bad-field", "division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const {
    std::ostringstream os;
    os << a;
    return os.str();
  }
};

/// Z/p for a prime p, elements stored reduced in [0, p).
struct PrimeField {
  using Elem = std::uint64_t;
  static constexpr bool kExactRationals = false;

  std::uint64_t p = kDefaultPrime;

  explicit PrimeField(std::uint64_t prime = kDefaultPrime) : p(prime) {
    if (!is_prime(p)) fail("bad-field", "modulus is not prime");
    if (p >> 32) fail("bad-field", "modulus must fit in 32 bits");
  }

  FieldSpec spec() const {
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<Elem>(m);
  }
  Elem from_ratio(const boost::multiprecision::cpp_int& num,
                  const boost::multiprecision::cpp_int& den) const {
    Elem n = static_cast<Elem>(
        ((num % p + p) % p).convert_to<std::uint64_t>());
    Elem d = static_cast<Elem>(
        ((den % p + p) % p).convert_to<std::uint64_t>());
    return div(n, d);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }  // p < 2^32
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) fail("bad-field", "division by zero");
    return power(a, p - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }

 private:
  Elem power(Elem base, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace moddeg
