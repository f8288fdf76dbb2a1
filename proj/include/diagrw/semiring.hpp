#pragma once

#include <complex>
#include <concepts>
#include <cstdint>

namespace diagrw {

template <class S>
concept Semiring = std::copyable<S> && requires(const S& s, const typename S::value_type& a) {
  typename S::value_type;
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.add(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.equiv(a, a) } -> std::convertible_to<bool>;
};

/// Integers modulo a prime. All comparisons are exact.
struct ModPrimeField {
  __extension__ using wide = unsigned __int128;

  using value_type = std::uint64_t;

  static constexpr std::uint64_t kDefaultModulus = 1'000'000'007ULL;

  std::uint64_t modulus = kDefaultModulus;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % modulus; }
  value_type add(value_type a, value_type b) const { return (a + b) % modulus; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<wide>(a) * b) % modulus);
  }
  bool equiv(value_type a, value_type b) const { return a % modulus == b % modulus; }
  value_type from_int(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(modulus);
    return static_cast<value_type>(((v % m) + m) % m);
  }
};

/// Double-precision complex numbers with an absolute per-entry tolerance.
struct ComplexField {
  using value_type = std::complex<double>;

  double tolerance = 1e-9;

  value_type zero() const { return {0.0, 0.0}; }
  value_type one() const { return {1.0, 0.0}; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool equiv(const value_type& a, const value_type& b) const { return std::abs(a - b) <= tolerance; }
};

/// Plain 64-bit integers; handy for hand-checked examples.
struct IntegerRing {
  using value_type = std::int64_t;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return a + b; }
  value_type mul(value_type a, value_type b) const { return a * b; }
  bool equiv(value_type a, value_type b) const { return a == b; }
};

/// ({0, 1}, or, and): a semiring that is not a ring. Values are bytes, so
/// tables stay contiguous.
struct BooleanSemiring {
  using value_type = std::uint8_t;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return (a | b) != 0; }
  value_type mul(value_type a, value_type b) const { return (a & b) != 0; }
  bool equiv(value_type a, value_type b) const { return (a != 0) == (b != 0); }
};

}  // namespace diagrw
