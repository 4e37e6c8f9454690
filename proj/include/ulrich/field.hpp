#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "ulrich/rng.hpp"

namespace ulrich {

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// A residue in [0, p). The modulus lives in the owning PrimeField.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// The prime field F_p for an odd prime p < 2^31.
///
/// Elements are plain residues; every container that stores residues also
/// stores its PrimeField, and combining containers over different moduli is
/// rejected with FieldError.
class PrimeField {
 public:
  /// Throws FieldError unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  /// Reduces an arbitrary (possibly negative) integer.
  FieldElement from_int(std::int64_t x) const;

  std::uint32_t reduce(std::uint64_t x) const { return static_cast<std::uint32_t>(x % p_); }

  FieldElement add(FieldElement x, FieldElement y) const {
    std::uint32_t s = x.value + y.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement x, FieldElement y) const {
    return {x.value >= y.value ? x.value - y.value : x.value + p_ - y.value};
  }
  FieldElement neg(FieldElement x) const { return {x.value == 0 ? 0 : p_ - x.value}; }
  FieldElement mul(FieldElement x, FieldElement y) const {
    return {reduce(static_cast<std::uint64_t>(x.value) * y.value)};
  }

  /// Multiplicative inverse by the extended Euclidean algorithm. Throws
  /// FieldError on zero.
  FieldElement inverse(FieldElement x) const;

  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// Uniform element; consumes generator state deterministically.
  FieldElement random_element(Rng& rng) const {
    return {static_cast<std::uint32_t>(rng.uniform(p_))};
  }

  /// Raw-residue shortcuts used by the matrix kernels.
  std::uint32_t inv(std::uint32_t x) const { return inverse({x}).value; }
  std::uint32_t mulr(std::uint32_t x, std::uint32_t y) const {
    return reduce(static_cast<std::uint64_t>(x) * y);
  }
  std::uint32_t negr(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Trial-division primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Throws FieldError naming `what` when two moduli differ.
void require_same_field(const PrimeField& a, const PrimeField& b, const std::string& what);

}  // namespace ulrich
