#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ulrich/field.hpp"
#include "ulrich/rng.hpp"

namespace ulrich {

inline constexpr int kMaxExtensionDegree = 4;

/// Element of F_p[u]/(g), coefficients of 1, u, ..., u^{k-1}. Unused slots
/// are zero.
struct ExtElement {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Polynomials over F_p, coefficients from low to high degree, no trailing
/// zeros (the zero polynomial is empty).
using PolyFp = std::vector<std::uint32_t>;

/// True iff the monic polynomial g of degree >= 1 is irreducible over F_p
/// (gcd(g, x^{p^i} - x) = 1 for every i <= deg(g)/2).
bool is_irreducible(const PrimeField& field, const PolyFp& g);

/// F_{p^k} = F_p[u]/(g) for a monic irreducible g of degree k <= 4.
class ExtensionField {
 public:
  /// Uses the first irreducible monic polynomial of degree k in a fixed
  /// enumeration order.
  ExtensionField(PrimeField base, int degree);
  /// Throws FieldError if g is not monic irreducible of degree 1..4.
  ExtensionField(PrimeField base, PolyFp modulus);

  const PrimeField& base() const { return base_; }
  int degree() const { return degree_; }
  const PolyFp& modulus() const { return modulus_; }

  ExtElement zero() const { return {}; }
  ExtElement one() const { return from_base(1); }
  ExtElement from_base(std::uint32_t x) const {
    ExtElement e;
    e.c[0] = base_.reduce(x);
    return e;
  }

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  /// Throws FieldError on zero.
  ExtElement inverse(const ExtElement& a) const;

  ExtElement random_element(Rng& rng) const;

 private:
  PrimeField base_;
  int degree_;
  PolyFp modulus_;
};

/// Rank of a small matrix over F_{p^k} (row-major, rows x cols).
std::size_t rank(const ExtensionField& field, std::vector<ExtElement> entries, std::size_t rows, std::size_t cols);

}  // namespace ulrich
