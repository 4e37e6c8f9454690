#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ulrich/extension_field.hpp"
#include "ulrich/field.hpp"
#include "ulrich/linalg.hpp"

namespace ulrich {

using Exponent = std::array<int, 3>;

/// Number of monomials of degree n in x, y, z: C(n+2, 2), and 0 for n < 0.
constexpr std::size_t monomial_count(int n) {
  return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

/// Monomial basis of the degree-n piece of F_p[x, y, z], graded-lex with
/// x > y > z. Negative degrees give the empty basis.
class GradedBasis {
 public:
  explicit GradedBasis(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }

  /// Position of a monomial of this degree.
  std::size_t index_of(const Exponent& e) const { return index_of(degree_, e); }
  static std::size_t index_of(int degree, const Exponent& e);

 private:
  int degree_;
  std::vector<Exponent> monomials_;
};

GradedBasis basis(int degree);

/// c0·x + c1·y + c2·z.
struct LinearForm {
  std::array<std::uint32_t, 3> coeffs{0, 0, 0};

  bool is_zero() const { return coeffs[0] == 0 && coeffs[1] == 0 && coeffs[2] == 0; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  static LinearForm x() { return {{1, 0, 0}}; }
  static LinearForm y() { return {{0, 1, 0}}; }
  static LinearForm z() { return {{0, 0, 1}}; }
};

LinearForm add(const PrimeField& f, const LinearForm& a, const LinearForm& b);
LinearForm scale(const PrimeField& f, std::uint32_t c, const LinearForm& a);

/// Homogeneous polynomial of a fixed degree, coefficients indexed by
/// GradedBasis(degree).
struct HomogeneousPoly {
  int degree = 0;
  VectorFp coeffs;
};

/// Matrix of multiplication by f from degree n to degree n+1 in the fixed
/// bases: C(n+3,2) x C(n+2,2), at most three nonzeros per column.
MatrixFp mult_matrix(const PrimeField& field, const LinearForm& f, int n, Storage storage = Storage::Sparse);

using ProjectivePoint = std::array<ExtElement, 3>;

/// Value of a form at a point with coordinates in F_{p^k}. Throws
/// DimensionError for the zero triple.
ExtElement evaluate(const ExtensionField& ext, const LinearForm& f, const ProjectivePoint& point);
ExtElement evaluate(const ExtensionField& ext, const HomogeneousPoly& f, const ProjectivePoint& point);

}  // namespace ulrich
