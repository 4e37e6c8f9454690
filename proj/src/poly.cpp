#include "ulrich/poly.hpp"

#include "ulrich/error.hpp"

namespace ulrich {

GradedBasis::GradedBasis(int degree) : degree_(degree) {
  if (degree < 0) return;
  monomials_.reserve(monomial_count(degree));
  for (int e0 = degree; e0 >= 0; --e0) {
    for (int e1 = degree - e0; e1 >= 0; --e1) monomials_.push_back({e0, e1, degree - e0 - e1});
  }
}

std::size_t GradedBasis::index_of(int degree, const Exponent& e) {
  // Monomials with a larger x-exponent come first: s(s+1)/2 of them, s = n - e0.
  const auto s = static_cast<std::size_t>(degree - e[0]);
  return s * (s + 1) / 2 + (s - static_cast<std::size_t>(e[1]));
}

GradedBasis basis(int degree) { return GradedBasis(degree); }

LinearForm add(const PrimeField& f, const LinearForm& a, const LinearForm& b) {
  LinearForm out;
  for (int i = 0; i < 3; ++i) out.coeffs[i] = f.add({a.coeffs[i]}, {b.coeffs[i]}).value;
  return out;
}

LinearForm scale(const PrimeField& f, std::uint32_t c, const LinearForm& a) {
  LinearForm out;
  for (int i = 0; i < 3; ++i) out.coeffs[i] = f.mulr(c, a.coeffs[i]);
  return out;
}

MatrixFp mult_matrix(const PrimeField& field, const LinearForm& f, int n, Storage storage) {
  const GradedBasis src(n);
  MatrixFp out(field, monomial_count(n + 1), src.size(), storage);
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (int v = 0; v < 3; ++v) {
      if (f.coeffs[v] == 0) continue;
      Exponent e = src[j];
      ++e[v];
      out.set(GradedBasis::index_of(n + 1, e), j, f.coeffs[v]);
    }
  }
  return out;
}

namespace {

void require_point(const ProjectivePoint& point) {
  if (point[0].is_zero() && point[1].is_zero() && point[2].is_zero()) {
    throw DimensionError("(0, 0, 0) is not a point of P^2");
  }
}

}  // namespace

ExtElement evaluate(const ExtensionField& ext, const LinearForm& f, const ProjectivePoint& point) {
  require_point(point);
  ExtElement acc = ext.zero();
  for (int i = 0; i < 3; ++i) {
    acc = ext.add(acc, ext.mul(ext.from_base(f.coeffs[i]), point[i]));
  }
  return acc;
}

ExtElement evaluate(const ExtensionField& ext, const HomogeneousPoly& f, const ProjectivePoint& point) {
  require_point(point);
  const GradedBasis b(f.degree);
  if (f.coeffs.size() != b.size()) throw DimensionError("polynomial coefficient count does not match its degree");
  ExtElement acc = ext.zero();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    ExtElement term = ext.from_base(f.coeffs[i]);
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < b[i][v]; ++k) term = ext.mul(term, point[v]);
    }
    acc = ext.add(acc, term);
  }
  return acc;
}

}  // namespace ulrich
