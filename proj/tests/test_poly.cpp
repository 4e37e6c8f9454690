#include <doctest.h>

#include "oracles.hpp"
#include "ulrich/error.hpp"
#include "ulrich/poly.hpp"
#include "ulrich/rng.hpp"

using namespace ulrich;

TEST_CASE("graded basis size and order") {
  for (int n = -3; n <= 12; ++n) {
    const GradedBasis b(n);
    CHECK(static_cast<std::int64_t>(b.size()) == oracle::count_monomials(n));
    CHECK(b.size() == monomial_count(n));
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(b[i][0] + b[i][1] + b[i][2] == n);
      CHECK(b.index_of(b[i]) == i);
      if (i > 0) CHECK(b[i - 1] > b[i]);  // lexicographic with x > y > z
    }
  }
  const GradedBasis one(1);
  CHECK(one[0] == Exponent{1, 0, 0});
  CHECK(one[1] == Exponent{0, 1, 0});
  CHECK(one[2] == Exponent{0, 0, 1});
}

TEST_CASE("mult_matrix agrees with naive polynomial multiplication") {
  const PrimeField f(32003);
  Rng rng(1);
  for (int n = 0; n <= 6; ++n) {
    const GradedBasis src(n), dst(n + 1);
    for (int trial = 0; trial < 5; ++trial) {
      LinearForm l;
      for (auto& c : l.coeffs) c = static_cast<std::uint32_t>(rng.uniform(32003));
      oracle::Poly lp;
      for (int v = 0; v < 3; ++v) {
        Exponent e{0, 0, 0};
        e[v] = 1;
        if (l.coeffs[v]) lp[e] = l.coeffs[v];
      }
      VectorFp g(src.size());
      oracle::Poly gp;
      for (std::size_t i = 0; i < src.size(); ++i) {
        g[i] = static_cast<std::uint32_t>(rng.uniform(32003));
        if (g[i]) gp[src[i]] = g[i];
      }
      const VectorFp prod = mult_matrix(f, l, n).apply(g);
      const oracle::Poly expected = oracle::multiply(lp, gp, 32003);
      for (std::size_t i = 0; i < dst.size(); ++i) {
        auto it = expected.find(dst[i]);
        CHECK(prod[i] == (it == expected.end() ? 0 : it->second));
      }
    }
  }
}

TEST_CASE("mult_matrix shape and storage") {
  const PrimeField f(7);
  const MatrixFp m = mult_matrix(f, LinearForm::x(), 2);
  CHECK(m.rows() == 10);
  CHECK(m.cols() == 6);
  CHECK(m.nonzeros() == 6);
  CHECK(rank(m) == 6);  // multiplication by a nonzero form is injective
  CHECK(mult_matrix(f, LinearForm::y(), 2, Storage::Dense) == mult_matrix(f, LinearForm::y(), 2));
  CHECK(mult_matrix(f, LinearForm::z(), -1).cols() == 0);
  CHECK(mult_matrix(f, LinearForm::z(), -1).rows() == 1);
}

TEST_CASE("evaluation over extension fields") {
  const PrimeField f(7);
  const ExtensionField ext(f, 2);
  Rng rng(3);
  const LinearForm l{{2, 3, 5}};
  for (int i = 0; i < 10; ++i) {
    ProjectivePoint pt{ext.random_element(rng), ext.random_element(rng), ext.one()};
    const ExtElement direct =
        ext.add(ext.add(ext.mul(ext.from_base(2), pt[0]), ext.mul(ext.from_base(3), pt[1])), ext.from_base(5));
    CHECK(evaluate(ext, l, pt) == direct);
    // The same form as a degree-1 HomogeneousPoly in graded order x, y, z.
    CHECK(evaluate(ext, HomogeneousPoly{1, {2, 3, 5}}, pt) == direct);
  }
  const ProjectivePoint zero{ext.zero(), ext.zero(), ext.zero()};
  CHECK_THROWS_AS(evaluate(ext, l, zero), DimensionError);
  CHECK_THROWS_AS(evaluate(ext, HomogeneousPoly{2, {1, 2}}, ProjectivePoint{ext.one(), ext.zero(), ext.zero()}),
                  DimensionError);
}
