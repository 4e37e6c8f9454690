#include <doctest.h>

#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/error.hpp"
#include "ulrich/parallel.hpp"

using namespace ulrich;

namespace {

const PrimeField kField(32003);

std::int64_t chi_resolution(const UlrichPresentation& p, int m) {
  return p.b() * line_chi(p.d() - 1 + m) - p.a() * line_chi(p.d() - 2 + m);
}

}  // namespace

TEST_CASE("line bundle cohomology") {
  for (int n = -20; n <= 20; ++n) {
    for (int i = 0; i < 3; ++i) CHECK(line_h(i, n) == oracle::line_h(i, n));
    CHECK(line_chi(n) == line_h(0, n) - line_h(1, n) + line_h(2, n));
  }
  CHECK(line_h(2, -3) == 1);
  CHECK(line_h(2, -2) == 0);
  CHECK_THROWS_AS(line_h(3, 0), ParameterError);
}

TEST_CASE("Euler identity and nonnegativity on random presentations") {
  for (auto [d, r] : {std::pair{2, 2}, {3, 2}, {3, 3}, {5, 2}, {4, 2}}) {
    Rng rng(static_cast<std::uint64_t>(d * 10 + r));
    const auto p = random_presentation(kField, d, r, rng);
    for (int m = -4 * d; m <= 2 * d; ++m) {
      const auto c = bundle_cohomology(p, m);
      CHECK(c.h0 >= 0);
      CHECK(c.h1 >= 0);
      CHECK(c.h2 >= 0);
      CHECK(c.chi() == chi_resolution(p, m));
    }
  }
}

TEST_CASE("bundle cohomology against oracle ranks") {
  Rng rng(8);
  const auto p = random_presentation(kField, 3, 3, rng);
  for (int m = -9; m <= 3; ++m) {
    const auto rs = static_cast<std::int64_t>(oracle::rank(oracle::to_grid(section_map(p, m)), 32003));
    const auto rm = static_cast<std::int64_t>(oracle::rank(oracle::to_grid(serre_dual_map(p, m)), 32003));
    const auto c = bundle_cohomology(p, m);
    CHECK(c.h0 == p.b() * oracle::line_h(0, 2 + m) - rs);
    CHECK(c.h1 == p.a() * oracle::line_h(2, 1 + m) - rm);
    CHECK(c.h2 == p.b() * oracle::line_h(2, 2 + m) - rm);
  }
}

TEST_CASE("bundle cohomology examples") {
  const auto& p7 = certified(7, 3);
  CHECK(bundle_cohomology(p7, -14).h1 == 0);
  CHECK(bundle_cohomology(p7, -21).h1 == 0);
  const auto& p3 = certified(3, 2);
  CHECK(bundle_cohomology(p3, -2) == CohomologyDims{4, 0, 0});
  // Both H^2 blocks vanish once d-2+m >= -2 and -m-d-2 < 0.
  Rng rng(1);
  const auto any = random_presentation(kField, 5, 2, rng);
  for (int m = -5; m <= 4; ++m) {
    const auto c = bundle_cohomology(any, m);
    CHECK(c.h1 == 0);
    CHECK(c.h2 == 0);
  }
}

TEST_CASE("section spaces") {
  const auto& p5 = certified(5, 2);
  CHECK(section_space(p5, -5).dim() == 0);
  CHECK(section_space(p5, -3).dim() == 14);
  const auto big = section_space(p5, 5);
  CHECK(static_cast<std::int64_t>(big.dim()) == chi_resolution(p5, 5));
  CHECK(big.ambient_dim() == static_cast<std::size_t>(p5.b()) * monomial_count(9));
  for (int m = -6; m <= 2; ++m) {
    CHECK(static_cast<std::int64_t>(section_space(p5, m).dim()) == bundle_cohomology(p5, m).h0);
  }
  // The image of the presentation projects to zero.
  const SectionSpace s(p5, -2);
  const MatrixFp sigma = section_map(p5, -2).to_dense();
  for (std::size_t c = 0; c < sigma.cols(); ++c) {
    VectorFp col(sigma.rows());
    for (std::size_t r = 0; r < sigma.rows(); ++r) col[r] = sigma.at(r, c);
    CHECK(s.project(col) == VectorFp(s.dim(), 0));
  }
}

TEST_CASE("induced multiplication commutes") {
  const auto& p = certified(3, 2);
  const SectionSpace s0(p, -2), s1(p, -1), s2(p, 0);
  const auto xy = induced_multiplication(s1, s2, kField, LinearForm::y()) *
                  induced_multiplication(s0, s1, kField, LinearForm::x());
  const auto yx = induced_multiplication(s1, s2, kField, LinearForm::x()) *
                  induced_multiplication(s0, s1, kField, LinearForm::y());
  CHECK(xy == yx);
  CHECK_THROWS_AS(induced_multiplication(s0, s2, kField, LinearForm::x()), DimensionError);
}

TEST_CASE("Serre duality across two code paths") {
  for (auto [d, r, lo, hi] : {std::tuple{3, 2, -8, 2}, {5, 2, -12, 3}, {3, 3, -10, 2}}) {
    const auto& p = certified(d, r);
    for (int m = lo; m <= hi; ++m) {
      const auto e = bundle_cohomology(p, m);
      const auto v = dual_cohomology(p, -m - 3);
      CHECK(e.h0 == v.h2);
      CHECK(e.h1 == v.h1);
      CHECK(e.h2 == v.h0);
    }
  }
  Rng rng(4);
  const auto p = random_presentation(kField, 3, 2, rng);
  for (int m = -30; m <= -20; ++m) CHECK(dual_cohomology(p, m).h0 == 0);
}

TEST_CASE("Ulrich duality on d=3 r=2") {
  const auto& p = certified(3, 2);
  // F = E^v(6): h^*(F(-3)) = h^*(F(-6)) = 0 and h0(F) = 18.
  CHECK(dual_cohomology(p, 3) == CohomologyDims{0, 0, 0});
  CHECK(dual_cohomology(p, 0) == CohomologyDims{0, 0, 0});
  CHECK(dual_cohomology(p, 6).h0 == 18);
}

TEST_CASE("endomorphism cohomology") {
  const auto& p2 = certified(2, 2);
  const auto e2 = end_cohomology(p2);
  CHECK(e2 == CohomologyDims{1, 0, 0});
  CHECK(e2.determined);
  CHECK(end_cohomology(certified(3, 2)) == CohomologyDims{1, 5, 0});
  const auto sum = end_cohomology(direct_sum(p2, p2));
  CHECK(sum.h0 == 4);
  CHECK(sum.chi() == 4);
}

TEST_CASE("Omega table") {
  const auto& p7 = certified(7, 3);
  const auto t7 = omega_table(p7);
  CHECK(t7.h[0] == std::array<std::int64_t, 3>{0, 9, 12});
  CHECK(t7.h[1] == std::array<std::int64_t, 3>{0, 0, 0});
  CHECK(t7.h[2] == std::array<std::int64_t, 3>{0, 0, 0});
  CHECK(t7.determined);
  const auto& p3 = certified(3, 2);
  const auto t3 = omega_table(p3);
  CHECK(t3.h[0] == std::array<std::int64_t, 3>{0, 2, 4});
  const auto col0 = bundle_cohomology(p3, -2);
  CHECK(t3.h[0][2] == col0.h0);
  CHECK(t3.h[1][2] == col0.h1);
  CHECK(t3.h[2][2] == col0.h2);
}

TEST_CASE("module homomorphisms") {
  const auto& p2 = certified(2, 2);
  CHECK(hom_presentations(p2, p2) == end_cohomology(p2).h0);
  CHECK(hom_presentations(certified(3, 2, 1), certified(3, 2, 2)) == 0);

  const auto& p = certified(3, 2);
  auto entries = p.entries();
  std::vector<LinearForm> permuted(entries.size());
  const std::array<int, 4> perm{2, 0, 3, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) permuted[static_cast<std::size_t>(perm[i] * 2 + j)] = entries[static_cast<std::size_t>(i * 2 + j)];
  CHECK(hom_presentations(p, UlrichPresentation(kField, 3, 2, permuted)) >= 1);

  CHECK_THROWS_AS(hom_presentations(p2, p), ParameterError);
  Rng rng(0);
  CHECK_THROWS_AS(hom_presentations(p, random_presentation(PrimeField(101), 3, 2, rng)), FieldError);
}

TEST_CASE("engine is safe for concurrent readers") {
  const auto& p = certified(5, 2);
  const CohomologyEngine engine(p);
  std::vector<int> twists;
  for (int m = -20; m <= 5; ++m) twists.push_back(m);
  std::vector<CohomologyDims> got(twists.size());
  parallel_for(twists.size(), 4, [&](std::size_t i) {
    got[i] = engine.bundle(twists[i]);
    engine.sections(std::max(-6, twists[i] % 3));
  });
  for (std::size_t i = 0; i < twists.size(); ++i) CHECK(got[i] == bundle_cohomology(p, twists[i]));
  const auto prof = engine.profile(-3, 3);
  CHECK(prof.rows.size() == 7);
  CHECK(prof.presentation_hash == p.hash());
  CHECK(engine.omega_table().h[0][2] == engine.bundle(-4).h0);
}
