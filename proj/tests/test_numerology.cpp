#include <doctest.h>

#include "ulrich/error.hpp"
#include "ulrich/numerology.hpp"

using namespace ulrich;

namespace {

bool admissible(int d, int r) { return d % 2 == 1 || r % 2 == 0; }

// d^2 r (t+1)(t+2)/2 by direct evaluation.
std::int64_t hilbert_direct(int d, int r, std::int64_t t) {
  return static_cast<std::int64_t>(d) * d * r * (t + 1) * (t + 2) / 2;
}

}  // namespace

TEST_CASE("invariants examples") {
  const auto t = invariants(2, 2);
  CHECK(t.c1 == 3);
  CHECK(t.c2 == 3);  // Chern classes of the tangent bundle: (1+H)^3 gives 3, 3
  CHECK(t.chi_end == 1);
  for (int k = 1; k <= 10; ++k) CHECK(invariants(2, 2 * k).chi_end == static_cast<std::int64_t>(k) * k);
  for (int d = 2; d <= 40; ++d) CHECK(invariants(d, 2).h1_end_simple == static_cast<std::int64_t>(d) * d - 4);
  CHECK(invariants(2, 2).h1_end_simple == 0);
  CHECK(invariants(7, 3).a == 9);
  CHECK(invariants(7, 3).b == 12);
  CHECK(invariants(7, 3).alpha == 3);
  CHECK(invariants(1, 1).canonical == -3);
  CHECK_THROWS_AS(invariants(4, 3), ParameterError);
}

TEST_CASE("invariants properties") {
  for (int d = 1; d <= 40; ++d) {
    for (int r = 1; r <= 20; ++r) {
      if (!admissible(d, r)) {
        CHECK_THROWS_AS(invariants(d, r), ParameterError);
        continue;
      }
      const auto inv = invariants(d, r);
      CHECK(2 * inv.c1 == 3 * r * (d - 1));
      CHECK(inv.chi_end + inv.h1_end_simple == 1);
      CHECK(inv.hilbert(0) == static_cast<std::int64_t>(d) * d * r);
      CHECK(inv.hilbert(-1) == 0);
      CHECK(inv.hilbert(-2) == 0);
      // Riemann-Roch: chi(E) = r + c1(c1+3)/2 - c2 must be the Hilbert constant term.
      CHECK(r + inv.c1 * (inv.c1 + 3) / 2 - inv.c2 == inv.hilbert(0));
    }
  }
}

TEST_CASE("hilbert_check") {
  CHECK(hilbert_check(3, 2, 0) == 18);
  CHECK(hilbert_check(7, 3, -3) == 147);
  CHECK(hilbert_check(5, 4, -1) == 0);
  CHECK(hilbert_check(5, 4, -2) == 0);
  for (int d = 1; d <= 50; d += 7)
    for (int r = 1; r <= 20; r += 3)
      if (admissible(d, r))
        for (int t = -50; t <= 50; t += 5) CHECK(hilbert_check(d, r, t) == hilbert_direct(d, r, t));
}

TEST_CASE("line bundle solutions") {
  CHECK(line_bundle_solutions(1) == std::vector<std::int64_t>{0});
  CHECK(line_bundle_solutions(2).empty());
  CHECK(line_bundle_solutions(43).empty());
  for (int d = 2; d <= 1000; ++d) CHECK(line_bundle_solutions(d).empty());
  CHECK_THROWS_AS(line_bundle_solutions(0), ParameterError);
}

TEST_CASE("euler pairing") {
  for (int d = 3; d <= 25; ++d) {
    const std::int64_t D = static_cast<std::int64_t>(d) * d - 5;
    for (int k = 2; k <= 8; ++k) CHECK(euler_pairing(d, 2, 2 * k - 2) == -(k - 1) * D);
    if (d % 2 == 1) {
      for (int r = 4; r <= 12; ++r) {
        if (((r - 3) * 3) % 4 == 0) CHECK(4 * euler_pairing(d, 3, r - 3) == -3 * (r - 3) * D);
      }
    }
    for (int r = 1; r <= 12; ++r) {
      if (!admissible(d, r)) continue;
      const auto inv = invariants(d, r);
      CHECK(euler_pairing(d, r, r) == inv.chi_end);
      CHECK(inv.chi_end == -(static_cast<std::int64_t>(r) * r * D) / 4);
      CHECK(1 - inv.chi_end == inv.h1_end_simple);
    }
  }
  CHECK(euler_pairing(2, 2, 2) == 1);
  CHECK_THROWS_AS(euler_pairing(4, 3, 2), ParameterError);
}

TEST_CASE("semistable bounds") {
  CHECK(semistable_bound_check(3, 2, BoundCase::Even));
  CHECK(semistable_bound_check(3, 2, BoundCase::OddEven));
  CHECK(semistable_bound_check(3, 2, BoundCase::OddOdd));
  for (int d = 3; d <= 101; ++d)
    for (int k = 2; k <= 50; ++k)
      for (auto c : {BoundCase::Even, BoundCase::OddEven, BoundCase::OddOdd}) CHECK(semistable_bound_check(d, k, c));
  CHECK_THROWS_AS(semistable_bound_check(2, 2, BoundCase::Even), ParameterError);
  CHECK_THROWS_AS(semistable_bound_check(3, 1, BoundCase::Even), ParameterError);
}

TEST_CASE("veronese facts") {
  CHECK(veronese_facts(1) == std::pair<std::int64_t, std::int64_t>{1, 2});
  CHECK(veronese_facts(2) == std::pair<std::int64_t, std::int64_t>{4, 5});
  CHECK(veronese_facts(7) == std::pair<std::int64_t, std::int64_t>{49, 35});
  CHECK_THROWS_AS(veronese_facts(0), ParameterError);
}
