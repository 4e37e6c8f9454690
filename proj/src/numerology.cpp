#include "ulrich/numerology.hpp"

#include <string>

#include "ulrich/cohomology.hpp"
#include "ulrich/error.hpp"
#include "ulrich/presentation.hpp"

namespace ulrich {

std::int64_t UlrichInvariants::hilbert(std::int64_t t) const {
  return (hilbert_doubled[0] + hilbert_doubled[1] * t + hilbert_doubled[2] * t * t) / 2;
}

UlrichInvariants invariants(int d, int r) {
  const Shape s = shape(d, r);
  UlrichInvariants inv;
  inv.d = d;
  inv.r = r;
  inv.a = s.a;
  inv.b = s.b;
  inv.alpha = s.alpha;
  const std::int64_t dd = static_cast<std::int64_t>(d) * d;
  const std::int64_t rr = r;
  inv.c1 = 3 * rr * (d - 1) / 2;
  inv.c2 = (inv.c1 * inv.c1 + 3 * inv.c1) / 2 + rr - dd * rr;
  inv.hilbert_doubled = {2 * dd * rr, 3 * dd * rr, dd * rr};
  inv.chi_end = -(rr * rr * (dd - 5)) / 4;
  inv.h1_end_simple = (4 + rr * rr * (dd - 5)) / 4;
  return inv;
}

std::int64_t hilbert_check(int d, int r, int t) {
  const UlrichInvariants inv = invariants(d, r);
  const int m = t * d;
  const std::int64_t from_resolution = inv.b * line_chi(d - 1 + m) - inv.a * line_chi(d - 2 + m);
  const std::int64_t from_polynomial = inv.hilbert(t);
  if (from_resolution != from_polynomial) {
    throw ConsistencyError("chi(E(td)) mismatch at d=" + std::to_string(d) + " r=" + std::to_string(r) +
                           " t=" + std::to_string(t) + ": resolution " + std::to_string(from_resolution) +
                           ", polynomial " + std::to_string(from_polynomial));
  }
  return from_polynomial;
}

std::vector<std::int64_t> line_bundle_solutions(std::int64_t d) {
  if (d < 1) throw ParameterError("d must be >= 1");
  // First equation: 2 t0 + 3 = 3d.
  if ((3 * d - 3) % 2 != 0) return {};
  const std::int64_t t0 = (3 * d - 3) / 2;
  if (2 * d * d != t0 * t0 + 3 * t0 + 2) return {};
  return {t0};
}

std::int64_t euler_pairing(int d, int r1, int r2) {
  const UlrichInvariants e1 = invariants(d, r1);
  const UlrichInvariants e2 = invariants(d, r2);
  // ch(E1^v) ch(E2) td(P^2) in degree 2, with ch = r + c1 + (c1^2 - 2c2)/2
  // and td = 1 + (3/2)H + H^2; everything times 4.
  const std::int64_t s1 = e1.c1 * e1.c1 - 2 * e1.c2;
  const std::int64_t s2 = e2.c1 * e2.c1 - 2 * e2.c2;
  const std::int64_t deg1 = r1 * e2.c1 - r2 * e1.c1;
  const std::int64_t four_chi =
      2 * r1 * s2 + 2 * r2 * s1 - 4 * e1.c1 * e2.c1 + 6 * deg1 + 4 * static_cast<std::int64_t>(r1) * r2;
  if (four_chi % 4 != 0) throw ConsistencyError("Riemann-Roch value is not an integer");
  return four_chi / 4;
}

bool semistable_bound_check(int d, int k, BoundCase which) {
  if (d < 3) throw ParameterError("semistable_bound_check needs d >= 3, got " + std::to_string(d));
  if (k < 2) throw ParameterError("semistable_bound_check needs k >= 2, got " + std::to_string(k));
  const std::int64_t D = static_cast<std::int64_t>(d) * d - 5;
  const std::int64_t K = k;
  switch (which) {
    case BoundCase::Even: {
      const std::int64_t lhs = (D + 1) + ((K - 1) * (K - 1) * D + 1) + (K - 1) * D - 1;
      return lhs < K * K * D + 1;
    }
    case BoundCase::OddEven: {
      // Rank 2 plus rank 2k-2, then rank 3 plus rank 2k-3; scaled by 4.
      const std::int64_t r = 2 * K;
      const std::int64_t rhs = 4 * K * K * D + 4;
      const std::int64_t lhs2 = 4 * (D + 1) + (4 + (2 * K - 2) * (2 * K - 2) * D) + 4 * (K - 1) * D - 4;
      const std::int64_t lhs3 = 4 + 9 * D + 4 + (r - 3) * (r - 3) * D + 3 * (r - 3) * D - 4;
      return lhs2 < rhs && lhs3 < rhs;
    }
    case BoundCase::OddOdd: {
      // Rank 3 plus rank 2k-2, compared against the simple-bundle dimension
      // of rank r = 2k+1, namely (4 + r^2 D)/4; scaled by 4.
      const std::int64_t r = 2 * K + 1;
      const std::int64_t lhs = 4 + 9 * D + 4 + (r - 3) * (r - 3) * D + 3 * (r - 3) * D - 4;
      return lhs < 4 + r * r * D;
    }
  }
  throw ParameterError("unknown bound case");
}

std::pair<std::int64_t, std::int64_t> veronese_facts(int d) {
  if (d < 1) throw ParameterError("d must be >= 1");
  const std::int64_t dd = d;
  return {dd * dd, (dd + 2) * (dd + 1) / 2 - 1};
}

}  // namespace ulrich
