#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace ulrich {

/// Closed-form invariants of a rank r Ulrich bundle on (P^2, dH). Chern
/// classes are integers (multiples of H and of the point class).
struct UlrichInvariants {
  int d = 0;
  int r = 0;
  int a = 0;
  int b = 0;
  int alpha = 0;
  std::int64_t c1 = 0;
  /// Forced by matching the constant term of Riemann-Roch to the Hilbert
  /// polynomial: c2 = (c1^2 + 3 c1)/2 + r - d^2 r.
  std::int64_t c2 = 0;
  /// 2 * d^2 r (t+1)(t+2)/2 as coefficients of 1, t, t^2.
  std::array<std::int64_t, 3> hilbert_doubled{};
  std::int64_t chi_end = 0;
  std::int64_t h1_end_simple = 0;
  /// K_{P^2} = canonical * H.
  int canonical = -3;

  /// Value of the Hilbert polynomial at t (twist by tdH).
  std::int64_t hilbert(std::int64_t t) const;
};

/// Throws ParameterError on d < 1, r < 1 or the rank parity violation.
UlrichInvariants invariants(int d, int r);

/// chi(E(td)) from the resolution and from the Hilbert polynomial. Throws
/// ConsistencyError if the two differ.
std::int64_t hilbert_check(int d, int r, int t);

/// Integers t0 with 3d^2 = d(2 t0 + 3) and 2d^2 = t0^2 + 3 t0 + 2, i.e. the
/// twists O(t0) that are Ulrich on (P^2, dH).
std::vector<std::int64_t> line_bundle_solutions(std::int64_t d);

/// chi(E1^v (x) E2) by Riemann-Roch for Ulrich invariants of ranks r1, r2.
std::int64_t euler_pairing(int d, int r1, int r2);

enum class BoundCase { Even, OddEven, OddOdd };

/// Strict dimension inequality "strictly semistable < simple" for rank
/// 2k (cases Even, OddEven) or 2k+1 (case OddOdd). Requires d >= 3, k >= 2.
bool semistable_bound_check(int d, int k, BoundCase which);

/// (degree d^2, ambient dimension C(d+2,2) - 1) of the Veronese surface.
std::pair<std::int64_t, std::int64_t> veronese_facts(int d);

}  // namespace ulrich
