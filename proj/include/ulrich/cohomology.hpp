#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ulrich/linalg.hpp"
#include "ulrich/presentation.hpp"

namespace ulrich {

/// h^i(O_{P^2}(n)).
std::int64_t line_h(int i, int n);

/// chi(O(n)) = (n+1)(n+2)/2, valid for every integer n.
std::int64_t line_chi(int n);

struct CohomologyDims {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  /// False when a value relied on a vanishing that did not hold, so the
  /// long exact sequence did not determine it.
  bool determined = true;

  std::int64_t chi() const { return h0 - h1 + h2; }
  friend bool operator==(const CohomologyDims& a, const CohomologyDims& b) {
    return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2;
  }
};

/// Twist m is always in O(1)-units; a dH-twist t is m = t*d.
struct ProfileRow {
  int m = 0;
  CohomologyDims dims;
};

struct CohomologyProfile {
  std::string presentation_hash;
  std::vector<ProfileRow> rows;
};

/// Model of H^0(E(m)) as the quotient H^0(O(d-1+m))^b / image of the
/// presentation map, coordinatized by the coordinates that are not pivots
/// of the image.
class SectionSpace {
 public:
  SectionSpace(const UlrichPresentation& p, int m);

  int twist() const { return m_; }
  /// Degree of the monomials in each of the b ambient blocks.
  int block_degree() const { return degree_; }
  std::size_t ambient_dim() const { return image_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  /// Ambient coordinates whose unit vectors form the quotient basis.
  const std::vector<std::size_t>& basis_coordinates() const { return free_; }

  /// Quotient coordinates of an ambient vector.
  VectorFp project(VectorFp ambient) const;

 private:
  int m_;
  int degree_;
  EchelonBasis image_;
  std::vector<std::size_t> free_;
  std::vector<std::int64_t> position_;  // ambient coordinate -> quotient index or -1
};

/// Matrix of multiplication by f from H^0(E(m)) to H^0(E(m+1)).
MatrixFp induced_multiplication(const SectionSpace& from, const SectionSpace& to, const PrimeField& field,
                                const LinearForm& f);

/// sigma_m: H^0(O(d-2+m))^a -> H^0(O(d-1+m))^b.
MatrixFp section_map(const UlrichPresentation& p, int m);
/// mu_m: H^0(O(-m-d-2))^b -> H^0(O(-m-d-1))^a with transposed entries,
/// the Serre dual of H^2(A(m)) -> H^2(B(m)).
MatrixFp serre_dual_map(const UlrichPresentation& p, int m);
/// tau_m: H^0(O(1-d+m))^b -> H^0(O(2-d+m))^a on the dual resolution.
MatrixFp dual_section_map(const UlrichPresentation& p, int m);

/// (h^0, h^1, h^2) of E(m) for E = coker M.
CohomologyDims bundle_cohomology(const UlrichPresentation& p, int m);
/// (h^0, h^1, h^2) of E^v(m), from 0 -> E^v -> O(1-d)^b -> O(2-d)^a -> 0.
CohomologyDims dual_cohomology(const UlrichPresentation& p, int m);

SectionSpace section_space(const UlrichPresentation& p, int m);

/// Rows q = 0, 1, 2 and columns p = -2, -1, 0 of h^q(E(1-d) (x) Omega^{-p}(-p)).
struct OmegaTable {
  std::array<std::array<std::int64_t, 3>, 3> h{};
  bool determined = true;
};

/// Caching front end. Section spaces and dimensions are memoized per twist;
/// concurrent readers are allowed.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(UlrichPresentation p);

  const UlrichPresentation& presentation() const { return p_; }

  CohomologyDims bundle(int m) const;
  CohomologyDims dual(int m) const;
  std::shared_ptr<const SectionSpace> sections(int m) const;

  /// h^i(E (x) E^v) via 0 -> E(x)E^v -> E(1-d)^b -> E(2-d)^a -> 0.
  CohomologyDims end_cohomology() const;
  OmegaTable omega_table() const;
  CohomologyProfile profile(int m_from, int m_to) const;

 private:
  UlrichPresentation p_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, CohomologyDims> bundle_cache_;
  mutable std::map<int, CohomologyDims> dual_cache_;
  mutable std::map<int, std::shared_ptr<const SectionSpace>> section_cache_;
};

CohomologyDims end_cohomology(const UlrichPresentation& p);
OmegaTable omega_table(const UlrichPresentation& p);

/// Dimension of {(Q, R) : Q M1 = M2 R} with Q a scalar b2 x b1 and R a scalar
/// a2 x a1 matrix, i.e. degree-0 homomorphisms coker M1 -> coker M2 of
/// graded modules. Throws on modulus or degree mismatch.
std::int64_t hom_presentations(const UlrichPresentation& p1, const UlrichPresentation& p2);

}  // namespace ulrich
