#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ulrich/extension_field.hpp"
#include "ulrich/field.hpp"
#include "ulrich/linalg.hpp"
#include "ulrich/poly.hpp"
#include "ulrich/rng.hpp"

namespace ulrich {

/// Sizes of the two-term resolution 0 -> O(d-2)^a -> O(d-1)^b -> E -> 0 and
/// the number of twists checked by the certifier.
struct Shape {
  int a = 0;
  int b = 0;
  int alpha = 0;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// a = r(d-1)/2, b = r(d+1)/2, alpha = ceil((r+2)/2). Throws ParameterError
/// when d < 1, r < 1, or d is even and r odd.
Shape shape(int d, int r);

/// A candidate Ulrich bundle of rank r on (P^2, dH), given as the cokernel of
/// a b x a matrix of linear forms. Entry (i, j) is the component
/// O(d-2) -> O(d-1) from source summand j to target summand i.
class UlrichPresentation {
 public:
  /// `entries` is row-major, b rows of a forms. Throws ParameterError on a
  /// bad shape and FieldError on unreduced coefficients.
  UlrichPresentation(PrimeField field, int d, int r, std::vector<LinearForm> entries);

  const PrimeField& field() const { return field_; }
  int d() const { return d_; }
  int r() const { return r_; }
  int a() const { return shape_.a; }
  int b() const { return shape_.b; }
  int alpha() const { return shape_.alpha; }
  const Shape& shape() const { return shape_; }

  const LinearForm& entry(std::size_t row, std::size_t col) const {
    return entries_[row * static_cast<std::size_t>(shape_.a) + col];
  }
  const std::vector<LinearForm>& entries() const { return entries_; }

  /// FNV-1a of the canonical serialization, 16 hex digits.
  std::string hash() const;

  friend bool operator==(const UlrichPresentation&, const UlrichPresentation&) = default;

 private:
  PrimeField field_;
  int d_;
  int r_;
  Shape shape_;
  std::vector<LinearForm> entries_;
};

/// b x a matrix with i.i.d. uniform coefficients, drawn row by row.
UlrichPresentation random_presentation(PrimeField field, int d, int r, Rng& rng);

/// Block-diagonal presentation of E1 (+) E2. Same field and d required.
UlrichPresentation direct_sum(const UlrichPresentation& p1, const UlrichPresentation& p2);

/// The scalar b x a matrix M(q) at a point of P^2(F_p).
MatrixFp evaluate_at(const UlrichPresentation& p, const std::array<std::uint32_t, 3>& point);

/// Point of an affine chart of P^2 over `ext`: chart 0 is z = 1, chart 1 is
/// y = 1, chart 2 is x = 1; the other two coordinates are uniform.
ProjectivePoint sample_point(const ExtensionField& ext, int chart, Rng& rng);

struct GenericRankVerdict {
  bool injective = false;
  std::array<std::uint32_t, 3> witness{0, 0, 0};
  int trials_used = 0;
};

/// Looks for a point of P^2(F_p) where M has full column rank a. One hit
/// proves the generic rank is a; no hit leaves it undetermined.
GenericRankVerdict generic_rank_check(const UlrichPresentation& p, int trials, Rng& rng);

struct FreenessVerdict {
  bool falsified = false;
  /// Degree of the field of the falsifying point (0 when not falsified).
  int extension_degree = 0;
  std::array<std::vector<std::uint32_t>, 3> point;
  std::size_t samples = 0;

  std::string describe() const;
};

/// Samples points of P^2 over F_{p^k}, k = 1..k_max, looking for a point
/// where M drops rank. Never proves local freeness.
FreenessVerdict local_freeness_sample(const UlrichPresentation& p, int k_max, int trials_per_k, Rng& rng);

/// Canonical, byte-stable JSON ("ulrich-presentation/1").
std::string to_json(const UlrichPresentation& p);
/// Throws ParseError naming the violated invariant.
UlrichPresentation presentation_from_json(const std::string& text);

void save(const UlrichPresentation& p, const std::filesystem::path& path);
UlrichPresentation load(const std::filesystem::path& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace ulrich
