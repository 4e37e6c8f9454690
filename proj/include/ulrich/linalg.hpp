#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ulrich/field.hpp"

namespace ulrich {

using VectorFp = std::vector<std::uint32_t>;

enum class Storage { Dense, Sparse };

struct SparseEntry {
  std::uint32_t col;
  std::uint32_t value;
};
/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

/// A matrix over a single prime field, stored dense (row-major) or sparse
/// (one sorted entry list per row). All stored residues are reduced.
class MatrixFp {
 public:
  MatrixFp(PrimeField field, std::size_t rows, std::size_t cols, Storage storage = Storage::Dense);

  static MatrixFp identity(PrimeField field, std::size_t n);
  static MatrixFp random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  Storage storage() const { return storage_; }

  std::uint32_t at(std::size_t r, std::size_t c) const;
  /// Overwrites an entry; value is reduced first.
  void set(std::size_t r, std::size_t c, std::uint64_t value);
  /// Adds to an entry in place.
  void add_to(std::size_t r, std::size_t c, std::uint32_t value);

  /// Dense storage only.
  std::span<const std::uint32_t> dense_row(std::size_t r) const;
  std::span<std::uint32_t> dense_row(std::size_t r);
  /// Sparse storage only.
  const SparseRow& sparse_row(std::size_t r) const;

  MatrixFp to_dense() const;
  MatrixFp to_sparse() const;
  MatrixFp transpose() const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// M·v.
  VectorFp apply(std::span<const std::uint32_t> v) const;

  friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);
  friend MatrixFp operator+(const MatrixFp& a, const MatrixFp& b);
  /// Entry-wise equality; storage tags may differ.
  friend bool operator==(const MatrixFp& a, const MatrixFp& b);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage storage_;
  std::vector<std::uint32_t> dense_;
  std::vector<SparseRow> sparse_;
};

/// Rank over F_p. Dispatches on the storage tag.
std::size_t rank(const MatrixFp& m);

/// Dense rank without keeping the transformed matrix.
std::size_t rank_dense(const MatrixFp& m);

/// Sparse structural elimination with Markowitz-style pivots; switches to the
/// dense kernel once the remaining block is denser than `densify_at`.
std::size_t rank_sparse(const MatrixFp& m, double densify_at = 0.2);

/// Basis of the right null space (cols - rank vectors).
std::vector<VectorFp> kernel_basis(const MatrixFp& m);

struct AffineSolution {
  VectorFp particular;
  std::size_t null_dim = 0;
};

/// One solution of A·x = b plus the dimension of the solution space, or
/// nullopt when the system is inconsistent. Throws DimensionError when
/// b.size() != A.rows().
std::optional<AffineSolution> solve_affine(const MatrixFp& a, std::span<const std::uint32_t> b);

/// Reduced row echelon basis of a subspace of F_p^n, grown one vector at a
/// time. Used to model quotients V / W by the coordinates that are not
/// pivots of W.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Adds v to the span; returns false if it was already in it.
  bool insert(VectorFp v);

  /// Reduces v modulo the span (fully reduced against all pivots).
  void reduce(VectorFp& v) const;

  /// Pivot coordinate of every basis vector, increasing.
  std::vector<std::size_t> pivots() const;

  /// Coordinates that are not pivots, increasing. Their unit vectors span a
  /// complement of the subspace.
  std::vector<std::size_t> free_coordinates() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<VectorFp> rows_;        // kept sorted by pivot, fully reduced
  std::vector<std::size_t> pivot_of_; // pivot column of rows_[i]
  std::vector<std::int64_t> row_at_;  // column -> row index or -1
};

}  // namespace ulrich
